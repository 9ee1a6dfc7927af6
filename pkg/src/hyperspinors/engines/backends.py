"""Interchangeable ways of computing the n-th spinor, and a cross-check between them."""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field

from ..errors import BackendDisagreement, PrecisionExceeded, UnsupportedInstance
from ..sequences import SequenceSpec, check_index, qmatrix_power
from ..spinors import (
    BINET_EXACT_BOUND,
    Spinor,
    round_spinor,
    seed_spinors,
    spinor_binet,
    spinor_iter,
    spinor_range,
)
from .determinants import term_det_banded, term_det_cereceda

log = logging.getLogger(__name__)


class BackendId(str, enum.Enum):
    ITER = "iter"
    MATPOW = "matpow"
    DET_BANDED = "det_banded"
    DET_CERECEDA = "det_cereceda"
    BINET = "binet"

    @property
    def exact(self) -> bool:
        return self is not BackendId.BINET


def term_matpow(spec: SequenceSpec, n: int) -> Spinor:
    # first row of Q^n gives psi_n in terms of (psi_0, psi_1, psi_2)
    q = qmatrix_power(spec, n)
    return q.apply(seed_spinors(spec))[0]


def term_binet_rounded(spec: SequenceSpec, n: int) -> Spinor:
    return round_spinor(spinor_binet(spec, n), n)


_BACKENDS = {
    BackendId.ITER: spinor_iter,
    BackendId.MATPOW: term_matpow,
    BackendId.DET_BANDED: term_det_banded,
    BackendId.DET_CERECEDA: term_det_cereceda,
    BackendId.BINET: spinor_binet,
}


def term(spec: SequenceSpec, n: int, backend: BackendId | str = BackendId.ITER) -> Spinor:
    """n-th spinor from the chosen backend; ``binet`` returns complex floats."""
    check_index(n)
    return _BACKENDS[BackendId(backend)](spec, n)


def parse_backends(text) -> list:
    if isinstance(text, str):
        text = [part for part in text.split(",") if part.strip()]
    return [BackendId(part.strip() if isinstance(part, str) else part) for part in text]


@dataclass
class CrossCheckResult:
    spec: SequenceSpec
    n_max: int
    backends: list
    compared: dict = field(default_factory=dict)  # backend -> number of indices checked
    skipped: dict = field(default_factory=dict)  # backend -> reason


def cross_check(spec: SequenceSpec, n_max: int, backends) -> CrossCheckResult:
    """Compare backends on ``0..n_max``; raises BackendDisagreement on the first difference.

    ``iter`` over the whole range is the reference.  Binet is compared after
    rounding and only up to the precision bound; an unsupported
    ``det_cereceda`` instance is skipped with a note.
    """
    check_index(n_max, 0, "n_max")
    backends = parse_backends(backends)
    if not backends:
        raise ValueError("need at least one backend")
    reference = spinor_range(spec, 0, n_max + 1)
    result = CrossCheckResult(spec, n_max, backends)
    for backend in backends:
        top = n_max
        if backend is BackendId.BINET:
            if not (spec.named and spec.classical):
                result.skipped[backend] = f"no closed form for {spec.label()}"
                continue
            top = min(n_max, BINET_EXACT_BOUND)
            if top < n_max:
                result.skipped[backend] = f"compared only up to n={top} (double-precision bound)"
        for n in range(top + 1):
            try:
                value = term_binet_rounded(spec, n) if backend is BackendId.BINET else term(spec, n, backend)
            except UnsupportedInstance as exc:
                result.skipped[backend] = f"unsupported: {exc}"
                log.info("skipping %s: %s", backend.value, exc)
                break
            except PrecisionExceeded as exc:
                result.skipped[backend] = f"stopped at n={n}: {exc}"
                break
            if value != reference[n]:
                raise BackendDisagreement("iter", backend.value, n, reference[n], value)
            result.compared[backend] = n + 1
    return result
