"""Wall-clock benchmark of the spinor backends."""

from __future__ import annotations

import csv
import hashlib
import logging
import statistics
import time
from dataclasses import dataclass, field

from ..errors import BackendDisagreement, PrecisionExceeded, UnsupportedInstance
from ..sequences import SequenceSpec
from ..spinors import BINET_EXACT_BOUND
from .backends import BackendId, parse_backends, term, term_binet_rounded

log = logging.getLogger(__name__)

# Dense-ish determinant expansion is quadratic in n; above this it is skipped.
DET_BANDED_LIMIT = 2000
DET_CERECEDA_LIMIT = 2000

CSV_COLUMNS = ("backend", "n", "rep", "wall_ns", "digest")


def digest(value) -> str:
    return hashlib.sha256(str(value).encode()).hexdigest()


@dataclass
class BenchRecord:
    backend: str
    n: int
    samples_ns: list
    digest: str

    @property
    def min_ns(self) -> int:
        return min(self.samples_ns)

    @property
    def median_ns(self) -> float:
        return statistics.median(self.samples_ns)


@dataclass
class BenchRun:
    records: list = field(default_factory=list)
    skipped: list = field(default_factory=list)  # (backend, n, reason)

    def rows(self):
        for rec in self.records:
            for rep, ns in enumerate(rec.samples_ns):
                yield {"backend": rec.backend, "n": rec.n, "rep": rep, "wall_ns": ns, "digest": rec.digest}

    def write_csv(self, stream) -> None:
        writer = csv.DictWriter(stream, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(self.rows())


def _skip_reason(spec: SequenceSpec, backend: BackendId, n: int) -> str | None:
    if backend is BackendId.DET_BANDED and n > DET_BANDED_LIMIT:
        return f"n > {DET_BANDED_LIMIT}"
    if backend is BackendId.DET_CERECEDA and n > DET_CERECEDA_LIMIT:
        return f"n > {DET_CERECEDA_LIMIT}"
    if backend is BackendId.BINET:
        if not (spec.named and spec.classical):
            return "no closed form"
        if n > BINET_EXACT_BOUND:
            return f"n > {BINET_EXACT_BOUND} (double precision)"
    return None


def _compute(spec: SequenceSpec, backend: BackendId, n: int):
    if backend is BackendId.BINET:
        return term_binet_rounded(spec, n)
    return term(spec, n, backend)


def benchmark_run(spec: SequenceSpec, n_values, backends, repetitions: int = 3) -> BenchRun:
    """Time every backend at every ``n``; exact backends must produce identical digests."""
    if repetitions < 3:
        raise ValueError("repetitions must be >= 3")
    backends = parse_backends(backends)
    run = BenchRun()
    for n in n_values:
        seen = {}
        for backend in backends:
            reason = _skip_reason(spec, backend, n)
            if reason is not None:
                log.warning("skipping %s at n=%d: %s", backend.value, n, reason)
                run.skipped.append((backend.value, n, reason))
                continue
            samples = []
            value = None
            try:
                for _ in range(repetitions):
                    start = time.perf_counter_ns()
                    value = _compute(spec, backend, n)
                    samples.append(time.perf_counter_ns() - start)
            except (PrecisionExceeded, UnsupportedInstance) as exc:
                log.warning("skipping %s at n=%d: %s", backend.value, n, exc)
                run.skipped.append((backend.value, n, str(exc)))
                continue
            d = digest(value)
            for other, (other_digest, other_value) in seen.items():
                if other_digest != d:
                    raise BackendDisagreement(other, backend.value, n, other_value, value)
            seen[backend.value] = (d, value)
            run.records.append(BenchRecord(backend.value, n, samples, d))
    return run
