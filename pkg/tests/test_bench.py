import csv
import io

import pytest

from hyperspinors.engines import bench
from hyperspinors.engines.backends import BackendId
from hyperspinors.engines.bench import CSV_COLUMNS, benchmark_run, digest
from hyperspinors.errors import BackendDisagreement
from hyperspinors.sequences import PADOVAN, PERRIN
from hyperspinors.spinors import spinor, spinor_iter


def test_single_record_accounting():
    run = benchmark_run(PADOVAN, [10], ["matpow"], repetitions=3)
    assert len(run.records) == 1
    rec = run.records[0]
    assert len(rec.samples_ns) == 3
    assert rec.min_ns <= rec.median_ns
    assert rec.digest == digest(spinor_iter(PADOVAN, 10))


def test_exact_backends_share_digests():
    run = benchmark_run(PERRIN, [0, 17, 90], "iter,matpow,det_banded,binet", repetitions=3)
    for n in (0, 17, 90):
        assert len({r.digest for r in run.records if r.n == n}) == 1


def test_large_n_matpow_and_iter_agree():
    run = benchmark_run(PADOVAN, [10**5], "iter,matpow", repetitions=3)
    assert len(run.records) == 2
    assert run.records[0].digest == run.records[1].digest


def test_guards_skip_expensive_or_inexact_backends():
    run = benchmark_run(PADOVAN, [2500], "det_banded,binet,matpow", repetitions=3)
    assert [r.backend for r in run.records] == ["matpow"]
    assert {s[0] for s in run.skipped} == {"det_banded", "binet"}
    run = benchmark_run(PADOVAN, [5], "det_cereceda", repetitions=3)
    assert not run.records and run.skipped[0][0] == "det_cereceda"


def test_repetitions_precondition():
    with pytest.raises(ValueError):
        benchmark_run(PADOVAN, [5], "iter", repetitions=2)


def test_disagreement_aborts(monkeypatch):
    real = bench._compute

    def broken(spec, backend, n):
        x = real(spec, backend, n)
        return x + spinor(0, 0, 0, 1) if backend is BackendId.MATPOW else x

    monkeypatch.setattr(bench, "_compute", broken)
    with pytest.raises(BackendDisagreement):
        benchmark_run(PADOVAN, [12], "iter,matpow", repetitions=3)


def test_csv_layout():
    run = benchmark_run(PADOVAN, [3, 4], "iter,matpow", repetitions=3)
    buf = io.StringIO()
    run.write_csv(buf)
    rows = list(csv.DictReader(io.StringIO(buf.getvalue())))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == 2 * 2 * 3
    assert {r["rep"] for r in rows} == {"0", "1", "2"}
