"""Computation backends, determinant constructions, generating functions, audit and benchmarks."""

from .audit import AuditEntry, AuditReport, identity_audit
from .backends import BackendId, CrossCheckResult, cross_check, parse_backends, term
from .bench import BenchRecord, BenchRun, benchmark_run
from .determinants import hessenberg_det, term_det_banded, term_det_cereceda
from .genfunc import EgfResult, GenFunction, egf_eval, generating_function, gf_coefficients

__all__ = [
    "AuditEntry",
    "AuditReport",
    "identity_audit",
    "BackendId",
    "CrossCheckResult",
    "cross_check",
    "parse_backends",
    "term",
    "BenchRecord",
    "BenchRun",
    "benchmark_run",
    "hessenberg_det",
    "term_det_banded",
    "term_det_cereceda",
    "EgfResult",
    "GenFunction",
    "egf_eval",
    "generating_function",
    "gf_coefficients",
]
