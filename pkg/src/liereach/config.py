"""Numerical tolerances and run defaults."""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_SEED = 1729
DEFAULT_BUDGET = 200
DEFAULT_WORD_LENGTH = 4


@dataclass(frozen=True)
class Tolerances:
    """Thresholds used throughout the numerical routines.

    All matrix comparisons are Frobenius-norm based.  ``hermitian``,
    ``orthonormal`` and ``rank`` are relative to the scale of the operand;
    ``cluster``, ``trace`` and ``psd`` are absolute on quantities of order
    one (eigenvalues of trace-one matrices); ``verdict`` bounds residuals
    of reachability witnesses and certificates.
    """

    hermitian: float = 1e-10
    orthonormal: float = 1e-10
    rank: float = 1e-9
    unitary: float = 1e-8
    psd: float = 1e-10
    cluster: float = 1e-8
    trace: float = 1e-10
    verdict: float = 1e-7


DEFAULT_TOLERANCES = Tolerances()
