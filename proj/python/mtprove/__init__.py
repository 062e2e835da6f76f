"""Prover for strict positivity of mixed trigonometric polynomials.

Goals are written as ``"<expr> > 0 on (lo, hi]"``; certificates are JSON
documents that :func:`check` re-verifies from scratch.
"""

from ._mtprove import (
    MtproveError,
    ParseError,
    canonical,
    check,
    fourier,
    limits,
    pipoly_sign,
    prove,
    samples,
)

__all__ = [
    "MtproveError",
    "ParseError",
    "canonical",
    "check",
    "fourier",
    "limits",
    "pipoly_sign",
    "prove",
    "samples",
]
