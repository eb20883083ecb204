"""
Dempster's rule of combination, classical and generalized.

The generalized rule multiplies complex masses pairwise, sends each product
to the intersection of the two propositions, collects the products landing
on the empty set into the complex conflict coefficient ``K`` and divides the
rest by ``1 - K``.  It is defined for any ``K != 1``; here ``|1 - K|`` must
stay above ``singular_tol``.
"""

from __future__ import annotations

import math
import warnings
from collections.abc import Sequence
from dataclasses import dataclass

from .cplx import ONE, ZERO, Complex, div, modulus, mul, sub
from .errors import ConflictSingularity, FrameMismatch, MagnitudeWarning, TotalConflict
from .mass import MAGNITUDE_TOL, Bba, Cbba

__all__ = [
    "SINGULAR_TOL",
    "ConflictReport",
    "conflict",
    "combine",
    "combine_all",
    "classical_conflict",
    "classical_combine",
    "conjunctive_products",
]

SINGULAR_TOL = 1e-9


@dataclass(frozen=True)
class ConflictReport:
    k: Complex
    k_magnitude: float
    singular: bool


def _same_frame(m1, m2):
    if m1.frame is not m2.frame and m1.frame != m2.frame:
        raise FrameMismatch(f"cannot combine evidence on {m1.frame.elements} with evidence on {m2.frame.elements}")


def _nonzero(values):
    return [(bits, v) for bits, v in enumerate(values) if v]


def conjunctive_products(m1: Cbba, m2: Cbba) -> tuple[Complex, list[Complex]]:
    """Unnormalized conjunctive combination.

    Returns ``(K, table)`` where ``table[c]`` is the sum of ``M1(A) M2(B)``
    over ``A & B == c`` for every non-empty ``c`` and ``table[0]`` is zero.
    """
    _same_frame(m1, m2)
    re = [0.0] * m1.frame.n_propositions
    im = [0.0] * m1.frame.n_propositions
    for a, x in _nonzero(m1.values):
        for b, y in _nonzero(m2.values):
            p = mul(x, y)
            c = a & b
            re[c] += p.re
            im[c] += p.im
    k = Complex(re[0], im[0])
    table = [ZERO] + [Complex(r, i) for r, i in zip(re[1:], im[1:])]
    return k, table


def conflict(m1: Cbba, m2: Cbba, singular_tol: float = SINGULAR_TOL) -> ConflictReport:
    """Complex conflict coefficient between two CBBAs."""
    k, _ = conjunctive_products(m1, m2)
    return ConflictReport(k, modulus(k), modulus(sub(ONE, k)) < singular_tol)


def combine(m1: Cbba, m2: Cbba, singular_tol: float = SINGULAR_TOL) -> Cbba:
    """Generalized Dempster combination ``m1 (+) m2``.

    Raises :class:`ConflictSingularity` when ``|1 - K| < singular_tol``.  A
    result with any ``|M(C)| > 1`` is still returned, flagged with
    ``magnitude_exceeded`` and a :class:`MagnitudeWarning`.
    """
    k, table = conjunctive_products(m1, m2)
    norm = sub(ONE, k)
    if modulus(norm) < singular_tol:
        raise ConflictSingularity(f"conflict coefficient K = {k} makes |1 - K| = {modulus(norm):.3g} singular")
    values = tuple([ZERO] + [div(v, norm) for v in table[1:]])
    exceeded = any(modulus(v) > 1.0 + MAGNITUDE_TOL for v in values)
    if exceeded:
        warnings.warn("combined CBBA has a mass with magnitude above 1", MagnitudeWarning, stacklevel=2)
    return Cbba(m1.frame, values, exceeded)


def combine_all(ms: Sequence[Cbba], singular_tol: float = SINGULAR_TOL) -> Cbba:
    """Left fold of :func:`combine` over ``ms``."""
    if not ms:
        raise ValueError("combine_all needs at least one CBBA")
    acc = ms[0]
    for step, m in enumerate(ms[1:], start=1):
        try:
            acc = combine(acc, m, singular_tol)
        except ConflictSingularity as exc:
            raise ConflictSingularity(f"fusion step {step}: {exc}") from exc
        except FrameMismatch as exc:
            raise FrameMismatch(f"fusion step {step}: {exc}") from exc
    return acc


def classical_conflict(b1: Bba, b2: Bba) -> float:
    _same_frame(b1, b2)
    return math.fsum(x * y for a, x in _nonzero(b1.values) for b, y in _nonzero(b2.values) if not a & b)


def classical_combine(b1: Bba, b2: Bba, singular_tol: float = SINGULAR_TOL) -> Bba:
    """Dempster's rule for real BBAs; requires ``K < 1``."""
    _same_frame(b1, b2)
    out = [0.0] * b1.frame.n_propositions
    for a, x in _nonzero(b1.values):
        for b, y in _nonzero(b2.values):
            out[a & b] += x * y
    k = out[0]
    if 1.0 - k < singular_tol:
        raise TotalConflict(f"total conflict: K = {k:.12g}")
    out[0] = 0.0
    return Bba(b1.frame, tuple(v / (1.0 - k) for v in out))
