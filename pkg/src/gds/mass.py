"""
Classical and complex basic belief assignments.

Both :class:`Bba` and :class:`Cbba` store one value per proposition in a
dense tuple indexed by bitmask, so ``values[p.bits]`` is the mass of ``p``.
Instances are normally obtained through :func:`validate_bba` and
:func:`validate_cbba`; the combination rules build their outputs directly.
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Union

from .cplx import ZERO, Complex, as_complex, modulus
from .errors import EmptySetMass, FrameMismatch, MagnitudeOutOfRange, NotNormalized
from .frame import Frame, Proposition, submasks

__all__ = [
    "NORMALIZATION_TOL",
    "MAGNITUDE_TOL",
    "FOCAL_TOL",
    "Bba",
    "Cbba",
    "validate_bba",
    "validate_cbba",
    "vacuous",
    "lift",
    "bel",
    "pl",
    "bel_c",
    "pl_c",
    "focal_elements",
]

NORMALIZATION_TOL = 1e-9
MAGNITUDE_TOL = 1e-9
FOCAL_TOL = 1e-12

ComplexLike = Union[Complex, complex, float, int]


def _check_frame(frame: Frame, p: Proposition):
    if p.frame is not frame and p.frame != frame:
        raise FrameMismatch(f"proposition {p} is not defined on frame {list(frame.elements)}")


@dataclass(frozen=True)
class Bba:
    """A real-valued mass function ``m: 2^frame -> [0, 1]``."""

    frame: Frame
    values: tuple[float, ...]

    def __getitem__(self, p: Proposition) -> float:
        _check_frame(self.frame, p)
        return self.values[p.bits]

    def items(self):
        """``(proposition, mass)`` pairs with non-zero mass, in bitmask order."""
        return [(Proposition(self.frame, b), v) for b, v in enumerate(self.values) if v != 0.0]

    def as_dict(self) -> dict[Proposition, float]:
        return dict(self.items())


@dataclass(frozen=True)
class Cbba:
    """A complex basic belief assignment.

    ``magnitude_exceeded`` is set on combination outputs whose masses left
    the unit disk; user-built assignments never carry it.
    """

    frame: Frame
    values: tuple[Complex, ...]
    magnitude_exceeded: bool = False

    def __getitem__(self, p: Proposition) -> Complex:
        _check_frame(self.frame, p)
        return self.values[p.bits]

    def items(self):
        return [(Proposition(self.frame, b), v) for b, v in enumerate(self.values) if v]

    def as_dict(self) -> dict[Proposition, Complex]:
        return dict(self.items())

    def total(self) -> Complex:
        return Complex(math.fsum(v.re for v in self.values), math.fsum(v.im for v in self.values))

    def is_real(self, tol: float = 0.0) -> bool:
        return all(abs(v.im) <= tol for v in self.values)

    def is_close(self, other: Cbba, tol: float = 1e-9) -> bool:
        if self.frame != other.frame:
            return False
        return all(a.is_close(b, tol) for a, b in zip(self.values, other.values))


def _dense(raw: Mapping[Proposition, object], frame: Frame, convert):
    values = [convert(0)] * frame.n_propositions
    for p, v in raw.items():
        _check_frame(frame, p)
        values[p.bits] = convert(v)
    return values


def validate_cbba(
    raw: Mapping[Proposition, ComplexLike], frame: Frame, tol: float = NORMALIZATION_TOL
) -> Cbba:
    """Check the complex mass conditions and return a :class:`Cbba`.

    Propositions missing from ``raw`` get zero mass.  ``tol`` bounds the
    deviation of the complex sum from ``1 + 0i`` in each component; pass a
    looser value for hand-rounded inputs.
    """
    values = _dense(raw, frame, as_complex)
    if values[0]:
        raise EmptySetMass(f"mass of the empty set must be 0, got {values[0]}")
    for bits, v in enumerate(values):
        r = modulus(v)
        if r > 1.0 + MAGNITUDE_TOL:
            p = Proposition(frame, bits)
            raise MagnitudeOutOfRange(f"|M({p})| = {r:.12g} exceeds 1")
    re = math.fsum(v.re for v in values)
    im = math.fsum(v.im for v in values)
    if abs(re - 1.0) > tol or abs(im) > tol:
        raise NotNormalized(f"complex masses sum to {re:.12g}{im:+.12g}i, expected 1+0i (tol {tol:g})")
    return Cbba(frame, tuple(values))


def validate_bba(raw: Mapping[Proposition, float], frame: Frame, tol: float = NORMALIZATION_TOL) -> Bba:
    values = _dense(raw, frame, float)
    if values[0] != 0.0:
        raise EmptySetMass(f"mass of the empty set must be 0, got {values[0]}")
    for bits, v in enumerate(values):
        if not math.isfinite(v) or v < 0.0 or v > 1.0 + MAGNITUDE_TOL:
            raise MagnitudeOutOfRange(f"m({Proposition(frame, bits)}) = {v!r} is outside [0, 1]")
    total = math.fsum(values)
    if abs(total - 1.0) > tol:
        raise NotNormalized(f"masses sum to {total:.12g}, expected 1 (tol {tol:g})")
    return Bba(frame, tuple(values))


def vacuous(frame: Frame) -> Cbba:
    """Total ignorance: all mass on the whole frame."""
    values = [ZERO] * frame.n_propositions
    values[-1] = Complex(1.0, 0.0)
    return Cbba(frame, tuple(values))


def lift(b: Bba) -> Cbba:
    """Embed a real BBA as a CBBA with zero imaginary parts."""
    return Cbba(b.frame, tuple(Complex(v, 0.0) for v in b.values))


def bel(b: Bba, a: Proposition) -> float:
    _check_frame(b.frame, a)
    return math.fsum(b.values[s] for s in submasks(a.bits))


def pl(b: Bba, a: Proposition) -> float:
    _check_frame(b.frame, a)
    return math.fsum(v for bits, v in enumerate(b.values) if bits & a.bits)


def bel_c(m: Cbba, a: Proposition) -> float:
    """Sum of mass magnitudes over every subset of ``a``."""
    _check_frame(m.frame, a)
    return math.fsum(modulus(m.values[s]) for s in submasks(a.bits))


def pl_c(m: Cbba, a: Proposition) -> float:
    """Sum of mass magnitudes over every proposition that meets ``a``."""
    _check_frame(m.frame, a)
    return math.fsum(modulus(v) for bits, v in enumerate(m.values) if bits & a.bits)


def focal_elements(m: Cbba) -> list[tuple[Proposition, Complex]]:
    return [(Proposition(m.frame, b), v) for b, v in enumerate(m.values) if modulus(v) > FOCAL_TOL]
