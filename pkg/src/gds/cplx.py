"""
Complex scalars in rectangular and polar form.

``Complex`` is the scalar field of the generalized evidence theory: every
complex mass, conflict coefficient and fused value is one of these.  The
arithmetic is written out component-wise rather than delegated to the
builtin ``complex`` so that each operation is explicit and the finite-value
invariant is checked on every result.

Phases are always taken with the full-plane arctangent (``atan2``) and
canonicalized to the half-open interval (-pi, pi].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Real

from .errors import DivisionByZero

__all__ = [
    "Complex",
    "Polar",
    "ZERO",
    "ONE",
    "I",
    "as_complex",
    "from_polar",
    "to_polar",
    "add",
    "sub",
    "mul",
    "div",
    "conjugate",
    "modulus",
    "modulus_sq",
    "normalize_phase",
]


def normalize_phase(phase: float) -> float:
    """Wrap an angle in radians into (-pi, pi]."""
    if -math.pi < phase <= math.pi:
        return phase
    wrapped = math.remainder(phase, 2.0 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2.0 * math.pi
    return wrapped


@dataclass(frozen=True, slots=True)
class Complex:
    """An immutable complex number ``re + im*i`` with finite components."""

    re: float
    im: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError(f"complex components must be finite, got ({self.re}, {self.im})")

    @classmethod
    def polar(cls, magnitude: float, phase: float) -> Complex:
        return from_polar(Polar(magnitude, phase))

    @property
    def magnitude(self) -> float:
        return modulus(self)

    @property
    def phase(self) -> float:
        return to_polar(self).phase

    def conjugate(self) -> Complex:
        return conjugate(self)

    def is_close(self, other, tol: float = 1e-9) -> bool:
        """Component-wise absolute comparison."""
        other = as_complex(other)
        return abs(self.re - other.re) <= tol and abs(self.im - other.im) <= tol

    def __add__(self, other):
        try:
            return add(self, as_complex(other))
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        try:
            return sub(self, as_complex(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        try:
            return sub(as_complex(other), self)
        except TypeError:
            return NotImplemented

    def __mul__(self, other):
        try:
            return mul(self, as_complex(other))
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            return div(self, as_complex(other))
        except TypeError:
            return NotImplemented

    def __rtruediv__(self, other):
        try:
            return div(as_complex(other), self)
        except TypeError:
            return NotImplemented

    def __neg__(self) -> Complex:
        return Complex(-self.re, -self.im)

    def __abs__(self) -> float:
        return modulus(self)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __bool__(self) -> bool:
        return self.re != 0.0 or self.im != 0.0

    def __str__(self) -> str:
        sign = "-" if math.copysign(1.0, self.im) < 0 else "+"
        return f"{self.re:g}{sign}{abs(self.im):g}i"


@dataclass(frozen=True, slots=True)
class Polar:
    """Polar form ``magnitude * exp(i*phase)``, stored canonically.

    The phase is wrapped into (-pi, pi] and a zero magnitude forces a zero
    phase, so two ``Polar`` values are equal exactly when the complex numbers
    they denote are.
    """

    magnitude: float
    phase: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.magnitude) and math.isfinite(self.phase)):
            raise ValueError("polar components must be finite")
        if self.magnitude < 0.0:
            raise ValueError(f"magnitude must be non-negative, got {self.magnitude}")
        phase = 0.0 if self.magnitude == 0.0 else normalize_phase(self.phase)
        object.__setattr__(self, "phase", phase)


ZERO = Complex(0.0, 0.0)
ONE = Complex(1.0, 0.0)
I = Complex(0.0, 1.0)


def as_complex(value) -> Complex:
    """Coerce a ``Complex``, builtin ``complex`` or real number."""
    if isinstance(value, Complex):
        return value
    if isinstance(value, complex):
        return Complex(value.real, value.imag)
    if isinstance(value, Real):
        return Complex(float(value), 0.0)
    raise TypeError(f"cannot interpret {type(value).__name__} as a complex number")


def from_polar(p: Polar) -> Complex:
    # Euler's relation: r*e^{i t} = r*cos(t) + i*r*sin(t)
    return Complex(p.magnitude * math.cos(p.phase), p.magnitude * math.sin(p.phase))


def to_polar(z: Complex) -> Polar:
    r = math.hypot(z.re, z.im)
    if r == 0.0:
        return Polar(0.0, 0.0)
    theta = math.atan2(z.im, z.re)
    if theta == -math.pi:
        theta = math.pi
    return Polar(r, theta)


def add(a: Complex, b: Complex) -> Complex:
    return Complex(a.re + b.re, a.im + b.im)


def sub(a: Complex, b: Complex) -> Complex:
    return Complex(a.re - b.re, a.im - b.im)


def mul(a: Complex, b: Complex) -> Complex:
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + b.re * a.im)


def div(a: Complex, b: Complex) -> Complex:
    """Field quotient ``a / b``; raises :class:`DivisionByZero` when ``|b| = 0``."""
    denom = b.re * b.re + b.im * b.im
    if denom == 0.0:
        raise DivisionByZero(f"complex division by zero ({a} / {b})")
    return Complex((a.re * b.re + a.im * b.im) / denom, (b.re * a.im - a.re * b.im) / denom)


def conjugate(z: Complex) -> Complex:
    return Complex(z.re, -z.im)


def modulus(z: Complex) -> float:
    return math.hypot(z.re, z.im)


def modulus_sq(z: Complex) -> float:
    """``z * conj(z)``, which is always real."""
    return mul(z, conjugate(z)).re
