"""
Conflict surface of a one-parameter-pair CBBA family.

The family puts ``x + yi`` on the first singleton and ``(1 - x) - yi`` on
the second, which always sums to one; it is a valid CBBA only where both
magnitudes are at most 1, i.e. inside the intersection of the unit disks
centred on (0, 0) and (1, 0).  :func:`sweep` evaluates ``|K|`` against a
fixed second CBBA on a regular grid over ``x in [0, 1]``, ``y in [-1, 1]``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Optional, TextIO

import numpy as np

from .cplx import Complex
from .errors import InfeasibleParameters
from .frame import Frame
from .mass import Cbba, validate_cbba

__all__ = [
    "X_RANGE",
    "Y_RANGE",
    "FEASIBILITY_TOL",
    "SweepSpec",
    "SweepCell",
    "SweepGrid",
    "default_frame",
    "default_m2",
    "m1_of",
    "is_feasible",
    "disjoint_weights",
    "sweep_grid",
    "sweep",
    "write_csv",
]

X_RANGE = (0.0, 1.0)
Y_RANGE = (-1.0, 1.0)
FEASIBILITY_TOL = 1e-12


def default_frame() -> Frame:
    return Frame(["A", "B"])


def default_m2(frame: Optional[Frame] = None) -> Cbba:
    """The fixed comparison CBBA: ``A -> 0.5+0.5i``, ``B -> 0.5-0.5i``."""
    frame = frame or default_frame()
    a, b = frame.singletons()[:2]
    return validate_cbba({a: Complex(0.5, 0.5), b: Complex(0.5, -0.5)}, frame)


def is_feasible(x, y):
    """Both family magnitudes within [0, 1]; works on scalars and arrays."""
    lim = 1.0 + FEASIBILITY_TOL
    return (np.hypot(x, y) <= lim) & (np.hypot(1.0 - x, y) <= lim)


def m1_of(x: float, y: float, frame: Optional[Frame] = None) -> Cbba:
    """Member ``(x, y)`` of the family, in rectangular form.

    Works at ``x = 0`` and ``x = 1`` where the polar parameterization's
    ``arctan(y/x)`` is undefined.
    """
    frame = frame or default_frame()
    if len(frame) < 2:
        raise ValueError("the sweep family needs a frame with at least two elements")
    if not is_feasible(x, y):
        raise InfeasibleParameters(
            f"(x, y) = ({x}, {y}) gives magnitudes {math.hypot(x, y):.6g} and {math.hypot(1 - x, y):.6g}"
        )
    a, b = frame.singletons()[:2]
    return validate_cbba({a: Complex(x, y), b: Complex(1.0 - x, -y)}, frame)


def disjoint_weights(m: Cbba) -> np.ndarray:
    """``w[a] = sum of M(B) over B disjoint from a``, as a complex array.

    With it the conflict of any ``M1`` against ``m`` is the dot product
    ``sum_a M1(a) * w[a]``.
    """
    n = m.frame.n_propositions
    vals = np.array([complex(v) for v in m.values])
    bits = np.arange(n)
    disjoint = (bits[:, None] & bits[None, :]) == 0
    return disjoint @ vals


def _axis(lo: float, hi: float, steps: int) -> np.ndarray:
    # i/(n-1) keeps 0.5, -0.5, 0 exact on the default grids
    return lo + (hi - lo) * (np.arange(steps) / (steps - 1))


@dataclass(frozen=True)
class SweepSpec:
    x_steps: int = 201
    y_steps: int = 401
    m2: Cbba = field(default_factory=default_m2)

    def __post_init__(self):
        if self.x_steps < 2 or self.y_steps < 2:
            raise ValueError("sweep step counts must be at least 2")
        if len(self.m2.frame) < 2:
            raise ValueError("the sweep family needs a frame with at least two elements")


@dataclass(frozen=True)
class SweepCell:
    x: float
    y: float
    feasible: bool
    k_magnitude: Optional[float] = None


@dataclass(frozen=True)
class SweepGrid:
    """Array form of a sweep; ``k`` is NaN outside the feasible region.

    ``feasible`` and ``k`` have shape ``(len(xs), len(ys))``.
    """

    xs: np.ndarray
    ys: np.ndarray
    feasible: np.ndarray
    k: np.ndarray

    def cells(self) -> list[SweepCell]:
        out = []
        for i, x in enumerate(self.xs.tolist()):
            for j, y in enumerate(self.ys.tolist()):
                if self.feasible[i, j]:
                    out.append(SweepCell(x, y, True, float(self.k[i, j])))
                else:
                    out.append(SweepCell(x, y, False))
        return out


def sweep_grid(spec: Optional[SweepSpec] = None) -> SweepGrid:
    spec = spec or SweepSpec()
    xs = _axis(*X_RANGE, spec.x_steps)
    ys = _axis(*Y_RANGE, spec.y_steps)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    feasible = is_feasible(X, Y)

    w = disjoint_weights(spec.m2)
    a, b = (s.bits for s in spec.m2.frame.singletons()[:2])
    # M1 is supported on the two singletons only
    K = (X + 1j * Y) * w[a] + ((1.0 - X) - 1j * Y) * w[b]
    k = np.where(feasible, np.abs(K), np.nan)
    return SweepGrid(xs, ys, feasible, k)


def sweep(spec: Optional[SweepSpec] = None) -> list[SweepCell]:
    """Row-major list of cells (``y`` varies fastest)."""
    return sweep_grid(spec).cells()


def write_csv(cells, out: Optional[TextIO] = None) -> Optional[str]:
    """Write ``x,y,feasible,k_magnitude`` rows with 6 decimals.

    ``feasible`` is written as 1/0 and ``k_magnitude`` is left empty for
    infeasible cells.  Returns the text when ``out`` is None.
    """
    buf = out if out is not None else io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x", "y", "feasible", "k_magnitude"])
    for c in cells:
        k = f"{c.k_magnitude:.6f}" if c.feasible else ""
        writer.writerow([_fixed(c.x), _fixed(c.y), int(c.feasible), k])
    if out is None:
        return buf.getvalue()
    return None


def _fixed(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s
