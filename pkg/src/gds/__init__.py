"""Generalized Dempster-Shafer evidence theory over complex mass functions."""

from .cplx import Complex, Polar, add, conjugate, div, from_polar, modulus, modulus_sq, mul, sub, to_polar
from .errors import (
    ConflictSingularity,
    DivisionByZero,
    EmptySetMass,
    EvidenceError,
    FrameMismatch,
    InfeasibleParameters,
    MagnitudeOutOfRange,
    MagnitudeWarning,
    NotNormalized,
    ParseError,
    TotalConflict,
    UnknownElement,
)
from .evidence import DecisionResult, decide, parse_evidence, serialize_evidence
from .frame import Frame, Proposition, intersect, is_empty, is_subset, label, powerset
from .fusion import ConflictReport, classical_combine, classical_conflict, combine, combine_all, conflict
from .mass import Bba, Cbba, bel, bel_c, focal_elements, lift, pl, pl_c, vacuous, validate_bba, validate_cbba
from .sweep import SweepCell, SweepGrid, SweepSpec, default_m2, m1_of, sweep, sweep_grid, write_csv

__version__ = "0.1.0"
