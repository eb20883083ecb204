"""
Frames of discernment and the subset algebra on their power set.

A :class:`Proposition` is a subset of a :class:`Frame` stored as a bitmask:
bit ``i`` is set when ``frame.elements[i]`` belongs to the subset.  All set
operations are therefore single integer operations.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import FrameMismatch, UnknownElement

__all__ = [
    "MAX_FRAME_SIZE",
    "Frame",
    "Proposition",
    "powerset",
    "intersect",
    "union",
    "is_empty",
    "is_subset",
    "label",
    "submasks",
]

MAX_FRAME_SIZE = 32


@dataclass(frozen=True)
class Frame:
    """An ordered set of mutually exclusive hypotheses."""

    elements: tuple[str, ...]

    def __init__(self, elements: Iterable[str]):
        elements = tuple(elements)
        if not elements:
            raise ValueError("a frame needs at least one element")
        if len(elements) > MAX_FRAME_SIZE:
            raise ValueError(f"frames are limited to {MAX_FRAME_SIZE} elements, got {len(elements)}")
        for e in elements:
            if not isinstance(e, str) or not e:
                raise ValueError(f"frame labels must be non-empty strings, got {e!r}")
        if len(set(elements)) != len(elements):
            raise ValueError(f"frame labels must be unique: {elements}")
        object.__setattr__(self, "elements", elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def n_propositions(self) -> int:
        return 1 << len(self.elements)

    @property
    def empty(self) -> Proposition:
        return Proposition(self, 0)

    @property
    def omega(self) -> Proposition:
        return Proposition(self, (1 << len(self.elements)) - 1)

    def index(self, element: str) -> int:
        try:
            return self.elements.index(element)
        except ValueError:
            raise UnknownElement(f"{element!r} is not an element of frame {list(self.elements)}") from None

    def proposition(self, labels: Iterable[str] | str = ()) -> Proposition:
        """Build a proposition from element labels.

        A plain string is read as a comma-separated list, so ``"A,B"`` and
        ``["A", "B"]`` are the same proposition.
        """
        if isinstance(labels, str):
            labels = [s.strip() for s in labels.split(",") if s.strip()]
        bits = 0
        for name in labels:
            bits |= 1 << self.index(name)
        return Proposition(self, bits)

    def singletons(self) -> list[Proposition]:
        return [Proposition(self, 1 << i) for i in range(len(self.elements))]


@dataclass(frozen=True)
class Proposition:
    """A subset of ``frame`` encoded as the integer bitmask ``bits``."""

    frame: Frame
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < (1 << len(self.frame.elements)):
            raise ValueError(f"bitmask {self.bits} out of range for a frame of size {len(self.frame)}")

    @property
    def elements(self) -> tuple[str, ...]:
        return tuple(e for i, e in enumerate(self.frame.elements) if self.bits >> i & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __and__(self, other: Proposition) -> Proposition:
        return intersect(self, other)

    def __or__(self, other: Proposition) -> Proposition:
        return union(self, other)

    def __le__(self, other: Proposition) -> bool:
        return is_subset(self, other)

    def __str__(self) -> str:
        return label(self)


def _check_same_frame(a: Proposition, b: Proposition):
    if a.frame is not b.frame and a.frame != b.frame:
        raise FrameMismatch(f"propositions belong to different frames: {a.frame.elements} vs {b.frame.elements}")


def powerset(frame: Frame) -> Iterator[Proposition]:
    """All ``2**N`` subsets, empty set first, in ascending bitmask order."""
    for bits in range(1 << len(frame.elements)):
        yield Proposition(frame, bits)


def submasks(bits: int) -> Iterator[int]:
    """Every bitmask ``s`` with ``s & ~bits == 0``, including 0 and ``bits``."""
    sub = bits
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & bits


def intersect(a: Proposition, b: Proposition) -> Proposition:
    _check_same_frame(a, b)
    return Proposition(a.frame, a.bits & b.bits)


def union(a: Proposition, b: Proposition) -> Proposition:
    _check_same_frame(a, b)
    return Proposition(a.frame, a.bits | b.bits)


def is_empty(a: Proposition) -> bool:
    return a.bits == 0


def is_subset(a: Proposition, b: Proposition) -> bool:
    _check_same_frame(a, b)
    return a.bits & ~b.bits == 0


def label(a: Proposition) -> str:
    """Sorted element names joined by commas; the empty set renders as ``∅``."""
    if a.bits == 0:
        return "∅"
    return ",".join(sorted(a.elements))
