"""Arm-leg diagrams: grid points at or above the antidiagonal.

The n-by-n grid has column 1 at the left and row n at the top, so the cell
(col, row) = (1, n) is the upper-left corner and the antidiagonal is the set
of cells with row = n - col + 1.  Plotting a permutation puts an entry in cell
(i, p_i); the entries at or above the antidiagonal are its peaks.  Each peak
grows an arm (leftwards to the antidiagonal) and a leg (down to it); the arm
of a peak in row r starts at space n - r + 1, the leg of a peak in column c
ends at space c, which ties diagrams to spaced parenthesizations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import ParseError
from .paren import MatchedPairs, SpacedParen
from .permutation import Permutation

__all__ = [
    "GridPoint",
    "PartialArmLegDiagram",
    "peaks",
    "arms_legs",
    "is_intersecting",
    "peaks_from_pairs",
    "depth_at",
]


class GridPoint(NamedTuple):
    col: int
    row: int


@dataclass(frozen=True)
class PartialArmLegDiagram:
    """Points (col, row) with row >= n - col + 1, no two sharing a row or column."""

    n: int
    points: frozenset[GridPoint]

    def __post_init__(self) -> None:
        pts = frozenset(GridPoint(int(c), int(r)) for c, r in self.points)
        object.__setattr__(self, "points", pts)
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        for c, r in pts:
            if not (1 <= c <= self.n and 1 <= r <= self.n):
                raise ValueError(f"point ({c},{r}) outside the [{self.n}] grid")
            if r < self.n - c + 1:
                raise ValueError(f"point ({c},{r}) lies below the antidiagonal")
        cols = [p.col for p in pts]
        rows = [p.row for p in pts]
        if len(set(cols)) != len(cols) or len(set(rows)) != len(rows):
            raise ValueError("two points share a row or column")

    def sorted_points(self) -> list[GridPoint]:
        return sorted(self.points)

    def to_json_obj(self) -> dict:
        return {"n": self.n, "points": [[p.col, p.row] for p in self.sorted_points()]}

    @classmethod
    def from_json_obj(cls, obj) -> "PartialArmLegDiagram":
        try:
            pts = frozenset(GridPoint(int(c), int(r)) for c, r in obj["points"])
            return cls(int(obj["n"]), pts)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"expected keys n, points in {obj!r}") from exc


def peaks(p: Permutation) -> PartialArmLegDiagram:
    """The entries of `p` at or above the antidiagonal.

    Nonempty for n >= 1: the entry in the top row always qualifies.

    >>> peaks(Permutation((3, 4, 1, 5, 2, 6))).sorted_points()
    [GridPoint(col=4, row=5), GridPoint(col=5, row=2), GridPoint(col=6, row=6)]
    """
    n = p.n
    pts = frozenset(
        GridPoint(i, v) for i, v in enumerate(p.word, start=1) if v >= n - i + 1
    )
    diagram = PartialArmLegDiagram(n, pts)
    assert n == 0 or diagram.points, "the top-row entry is always a peak"
    return diagram


def arms_legs(t: PartialArmLegDiagram) -> SpacedParen:
    """Arm starts {n - row + 1} as openings, leg ends {col} as closings.

    >>> sp = arms_legs(peaks(Permutation((3, 4, 1, 5, 2, 6))))
    >>> (sorted(sp.F), sorted(sp.L))
    ([1, 2, 5], [4, 5, 6])
    """
    F = frozenset(t.n - p.row + 1 for p in t.points)
    L = frozenset(p.col for p in t.points)
    return SpacedParen(t.n, F, L)


def is_intersecting(t: PartialArmLegDiagram) -> bool:
    """True iff some arm crosses some leg; equivalently, points in columns
    i < j exist with n - i + 1 <= row_j < row_i."""
    pts = t.sorted_points()
    n = t.n
    for a in range(len(pts)):
        ci, ri = pts[a]
        lo = n - ci + 1
        for b in range(a + 1, len(pts)):
            if lo <= pts[b].row < ri:
                return True
    return False


def peaks_from_pairs(pairs: MatchedPairs, n: int) -> PartialArmLegDiagram:
    """One point (l, n - f + 1) per matched pair (f, l).

    The nesting condition on the pairs makes the result non-intersecting, and
    its arms and legs reproduce the originating (F, L).
    """
    pts = frozenset(GridPoint(l, n - f + 1) for f, l in pairs)
    if len(pts) != len(pairs):
        raise ValueError("duplicate pairs")
    diagram = PartialArmLegDiagram(n, pts)
    assert not is_intersecting(diagram), "matched pairs always give a non-intersecting diagram"
    return diagram


def depth_at(t: PartialArmLegDiagram, i: int) -> int:
    """Number of points in the box cols >= i, rows >= n - i + 1.

    Agrees with the parenthesization depth of space i under arms_legs.
    """
    if not 1 <= i <= t.n:
        raise ValueError(f"space {i} out of range [1, {t.n}]")
    lo = t.n - i + 1
    return sum(1 for p in t.points if p.col >= i and p.row >= lo)
