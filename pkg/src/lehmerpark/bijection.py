"""Maps between parking outcomes, g-parenthesizations, and set partitions.

An OutcomePermutation is a permutation certified (once, at construction) to
avoid the arm-leg pattern, making it the outcome of at least one staircase
preference tuple.  `phi` reads off arms and legs; `phi_prime` additionally
records, row by row from the top, where each peakless row's entry sits among
the columns still empty, which makes the map invertible.  Composing with the
partition maps gives the bijection outcomes <-> set partitions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .armleg import arms_legs, peaks, peaks_from_pairs
from .paren import GBsp, SpacedParen, depths, is_balanced, matching_pairs
from .permutation import Permutation, contains_armleg_pattern
from .setpartition import SetPartition, from_gbsp, to_gbsp

__all__ = [
    "OutcomePermutation",
    "phi",
    "phi_prime",
    "phi_prime_inv",
    "fiber_size",
    "fiber",
    "outcome_to_partition",
    "partition_to_outcome",
]


@dataclass(frozen=True)
class OutcomePermutation:
    """Permutation certified to avoid the arm-leg pattern."""

    perm: Permutation

    def __post_init__(self) -> None:
        if contains_armleg_pattern(self.perm):
            raise ValueError(
                f"{self.perm.to_text()} contains the arm-leg pattern and is not "
                "the outcome of any staircase preference tuple"
            )

    @property
    def n(self) -> int:
        return self.perm.n

    @property
    def word(self) -> tuple[int, ...]:
        return self.perm.word


def phi(p: OutcomePermutation) -> SpacedParen:
    """Arms and legs of the peak diagram; always balanced on outcomes."""
    return arms_legs(peaks(p.perm))


def phi_prime(p: OutcomePermutation) -> GBsp:
    """phi plus the filling data: sweeping rows from the top, each peakless row
    n - i + 1 holds its entry in some column c < i, and g(i) is the rank of c
    among the columns in [1, i - 1] that are still empty."""
    perm = p.perm
    n = perm.n
    peak_diagram = peaks(perm)
    base = arms_legs(peak_diagram)
    used = [False] * (n + 1)
    for c, _ in peak_diagram.points:
        used[c] = True
    col_of_row = [0] * (n + 1)
    for c, v in enumerate(perm.word, start=1):
        col_of_row[v] = c
    ds = depths(base)
    g: dict[int, int] = {}
    for i in range(1, n + 1):  # row n - i + 1, top to bottom
        if i in base.F:
            continue
        empty = [j for j in range(1, i) if not used[j]]
        assert len(empty) == ds[i - 1], "empty-column count equals the depth"
        c = col_of_row[n - i + 1]
        g[i] = empty.index(c) + 1
        used[c] = True
    return GBsp(base, g)


def phi_prime_inv(gb: GBsp) -> OutcomePermutation:
    """Rebuild the outcome: place peaks from the matched pairs of the base, then
    fill each peakless row from the top with the g(i)-th smallest empty column
    in [1, i - 1]."""
    n = gb.n
    diagram = peaks_from_pairs(matching_pairs(gb.base), n)
    word = [0] * (n + 1)
    used = [False] * (n + 1)
    for c, r in diagram.points:
        word[c] = r
        used[c] = True
    ds = depths(gb.base)
    g = gb.g_map
    for i in range(1, n + 1):
        if i in gb.base.F:
            continue
        empty = [j for j in range(1, i) if not used[j]]
        assert len(empty) == ds[i - 1], "empty-column count equals the depth"
        c = empty[g[i] - 1]
        word[c] = n - i + 1
        used[c] = True
    return OutcomePermutation(Permutation(tuple(word[1:])))


def fiber_size(sp: SpacedParen) -> int:
    """Number of outcomes (equally, partitions) mapping to `sp`: the product of
    the depths over spaces outside F."""
    if not is_balanced(sp):
        raise ValueError("fibers are defined only for balanced parenthesizations")
    ds = depths(sp)
    size = 1
    for i in range(1, sp.n + 1):
        if i not in sp.F:
            size *= ds[i - 1]
    return size


def fiber(sp: SpacedParen) -> Iterator[OutcomePermutation]:
    """All outcomes whose arms and legs equal `sp`, in g-lexicographic order."""
    if not is_balanced(sp):
        raise ValueError("fibers are defined only for balanced parenthesizations")
    free = [i for i in range(1, sp.n + 1) if i not in sp.F]
    ds = depths(sp)
    for combo in itertools.product(*(range(1, ds[i - 1] + 1) for i in free)):
        yield phi_prime_inv(GBsp(sp, dict(zip(free, combo))))


def outcome_to_partition(p: OutcomePermutation) -> SetPartition:
    return from_gbsp(phi_prime(p))


def partition_to_outcome(b: SetPartition) -> OutcomePermutation:
    return phi_prime_inv(to_gbsp(b))
