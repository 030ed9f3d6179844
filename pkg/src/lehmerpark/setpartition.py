"""Set partitions of [n] and their translation to and from parenthesizations.

Blocks are kept sorted internally (each block ascending, blocks by minimum),
so equal partitions compare equal.  Text form joins brace-wrapped blocks with
pipes, e.g. ``{1,4}|{2,3,6}|{5}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .errors import ParseError
from .paren import GBsp, SpacedParen, depths

__all__ = [
    "SetPartition",
    "min_max",
    "to_gbsp",
    "from_gbsp",
    "enumerate_partitions",
]


@dataclass(frozen=True)
class SetPartition:
    """Nonempty disjoint blocks covering {1, ..., n}."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(sorted(tuple(sorted(int(x) for x in b)) for b in self.blocks))
        object.__setattr__(self, "blocks", blocks)
        if any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        members = sorted(x for b in blocks for x in b)
        if members != list(range(1, self.n + 1)):
            raise ValueError(f"blocks do not partition [1, {self.n}]")

    def block_of(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise ValueError(f"{x} is not in [1, {self.n}]")

    def to_text(self) -> str:
        return "|".join("{" + ",".join(str(x) for x in b) + "}" for b in self.blocks)

    @classmethod
    def from_text(cls, text: str) -> "SetPartition":
        text = text.strip()
        if not text:
            return cls(0, ())
        blocks = []
        for pos, chunk in enumerate(text.split("|"), start=1):
            m = re.fullmatch(r"\s*\{([0-9,\s]*)\}\s*", chunk)
            if not m:
                raise ParseError(f"bad block {chunk!r} at position {pos}", position=pos)
            blocks.append(tuple(int(x) for x in m.group(1).split(",") if x.strip()))
        n = max((x for b in blocks for x in b), default=0)
        return cls(n, tuple(blocks))

    def to_json_obj(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json_obj(cls, obj) -> "SetPartition":
        if not isinstance(obj, dict) or "blocks" not in obj:
            raise ParseError(f"expected a JSON object with a blocks key, got {obj!r}")
        blocks = tuple(tuple(b) for b in obj["blocks"])
        n = obj.get("n", max((x for b in blocks for x in b), default=0))
        return cls(int(n), blocks)

    def __str__(self) -> str:
        return self.to_text()


def min_max(b: SetPartition) -> SpacedParen:
    """Block minima as opening spaces, block maxima as closing spaces.

    Always balanced: at any space i, each block containing an element <= i and
    an element >= i contributes to the depth.

    >>> sp = min_max(SetPartition(6, ((1, 4), (2, 3, 6), (5,))))
    >>> (sorted(sp.F), sorted(sp.L))
    ([1, 2, 5], [4, 5, 6])
    """
    F = frozenset(blk[0] for blk in b.blocks)
    L = frozenset(blk[-1] for blk in b.blocks)
    return SpacedParen(b.n, F, L)


def to_gbsp(b: SetPartition) -> GBsp:
    """min_max(b) plus, for each non-minimum element i, the rank of its block
    among the blocks open at i (min < i <= max), ordered by minimum."""
    base = min_max(b)
    g: dict[int, int] = {}
    for i in range(1, b.n + 1):
        if i in base.F:
            continue
        open_blocks = [blk for blk in b.blocks if blk[0] < i <= blk[-1]]
        g[i] = open_blocks.index(b.block_of(i)) + 1
    return GBsp(base, g)


def from_gbsp(gb: GBsp) -> SetPartition:
    """Rebuild the partition by a single left-to-right pass.

    Space i opens a block when i is in F, closes the g(i)-th open block (by
    minimum) when i is in L only, joins the g(i)-th open block when i is in
    neither, and forms a singleton when i is in both.  The number of open
    blocks at each g-consuming step equals the depth of the space.
    """
    n = gb.n
    F, L = gb.base.F, gb.base.L
    g = gb.g_map
    ds = depths(gb.base)
    open_blocks: list[list[int]] = []  # minima are encountered in increasing order
    closed: list[list[int]] = []
    for i in range(1, n + 1):
        if i in F and i in L:
            closed.append([i])
        elif i in F:
            open_blocks.append([i])
        elif i in L:
            assert len(open_blocks) == ds[i - 1], "open-block count equals the depth"
            blk = open_blocks.pop(g[i] - 1)
            blk.append(i)
            closed.append(blk)
        else:
            assert len(open_blocks) == ds[i - 1], "open-block count equals the depth"
            open_blocks[g[i] - 1].append(i)
    assert not open_blocks, "every block closes at its maximum"
    return SetPartition(n, tuple(tuple(blk) for blk in closed))


def enumerate_partitions(n: int) -> Iterator[SetPartition]:
    """Every set partition of [n] exactly once, by restricted-growth strings."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield SetPartition(0, ())
        return
    assignment = [0] * n

    def go(i: int, nblocks: int) -> Iterator[SetPartition]:
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(nblocks)]
            for element, b in enumerate(assignment, start=1):
                blocks[b].append(element)
            yield SetPartition(n, tuple(tuple(b) for b in blocks))
            return
        for b in range(nblocks + 1):
            assignment[i] = b
            yield from go(i + 1, max(nblocks, b + 1))

    yield from go(0, 0)
