"""Spaced parenthesizations: n labeled spaces with opening and closing parens.

A pair (F, L) of equal-size subsets of [n] puts an opening paren immediately
before each space in F and a closing paren immediately after each space in L.
The depth of space i is the number of opening parens at or before i minus the
number of closing parens strictly before i; the parenthesization is balanced
when every depth is at least 1.

A balanced pair can be augmented with a choice function g assigning to each
space i outside F a value in [1, depth(i)].  The string form writes one token
per space: `_` for spaces in F, the g value otherwise, with `(` and `)` glued
on, e.g. ``(_ (_ 2 1) (_) 1)``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import GbspError, ParseError

__all__ = [
    "SpacedParen",
    "MatchedPairs",
    "GBsp",
    "depth",
    "depths",
    "is_balanced",
    "matching_pairs",
    "validate_gbsp",
    "render",
    "parse",
    "enumerate_bsps",
    "enumerate_gbsps",
]


@dataclass(frozen=True)
class SpacedParen:
    """Opening spaces F and closing spaces L; not necessarily balanced."""

    n: int
    F: frozenset[int]
    L: frozenset[int]

    def __post_init__(self) -> None:
        F = frozenset(int(i) for i in self.F)
        L = frozenset(int(i) for i in self.L)
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "L", L)
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        for name, members in (("F", F), ("L", L)):
            bad = sorted(i for i in members if not 1 <= i <= self.n)
            if bad:
                raise ValueError(f"{name} contains spaces outside [1, {self.n}]: {bad}")
        if len(F) != len(L):
            raise ValueError(f"|F| = {len(F)} differs from |L| = {len(L)}")

    def to_json_obj(self) -> dict:
        return {"n": self.n, "F": sorted(self.F), "L": sorted(self.L)}

    @classmethod
    def from_json_obj(cls, obj) -> "SpacedParen":
        try:
            return cls(int(obj["n"]), frozenset(obj["F"]), frozenset(obj["L"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"expected keys n, F, L in {obj!r}") from exc

    def __str__(self) -> str:
        return render(self)


def depth(sp: SpacedParen, i: int) -> int:
    """Opening parens at or before space i minus closing parens strictly before it.

    Defined for unbalanced input too (it may then be nonpositive).
    """
    if not 1 <= i <= sp.n:
        raise ValueError(f"space {i} out of range [1, {sp.n}]")
    return sum(1 for f in sp.F if f <= i) - sum(1 for l in sp.L if l < i)


def depths(sp: SpacedParen) -> tuple[int, ...]:
    """Depth at every space, in one left-to-right sweep.

    >>> depths(SpacedParen(7, frozenset({1, 3, 5}), frozenset({5, 6, 7})))
    (1, 1, 2, 2, 3, 2, 1)
    """
    out = []
    d = 0
    for i in range(1, sp.n + 1):
        if i in sp.F:
            d += 1
        out.append(d)
        if i in sp.L:
            d -= 1
    return tuple(out)


def is_balanced(sp: SpacedParen) -> bool:
    """True iff every space has positive depth (forces 1 in F and n in L)."""
    return all(d >= 1 for d in depths(sp))


@dataclass(frozen=True)
class MatchedPairs:
    """Pairs (f, l) with f <= l, distinct openings and closings, and no crossing
    f_i < f_j <= l_i < l_j; stored sorted by opening space."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple(sorted((int(f), int(l)) for f, l in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        openings = [f for f, _ in pairs]
        closings = [l for _, l in pairs]
        if len(set(openings)) != len(openings) or len(set(closings)) != len(closings):
            raise ValueError("duplicate opening or closing space")
        for f, l in pairs:
            if f > l:
                raise ValueError(f"pair ({f},{l}) closes before it opens")
        for a in range(len(pairs)):
            fa, la = pairs[a]
            for b in range(a + 1, len(pairs)):
                fb, lb = pairs[b]
                if fa < fb <= la < lb:
                    raise ValueError(f"pairs ({fa},{la}) and ({fb},{lb}) cross")

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def matching_pairs(sp: SpacedParen) -> MatchedPairs:
    """Match parens by a stack scan: `(` before space f pushes, `)` after space l pops.

    >>> matching_pairs(SpacedParen(7, frozenset({1, 3, 5}), frozenset({5, 6, 7}))).pairs
    ((1, 7), (3, 6), (5, 5))
    """
    if not is_balanced(sp):
        raise ValueError("matching pairs are defined only for balanced parenthesizations")
    stack: list[int] = []
    out: list[tuple[int, int]] = []
    for i in range(1, sp.n + 1):
        if i in sp.F:
            stack.append(i)
        if i in sp.L:
            out.append((stack.pop(), i))
    return MatchedPairs(tuple(out))


@dataclass(frozen=True)
class GBsp:
    """A balanced parenthesization plus g(i) in [1, depth(i)] for each space i not in F.

    `g` may be given as a mapping or as (space, value) pairs; it is stored as a
    sorted tuple of pairs so instances hash.
    """

    base: SpacedParen
    g: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        raw = self.g.items() if isinstance(self.g, Mapping) else self.g
        g_pairs = tuple(sorted((int(i), int(v)) for i, v in raw))
        object.__setattr__(self, "g", g_pairs)
        if not is_balanced(self.base):
            raise GbspError("base parenthesization is not balanced", code="unbalanced-base")
        spaces = [i for i, _ in g_pairs]
        if len(set(spaces)) != len(spaces):
            dup = next(i for k, i in enumerate(spaces) if i in spaces[:k])
            raise GbspError(f"duplicate g entry for space {dup}", code="g-extra", space=dup)
        expected = set(range(1, self.base.n + 1)) - self.base.F
        missing = sorted(expected - set(spaces))
        extra = sorted(set(spaces) - expected)
        if missing:
            raise GbspError(
                f"missing g entry for space {missing[0]}", code="g-missing", space=missing[0]
            )
        if extra:
            raise GbspError(
                f"unexpected g entry for space {extra[0]}", code="g-extra", space=extra[0]
            )
        ds = depths(self.base)
        for i, v in g_pairs:
            if not 1 <= v <= ds[i - 1]:
                raise GbspError(
                    f"g({i}) = {v} outside [1, {ds[i - 1]}]", code="g-out-of-range", space=i
                )

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def g_map(self) -> dict[int, int]:
        return dict(self.g)

    def to_json_obj(self) -> dict:
        obj = self.base.to_json_obj()
        obj["g"] = {str(i): v for i, v in self.g}
        return obj

    @classmethod
    def from_json_obj(cls, obj) -> "GBsp":
        base = SpacedParen.from_json_obj(obj)
        g_raw = obj.get("g", {})
        return cls(base, {int(i): int(v) for i, v in g_raw.items()})

    def __str__(self) -> str:
        return render(self)


def validate_gbsp(n: int, F, L, g) -> GBsp:
    """Build a GBsp from raw parts, raising GbspError with a distinct code when
    the base is unbalanced, g has missing or extra entries, or a value is out
    of range."""
    return GBsp(SpacedParen(n, frozenset(F), frozenset(L)), g)


_TOKEN_RE = re.compile(r"^(\()?(_|\d+)(\))?$")


def render(x: SpacedParen | GBsp) -> str:
    """One token per space, separated by single spaces: `(` is glued before the
    slot for spaces in F and `)` after it for spaces in L.  Slots show `_` for
    spaces in F (and everywhere on a plain SpacedParen), else the g value.

    >>> render(SpacedParen(7, frozenset({1, 3, 5}), frozenset({5, 6, 7})))
    '(_ _ (_ _ (_) _) _)'
    """
    base = x.base if isinstance(x, GBsp) else x
    g = x.g_map if isinstance(x, GBsp) else {}
    tokens = []
    for i in range(1, base.n + 1):
        slot = str(g[i]) if i in g else "_"
        tokens.append(("(" if i in base.F else "") + slot + (")" if i in base.L else ""))
    return " ".join(tokens)


def parse(s: str) -> SpacedParen | GBsp:
    """Inverse of render.  Returns a GBsp when any digit slot appears, else a
    SpacedParen; reports the first offending token by 1-based position.

    A fully parenthesized GBsp (F = [n]) has no digit slots, so its rendering
    parses back to the bare SpacedParen.
    """
    s = s.strip()
    if not s:
        return SpacedParen(0, frozenset(), frozenset())
    tokens = s.split(" ")
    F: set[int] = set()
    L: set[int] = set()
    g: dict[int, int] = {}
    for pos, token in enumerate(tokens, start=1):
        m = _TOKEN_RE.match(token)
        if not m:
            raise ParseError(f"bad token {token!r} at space {pos}", position=pos)
        opened, slot, closed = m.groups()
        if opened:
            F.add(pos)
        if closed:
            L.add(pos)
        if slot != "_":
            if opened:
                raise ParseError(
                    f"space {pos} opens a paren and cannot carry a g value", position=pos
                )
            g[pos] = int(slot)
    base = SpacedParen(len(tokens), frozenset(F), frozenset(L))
    if g:
        return GBsp(base, g)
    return base


def enumerate_bsps(n: int) -> Iterator[SpacedParen]:
    """Every balanced spaced parenthesization on n spaces, exactly once."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    F: list[int] = []
    L: list[int] = []

    def go(i: int, opens: int, closes: int) -> Iterator[SpacedParen]:
        if i > n:
            if opens == closes:
                yield SpacedParen(n, frozenset(F), frozenset(L))
            return
        remaining = n - i
        for op in (0, 1):
            if opens + op - closes < 1:  # depth at space i must be positive
                continue
            if op:
                F.append(i)
            for cl in (0, 1):
                if opens + op - closes - cl > remaining:  # cannot close up in time
                    continue
                if cl:
                    L.append(i)
                yield from go(i + 1, opens + op, closes + cl)
                if cl:
                    L.pop()
            if op:
                F.pop()

    yield from go(1, 0, 0)


def enumerate_gbsps(n: int) -> Iterator[GBsp]:
    """Every g-augmented balanced parenthesization on n spaces; Bell-many in total."""
    for sp in enumerate_bsps(n):
        free = [i for i in range(1, n + 1) if i not in sp.F]
        ds = depths(sp)
        for combo in itertools.product(*(range(1, ds[i - 1] + 1) for i in free)):
            yield GBsp(sp, dict(zip(free, combo)))
