"""Permutations in one-line notation, inversion tables, and the two pattern tests.

Positions and values are both 1-based in every external format, so
``Permutation((5, 2, 4, 3, 1, 6))`` is the word 524316 whose value at position 1
is 5.  Text input accepts comma-separated values, or a plain digit string like
``"524316"`` when n <= 9.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError

__all__ = [
    "Permutation",
    "InversionTable",
    "identity",
    "inverse",
    "inversion_table",
    "from_inversion_table",
    "contains_pattern_132",
    "contains_armleg_pattern",
]


@dataclass(frozen=True)
class Permutation:
    """A rearrangement of {1, ..., n} in one-line notation."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(int(v) for v in self.word)
        object.__setattr__(self, "word", word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ParseError(f"not a permutation of [{len(word)}]: {word!r}")

    @property
    def n(self) -> int:
        return len(self.word)

    def value_at(self, pos: int) -> int:
        """Value at 1-based position `pos`."""
        if not 1 <= pos <= self.n:
            raise ValueError(f"position {pos} out of range [1, {self.n}]")
        return self.word[pos - 1]

    def position_of(self, value: int) -> int:
        """1-based position holding `value`."""
        if not 1 <= value <= self.n:
            raise ValueError(f"value {value} out of range [1, {self.n}]")
        return self.word.index(value) + 1

    def to_text(self) -> str:
        return ",".join(str(v) for v in self.word)

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        return cls(_parse_int_word(text))

    def to_json_obj(self) -> list[int]:
        return list(self.word)

    @classmethod
    def from_json_obj(cls, obj) -> "Permutation":
        if not isinstance(obj, (list, tuple)):
            raise ParseError(f"expected a JSON array of integers, got {obj!r}")
        return cls(tuple(obj))

    def __str__(self) -> str:
        if 0 < self.n <= 9:
            return "".join(str(v) for v in self.word)
        return self.to_text()


@dataclass(frozen=True)
class InversionTable:
    """Entry i counts the values j > i standing to the left of i; it lies in [0, n-i]."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        for i, e in enumerate(entries, start=1):
            if not 0 <= e <= n - i:
                raise ValueError(f"table entry {i} is {e}, outside [0, {n - i}]")

    @property
    def n(self) -> int:
        return len(self.entries)

    def to_text(self) -> str:
        return ",".join(str(e) for e in self.entries)

    @classmethod
    def from_text(cls, text: str) -> "InversionTable":
        return cls(_parse_int_word(text, allow_zero=True))

    def to_json_obj(self) -> list[int]:
        return list(self.entries)


def _parse_int_word(text: str, allow_zero: bool = False) -> tuple[int, ...]:
    """Comma-separated integers; a bare digit string is one value per digit (n <= 9)."""
    text = text.strip().strip("()")
    if not text:
        return ()
    if "," not in text and text.isdigit() and len(text) > 1:
        return tuple(int(ch) for ch in text)
    values = []
    for pos, token in enumerate(text.split(","), start=1):
        token = token.strip()
        if not token or not (token.isdigit() or (token[0] == "-" and token[1:].isdigit())):
            raise ParseError(f"bad integer {token!r} at position {pos}", position=pos)
        values.append(int(token))
    if not allow_zero and any(v < 1 for v in values):
        bad = next(i for i, v in enumerate(values, start=1) if v < 1)
        raise ParseError(f"value at position {bad} must be positive", position=bad)
    return tuple(values)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def inverse(p: Permutation) -> Permutation:
    """The permutation q with q[p[i]] = i.

    >>> inverse(Permutation((2, 3, 1))).word
    (3, 1, 2)
    """
    inv = [0] * p.n
    for pos, value in enumerate(p.word, start=1):
        inv[value - 1] = pos
    return Permutation(tuple(inv))


def inversion_table(p: Permutation) -> InversionTable:
    """Count, for each value i, the larger values standing to its left.

    >>> inversion_table(Permutation((5, 2, 4, 6, 1, 3))).entries
    (4, 1, 3, 1, 0, 0)
    """
    word = p.word
    entries = []
    for value in range(1, p.n + 1):
        pos = word.index(value)
        entries.append(sum(1 for other in word[:pos] if other > value))
    return InversionTable(tuple(entries))


def from_inversion_table(t: InversionTable) -> Permutation:
    """The unique permutation whose inversion table is `t`.

    Values are inserted largest first; everything already placed is larger, so
    value i goes at 0-based index entries[i].

    >>> from_inversion_table(InversionTable((4, 1, 3, 1, 0, 0))).word
    (5, 2, 4, 6, 1, 3)
    """
    word: list[int] = []
    for value in range(t.n, 0, -1):
        word.insert(t.entries[value - 1], value)
    return Permutation(tuple(word))


def _contains_132(word: tuple[int, ...]) -> bool:
    # positions i < j < k with word[i] < word[k] < word[j]; the prefix minimum
    # is always the best candidate for the first position
    n = len(word)
    if n < 3:
        return False
    prefix_min = word[0]
    for j in range(1, n - 1):
        vj = word[j]
        if prefix_min < vj:
            for k in range(j + 1, n):
                if prefix_min < word[k] < vj:
                    return True
        if vj < prefix_min:
            prefix_min = vj
    return False


def contains_pattern_132(p: Permutation) -> bool:
    """True iff positions i < j < k exist with p[i] < p[k] < p[j].

    >>> contains_pattern_132(Permutation((1, 3, 2)))
    True
    >>> contains_pattern_132(Permutation((3, 2, 1)))
    False
    """
    return _contains_132(p.word)


def _contains_armleg(word: tuple[int, ...]) -> bool:
    # positions i < j (1-based) with n - i + 1 <= word[j] < word[i]
    n = len(word)
    for i in range(n):
        vi = word[i]
        lo = n - i  # n - (i+1) + 1 in 1-based terms
        if vi <= lo:
            continue
        for j in range(i + 1, n):
            if lo <= word[j] < vi:
                return True
    return False


def contains_armleg_pattern(p: Permutation) -> bool:
    """True iff positions i < j exist with n - i + 1 <= p[j] < p[i].

    Both entries of such a pair sit at or above the antidiagonal, and the
    diagrams of exactly these permutations have an arm crossing a leg.

    >>> contains_armleg_pattern(Permutation((3, 4, 1, 6, 2, 5)))
    True
    >>> contains_armleg_pattern(Permutation((3, 4, 1, 5, 2, 6)))
    False
    """
    return _contains_armleg(p.word)
