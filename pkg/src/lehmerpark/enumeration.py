"""Exhaustive generators, counting oracles, and the named-check harness.

`outcome_set(n)` parks every one of the n! staircase preference tuples and
deduplicates the outcomes.  The simulation is shared-prefix: tuples are walked
in a tree, car by car, so a completed leaf is exactly one parked tuple but the
common prefixes are parked once.  Set LEHMER_THREADS above 1 to split the walk
across processes by the first car's preference.

`bell` and `catalan` are standalone recurrences (Bell triangle, Catalan
convolution) so the counting checks do not share code with the structures they
count.  `verify(theorem, n_max)` runs one named exhaustive check for every
n from 0 to n_max and reports counterexamples verbatim.
"""

from __future__ import annotations

import itertools
import os
import time
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterator

from .armleg import PartialArmLegDiagram, GridPoint, arms_legs, depth_at, is_intersecting, peaks, peaks_from_pairs
from .bijection import (
    OutcomePermutation,
    fiber_size,
    outcome_to_partition,
    partition_to_outcome,
    phi,
    phi_prime,
    phi_prime_inv,
)
from .paren import GBsp, SpacedParen, depth, depths, enumerate_bsps, enumerate_gbsps, is_balanced, matching_pairs
from .parking import PrefTuple, is_lehmer, is_parking_function, is_weakly_decreasing, park
from .permutation import Permutation, _contains_132, _contains_armleg
from .setpartition import SetPartition, enumerate_partitions, from_gbsp, min_max, to_gbsp

__all__ = [
    "all_lehmer",
    "outcome_words",
    "outcome_set",
    "bell",
    "catalan",
    "verify",
    "theorem_ids",
    "VerificationReport",
]


def all_lehmer(n: int) -> Iterator[PrefTuple]:
    """Every staircase tuple (a_i <= n - i + 1), in lexicographic order; n! of them."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for prefs in itertools.product(*(range(1, n - i + 2) for i in range(1, n + 1))):
        yield PrefTuple(prefs)


def _drive_all(n: int, first: int | None = None) -> set[tuple[int, ...]]:
    # Walk the preference tree depth-first, keeping the street state in place.
    # Each leaf is the parked outcome of exactly one staircase tuple.
    words: set[tuple[int, ...]] = set()
    add = words.add
    spots = [0] * (n + 1)

    def drive(car: int) -> None:
        last = car == n
        nxt = car + 1
        for pref in range(1, n - car + 2):
            s = pref
            while s <= n and spots[s]:
                s += 1
            if s > n:  # cannot happen for staircase prefs; keep the walk honest
                raise RuntimeError(f"car {car} drove past spot {n}")
            spots[s] = car
            if last:
                add(tuple(spots[1:]))
            else:
                drive(nxt)
            spots[s] = 0

    if n == 0:
        return {()}
    if first is None:
        drive(1)
    else:
        spots[first] = 1
        if n == 1:
            add(tuple(spots[1:]))
        else:
            drive(2)
        spots[first] = 0
    return words


def _drive_slice(args: tuple[int, int]) -> set[tuple[int, ...]]:
    return _drive_all(args[0], args[1])


def outcome_words(n: int, threads: int | None = None) -> set[tuple[int, ...]]:
    """Outcome words of all n! staircase tuples, deduplicated.

    `threads` (default: the LEHMER_THREADS environment variable, else 1) caps
    the number of worker processes; the tuple tree is split by the first car's
    preference and the resulting sets are merged, so the answer is identical
    at any thread count.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if threads is None:
        threads = int(os.environ.get("LEHMER_THREADS", "1"))
    if threads <= 1 or n < 4:
        return _drive_all(n)
    import multiprocessing

    slices = [(n, first) for first in range(1, n + 1)]
    try:
        with multiprocessing.get_context("fork").Pool(min(threads, n)) as pool:
            parts = pool.map(_drive_slice, slices)
    except (OSError, ValueError):
        return _drive_all(n)
    merged: set[tuple[int, ...]] = set()
    for part in parts:
        merged |= part
    return merged


def outcome_set(n: int, threads: int | None = None) -> set[OutcomePermutation]:
    """Distinct outcomes of all n! staircase tuples, certified at construction."""
    return {OutcomePermutation(Permutation(w)) for w in outcome_words(n, threads)}


def bell(n: int) -> int:
    """Number of set partitions of [n], by the Bell triangle.

    >>> [bell(k) for k in range(6)]
    [1, 1, 2, 5, 15, 52]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def catalan(n: int) -> int:
    """The n-th Catalan number, by the convolution C_{m+1} = sum C_k C_{m-k}.

    >>> [catalan(k) for k in range(6)]
    [1, 1, 2, 5, 14, 42]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    c = [1]
    for m in range(n):
        c.append(sum(c[k] * c[m - k] for k in range(m + 1)))
    return c[n]


@dataclass(frozen=True)
class VerificationReport:
    """Result of one named check: counterexamples are listed verbatim."""

    theorem: str
    n_max: int
    objects_checked: int
    discrepancies: tuple[str, ...]
    seconds: float

    @property
    def passed(self) -> bool:
        return not self.discrepancies

    def to_json_obj(self) -> dict:
        return {
            "theorem": self.theorem,
            "n_max": self.n_max,
            "objects_checked": self.objects_checked,
            "discrepancies": list(self.discrepancies),
            "pass": self.passed,
            "seconds": round(self.seconds, 3),
        }


# ---------------------------------------------------------------------------
# per-theorem checks; each returns (objects examined, discrepancy strings)


def _perm_words(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.permutations(range(1, n + 1))


def _avoider_words_armleg(n: int) -> set[tuple[int, ...]]:
    return {w for w in _perm_words(n) if not _contains_armleg(w)}


def _avoider_words_132(n: int) -> set[tuple[int, ...]]:
    return {w for w in _perm_words(n) if not _contains_132(w)}


def _weakly_decreasing_lehmer(n: int) -> Iterator[PrefTuple]:
    if n == 0:
        yield PrefTuple(())
        return
    prefs = [0] * n

    def go(i: int, bound: int) -> Iterator[PrefTuple]:
        if i > n:
            yield PrefTuple(tuple(prefs))
            return
        for v in range(min(bound, n - i + 1), 0, -1):
            prefs[i - 1] = v
            yield from go(i + 1, v)

    yield from go(1, n)


def _check_lemma1_2(n: int):
    bad = []
    count = 0
    for a in all_lehmer(n):
        count += 1
        if not is_parking_function(a):
            bad.append(f"n={n}: staircase tuple {a.prefs} fails the sorted-prefix test")
        elif not park(a).ok:
            bad.append(f"n={n}: parking failed for staircase tuple {a.prefs}")
    return count, bad


def _check_thm2_4(n: int):
    parked = outcome_words(n)
    avoiders = _avoider_words_armleg(n)
    bad = [
        f"n={n}: {w} parked but contains the arm-leg pattern" for w in sorted(parked - avoiders)
    ] + [
        f"n={n}: {w} avoids the arm-leg pattern but never parks" for w in sorted(avoiders - parked)
    ]
    return len(parked) + len(avoiders), bad


def _check_lemma3_4(n: int):
    bad = []
    count = 0
    for w in sorted(outcome_words(n)):
        count += 1
        diagram = peaks(Permutation(w))
        sp = arms_legs(diagram)
        for i in range(1, n + 1):
            if depth_at(diagram, i) != depth(sp, i):
                bad.append(
                    f"n={n}: outcome {w} space {i}: box count "
                    f"{depth_at(diagram, i)} != paren depth {depth(sp, i)}"
                )
    return count, bad


def _check_lemma3_5(n: int):
    bad = []
    count = 0
    for w in sorted(outcome_words(n)):
        count += 1
        if not is_balanced(arms_legs(peaks(Permutation(w)))):
            bad.append(f"n={n}: arms/legs of outcome {w} are not balanced")
    return count, bad


def _all_partial_diagrams(n: int) -> Iterator[PartialArmLegDiagram]:
    # column-by-column choice of at most one point at or above the antidiagonal
    pts: list[GridPoint] = []
    used_rows: set[int] = set()

    def go(c: int) -> Iterator[PartialArmLegDiagram]:
        if c > n:
            yield PartialArmLegDiagram(n, frozenset(pts))
            return
        yield from go(c + 1)
        for r in range(n - c + 1, n + 1):
            if r not in used_rows:
                pts.append(GridPoint(c, r))
                used_rows.add(r)
                yield from go(c + 1)
                pts.pop()
                used_rows.remove(r)

    yield from go(1)


def _check_lemma3_7(n: int):
    groups: dict[tuple, list[PartialArmLegDiagram]] = {}
    count = 0
    for t in _all_partial_diagrams(n):
        count += 1
        if is_intersecting(t):
            continue
        sp = arms_legs(t)
        groups.setdefault((tuple(sorted(sp.F)), tuple(sorted(sp.L))), []).append(t)
    bad = []
    for sp in enumerate_bsps(n):
        count += 1
        constructed = peaks_from_pairs(matching_pairs(sp), n)
        if arms_legs(constructed) != sp:
            bad.append(f"n={n}: pairs of {sp!r} do not reproduce its arms and legs")
        candidates = groups.get((tuple(sorted(sp.F)), tuple(sorted(sp.L))), [])
        if len(candidates) != 1 or candidates[0] != constructed:
            bad.append(
                f"n={n}: {len(candidates)} non-intersecting diagrams share arms/legs "
                f"F={sorted(sp.F)}, L={sorted(sp.L)}; expected exactly the constructed one"
            )
    return count, bad


def _check_lemma3_9(n: int):
    bad = []
    count = 0
    for gb in enumerate_gbsps(n):
        count += 1
        p = phi_prime_inv(gb)  # construction certifies outcome membership
        if phi(p) != gb.base:
            bad.append(f"n={n}: filling of {gb!r} has wrong arms/legs")
    return count, bad


def _check_cor3_10(n: int):
    counts = Counter(phi(OutcomePermutation(Permutation(w))) for w in outcome_words(n))
    bad = []
    total = sum(counts.values())
    seen = set()
    for sp in enumerate_bsps(n):
        seen.add(sp)
        expected = fiber_size(sp)
        if counts.get(sp, 0) != expected:
            bad.append(
                f"n={n}: fiber of F={sorted(sp.F)}, L={sorted(sp.L)} has "
                f"{counts.get(sp, 0)} outcomes, product of depths gives {expected}"
            )
    for sp in counts:
        if sp not in seen:
            bad.append(f"n={n}: outcomes map to unlisted parenthesization {sp!r}")
    return total + len(seen), bad


def _check_lemma3_12(n: int):
    bad = []
    count = 0
    for w in sorted(outcome_words(n)):
        count += 1
        p = OutcomePermutation(Permutation(w))
        if phi_prime_inv(phi_prime(p)) != p:
            bad.append(f"n={n}: outcome {w} does not survive the round trip")
    for gb in enumerate_gbsps(n):
        count += 1
        if phi_prime(phi_prime_inv(gb)) != gb:
            bad.append(f"n={n}: {gb!r} does not survive the reverse round trip")
    return count, bad


def _check_lemma3_13(n: int):
    bad = []
    count = 0
    for b in enumerate_partitions(n):
        count += 1
        if not is_balanced(min_max(b)):
            bad.append(f"n={n}: minima/maxima of {b.to_text()} are not balanced")
    return count, bad


def _check_lemma3_14(n: int):
    bad = []
    count = 0
    for sp in enumerate_bsps(n):
        count += 1
        free = [i for i in range(1, n + 1) if i not in sp.F]
        b = from_gbsp(GBsp(sp, {i: 1 for i in free}))
        if min_max(b) != sp:
            bad.append(f"n={n}: no partition found with minima/maxima {sp!r}")
    return count, bad


def _check_cor3_15(n: int):
    counts = Counter(min_max(b) for b in enumerate_partitions(n))
    bad = []
    total = sum(counts.values())
    seen = set()
    for sp in enumerate_bsps(n):
        seen.add(sp)
        expected = fiber_size(sp)
        if counts.get(sp, 0) != expected:
            bad.append(
                f"n={n}: F={sorted(sp.F)}, L={sorted(sp.L)} has {counts.get(sp, 0)} "
                f"partitions, product of depths gives {expected}"
            )
    for sp in counts:
        if sp not in seen:
            bad.append(f"n={n}: partitions map to unlisted parenthesization {sp!r}")
    return total + len(seen), bad


def _check_lemma3_16(n: int):
    bad = []
    count = 0
    for b in enumerate_partitions(n):
        count += 1
        if from_gbsp(to_gbsp(b)) != b:
            bad.append(f"n={n}: partition {b.to_text()} does not survive the round trip")
    for gb in enumerate_gbsps(n):
        count += 1
        if to_gbsp(from_gbsp(gb)) != gb:
            bad.append(f"n={n}: {gb!r} does not survive the reverse round trip")
    return count, bad


def _check_thm3_1(n: int):
    outcomes = sorted(outcome_words(n))
    partitions = list(enumerate_partitions(n))
    expected = bell(n)
    bad = []
    if len(outcomes) != expected:
        bad.append(f"n={n}: {len(outcomes)} outcomes, Bell number is {expected}")
    if len(partitions) != expected:
        bad.append(f"n={n}: {len(partitions)} partitions, Bell number is {expected}")
    image = set()
    for w in outcomes:
        p = OutcomePermutation(Permutation(w))
        b = outcome_to_partition(p)
        image.add(b)
        if partition_to_outcome(b) != p:
            bad.append(f"n={n}: outcome {w} does not survive the composed round trip")
    if image != set(partitions):
        bad.append(f"n={n}: outcome-to-partition image misses some partitions")
    return len(outcomes) + len(partitions), bad


def _check_prop4_1(n: int):
    bad = []
    count = 0
    for a in _weakly_decreasing_lehmer(n):
        count += 1
        result = park(a)
        if not result.ok:
            bad.append(f"n={n}: weakly decreasing staircase tuple {a.prefs} failed to park")
        elif _contains_132(result.outcome.word):
            bad.append(f"n={n}: outcome of {a.prefs} contains the pattern 132")
    return count, bad


def _check_lemma4_2(n: int):
    outcomes: dict[tuple[int, ...], tuple[int, ...]] = {}
    bad = []
    count = 0
    for a in _weakly_decreasing_lehmer(n):
        count += 1
        w = park(a).outcome.word
        if w in outcomes:
            bad.append(f"n={n}: {outcomes[w]} and {a.prefs} park to the same outcome {w}")
        else:
            outcomes[w] = a.prefs
    return count, bad


def _check_thm4_3(n: int):
    wd = list(_weakly_decreasing_lehmer(n))
    bad = []
    expected = catalan(n)
    if len(wd) != expected:
        bad.append(f"n={n}: {len(wd)} weakly decreasing staircase tuples, Catalan is {expected}")
    wd_parking = {
        tuple(reversed(combo))
        for combo in itertools.combinations_with_replacement(range(1, n + 1), n)
        if is_parking_function(PrefTuple(tuple(reversed(combo))))
    }
    if {a.prefs for a in wd} != wd_parking:
        bad.append(
            f"n={n}: weakly decreasing staircase tuples differ from weakly "
            "decreasing parking functions"
        )
    image = {park(a).outcome.word for a in wd}
    if len(image) != len(wd):
        bad.append(f"n={n}: parking is not injective on weakly decreasing tuples")
    avoiders = _avoider_words_132(n)
    for w in sorted(image - avoiders):
        bad.append(f"n={n}: weakly decreasing outcome {w} contains 132")
    for w in sorted(avoiders - image):
        bad.append(f"n={n}: 132-avoider {w} is not a weakly decreasing outcome")
    return len(wd) + len(avoiders), bad


_Check = Callable[[int], tuple[int, list[str]]]

# theorem id -> (what the check verifies, default n_max, check)
_CHECKS: dict[str, tuple[str, int, _Check]] = {
    "lemma1.2": ("every staircase tuple is a parking function", 8, _check_lemma1_2),
    "thm2.4": ("parked outcomes = arm-leg pattern avoiders", 7, _check_thm2_4),
    "lemma3.4": ("box-count depth matches parenthesization depth", 7, _check_lemma3_4),
    "lemma3.5": ("arms and legs of outcomes are balanced", 7, _check_lemma3_5),
    "lemma3.7": ("matched pairs give the unique non-intersecting diagram", 5, _check_lemma3_7),
    "lemma3.9": ("every g-filling produces an outcome with the right arms/legs", 7, _check_lemma3_9),
    "cor3.10": ("outcome fibers have size prod of depths", 7, _check_cor3_10),
    "lemma3.12": ("outcome <-> g-parenthesization maps are mutually inverse", 7, _check_lemma3_12),
    "lemma3.13": ("block minima/maxima are always balanced", 9, _check_lemma3_13),
    "lemma3.14": ("every balanced parenthesization arises from a partition", 7, _check_lemma3_14),
    "cor3.15": ("partition fibers have size prod of depths", 7, _check_cor3_15),
    "lemma3.16": ("partition <-> g-parenthesization maps are mutually inverse", 8, _check_lemma3_16),
    "thm3.1": ("outcomes <-> set partitions, Bell-many on each side", 8, _check_thm3_1),
    "prop4.1": ("weakly decreasing outcomes avoid 132", 8, _check_prop4_1),
    "lemma4.2": ("parking is injective on weakly decreasing staircase tuples", 8, _check_lemma4_2),
    "thm4.3": ("weakly decreasing outcomes = 132-avoiders, Catalan-many", 8, _check_thm4_3),
}


def theorem_ids() -> list[str]:
    return list(_CHECKS)


def describe_theorem(theorem: str) -> str:
    if theorem not in _CHECKS:
        raise ValueError(f"unknown theorem id {theorem!r}; known: {', '.join(_CHECKS)}")
    return _CHECKS[theorem][0]


def default_n_max(theorem: str) -> int:
    if theorem not in _CHECKS:
        raise ValueError(f"unknown theorem id {theorem!r}; known: {', '.join(_CHECKS)}")
    return _CHECKS[theorem][1]


def verify(theorem: str, n_max: int | None = None) -> VerificationReport:
    """Run one named exhaustive check for every n from 0 to n_max.

    n_max defaults to a per-theorem value sized to finish in seconds; larger
    values cost accordingly.
    """
    if theorem not in _CHECKS:
        raise ValueError(f"unknown theorem id {theorem!r}; known: {', '.join(_CHECKS)}")
    _, default_max, check = _CHECKS[theorem]
    if n_max is None:
        n_max = default_max
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    start = time.perf_counter()
    objects = 0
    discrepancies: list[str] = []
    for n in range(n_max + 1):
        count, bad = check(n)
        objects += count
        discrepancies.extend(bad)
    return VerificationReport(
        theorem=theorem,
        n_max=n_max,
        objects_checked=objects,
        discrepancies=tuple(discrepancies),
        seconds=time.perf_counter() - start,
    )
