"""From words back to paths: fibers, canonical reconstruction, and the
class-level equivalence of the path and word enumerators.

Each decreasing run of a shifted diagonal word names a diagonal (run index
minus shift).  When the schedule word is all ones the fiber holds exactly one
path, reconstructed here directly: decorated letters below the main diagonal
form the opening stretch (diagonal descending, labels ascending), the
undecorated letters climb diagonal by diagonal (labels descending inside a
diagonal), and the remaining decorated letters close the path (diagonal
descending, labels ascending).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .adr import ADRWitness, all_adrs
from .cutting import canonical_rep, cutting_cycle
from .enumeration import schedule_one_paths
from .paths import (
    DecoratedLabeledPath,
    PathError,
    area,
    dinv,
    validate,
)
from .poly import TPoly
from .schedule import (
    DecoratedPermutation,
    ShiftedDiagonalWord,
    decreasing_runs,
    diagonal_word,
    revmaj,
    schedule_numbers,
)


class ScheduleNotOne(ValueError):
    """The reconstruction needs a shifted diagonal word with all-ones
    schedule word."""


def path_from_sdw(word: DecoratedPermutation, shift: int) -> DecoratedLabeledPath:
    """The unique path whose shifted diagonal word is (word, shift), for
    words with all-ones schedule word at that shift."""
    sdw = ShiftedDiagonalWord(word, shift)
    if schedule_numbers(sdw) != (1,) * word.n:
        raise ScheduleNotOne(f"({word}, {shift}) does not have all-ones schedules")
    runs = decreasing_runs(word)
    diag_of: dict[int, int] = {}
    for r, run in enumerate(runs):
        for v in run:
            diag_of[v] = r - shift
    decorated_values = {v for v in word.values if word.is_decorated_value(v)}
    head = sorted(
        ((d, v) for v, d in diag_of.items() if v in decorated_values and d < 0),
        key=lambda pair: (-pair[0], pair[1]),
    )
    body = sorted(
        ((d, v) for v, d in diag_of.items() if v not in decorated_values),
        key=lambda pair: (pair[0], -pair[1]),
    )
    tail = sorted(
        ((d, v) for v, d in diag_of.items() if v in decorated_values and d >= 0),
        key=lambda pair: (-pair[0], pair[1]),
    )
    order = head + body + tail
    labels = tuple(v for _, v in order)
    decorations = frozenset(
        i for i, (_, v) in enumerate(order, start=1) if v in decorated_values
    )
    # rebuild the step word from the diagonal of each north step
    n = word.n
    xs = [i - d for i, (d, _) in enumerate(order)]  # x of the i-th north step
    if any(x < 0 for x in xs) or any(b < a for a, b in zip(xs, xs[1:])) or xs[-1] > n - 1:
        raise ScheduleNotOne(f"({word}, {shift}) admits no path-shaped layout")
    steps = []
    x = 0
    for target in xs:
        steps.append("E" * (target - x))
        steps.append("N")
        x = target
    steps.append("E" * (n - x))
    try:
        path = validate("".join(steps), labels, decorations)
    except PathError as exc:
        raise ScheduleNotOne(f"({word}, {shift}) reconstruction invalid: {exc}") from exc
    rebuilt = diagonal_word(path)
    if rebuilt.word != word or rebuilt.shift != shift:
        raise ScheduleNotOne(
            f"reconstruction of ({word}, {shift}) round-tripped to "
            f"({rebuilt.word}, {rebuilt.shift})"
        )
    return path


def fiber_paths(
    word: DecoratedPermutation, shift: int
) -> tuple[DecoratedLabeledPath, ...]:
    """Every path with the given shifted diagonal word, by trying all
    orderings of the letters as north steps (a test oracle, O(n!))."""
    diag_of: dict[int, int] = {}
    for r, run in enumerate(decreasing_runs(word)):
        for v in run:
            diag_of[v] = r - shift
    decorated_values = {v for v in word.values if word.is_decorated_value(v)}
    n = word.n
    out = []
    for perm in itertools.permutations(word.values):
        xs = [i - diag_of[v] for i, v in enumerate(perm)]
        if any(x < 0 for x in xs) or any(b < a for a, b in zip(xs, xs[1:])) or xs[-1] > n - 1:
            continue
        steps = []
        x = 0
        for target in xs:
            steps.append("E" * (target - x))
            steps.append("N")
            x = target
        steps.append("E" * (n - x))
        decorations = frozenset(
            i for i, v in enumerate(perm, start=1) if v in decorated_values
        )
        try:
            path = validate("".join(steps), perm, decorations)
        except PathError:
            continue
        sdw = diagonal_word(path)
        if sdw.word == word and sdw.shift == shift:
            out.append(path)
    return tuple(out)


@dataclass(frozen=True)
class ClassSummary:
    """One cutting-cycle class of paths with all-ones schedule word."""

    diagonal_word: DecoratedPermutation
    area: int
    size: int
    member_count_sched1: int
    canonical: DecoratedLabeledPath


def classes(n: int, k: int) -> tuple[ClassSummary, ...]:
    """Summaries of the cutting-cycle classes of schedule-one paths of size n
    with k decorations, computed path-side by brute enumeration."""
    by_canonical: dict[DecoratedLabeledPath, list[DecoratedLabeledPath]] = {}
    for path in schedule_one_paths(n):
        if len(path.decorations) != k:
            continue
        by_canonical.setdefault(canonical_rep(path), []).append(path)
    out = []
    for canon, seeds in sorted(
        by_canonical.items(), key=lambda item: str(item[0])
    ):
        cycle = cutting_cycle(canon)
        out.append(
            ClassSummary(
                diagonal_word=diagonal_word(canon).word,
                area=area(canon),
                size=len(cycle.members),
                member_count_sched1=len(seeds),
                canonical=canon,
            )
        )
    return tuple(out)


def classes_polynomial(n: int, k: int) -> TPoly:
    """Sum of t^area over the schedule-one classes."""
    acc: dict[int, int] = {}
    for summary in classes(n, k):
        acc[summary.area] = acc.get(summary.area, 0) + 1
    coeffs = [0] * (max(acc) + 1 if acc else 0)
    for d, c in acc.items():
        coeffs[d] = c
    return TPoly(coeffs)


def theorem_equivalence_check(n: int, k: int) -> bool:
    """True when the path-side classes and the word-side enumeration agree:
    the diagonal-word map is a bijection from classes onto the ADR words with
    k decorations, matching area with revmaj, cycle size with n - k, and the
    number of schedule-one members with the number of valid shifts."""
    summaries = classes(n, k)
    witnesses = {w.word: w for w in all_adrs(n, k)}
    if len(summaries) != len(witnesses):
        return False
    seen = set()
    for summary in summaries:
        witness = witnesses.get(summary.diagonal_word)
        if witness is None or summary.diagonal_word in seen:
            return False
        seen.add(summary.diagonal_word)
        if summary.area != revmaj(summary.diagonal_word):
            return False
        if summary.size != n - k:
            return False
        if summary.member_count_sched1 != len(witness.valid_shifts):
            return False
        if dinv(summary.canonical) != 0:
            return False
    return True
