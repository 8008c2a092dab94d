"""Diagonal words, decorated permutations, and schedule numbers.

Reading the labels of a standard path diagonal by diagonal (lowest diagonal
first, each diagonal in decreasing order, decorations carried along) gives a
decorated permutation, the path's diagonal word.  Together with the path's
shift it forms the shifted diagonal word, which determines the distribution
of dinv over all paths sharing it: each letter contributes an independent
factor counted by its schedule number.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .paths import DecoratedLabeledPath, NonStandardLabeling, area_word
from .poly import QTPoly, q_analog


@dataclass(frozen=True)
class DecoratedPermutation:
    """A permutation of 1..n with a set of decorated positions (1-based)."""

    values: tuple[int, ...]
    decorated: frozenset[int] = field(default_factory=frozenset)

    @property
    def n(self) -> int:
        return len(self.values)

    def position(self, value: int) -> int:
        """1-based position of a letter."""
        return self.values.index(value) + 1

    def is_decorated_value(self, value: int) -> bool:
        return self.position(value) in self.decorated

    def undecorated_count(self) -> int:
        return self.n - len(self.decorated)

    def __str__(self) -> str:
        return format_perm(self)


@dataclass(frozen=True)
class ShiftedDiagonalWord:
    word: DecoratedPermutation
    shift: int


def make_perm(
    values: Iterable[int], decorated: Iterable[int] = ()
) -> DecoratedPermutation:
    """Build a checked decorated permutation of 1..n."""
    values = tuple(values)
    decorated = frozenset(decorated)
    n = len(values)
    if sorted(values) != list(range(1, n + 1)):
        raise NonStandardLabeling(f"{values} is not a permutation of 1..{n}")
    if any(p < 1 or p > n for p in decorated):
        raise ValueError(f"decorated positions {sorted(decorated)} out of range")
    return DecoratedPermutation(values, decorated)


def format_perm(word: DecoratedPermutation) -> str:
    """Render as space-separated letters with ``*`` marking decorations,
    e.g. ``7* 8 4* 2 3 5 6 1``."""
    return " ".join(
        f"{v}*" if (i + 1) in word.decorated else str(v)
        for i, v in enumerate(word.values)
    )


def parse_perm(text: str) -> DecoratedPermutation:
    """Parse the ``7* 8 4* 2 3 5 6 1`` format."""
    values = []
    decorated = set()
    for pos, token in enumerate(text.split(), start=1):
        if token.endswith("*"):
            decorated.add(pos)
            token = token[:-1]
        values.append(int(token))
    return make_perm(values, decorated)


def diagonal_word(path: DecoratedLabeledPath) -> ShiftedDiagonalWord:
    """Labels read off diagonal by diagonal, lowest first and decreasing
    within each diagonal, with decorations carried over; paired with the shift.
    """
    labels = path.labels
    n = len(labels)
    if sorted(labels) != list(range(1, n + 1)):
        raise NonStandardLabeling("diagonal words require standard labels 1..n")
    a = area_word(path)
    s = max(0, -min(a)) if a else 0
    by_diag: dict[int, list[tuple[int, int]]] = {}
    for i, d in enumerate(a, start=1):
        by_diag.setdefault(d, []).append((labels[i - 1], i))
    values: list[int] = []
    decorated = set()
    for d in sorted(by_diag):
        for label, step in sorted(by_diag[d], reverse=True):
            if step in path.decorations:
                decorated.add(len(values) + 1)
            values.append(label)
    return ShiftedDiagonalWord(DecoratedPermutation(tuple(values), frozenset(decorated)), s)


def descents(seq: Sequence[int]) -> tuple[int, ...]:
    return tuple(i for i in range(1, len(seq)) if seq[i - 1] > seq[i])


def maj(seq: Sequence[int] | DecoratedPermutation) -> int:
    """Sum of descent positions (1-based)."""
    if isinstance(seq, DecoratedPermutation):
        seq = seq.values
    return sum(descents(seq))


def revmaj(seq: Sequence[int] | DecoratedPermutation) -> int:
    """maj of the reversed word; decorations are ignored."""
    if isinstance(seq, DecoratedPermutation):
        seq = seq.values
    return maj(tuple(reversed(seq)))


def decreasing_runs(word: DecoratedPermutation | Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Maximal decreasing factors, as tuples of letters in word order."""
    values = word.values if isinstance(word, DecoratedPermutation) else tuple(word)
    runs: list[list[int]] = []
    for v in values:
        if runs and runs[-1][-1] > v:
            runs[-1].append(v)
        else:
            runs.append([v])
    return tuple(tuple(r) for r in runs)


def _run_index_of_letter(word: DecoratedPermutation) -> dict[int, int]:
    out = {}
    for r, run in enumerate(decreasing_runs(word)):
        for v in run:
            out[v] = r
    return out


def is_cyclic_run(values: Sequence[int], n: int) -> bool:
    """True when some cyclic relabeling v -> ((v + m - 1) mod n) + 1 makes the
    factor strictly decreasing."""
    if len(values) <= 1:
        return True
    for m in range(1, n + 1):
        reps = [(v + m - 1) % n + 1 for v in values]
        if all(reps[i] > reps[i + 1] for i in range(len(reps) - 1)):
            return True
    return False


def lmcr(word: DecoratedPermutation | Sequence[int], j: int) -> tuple[int, ...]:
    """Leftmost maximal cyclic run ending at position j (1-based)."""
    values = word.values if isinstance(word, DecoratedPermutation) else tuple(word)
    n = len(values)
    i = j
    while i > 1 and is_cyclic_run(values[i - 2 : j], n):
        i -= 1
    return values[i - 1 : j]


def rmcr(word: DecoratedPermutation | Sequence[int], i: int) -> tuple[int, ...]:
    """Rightmost maximal cyclic run starting at position i (1-based)."""
    values = word.values if isinstance(word, DecoratedPermutation) else tuple(word)
    n = len(values)
    j = i
    while j < n and is_cyclic_run(values[i - 1 : j + 1], n):
        j += 1
    return values[i - 1 : j]


def lmcr_start(values: Sequence[int], j: int) -> int:
    """1-based start position of the leftmost maximal cyclic run ending at j."""
    n = len(values)
    i = j
    while i > 1 and is_cyclic_run(values[i - 2 : j], n):
        i -= 1
    return i


def schedule_numbers(sdw: ShiftedDiagonalWord) -> tuple[int, ...]:
    """Schedule number of each letter, in word order.

    With runs r_0, ..., r_l and shift s, a letter c in run r_i falls in the
    diagonal i - s.  Writing ṙ_i for the undecorated letters of r_i, the
    schedule of c is

    * zero diagonal, c undecorated:  #{d in ṙ_i : d > c} + 1
    * positive diagonal, c undecorated:
        #{d in ṙ_i : d > c} + #{d in ṙ_{i-1} : d < c}
    * negative diagonal, or c decorated:
        #{d in ṙ_i : d < c} + #{d in ṙ_{i+1} : d > c}

    A shift at or past the number of runs zeroes the whole word.
    """
    word, s = sdw.word, sdw.shift
    runs = decreasing_runs(word)
    if s >= len(runs):
        return (0,) * word.n
    undec = [
        tuple(v for v in run if not word.is_decorated_value(v)) for run in runs
    ]
    run_of = _run_index_of_letter(word)
    out = []
    for pos, c in enumerate(word.values, start=1):
        i = run_of[c]
        diag = i - s
        dec = pos in word.decorated
        if diag < 0 or dec:
            above = undec[i + 1] if i + 1 < len(runs) else ()
            w = sum(1 for d in undec[i] if d < c) + sum(1 for d in above if d > c)
        elif diag == 0:
            w = sum(1 for d in undec[i] if d > c) + 1
        else:
            below = undec[i - 1]
            w = sum(1 for d in undec[i] if d > c) + sum(1 for d in below if d < c)
        out.append(w)
    return tuple(out)


def schedule_numbers_cyclic(sdw: ShiftedDiagonalWord) -> tuple[int, ...]:
    """Cyclic-run reformulation of the schedule numbers.

    For an undecorated letter in a positive diagonal, the schedule counts the
    other undecorated letters of its leftmost maximal cyclic run; for a
    decorated letter or a negative diagonal it counts the other undecorated
    letters of its rightmost maximal cyclic run.  Zero-diagonal undecorated
    letters keep the direct count.
    """
    word, s = sdw.word, sdw.shift
    runs = decreasing_runs(word)
    if s >= len(runs):
        return (0,) * word.n
    run_of = _run_index_of_letter(word)
    undecorated_values = {
        v for pos, v in enumerate(word.values, start=1) if pos not in word.decorated
    }
    out = []
    for pos, c in enumerate(word.values, start=1):
        i = run_of[c]
        diag = i - s
        dec = pos in word.decorated
        if diag < 0 or dec:
            window = rmcr(word, pos)
            w = sum(1 for d in window if d != c and d in undecorated_values)
        elif diag == 0:
            run = runs[i]
            w = sum(1 for d in run if d > c and d in undecorated_values) + 1
        else:
            window = lmcr(word, pos)
            w = sum(1 for d in window if d != c and d in undecorated_values)
        out.append(w)
    return tuple(out)


def u_statistic(sdw: ShiftedDiagonalWord) -> int:
    """Number of undecorated letters strictly below the zero diagonal, i.e.
    in the first `shift` runs."""
    word, s = sdw.word, sdw.shift
    runs = decreasing_runs(word)
    count = 0
    for i, run in enumerate(runs[: min(s, len(runs))]):
        count += sum(1 for v in run if not word.is_decorated_value(v))
    return count


def count_by_sdw(sdw: ShiftedDiagonalWord) -> int:
    """Number of paths sharing this shifted diagonal word: the product of the
    schedule numbers."""
    total = 1
    for w in schedule_numbers(sdw):
        total *= w
    return total


def schedule_rhs(sdw: ShiftedDiagonalWord) -> QTPoly:
    """Closed form for the (q, t)-enumerator of the fiber of a shifted
    diagonal word: t^revmaj * q^u * product of q-analogs of the schedules."""
    word = sdw.word
    out = QTPoly.monomial(u_statistic(sdw), revmaj(word))
    for w in schedule_numbers(sdw):
        out = out * q_analog(w)
    return out


def sched_word(path: DecoratedLabeledPath) -> tuple[int, ...]:
    """Schedule numbers of the path's shifted diagonal word."""
    return schedule_numbers(diagonal_word(path))
