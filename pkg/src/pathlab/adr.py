"""Words with all-ones schedules, decorating algorithms, and fast enumerators.

A decorated permutation is *all-ones realizable* (AOR) when some shift gives
it the all-ones schedule word; the witness records every such shift.  The
*flat* ones (DAOR) are those realizable at shift zero.  Two decorating
algorithms attach a canonical decoration set to any plain permutation; a
toggle on the first letter connects the two outputs, and an affine extension
step sends flat words of size n-1 to all-ones words of size n.  Together they
turn the signed path enumerators into explicit sums of t^revmaj over words,
computable in O(n!) instead of path-by-path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .poly import TPoly, t_analog, t_factorial, euler_t
from .schedule import (
    DecoratedPermutation,
    ShiftedDiagonalWord,
    decreasing_runs,
    lmcr_start,
    make_perm,
    revmaj,
    schedule_numbers,
)


class NotAnADR(ValueError):
    """The word does not admit an all-ones schedule at the required shift."""


@dataclass(frozen=True)
class ADRWitness:
    word: DecoratedPermutation
    valid_shifts: frozenset[int]

    def __bool__(self) -> bool:
        return bool(self.valid_shifts)


def is_adr(word: DecoratedPermutation) -> ADRWitness:
    """Sweep every shift up to the number of runs and collect those whose
    schedule word is all ones."""
    ones = (1,) * word.n
    valid = frozenset(
        s
        for s in range(len(decreasing_runs(word)))
        if schedule_numbers(ShiftedDiagonalWord(word, s)) == ones
    )
    return ADRWitness(word, valid)


def is_flat_adr(word: DecoratedPermutation) -> bool:
    """All-ones realizable at shift zero."""
    ones = (1,) * word.n
    return schedule_numbers(ShiftedDiagonalWord(word, 0)) == ones


def _chain_decorations(values: tuple[int, ...]) -> set[int]:
    """Shared core of both decorating algorithms: walk leftmost maximal
    cyclic runs from the right end, decorating their interior positions."""
    decorated: set[int] = set()
    j = len(values)
    while j > 1:
        i = lmcr_start(values, j)
        decorated.update(range(i + 1, j))
        j = i
    return decorated


def dyck_decorate(values: tuple[int, ...] | list[int]) -> DecoratedPermutation:
    """Canonical decoration making the word all-ones realizable at shift zero.

    After the cyclic-run walk, the first position is additionally decorated
    exactly when the first decreasing run still holds two undecorated letters.
    """
    perm = make_perm(values)
    decorated = _chain_decorations(perm.values)
    first_run = decreasing_runs(perm)[0]
    first_run_positions = range(1, len(first_run) + 1)
    undec_first = sum(1 for p in first_run_positions if p not in decorated)
    if undec_first == 2:
        decorated.add(1)
    return DecoratedPermutation(perm.values, frozenset(decorated))


def parity_decorate(values: tuple[int, ...] | list[int]) -> DecoratedPermutation:
    """Canonical decoration leaving an odd number of undecorated letters.

    Same cyclic-run walk; the first position is additionally decorated
    exactly when the number of undecorated letters is even."""
    perm = make_perm(values)
    decorated = _chain_decorations(perm.values)
    if (perm.n - len(decorated)) % 2 == 0:
        decorated.add(1)
    return DecoratedPermutation(perm.values, frozenset(decorated))


def parity_dec(values: tuple[int, ...] | list[int]) -> int:
    """Number of decorations placed by :func:`parity_decorate`."""
    return len(parity_decorate(values).decorated)


def phi(word: DecoratedPermutation) -> DecoratedPermutation:
    """Toggle the first letter's decoration according to the first run.

    Defined on all-ones realizable words with an odd number of undecorated
    letters; depending on whether the first run holds 0, 1 or 2 undecorated
    letters, the first letter is undecorated, untouched, or decorated.  The
    result is all-ones realizable at shift zero with the same letters and the
    same revmaj."""
    if word.undecorated_count() % 2 == 0:
        raise NotAnADR(f"{word} has an even number of undecorated letters")
    if not is_adr(word):
        raise NotAnADR(f"{word} admits no all-ones shift")
    first_run = decreasing_runs(word)[0]
    undec_first = sum(
        1 for p in range(1, len(first_run) + 1) if p not in word.decorated
    )
    if undec_first == 0:
        return DecoratedPermutation(word.values, word.decorated - {1})
    if undec_first == 1:
        return word
    return DecoratedPermutation(word.values, word.decorated | {1})


def delta(m: int, word: DecoratedPermutation) -> DecoratedPermutation:
    """Affine extension: prepend m and shift every letter by m cyclically.

    For a flat all-ones word of size n-1 the output is an all-ones word of
    size n whose letters are m, then (v + m) mod n for each input letter v
    (representatives in 1..n).  Decorations move one position right; the new
    first letter is decorated exactly when the input had an odd number of
    undecorated letters.  revmaj grows by n - m."""
    n = word.n + 1
    if not 1 <= m <= n:
        raise ValueError(f"m must be in 1..{n}, got {m}")
    if not is_flat_adr(word):
        raise NotAnADR(f"{word} is not all-ones realizable at shift zero")
    values = (m,) + tuple((v + m - 1) % n + 1 for v in word.values)
    decorated = {p + 1 for p in word.decorated}
    if word.undecorated_count() % 2 == 1:
        decorated.add(1)
    return DecoratedPermutation(values, frozenset(decorated))


@lru_cache(maxsize=None)
def _fast_sums(n: int, flat: bool) -> tuple[TPoly, ...]:
    """t^revmaj of the decorating-algorithm outputs, bucketed by decoration
    count; parity algorithm for the signed square sums, shift-zero algorithm
    for the signed Dyck sums."""
    acc: list[dict[int, int]] = [dict() for _ in range(max(n, 1))]
    decorate = dyck_decorate if flat else parity_decorate
    for values in itertools.permutations(range(1, n + 1)):
        word = decorate(values)
        k = len(word.decorated)
        d = revmaj(word)
        acc[k][d] = acc[k].get(d, 0) + 1
    polys = []
    for bucket in acc:
        coeffs = [0] * (max(bucket) + 1 if bucket else 0)
        for d, c in bucket.items():
            coeffs[d] = c
        polys.append(TPoly(coeffs))
    return tuple(polys)


def S_fast(n: int, k: int) -> TPoly:
    """Word-level value of the signed square enumerator: zero when n - k is
    even, else the sum of t^revmaj over parity-algorithm outputs with k
    decorations."""
    if n < 1 or not 0 <= k < n:
        raise ValueError("need n >= 1 and 0 <= k <= n - 1")
    if (n - k) % 2 == 0:
        return TPoly()
    return _fast_sums(n, flat=False)[k]


def D_fast(n: int, k: int) -> TPoly:
    """Word-level value of the signed Dyck enumerator: the sum of t^revmaj
    over shift-zero-algorithm outputs with k decorations.  D_fast(0, 0) = 1
    (empty path)."""
    if n == 0:
        return TPoly.one() if k == 0 else TPoly()
    if n < 0 or not 0 <= k < n:
        raise ValueError("need n >= 1 and 0 <= k <= n - 1, or n = k = 0")
    return _fast_sums(n, flat=True)[k]


def S_recursive(n: int, k: int) -> TPoly:
    """Square enumerator via the Dyck one: [n]_t (D(n-1, k) + D(n-1, k-1))
    when n - k is odd, zero otherwise; D(-1, .) = D(., -1) = 0."""
    if n < 1 or not 0 <= k < n:
        raise ValueError("need n >= 1 and 0 <= k <= n - 1")
    if (n - k) % 2 == 0:
        return TPoly()

    def d(nn: int, kk: int) -> TPoly:
        if nn < 0 or kk < 0 or (nn > 0 and kk >= nn):
            return TPoly()
        return D_fast(nn, kk)

    return t_analog(n) * (d(n - 1, k) + d(n - 1, k - 1))


def euler_specialization(n: int) -> TPoly:
    """Closed form of the undecorated signed square enumerator for odd n:
    [n]_t t^floor((n-1)^2 / 4) times the alternating-permutation polynomial
    of size n - 1 (taken to be 1 when n = 1)."""
    if n < 1 or n % 2 == 0:
        raise ValueError("defined for odd n >= 1")
    tail = TPoly.one() if n == 1 else euler_t(n - 1)
    return t_analog(n) * TPoly.monomial((n - 1) ** 2 // 4) * tail


def all_adrs(n: int, k: int) -> tuple[ADRWitness, ...]:
    """Every all-ones realizable decorated permutation of size n with k
    decorations, with its shift witness, by brute sweep."""
    out = []
    for values in itertools.permutations(range(1, n + 1)):
        for combo in itertools.combinations(range(1, n + 1), k):
            word = DecoratedPermutation(values, frozenset(combo))
            witness = is_adr(word)
            if witness:
                out.append(witness)
    return tuple(out)
