"""Named verification suites over exhaustive ranges.

Each check sweeps every instance up to a size bound and reports pass/fail
with a witness for the first failure.  The suites back both the test suite
and the ``pathlab verify`` command; sizes can be distributed over worker
processes since every (check, n) cell is independent and deterministic.
"""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import adr, bridge, cutting, enumeration, paths, poly, schedule


@dataclass(frozen=True)
class Report:
    check_id: str
    params: dict = field(default_factory=dict)
    ok: bool = True
    witness: str = ""
    elapsed: float = 0.0

    def line(self) -> str:
        """Deterministic data line; elapsed is reported separately."""
        status = "PASS" if self.ok else "FAIL"
        params = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        extra = f" witness: {self.witness}" if self.witness else ""
        return f"{self.check_id}[{params}] {status}{extra}"


def _fail(check_id, params, witness):
    return Report(check_id, params, ok=False, witness=str(witness))


def _ok(check_id, params):
    return Report(check_id, params, ok=True)


# ---------------------------------------------------------------- checks


def check_schedule_formula(n: int) -> Report:
    """Fiberwise: for every realized shifted diagonal word, the (q, t) sum of
    q^dinv t^area over its fiber equals the closed form, and the fiber size
    equals the product of the schedule numbers."""
    params = {"n": n}
    for k in range(n):
        fibers = enumeration.fibers_by_sdw(enumeration.PathFamily(n, k, "square"))
        for sdw, (count, qt) in fibers.items():
            if qt != schedule.schedule_rhs(sdw):
                return _fail("schedule-formula", params, f"{sdw} qt mismatch")
            if count != schedule.count_by_sdw(sdw):
                return _fail("schedule-formula", params, f"{sdw} count mismatch")
    return _ok("schedule-formula", params)


def check_interval(n: int) -> Report:
    """For plain permutations: whenever every schedule number is positive,
    the set of schedule values is an initial segment {1, ..., j}."""
    params = {"n": n}
    for values in itertools.permutations(range(1, n + 1)):
        word = schedule.DecoratedPermutation(values, frozenset())
        for s in range(len(schedule.decreasing_runs(word))):
            sched = schedule.schedule_numbers(schedule.ShiftedDiagonalWord(word, s))
            if all(w > 0 for w in sched):
                wanted = set(range(1, max(sched) + 1))
                if set(sched) != wanted:
                    return _fail("interval", params, f"{values} shift {s}: {sched}")
    return _ok("interval", params)


def check_cancellation_word(n: int) -> Report:
    """Brute signed square sums match the word-level fast sums for every k,
    and vanish when n - k is even."""
    params = {"n": n}
    for k in range(n):
        brute = enumeration.S_brute(n, k)
        if (n - k) % 2 == 0 and brute != poly.TPoly():
            return _fail("cancellation-word", params, f"S({n},{k}) nonzero")
        if brute != adr.S_fast(n, k):
            return _fail("cancellation-word", params, f"S({n},{k}) mismatch")
        dyck_brute = enumeration.D_brute(n, k)
        if dyck_brute != adr.D_fast(n, k):
            return _fail("cancellation-word", params, f"D({n},{k}) mismatch")
    return _ok("cancellation-word", params)


def check_cancellation_path(n: int) -> Report:
    """Brute signed square sums match the path-side class polynomials: one
    t^area per cutting-cycle class of schedule-one paths (n - k odd)."""
    params = {"n": n}
    for k in range(n):
        if (n - k) % 2 == 0:
            continue
        if enumeration.S_brute(n, k) != bridge.classes_polynomial(n, k):
            return _fail("cancellation-path", params, f"k={k}")
    return _ok("cancellation-path", params)


def check_dinv_ladder(n: int) -> Report:
    """Every schedule-one path's cycle has size n - k, a zero-dinv canonical
    member, dinv values laddering 0..size-1, constant area and diagonal word,
    and the geometric ordering reproduces the ladder."""
    params = {"n": n}
    for seed in enumeration.schedule_one_paths(n):
        k = len(seed.decorations)
        cycle = cutting.cutting_cycle(seed)
        if len(cycle.members) != n - k:
            return _fail("dinv-ladder", params, f"{seed} size {len(cycle.members)}")
        if paths.dinv(cycle.canonical) != 0:
            return _fail("dinv-ladder", params, f"{seed} canonical dinv != 0")
        try:
            ladder = cutting.ordered_cycle(seed)
        except cutting.LadderViolation as exc:
            return _fail("dinv-ladder", params, exc)
        word = schedule.diagonal_word(seed)
        for member in ladder:
            if schedule.diagonal_word(member).word != word.word:
                return _fail("dinv-ladder", params, f"{seed} word not constant")
            if paths.area(member) != paths.area(seed):
                return _fail("dinv-ladder", params, f"{seed} area not constant")
        order = cutting.geometric_order(cycle.canonical)
        geometric = [cutting.psi(cycle.canonical, i) for i in order]
        if geometric != list(ladder):
            return _fail("dinv-ladder", params, f"{seed} geometric order differs")
        listed = cutting.sched_one_members(cycle)
        criterion = [
            q
            for q in ladder
            if sum(
                1
                for i, d in enumerate(paths.area_word(q), start=1)
                if d == 0 and i not in q.decorations
            )
            == 1
        ]
        if sorted(map(str, listed)) != sorted(map(str, criterion)):
            return _fail("dinv-ladder", params, f"{seed} schedule-one members differ")
    return _ok("dinv-ladder", params)


def check_shape(n: int) -> Report:
    """Every schedule-one path splits into the three stretches."""
    params = {"n": n}
    for seed in enumeration.schedule_one_paths(n):
        try:
            stretch = cutting.shape_stretches(seed)
        except cutting.ShapeViolation as exc:
            return _fail("shape", params, f"{seed}: {exc}")
        if stretch.head + stretch.body + stretch.tail != seed.steps:
            return _fail("shape", params, f"{seed}: stretches do not tile")
    return _ok("shape", params)


def check_partition(n: int) -> Report:
    """Cutting cycles partition every family: members of a cycle have cycles
    with the same member set, and distinct cycle member sets are disjoint."""
    params = {"n": n}
    for k in range(n):
        seen: dict[paths.DecoratedLabeledPath, frozenset] = {}
        for path in enumeration.generate(enumeration.PathFamily(n, k, "square")):
            members = frozenset(
                image
                for i in range(1, n + 1)
                if (image := cutting.psi(path, i)) is not None
            )
            if path not in members:
                return _fail("partition", params, f"{path} not in own cycle")
            for member in members:
                prior = seen.get(member)
                if prior is not None and prior != members:
                    return _fail("partition", params, f"{path} overlaps {member}")
                seen[member] = members
    return _ok("partition", params)


def check_decorate_unique(n: int) -> Report:
    """Exactly one decoration set per permutation yields an ADR word with an
    odd number of undecorated letters, and it is the parity-algorithm output;
    exactly one yields a flat ADR word, the shift-zero-algorithm output."""
    params = {"n": n}
    positions = list(range(1, n + 1))
    for values in itertools.permutations(range(1, n + 1)):
        odd, flat = [], []
        for r in range(n):
            for combo in itertools.combinations(positions, r):
                word = schedule.DecoratedPermutation(values, frozenset(combo))
                witness = adr.is_adr(word)
                if witness and word.undecorated_count() % 2 == 1:
                    odd.append(word)
                if adr.is_flat_adr(word):
                    flat.append(word)
        if odd != [adr.parity_decorate(values)]:
            return _fail("decorate-unique", params, f"{values}: odd {odd}")
        if flat != [adr.dyck_decorate(values)]:
            return _fail("decorate-unique", params, f"{values}: flat {flat}")
    return _ok("decorate-unique", params)


def check_phi_bijection(n: int) -> Report:
    """phi maps the odd-undecorated ADR words bijectively onto the flat ADR
    words of the same size, preserving letters, revmaj, and shifting the
    decoration count by at most one."""
    params = {"n": n}
    images = {}
    for values in itertools.permutations(range(1, n + 1)):
        word = adr.parity_decorate(values)
        image = adr.phi(word)
        if image.values != word.values:
            return _fail("phi-bijection", params, f"{word} letters changed")
        if schedule.revmaj(image) != schedule.revmaj(word):
            return _fail("phi-bijection", params, f"{word} revmaj changed")
        if not adr.is_flat_adr(image):
            return _fail("phi-bijection", params, f"{word} image not flat")
        if abs(len(image.decorated) - len(word.decorated)) > 1:
            return _fail("phi-bijection", params, f"{word} decoration jump")
        if image in images:
            return _fail("phi-bijection", params, f"{image} hit twice")
        images[image] = word
        if adr.dyck_decorate(values) != image:
            return _fail("phi-bijection", params, f"{word} not algorithm output")
    return _ok("phi-bijection", params)


def check_delta_bijection(n: int) -> Report:
    """delta over all m and all flat ADR words of size n - 1 produces each
    odd-undecorated ADR word of size n exactly once, raising revmaj by n - m."""
    params = {"n": n}
    produced = {}
    for values in itertools.permutations(range(1, n)):
        word = adr.dyck_decorate(values) if n > 1 else None
        source_words = [word] if word is not None else [
            schedule.DecoratedPermutation((), frozenset())
        ]
        for source in source_words:
            base = schedule.revmaj(source)
            for m in range(1, n + 1):
                image = adr.delta(m, source)
                if schedule.revmaj(image) != base + n - m:
                    return _fail(
                        "delta-bijection", params, f"delta({m}, {source}) revmaj"
                    )
                if image in produced:
                    return _fail("delta-bijection", params, f"{image} hit twice")
                produced[image] = (m, source)
    expected = {
        adr.parity_decorate(values)
        for values in itertools.permutations(range(1, n + 1))
    }
    if set(produced) != expected:
        return _fail("delta-bijection", params, "image set differs")
    return _ok("delta-bijection", params)


def check_recursion(n: int) -> Report:
    """S(n, k) = [n]_t (D(n-1, k) + D(n-1, k-1)) for n - k odd via the fast
    word-level sums."""
    params = {"n": n}
    for k in range(n):
        if adr.S_fast(n, k) != adr.S_recursive(n, k):
            return _fail("recursion", params, f"k={k}")
    return _ok("recursion", params)


def check_sum_factorial(n: int) -> Report:
    """Summing either fast enumerator over all k gives [n]_t!."""
    params = {"n": n}
    total_s = poly.TPoly()
    total_d = poly.TPoly()
    for k in range(n):
        total_s = total_s + adr.S_fast(n, k)
        total_d = total_d + adr.D_fast(n, k)
    if total_s != poly.t_factorial(n):
        return _fail("sum-factorial", params, f"sum S = {total_s}")
    if total_d != poly.t_factorial(n):
        return _fail("sum-factorial", params, f"sum D = {total_d}")
    return _ok("sum-factorial", params)


def check_euler(n: int) -> Report:
    """For odd n the undecorated signed square sum has the alternating-
    permutation closed form."""
    params = {"n": n}
    if n % 2 == 1 and adr.S_fast(n, 0) != adr.euler_specialization(n):
        return _fail("euler", params, f"S({n},0) != closed form")
    return _ok("euler", params)


def check_sdw_area(n: int) -> Report:
    """area equals revmaj of the diagonal word for every path."""
    params = {"n": n}
    for k in range(n):
        for path in enumeration.generate(enumeration.PathFamily(n, k, "square")):
            if paths.area(path) != schedule.revmaj(schedule.diagonal_word(path).word):
                return _fail("sdw-area", params, str(path))
    return _ok("sdw-area", params)


CHECKS: dict[str, tuple[Callable[[int], Report], int]] = {
    # check_id -> (function of n, default max_n)
    "schedule-formula": (check_schedule_formula, 5),
    "interval": (check_interval, 7),
    "cancellation-word": (check_cancellation_word, 5),
    "cancellation-path": (check_cancellation_path, 5),
    "dinv-ladder": (check_dinv_ladder, 6),
    "shape": (check_shape, 6),
    "partition": (check_partition, 5),
    "decorate-unique": (check_decorate_unique, 6),
    "phi-bijection": (check_phi_bijection, 7),
    "delta-bijection": (check_delta_bijection, 7),
    "recursion": (check_recursion, 8),
    "sum-factorial": (check_sum_factorial, 8),
    "euler": (check_euler, 7),
    "sdw-area": (check_sdw_area, 5),
}


def _run_cell(args: tuple[str, int]) -> Report:
    check_id, n = args
    fn = CHECKS[check_id][0]
    start = time.perf_counter()
    report = fn(n)
    return Report(
        report.check_id,
        report.params,
        report.ok,
        report.witness,
        time.perf_counter() - start,
    )


def default_jobs() -> int:
    env = os.environ.get("PATHLAB_JOBS", "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def run_suite(
    check_id: str, max_n: int | None = None, jobs: int | None = None
) -> Iterator[Report]:
    """Run one named suite for n = 1..max_n, optionally across processes;
    reports come back in order of n regardless of worker scheduling."""
    if check_id not in CHECKS:
        raise KeyError(f"unknown check {check_id!r}; known: {sorted(CHECKS)}")
    if max_n is None:
        max_n = CHECKS[check_id][1]
    if jobs is None:
        jobs = default_jobs()
    cells = [(check_id, n) for n in range(1, max_n + 1)]
    if jobs <= 1 or len(cells) <= 1:
        for cell in cells:
            yield _run_cell(cell)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_run_cell, cells)
