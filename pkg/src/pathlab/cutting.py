"""Cut-and-paste moves on paths, cutting cycles, and the dinv ladder.

The i-th cut swaps the prefix ending at the i-th east step with the remaining
suffix.  Labels and decorations travel with their north steps; the move is
only admitted when the result is again a valid decorated labeled path.  The
set of admitted images of a path, the path's cutting cycle, shares one
diagonal word and one area; for cycles containing a path with all-ones
schedule word the members' dinv values ladder from 0 to cycle size minus one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .paths import (
    DecoratedLabeledPath,
    PathError,
    area_word,
    dinv,
    validate,
)
from .schedule import diagonal_word, schedule_numbers


class CycleError(ValueError):
    """A structural guarantee of a cutting cycle failed to hold."""


class LadderViolation(CycleError):
    """The dinv values of a cycle are not 0, 1, ..., size - 1."""


class ShapeViolation(CycleError):
    """A path does not decompose into the three stretches expected of a path
    with all-ones schedule word."""


@dataclass(frozen=True)
class CuttingCycle:
    members: frozenset[DecoratedLabeledPath]
    canonical: DecoratedLabeledPath


def psi(path: DecoratedLabeledPath, i: int) -> DecoratedLabeledPath | None:
    """Cut after the i-th east step and swap the two pieces.

    Returns the resulting path, or None when the rearranged word is not a
    valid decorated labeled path (the decorations must land on contractible
    valleys and the merged columns must stay increasing).
    """
    n = path.n
    if not 1 <= i <= n:
        raise ValueError(f"cut position must be in 1..{n}, got {i}")
    if i == n:
        return path
    east_seen = 0
    cut = len(path.steps)
    for pos, step in enumerate(path.steps):
        if step == "E":
            east_seen += 1
            if east_seen == i:
                cut = pos + 1
                break
    prefix, suffix = path.steps[:cut], path.steps[cut:]
    norths_prefix = prefix.count("N")
    norths_suffix = n - norths_prefix
    steps = suffix + prefix
    labels = path.labels[norths_prefix:] + path.labels[:norths_prefix]
    decorations = frozenset(
        j - norths_prefix if j > norths_prefix else j + norths_suffix
        for j in path.decorations
    )
    try:
        return validate(steps, labels, decorations)
    except PathError:
        return None


def cutting_cycle(path: DecoratedLabeledPath) -> CuttingCycle:
    """All admitted cut-and-paste images of the path (the path included, via
    the full cut), with the zero-dinv representative attached."""
    members = set()
    for i in range(1, path.n + 1):
        image = psi(path, i)
        if image is not None:
            members.add(image)
    return CuttingCycle(frozenset(members), canonical_rep(path))


def breaking_step(path: DecoratedLabeledPath) -> int:
    """East-step ordinal whose cut produces the zero-dinv representative.

    The breaking point is the start of the leftmost undecorated north step on
    the bottom diagonal if one exists, else the start of the leftmost
    decorated north step there.  The cut happens one step earlier in the
    first case and two steps earlier in the second, cyclically; a wrap lands
    on the final east step, i.e. the identity cut.
    """
    a = area_word(path)
    bottom = min(a)
    undecorated = [
        i for i, d in enumerate(a, start=1) if d == bottom and i not in path.decorations
    ]
    if undecorated:
        target, back = undecorated[0], 1
    else:
        decorated = [i for i, d in enumerate(a, start=1) if d == bottom]
        target, back = decorated[0], 2
    # position of the target north step within the full step word (1-based)
    norths = 0
    for pos, step in enumerate(path.steps, start=1):
        if step == "N":
            norths += 1
            if norths == target:
                word_pos = pos
                break
    cut_pos = (word_pos - back - 1) % len(path.steps) + 1
    if path.steps[cut_pos - 1] != "E":
        raise CycleError(
            f"breaking step landed on a north step of {path} at {cut_pos}"
        )
    return path.steps[:cut_pos].count("E")


def canonical_rep(path: DecoratedLabeledPath) -> DecoratedLabeledPath:
    """The cycle member produced by cutting at the breaking step."""
    image = psi(path, breaking_step(path))
    if image is None:
        raise CycleError(f"cut at the breaking step of {path} is not admitted")
    return image


def geometric_order(path: DecoratedLabeledPath) -> tuple[int, ...]:
    """East-step ordinals of a zero-dinv representative, in ladder order.

    East steps immediately followed by a decorated north step are skipped;
    the rest are sorted by the diagonal of the square they close, lowest
    first, ties broken right to left.  Cutting at the i-th listed step yields
    the member with dinv i (the first listed step is the final east step,
    whose cut is the identity).
    """
    x = y = 0
    east_seen = 0
    entries = []
    steps = path.steps
    for pos, step in enumerate(steps):
        if step == "N":
            y += 1
            continue
        east_seen += 1
        follower_decorated = False
        if pos + 1 < len(steps) and steps[pos + 1] == "N":
            follower = steps[: pos + 1].count("N") + 1
            follower_decorated = follower in path.decorations
        if not follower_decorated:
            entries.append((y - 1 - x, -x, east_seen))
        x += 1
    entries.sort()
    return tuple(e for _, _, e in entries)


def ordered_cycle(path: DecoratedLabeledPath) -> tuple[DecoratedLabeledPath, ...]:
    """Cycle members sorted by dinv, checked to ladder from 0 upward.

    Raises :class:`LadderViolation` when the dinv values are not exactly
    0, 1, ..., size - 1 (they always are for cycles of paths whose schedule
    word is all ones).
    """
    members = sorted(cutting_cycle(path).members, key=dinv)
    if [dinv(q) for q in members] != list(range(len(members))):
        raise LadderViolation(
            f"cycle of {path} has dinv values {[dinv(q) for q in members]}"
        )
    return tuple(members)


def sched_one_members(
    cycle: CuttingCycle,
) -> tuple[DecoratedLabeledPath, ...]:
    """Members whose schedule word is all ones, in dinv order."""
    out = [
        q
        for q in cycle.members
        if schedule_numbers(diagonal_word(q)) == (1,) * q.n
    ]
    return tuple(sorted(out, key=dinv))


@dataclass(frozen=True)
class Stretches:
    """Step-word decomposition of a path with all-ones schedule word."""

    head: str  # decorated valleys below the main diagonal
    body: str  # the undecorated climb, no two consecutive east steps
    tail: str  # decorated valleys on or above the main diagonal


def shape_stretches(path: DecoratedLabeledPath) -> Stretches:
    """Split the step word into the three stretches of a schedule-one path:
    decorated valleys in negative diagonals, then the undecorated north steps
    (each east step inside followed by a north step), then decorated valleys
    in nonnegative diagonals.  Raises :class:`ShapeViolation` otherwise."""
    a = area_word(path)
    n = path.n
    undecorated = [i for i in range(1, n + 1) if i not in path.decorations]
    if not undecorated:
        raise ShapeViolation("no undecorated north step")
    first_u, last_u = undecorated[0], undecorated[-1]
    # word positions (0-based) of the relevant north steps
    norths = [pos for pos, step in enumerate(path.steps) if step == "N"]
    body_start = norths[first_u - 1]
    after_last = norths[last_u - 1] + 1
    if after_last >= len(path.steps) or path.steps[after_last] != "E":
        raise ShapeViolation("last undecorated north step not followed by east")
    body_end = after_last + 1
    head, body, tail = (
        path.steps[:body_start],
        path.steps[body_start:body_end],
        path.steps[body_end:],
    )
    if any(first_u <= i <= last_u for i in path.decorations):
        raise ShapeViolation("decorated step inside the middle stretch")
    if any(a[i - 1] >= 0 for i in path.decorations if i < first_u):
        raise ShapeViolation("head decoration on a nonnegative diagonal")
    if any(a[i - 1] < 0 for i in path.decorations if i > last_u):
        raise ShapeViolation("tail decoration on a negative diagonal")
    if "EE" in body:
        raise ShapeViolation("two consecutive east steps inside the middle stretch")
    return Stretches(head, body, tail)
