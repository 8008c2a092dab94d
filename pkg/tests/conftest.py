"""Shared fixtures: small frozen objects used across the test modules.

The long diagonal-word/cycle fixtures describe one size-8 cutting cycle
whose six members were computed once by the cutting machinery and then
hand-checked against the step diagrams; tests pin them as literals.
"""

from __future__ import annotations

import pytest

from pathlab.enumeration import PathFamily, generate
from pathlab.paths import parse_path
from pathlab.schedule import parse_perm

# a size-3 Dyck path with one decorated valley and dinv 0
SMALL_PATH = "NNEENE:1,2,3:3"

# a size-8 word, decorated on the values 7 and 4, whose schedule word is
# all ones exactly at shifts 2 and 3
BIG_WORD = "7* 8 4* 2 3 5 6 1"

# the six members of its cutting cycle, listed in dinv order 0..5
BIG_CYCLE = (
    "ENNENNNNENEEEENE:7,8,2,3,5,6,1,4:1,8",
    "NNNNENEEEENEENNE:2,3,5,6,1,4,7,8:6,7",
    "ENEENNENNNNENEEE:4,7,8,2,3,5,6,1:1,2",
    "EENEENNENNNNENEE:4,7,8,2,3,5,6,1:1,2",
    "EEENEENNENNNNENE:4,7,8,2,3,5,6,1:1,2",
    "NEEEENEENNENNNNE:1,4,7,8,2,3,5,6:2,3",
)
# the members whose own schedule word is all ones (shifts 2 and 3)
BIG_SCHED_ONE = (BIG_CYCLE[2], BIG_CYCLE[3])

# a size-7 word whose fiber at shift 1 holds 16 paths
FIBER_WORD = "4 1* 6 5 3* 2* 7"
FIBER_SHIFT = 1


@pytest.fixture
def small_path():
    return parse_path(SMALL_PATH)


@pytest.fixture
def big_word():
    return parse_perm(BIG_WORD)


@pytest.fixture
def big_cycle_paths():
    return tuple(parse_path(text) for text in BIG_CYCLE)


@pytest.fixture(scope="session")
def all_paths_n_le_4():
    """Every decorated labeled square path of size at most 4."""
    out = []
    for n in range(1, 5):
        for k in range(n):
            out.extend(generate(PathFamily(n, k, "square")))
    return tuple(out)
