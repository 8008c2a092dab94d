"""Cutting cycles: the cut-and-swap map, canonical representatives, ladders."""

from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from pathlab.cutting import (
    Stretches,
    breaking_step,
    canonical_rep,
    cutting_cycle,
    geometric_order,
    ordered_cycle,
    psi,
    sched_one_members,
    shape_stretches,
)
from pathlab.enumeration import PathFamily, generate, schedule_one_paths
from pathlab.paths import area, dinv, format_path, parse_path
from pathlab.schedule import diagonal_word

from conftest import BIG_CYCLE, BIG_SCHED_ONE


class TestPsi:
    def test_last_cut_is_identity(self, small_path):
        assert psi(small_path, small_path.n) == small_path

    def test_invalid_cut_returns_none(self):
        # cutting NNEENE:1,2,3:3 after its first east step produces a path
        # whose decoration is no longer on a contractible valley
        p = parse_path("NNEENE:1,2,3:3")
        results = [psi(p, i) for i in range(1, 4)]
        assert any(q is None for q in results)

    def test_psi_preserves_area_and_word(self, big_cycle_paths):
        base = big_cycle_paths[0]
        sdw = diagonal_word(base)
        for i in range(1, base.n + 1):
            q = psi(base, i)
            if q is None:
                continue
            assert area(q) == area(base)
            assert diagonal_word(q).word == sdw.word


class TestBigCycle:
    def test_members_and_canonical(self, big_cycle_paths):
        cycle = cutting_cycle(big_cycle_paths[2])
        assert cycle.members == frozenset(big_cycle_paths)
        assert cycle.canonical == big_cycle_paths[0]

    def test_dinv_ladder(self, big_cycle_paths):
        ordered = ordered_cycle(big_cycle_paths[0])
        assert ordered == big_cycle_paths
        assert [dinv(p) for p in ordered] == [0, 1, 2, 3, 4, 5]

    def test_geometric_order_matches_ladder(self, big_cycle_paths):
        canon = big_cycle_paths[0]
        order = geometric_order(canon)
        assert order == (8, 2, 6, 5, 4, 3)
        for i, ordinal in enumerate(order):
            assert dinv(psi(canon, ordinal)) == i

    def test_breaking_step_recovers_canonical(self, big_cycle_paths):
        canon = big_cycle_paths[0]
        for p in big_cycle_paths:
            assert psi(p, breaking_step(p)) == canon

    def test_schedule_one_members(self, big_cycle_paths):
        cycle = cutting_cycle(big_cycle_paths[0])
        got = {format_path(p) for p in sched_one_members(cycle)}
        assert got == set(BIG_SCHED_ONE)

    def test_shape_of_canonical(self, big_cycle_paths):
        assert shape_stretches(big_cycle_paths[0]) == Stretches(
            head="EN", body="NENNNNENE", tail="EEENE"
        )


class TestCycleInvariants:
    def test_cycle_size_is_n_minus_k(self, all_paths_n_le_4):
        for p in all_paths_n_le_4:
            assert len(cutting_cycle(p).members) == p.n - len(p.decorations)

    def test_cycles_partition_each_family(self):
        for n in range(1, 5):
            for k in range(n):
                paths = set(generate(PathFamily(n, k, "square")))
                seen = set()
                for p in paths:
                    if p in seen:
                        continue
                    members = cutting_cycle(p).members
                    assert members <= paths and not (members & seen)
                    seen |= members
                assert seen == paths

    @given(data=st.data())
    def test_canonical_is_a_member(self, all_paths_n_le_4, data):
        p = data.draw(st.sampled_from(all_paths_n_le_4))
        cycle = cutting_cycle(p)
        assert cycle.canonical in cycle.members

    def test_schedule_one_canonical_shared_dinv_zero(self):
        # all schedule-one members of a cycle break to the same
        # representative, and that representative has dinv 0
        by_cycle = {}
        for p in schedule_one_paths(4):
            c = canonical_rep(p)
            assert dinv(c) == 0
            assert canonical_rep(c) == c
            by_cycle.setdefault(cutting_cycle(p).members, set()).add(c)
        assert all(len(canons) == 1 for canons in by_cycle.values())

    def test_schedule_one_ladder_small(self):
        for p in schedule_one_paths(4):
            ordered = ordered_cycle(p)
            size = p.n - len(p.decorations)
            assert [dinv(q) for q in ordered] == list(range(size))
            assert len({area(q) for q in ordered}) == 1
