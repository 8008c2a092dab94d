"""Path layer: statistics, validation, text format."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pathlab.enumeration import PathFamily, generate
from pathlab.paths import (
    AttackPair,
    ColumnOrderViolation,
    DecorationNotContractible,
    NotAPath,
    area,
    area_word,
    attack_pairs,
    contractible_valleys,
    dinv,
    format_path,
    is_dyck,
    monomial,
    north_positions,
    parse_path,
    shift,
    validate,
)

SMALL_CORPUS = tuple(
    p
    for n in range(1, 5)
    for k in range(n)
    for p in generate(PathFamily(n, k, "square"))
)


class TestSmallPathStatistics:
    def test_decorated_dyck_example(self, small_path):
        assert area_word(small_path) == (0, 1, 0)
        assert shift(small_path) == 0
        assert area(small_path) == 1
        assert dinv(small_path) == 0
        assert contractible_valleys(small_path) == frozenset({3})
        assert attack_pairs(small_path) == frozenset({AttackPair(1, 3, "primary")})
        assert is_dyck(small_path)

    def test_trivial_path(self):
        p = parse_path("NE:1:")
        assert area_word(p) == (0,)
        assert shift(p) == area(p) == dinv(p) == 0
        assert not contractible_valleys(p)
        assert not attack_pairs(p)

    def test_negative_diagonals_shift(self):
        p = parse_path("ENNE:1,2:")
        assert area_word(p) == (-1, 0)
        assert shift(p) == 1
        assert area(p) == 1

    def test_first_step_decoration_needs_negative_start(self):
        # a path starting with N has a_1 = 0, so position 1 is not a valley
        with pytest.raises(DecorationNotContractible):
            validate("NENE", (1, 2), {1})
        # starting east of the diagonal, position 1 is contractible
        assert validate("ENNE", (1, 2), {1}).decorations == frozenset({1})

    def test_monomial(self, small_path):
        assert monomial(small_path) == {1: 1, 2: 1, 3: 1}

    def test_north_positions(self, small_path):
        assert north_positions(small_path) == ((0, 0), (0, 1), (2, 2))


class TestValidation:
    def test_rejects_bad_step_letters(self):
        with pytest.raises(NotAPath):
            validate("NX", (1,))

    def test_rejects_wrong_length(self):
        with pytest.raises(NotAPath):
            validate("NNE", (1, 2))

    def test_rejects_path_not_ending_east(self):
        with pytest.raises(NotAPath):
            validate("NEEN", (1, 2))

    def test_rejects_column_order_violation(self):
        with pytest.raises(ColumnOrderViolation):
            validate("NNEE", (2, 1))

    def test_rejects_noncontractible_decoration(self):
        with pytest.raises(DecorationNotContractible):
            validate("NNEE", (1, 2), {2})

    def test_format_parse_round_trip(self):
        for p in SMALL_CORPUS[:200]:
            assert parse_path(format_path(p)) == p


class TestStatisticProperties:
    @given(st.sampled_from(SMALL_CORPUS))
    def test_area_is_shifted_area_word_sum(self, p):
        s = shift(p)
        assert area(p) == sum(a + s for a in area_word(p))
        assert s == max(0, -min(area_word(p)))

    @given(st.sampled_from(SMALL_CORPUS))
    def test_dinv_is_nonnegative(self, p):
        assert dinv(p) >= 0

    @given(st.sampled_from(SMALL_CORPUS))
    def test_decorations_are_valleys(self, p):
        assert p.decorations <= contractible_valleys(p)

    @given(st.sampled_from(SMALL_CORPUS))
    def test_attack_pairs_never_start_on_decorated_step(self, p):
        assert all(pair.i not in p.decorations for pair in attack_pairs(p))

    @given(st.sampled_from(SMALL_CORPUS))
    def test_dyck_paths_have_shift_zero(self, p):
        if is_dyck(p):
            assert shift(p) == 0 and min(area_word(p)) >= 0
