"""Equivalence relations, class generation, censuses."""

import math

import pytest

from permlab.core import cycle_type, identity, order, s_n
from permlab.errors import BudgetExceeded, InternalCheckError
from permlab.relations import (
    RELATIONS,
    ClassCensus,
    brute_census,
    census,
    class_representatives,
    check_budget,
    perms_with_cycle_type,
    resolve_budget,
)


class TestCycleTypeGeneration:
    def test_three_cycles_of_s3(self):
        assert sorted(perms_with_cycle_type(3, (3,))) == [(2, 3, 1), (3, 1, 2)]

    def test_exactly_once_all_types(self):
        for n in range(0, 7):
            seen = []
            from permlab.tableau import partitions

            for shape in partitions(n):
                members = list(perms_with_cycle_type(n, shape))
                assert all(cycle_type(w) == shape for w in members)
                seen.extend(members)
            assert len(seen) == math.factorial(n)
            assert len(set(seen)) == len(seen)

    def test_sizes_match_formula(self):
        from collections import Counter

        for n in range(1, 7):
            from permlab.tableau import partitions

            for shape in partitions(n):
                mult = Counter(shape)
                expect = math.factorial(n)
                for length, m in mult.items():
                    expect //= length**m * math.factorial(m)
                assert len(list(perms_with_cycle_type(n, shape))) == expect


class TestClassOf:
    @pytest.mark.parametrize("rel_name", sorted(RELATIONS))
    def test_class_of_equals_key_grouping(self, rel_name):
        rel = RELATIONS[rel_name]
        for n in range(0, 6):
            by_key = {}
            for w in s_n(n):
                by_key.setdefault(rel.key(w), set()).add(w)
            for w in s_n(n):
                assert rel.class_of(w) == by_key[rel.key(w)], (rel_name, w)

    def test_identity_alone_in_conjugacy_class(self):
        assert RELATIONS["conjugacy"].class_of(identity(5)) == {identity(5)}

    def test_order_unions_conjugacy(self):
        rel = RELATIONS["order"]
        for w in s_n(5):
            assert rel.class_of(w) == {u for u in s_n(5) if order(u) == order(w)}

    def test_toric_class_anchor(self):
        assert RELATIONS["toric"].class_of((1, 2, 4, 3)) == {
            (1, 2, 4, 3), (4, 1, 2, 3), (2, 3, 4, 1), (2, 1, 3, 4), (1, 3, 2, 4)}


class TestCensus:
    @pytest.mark.parametrize("rel_name", sorted(RELATIONS))
    def test_census_equals_brute(self, rel_name):
        rel = RELATIONS[rel_name]
        for n in range(0, 6):
            assert census(rel, n).by_size == brute_census(rel, n).by_size

    def test_toric_anchor(self):
        assert census(RELATIONS["toric"], 5).by_size == {1: 2, 2: 2, 3: 2, 6: 18}

    def test_conjugacy_class_counts(self):
        got = [census(RELATIONS["conjugacy"], n).class_count for n in range(1, 8)]
        assert got == [1, 2, 3, 5, 7, 11, 15]

    def test_order_class_counts(self):
        got = [census(RELATIONS["order"], n).class_count for n in range(1, 8)]
        assert got == [1, 2, 3, 4, 6, 6, 9]

    def test_knuth_class_counts(self):
        got = [census(RELATIONS["knuth"], n).class_count for n in range(1, 7)]
        assert got == [1, 2, 4, 10, 26, 76]

    def test_descent_census(self):
        by_size = census(RELATIONS["descent"], 5).by_size
        assert sum(by_size.values()) == 16
        assert sum(size * count for size, count in by_size.items()) == 120

    def test_census_validates_total(self):
        with pytest.raises(InternalCheckError):
            ClassCensus(relation="conjugacy", n=3, by_size={1: 1, 2: 1})

    def test_representatives_are_lex_least(self):
        for rel_name in sorted(RELATIONS):
            rel = RELATIONS[rel_name]
            reps = list(class_representatives(rel, 4))
            assert reps == sorted(reps)
            assert all(w == min(rel.class_of(w)) for w in reps)
            assert sum(len(rel.class_of(w)) for w in reps) == 24


class TestBudget:
    def test_default(self):
        assert resolve_budget(None) == 9

    def test_argument_wins(self):
        assert resolve_budget(4) == 4

    def test_env_fallback(self, monkeypatch):
        monkeypatch.setenv("PERMLAB_BUDGET_N", "7")
        assert resolve_budget(None) == 7

    def test_check_raises(self):
        with pytest.raises(BudgetExceeded):
            check_budget(10, None)
        check_budget(9, None)
        check_budget(12, 12)
