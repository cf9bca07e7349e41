"""Class-closed enumeration, stability, survey, and sequence checking."""

import math
import random

import pytest

from permlab.catalog import KNUTH_MATCHING_PATTERN, SEQUENCE_TABLES, vincular_run_pattern
from permlab.census import (
    avoid_all,
    class_avoiders,
    class_matchers,
    match_all,
    plain_avoiders,
    plain_matchers,
    sequence_check,
    sigma_via_avoiders,
    stability,
    survey,
)
from permlab.arith import sigma_arith
from permlab.core import s_n
from permlab.pattern import all_patterns, avoids, pattern


def _catalan(m: int) -> int:
    return math.comb(2 * m, m) // (m + 1)


def _mask_class_count(avoid_mask: int, classes: list[int]) -> int:
    return sum(cls.bit_count() for cls in classes if cls & avoid_mask == cls)


class TestClassClosed:
    def test_against_masks(self, avoid_masks, class_masks):
        rng = random.Random(7)
        pats = [p for p in avoid_masks if len(p.p) <= 2]
        pats += rng.sample([p for p in avoid_masks if len(p.p) == 3], 60)
        for rel in ("conjugacy", "order", "knuth", "toric", "descent"):
            for n in (3, 4, 5):
                classes = class_masks(rel, n)
                for pat in pats:
                    want = _mask_class_count(avoid_masks[pat][n], classes)
                    got = class_avoiders([pat], rel, n).count
                    assert got == want, (rel, n, str(pat))

    def test_members_subset_chain(self):
        pat = pattern((2, 3, 1), y=[0])
        for n in (3, 4, 5):
            closed = class_avoiders([pat], "knuth", n, want_members=True).members
            plain = avoid_all([pat], n)
            assert set(closed) <= set(plain) <= set(s_n(n))
            for w in closed:
                assert avoids(pat, w)

    def test_matchers_subset_chain(self):
        for n in (3, 4, 5):
            closed = class_matchers([KNUTH_MATCHING_PATTERN], "knuth", n,
                                    want_members=True).members
            plain = match_all([KNUTH_MATCHING_PATTERN], n)
            assert set(closed) <= set(plain)

    def test_multiple_patterns_intersect(self):
        pats = [pattern((2, 3, 1)), pattern((2, 1, 3))]
        for n in (4, 5):
            got = avoid_all(pats, n)
            want = [w for w in s_n(n)
                    if avoids(pats[0], w) and avoids(pats[1], w)]
            assert got == want

    def test_plain_wrappers(self):
        pat = pattern((2, 3, 1))
        res = plain_avoiders([pat], 4, want_members=True)
        assert res.count == res.class_count == len(res.members)
        m = plain_matchers([pat], 4)
        assert res.count + m.count == 24

    def test_members_sorted(self):
        res = class_avoiders([pattern((2, 3, 1))], "knuth", 5, want_members=True)
        assert list(res.members) == sorted(res.members)

    def test_payload_shape(self):
        res = class_avoiders([pattern((2, 1))], "conjugacy", 3, want_members=True)
        payload = res.to_payload()
        assert payload["mode"] == "class-avoid"
        assert payload["relation"] == "conjugacy"
        assert payload["n"] == 3
        assert payload["patterns"] == ["21;x=;y="]
        assert payload["count"] == 1
        assert payload["members"] == ["123"]


class TestKnuthMatching:
    def test_counts_are_shifted_catalan(self):
        got = [class_matchers([KNUTH_MATCHING_PATTERN], "knuth", n).count
               for n in range(2, 8)]
        assert got == [_catalan(n - 1) for n in range(2, 8)]

    def test_member_characterization(self):
        # Every member starts with n-1 and the rest, read as a word, has no
        # increasing triple.
        from itertools import permutations

        from conftest import lis_length

        for n in (4, 5, 6):
            got = class_matchers([KNUTH_MATCHING_PATTERN], "knuth", n,
                                 want_members=True).members
            want = {
                (n - 1,) + rest
                for rest in permutations(
                    [v for v in range(1, n + 1) if v != n - 1])
                if lis_length(rest) < 3
            }
            assert set(got) == want


class TestStability:
    def test_classical_length3_knuth_stable(self):
        from itertools import permutations

        for p in permutations((1, 2, 3)):
            rep = stability(pattern(p), "knuth", 6)
            assert rep.stable, p
            assert rep.witness is None

    def test_vincular_run_unstable(self):
        rep = stability(vincular_run_pattern(3), "knuth", 6)
        assert not rep.stable
        assert rep.witness_n == 4
        assert rep.witness == (1, 3, 2, 4)

    def test_witness_direction(self):
        # The witness avoids the whole pattern class but has a classmate
        # containing the original pattern.
        rep = stability(vincular_run_pattern(3), "knuth", 4)
        closed = set(class_avoiders([vincular_run_pattern(3)], "knuth", 4,
                                    want_members=True).members)
        plain = set(avoid_all(rep.pattern_class, 4))
        assert closed <= plain
        assert rep.witness in plain - closed

    def test_toric_containment_sampled(self):
        rng = random.Random(11)
        pats = rng.sample(list(all_patterns(3)), 20)
        for pat in pats:
            rep = stability(pat, "toric", 5)
            plain = set(avoid_all(rep.pattern_class, 5))
            closed = set(class_avoiders([pat], "toric", 5, want_members=True).members)
            assert closed <= plain
            if rep.stable:
                assert closed == plain

    def test_relation_without_pattern_action(self):
        with pytest.raises(ValueError):
            stability(pattern((2, 1)), "conjugacy", 4)

    def test_payload(self):
        rep = stability(vincular_run_pattern(3), "knuth", 6)
        payload = rep.to_payload()
        assert payload["stable"] is False
        assert payload["witness"] == "1324"
        assert payload["witness_n"] == 4


class TestSurvey:
    def test_orbit_counts_per_relation(self):
        assert survey("toric", 3, n_range=range(1, 3)).orbit_count == 212
        assert survey("knuth", 3, n_range=range(1, 3)).orbit_count == 392
        assert survey("conjugacy", 3, n_range=range(1, 3)).orbit_count == 424

    def test_orbit_sizes_cover_all_patterns(self):
        res = survey("toric", 3, n_range=range(1, 3))
        assert res.pattern_count == 1536
        assert sum(row.orbit_size for row in res.rows) == 1536

    def test_merge_shift_trims_rows(self):
        res = survey("toric", 3, n_range=range(1, 3), merge_shift=True)
        assert res.orbit_count == 121
        assert sum(row.orbit_size for row in res.rows) == 1536

    def test_merge_shift_is_sound(self, avoid_masks, class_masks):
        # Merging is licensed by rank-in-Y shifts, which preserve the
        # class-closed avoider count degree by degree.
        from permlab.pattern import pat_shift

        for pat in all_patterns(3):
            if 3 not in pat.y:
                continue
            shifted = pat_shift(pat)
            for n in (3, 4, 5):
                classes = class_masks("toric", n)
                a = _mask_class_count(avoid_masks[pat][n], classes)
                b = _mask_class_count(avoid_masks[shifted][n], classes)
                assert a == b, (str(pat), n)

    def test_counts_constant_on_orbit(self):
        from permlab.pattern import apply_symmetry
        from permlab.relations import RELATIONS

        rng = random.Random(3)
        rel = RELATIONS["toric"]
        for pat in rng.sample(list(all_patterns(3)), 12):
            counts = {
                class_avoiders([apply_symmetry(pat, ops)], rel, 4).count
                for ops in rel.symmetries
            }
            assert len(counts) == 1, str(pat)

    def test_rows_tag_known_tables(self):
        res = survey("conjugacy", 3, n_range=range(1, 6))
        tagged = [row for row in res.rows if "A000124" in row.tables]
        assert tagged, "central polygonal row should be recognized"

    def test_payload(self):
        res = survey("descent", 1, n_range=range(1, 4))
        payload = res.to_payload()
        assert payload["relation"] == "descent"
        assert payload["pattern_count"] == 16
        assert len(payload["rows"]) == payload["orbit_count"]


class TestSequenceCheck:
    def test_dict_comparator(self):
        rep = sequence_check("A000166", {1: 0, 2: 1, 3: 2, 4: 9})
        assert rep.ok
        assert rep.skipped == (5, 6, 7, 8, 9)

    def test_list_comparator(self):
        rep = sequence_check("A000124", [1, 2, 4, 7, 11])
        assert rep.ok

    def test_mismatch_detected(self):
        rep = sequence_check("A000166", {1: 0, 2: 1, 3: 5})
        assert not rep.ok

    def test_recompute_with_budget(self):
        rep = sequence_check("A000124", budget=6)
        assert rep.ok
        assert set(rep.computed) == {1, 2, 3, 4, 5, 6}
        assert rep.skipped == (7, 8, 9)

    def test_recompute_class_count_row(self):
        rep = sequence_check("A000041", budget=5)
        assert rep.ok
        assert rep.computed[5] == 7

    def test_unknown_id(self):
        with pytest.raises(ValueError):
            sequence_check("A999999")

    def test_every_table_has_recompute_path(self):
        for table_id in SEQUENCE_TABLES:
            rep = sequence_check(table_id, budget=4)
            assert rep.ok, table_id

    def test_payload(self):
        rep = sequence_check("A000166", {1: 0, 2: 1, 3: 2})
        payload = rep.to_payload()
        assert payload["ok"] is True
        assert payload["computed"] == {"1": 0, "2": 1, "3": 2}


class TestSigmaViaAvoiders:
    def test_matches_arithmetic(self):
        for n in range(1, 9):
            assert sigma_via_avoiders(n) == sigma_arith(n)
