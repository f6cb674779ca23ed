"""Generators, pruned counting, and statistic distributions."""

from collections import Counter

import pytest

from ascentseq.core import contains, is_restricted
from ascentseq.enumeration import (avoiders, count_ascent_sequences,
                                   count_avoiders, count_modified_avoiders,
                                   distribution, generate_ascent_sequences,
                                   generate_restricted,
                                   generate_set_partitions, joint_distribution,
                                   modified_avoiders, perm_avoiders)
from ascentseq.incremental import SPECIALIZED, make_tracker
from ascentseq.oracles import all_patterns, catalan

from conftest import pat


class TestGeneration:
    def test_tiny(self):
        assert list(generate_ascent_sequences(1)) == [(0,)]
        assert list(generate_ascent_sequences(2)) == [(0, 0), (0, 1)]
        assert list(generate_ascent_sequences(3)) == [
            (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]

    def test_matches_naive_generator(self, small_ascent_sequences):
        for n in range(1, 6):
            assert list(generate_ascent_sequences(n)) == \
                small_ascent_sequences[n]

    def test_counts_and_dp_agree(self):
        # 53 sequences of length 5, 1014 of length 7 (frozen from the
        # exhaustive generator; no published value to compare against)
        lengths = {n: sum(1 for _ in generate_ascent_sequences(n))
                   for n in range(1, 8)}
        assert lengths[5] == 53 and lengths[7] == 1014
        for n in range(1, 8):
            assert count_ascent_sequences(n) == lengths[n]

    def test_zero_length_rejected(self):
        with pytest.raises(ValueError):
            next(generate_ascent_sequences(0))
        with pytest.raises(ValueError):
            count_ascent_sequences(0)


class TestAvoiders:
    def test_degenerate_patterns(self):
        for n in range(1, 7):
            assert list(avoiders(pat("01"), n)) == [(0,) * n]
            assert list(avoiders(pat("00"), n)) == [tuple(range(n))]
        assert list(avoiders((0,), 3)) == []

    def test_012_avoiders_are_binary(self):
        got = list(avoiders(pat("012"), 4))
        assert got == [(0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0), (0, 0, 1, 1),
                       (0, 1, 0, 0), (0, 1, 0, 1), (0, 1, 1, 0), (0, 1, 1, 1)]

    def test_count_series_examples(self):
        assert count_avoiders(pat("101"), 10).as_list() == \
            [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
        assert count_avoiders(pat("000"), 10).as_list() == \
            [1, 2, 4, 10, 27, 83, 277, 1015, 4007, 17047]
        assert count_avoiders(pat("210"), 9).as_list() == \
            [1, 2, 5, 15, 52, 202, 859, 3930, 19095]

    def test_lexicographic_order(self):
        for label in ("101", "0021", "110"):
            words = list(avoiders(pat(label), 6))
            assert words == sorted(words)

    def test_pruned_equals_filtered_all_small_patterns(self):
        full = {n: list(generate_ascent_sequences(n)) for n in range(1, 7)}
        for label in all_patterns(4):
            p = pat(label)
            for n in range(1, 7):
                expected = [w for w in full[n] if not contains(w, p)]
                assert list(avoiders(p, n)) == expected, (label, n)
                assert count_avoiders(p, n).values[n] == len(expected)

    def test_specialized_trackers_match_generic(self):
        # every hand-derived tracker against the search-based one
        for p in sorted(SPECIALIZED):
            fast = count_avoiders(p, 8).as_list()
            slow_tracker = make_tracker(p, 10, generic=True)
            assert slow_tracker.state == ()
            slow = [sum(1 for _ in _generic_avoiders(p, n))
                    for n in range(1, 9)]
            assert fast == slow, p

    def test_threaded_counts_identical(self):
        for label in ("210", "0021", "101"):
            p = pat(label)
            seq = count_avoiders(p, 9)
            for threads, depth in ((2, 4), (3, 2), (4, 5)):
                par = count_avoiders(p, 9, threads=threads, split_depth=depth)
                assert par.values == seq.values

    def test_bad_length(self):
        with pytest.raises(ValueError):
            count_avoiders(pat("101"), 0)


def _generic_avoiders(p, n):
    # independent pruned walk built on the generic tracker only
    tr = make_tracker(p, n + 2, generic=True)

    def extend(word, a):
        if len(word) == n:
            yield word
            return
        for c in range(a + 2):
            if not tr.forbid(word, c):
                yield from extend(word + (c,), a + (1 if c > word[-1] else 0))

    if not tr.forbid((), 0):
        yield from extend((0,), 0)


class TestStructure:
    """Shape characterizations of the avoider classes."""

    def test_001(self):
        def shaped(w):
            k = 0
            while k + 1 < len(w) and w[k + 1] == w[k] + 1:
                k += 1
            tail = w[k + 1:]
            return all(a >= b for a, b in zip(tail, tail[1:])) and \
                all(x <= w[k] for x in tail)

        for n in range(1, 9):
            for w in generate_ascent_sequences(n):
                assert (not contains(w, pat("001"))) == shaped(w)

    def test_010_weakly_increasing(self):
        for n in range(1, 9):
            for w in generate_ascent_sequences(n):
                weak = all(a <= b for a, b in zip(w, w[1:]))
                assert (not contains(w, pat("010"))) == weak

    def test_011_nonzeros_strictly_increase(self):
        for n in range(1, 9):
            for w in generate_ascent_sequences(n):
                nz = [x for x in w if x]
                ok = all(a < b for a, b in zip(nz, nz[1:]))
                assert (not contains(w, pat("011"))) == ok

    def test_012_binary_after_initial_zero(self):
        for n in range(1, 9):
            for w in generate_ascent_sequences(n):
                assert (not contains(w, pat("012"))) == (max(w) <= 1)

    def test_0112_up_then_weakly_down_with_zeros(self):
        def shaped(w):
            nz = [x for x in w if x]
            i = 0
            while i + 1 < len(nz) and nz[i + 1] == nz[i] + 1:
                i += 1
            head, tail = nz[:i + 1], nz[i + 1:]
            if head and head[0] != 1:
                return False
            return all(a >= b for a, b in zip(tail, tail[1:])) and \
                all(head[-1] >= x for x in tail) if nz else True

        for n in range(1, 9):
            for w in generate_ascent_sequences(n):
                assert (not contains(w, pat("0112"))) == shaped(w), w

    def test_021_nonzeros_weakly_increase(self):
        for n in range(1, 10):
            for w in generate_ascent_sequences(n):
                nz = [x for x in w if x]
                ok = all(a <= b for a, b in zip(nz, nz[1:]))
                assert (not contains(w, pat("021"))) == ok


class TestRestricted:
    def test_small(self):
        assert list(generate_restricted(1)) == [(0,)]
        assert len(list(generate_restricted(3))) == 5

    def test_catalan_cardinality_and_membership(self):
        for n in range(1, 9):
            rs = list(generate_restricted(n))
            assert len(rs) == catalan(n)
            assert rs == sorted(rs)
            assert all(is_restricted(x) for x in rs)
        # matches a filter of the full enumeration
        for n in range(1, 8):
            assert list(generate_restricted(n)) == \
                [w for w in generate_ascent_sequences(n) if is_restricted(w)]


class TestPermAvoiders:
    def test_examples(self):
        assert len(list(perm_avoiders(pat("201"), 4))) == 14
        assert list(perm_avoiders(pat("120"), 3)) == [
            (1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 1, 2), (3, 2, 1)]
        assert list(perm_avoiders(pat("01"), 1)) == [(1,)]

    def test_against_filter(self):
        from itertools import permutations
        from ascentseq.core import perm_contains
        for label in ("021", "120", "201", "0123"):
            q = pat(label)
            for n in range(1, 7):
                expected = [p for p in permutations(range(1, n + 1))
                            if not perm_contains(p, q)]
                assert list(perm_avoiders(q, n)) == expected

    def test_repeated_letters_rejected(self):
        with pytest.raises(ValueError):
            next(perm_avoiders(pat("001"), 3))


class TestSetPartitions:
    def test_small(self):
        assert list(generate_set_partitions(1)) == [((1,),)]
        assert len(list(generate_set_partitions(3))) == 5

    def test_standard_form_and_example_member(self):
        parts = list(generate_set_partitions(6))
        assert len(parts) == 203
        assert ((1, 2, 4), (3, 6), (5,)) in parts
        for sp in parts:
            minima = [b[0] for b in sp]
            assert minima == sorted(minima)
            assert all(list(b) == sorted(b) for b in sp)


class TestDistributions:
    def test_asc_histograms(self):
        assert distribution(pat("001"), 4, "asc") == Counter(
            {0: 1, 1: 3, 2: 3, 3: 1})
        assert distribution(pat("012"), 4, "asc") == Counter(
            {0: 1, 1: 6, 2: 1})
        assert distribution(pat("101"), 5, "asc") == Counter(
            {0: 1, 1: 10, 2: 20, 3: 10, 4: 1})

    def test_mass_equals_cardinality(self):
        for label in ("000", "0021"):
            h = distribution(pat(label), 7, "rlmin")
            assert sum(h.values()) == count_avoiders(pat(label), 7).values[7]

    def test_joint_examples(self):
        h1 = joint_distribution(("avoiders", pat("021")), 3, "asc", "rlmin")
        h2 = joint_distribution(("perm-avoiders", pat("021")), 3,
                                "asc", "rlmin")
        assert h1 == h2 and sum(h1.values()) == 5
        h3 = joint_distribution(("avoiders", pat("0012")), 4, "asc", "fwd")
        h4 = joint_distribution(("avoiders", pat("0012")), 4, "asc", "zeros")
        assert h3 == h4
        for n in range(1, 6):
            h = joint_distribution(("avoiders", pat("01")), n, "asc", "zeros")
            assert h == Counter({(0, n): 1})

    def test_unknown_descriptor(self):
        with pytest.raises(ValueError):
            joint_distribution(("nosuch", pat("01")), 3, "asc", "zeros")
        with pytest.raises(ValueError):
            joint_distribution("avoiders", 3, "asc", "zeros")


class TestModified:
    def test_membership_is_on_the_modified_word(self):
        # 010221212 modifies to 010441312, which contains 101
        found = dict(modified_avoiders(pat("101"), 9))
        assert (0, 1, 0, 2, 2, 1, 2, 1, 2) not in found

    def test_counts_are_bell_like(self):
        assert [count_modified_avoiders(pat("101"), n)
                for n in range(1, 8)] == [1, 2, 5, 15, 52, 203, 877]
