"""Word semantics: membership, statistics, containment, maximal letters."""

import pytest

from ascentseq.core import (as_word, asc, contains, count_occurrences, des,
                            extension_completes, fwd, is_ascent_sequence,
                            is_pattern, is_restricted, is_rgf, lrmax, lrmin,
                            maximal_positions, normalize_pattern,
                            perm_contains, rlmax, rlmin, stat, word_str,
                            zeros)
from ascentseq.oracles import all_patterns

from conftest import (naive_ascent_sequences, naive_contains,
                      naive_count_occurrences, pat)


class TestMembership:
    def test_examples(self):
        assert is_ascent_sequence(as_word("0101312052"))
        assert not is_ascent_sequence(as_word("0012143"))  # 4 > asc(00121)+1
        assert is_ascent_sequence((0,))
        assert not is_ascent_sequence(())
        assert not is_ascent_sequence((1, 0))

    def test_against_naive_filter(self, small_ascent_sequences):
        from itertools import product
        for n in range(1, 6):
            mine = [w for w in product(range(n), repeat=n)
                    if is_ascent_sequence(w)]
            assert mine == small_ascent_sequences[n]

    def test_restricted(self):
        assert is_restricted(as_word("010221212"))
        assert is_restricted((0, 1, 2, 3, 2, 3, 4, 4, 3, 4, 6, 5))
        assert is_restricted((0, 1, 0))
        # a letter two below the running maximum breaks it
        assert not is_restricted((0, 1, 2, 0))


class TestStatistics:
    def test_asc_des(self):
        assert asc(as_word("00121")) == 2
        assert asc((0, 0, 0)) == 0
        assert des(as_word("0101312052")) == 4  # scan: 10, 31, 20, 52
        assert asc(()) == 0 and des(()) == 0

    def test_named(self):
        assert fwd(as_word("01123035523220")) == 4
        assert zeros(as_word("01023200")) == 4
        assert lrmax(as_word("0123")) == 4
        assert rlmin(as_word("0123")) == 4
        assert rlmax((0, 1, 0)) == 2
        assert lrmin((0, 1, 0)) == 1
        assert stat((0, 1), "asc") == 1

    def test_empty_word_is_a_domain_error(self):
        for name in ("lrmax", "lrmin", "rlmax", "rlmin", "zeros", "fwd"):
            with pytest.raises(ValueError):
                stat((), name)
        with pytest.raises(ValueError):
            stat((0, 1), "nosuch")


class TestPatterns:
    def test_normalize(self):
        assert normalize_pattern(as_word("01013")) == pat("01012")
        assert normalize_pattern(pat("0102")) == pat("0102")
        assert normalize_pattern(as_word("275")) == pat("021")
        with pytest.raises(ValueError):
            normalize_pattern(())

    def test_normalize_idempotent_and_pattern_shape(self):
        for label in all_patterns(4):
            p = pat(label)
            assert is_pattern(p)
            assert normalize_pattern(p) == p

    def test_contains_examples(self):
        assert contains(as_word("0123123"), pat("001"))
        assert not contains(as_word("012321"), pat("001"))
        assert contains((5,), (0,))
        assert contains(as_word("0101"), pat("101"))
        assert not contains(as_word("0102"), pat("0101"))

    def test_count_examples(self):
        assert count_occurrences(as_word("0123123"), pat("001")) == 3
        assert count_occurrences(as_word("012321"), pat("001")) == 0
        assert count_occurrences((0, 0, 0), (0, 0)) == 3

    def test_against_naive(self, small_ascent_sequences):
        patterns = [pat(s) for s in all_patterns(4)]
        for n in (3, 4, 5):
            for w in small_ascent_sequences[n]:
                for p in patterns:
                    assert contains(w, p) == naive_contains(w, p)
                    assert (count_occurrences(w, p)
                            == naive_count_occurrences(w, p))

    def test_contains_iff_positive_count(self, small_ascent_sequences):
        patterns = [pat(s) for s in all_patterns(3)]
        for w in small_ascent_sequences[5]:
            for p in patterns:
                assert contains(w, p) == (count_occurrences(w, p) > 0)

    def test_normalization_preserves_containment(self, small_ascent_sequences):
        raw = [(2, 7, 5), (3, 3, 8), (1, 0, 1, 3)]
        for w in small_ascent_sequences[5]:
            for r in raw:
                assert contains(w, r) == contains(w, normalize_pattern(r))

    def test_monotone_under_subpatterns(self):
        # if p occurs in q, avoiding p forces avoiding q
        words = naive_ascent_sequences(5) + [
            w for n in (6, 7) for w in _ascent_sequences_fast(n)]
        patterns = [pat(s) for s in all_patterns(4)]
        for q in patterns:
            subs = [p for p in patterns if naive_contains(q, p)]
            for w in words:
                if any(not contains(w, p) for p in subs):
                    has_q = contains(w, q)
                    for p in subs:
                        if not contains(w, p):
                            assert not has_q, (w, p, q)

    def test_extension_matches_full_recheck(self, small_ascent_sequences):
        patterns = [pat(s) for s in all_patterns(3)]
        for w in small_ascent_sequences[4]:
            for c in range(5):
                for p in patterns:
                    grown = w + (c,)
                    expected = contains(grown, p) and not contains(w, p)
                    if not contains(w, p):
                        assert extension_completes(w, c, p) == expected


def _ascent_sequences_fast(n):
    from ascentseq.enumeration import generate_ascent_sequences
    return list(generate_ascent_sequences(n))


class TestRgf:
    def test_examples(self):
        assert is_rgf(as_word("001021"))
        assert not is_rgf(as_word("01013"))
        assert is_rgf((0,))
        assert not is_rgf(())
        assert not is_rgf((1,))

    def test_forward_lemma_small(self):
        # avoiding any subpattern of 01012 forces the growth property
        host = pat("01012")
        subpatterns = [pat(s) for s in all_patterns(5)
                       if naive_contains(host, pat(s))]
        assert pat("101") in subpatterns and pat("0012") in subpatterns
        for n in range(1, 8):
            for w in _ascent_sequences_fast(n):
                misses = [p for p in subpatterns if not contains(w, p)]
                if misses and not is_rgf(w):
                    raise AssertionError((w, misses[0]))

    def test_converse_witness(self):
        host = pat("01012")
        witness = as_word("01013")
        assert is_ascent_sequence(witness) and not is_rgf(witness)
        for label in all_patterns(5):
            p = pat(label)
            if not naive_contains(host, p):
                assert not contains(witness, p), label


class TestPermutations:
    def test_examples(self):
        assert not perm_contains((4, 5, 3, 7, 8, 6, 2, 1), pat("201"))
        assert not perm_contains((6, 4, 1, 3, 2, 5, 8, 7, 9), pat("120"))
        assert perm_contains((1, 2), pat("01"))
        assert perm_contains((3, 1, 2), (3, 1, 2))  # 1-based form accepted

    def test_repeated_letters_rejected(self):
        with pytest.raises(ValueError):
            perm_contains((1, 2, 3), pat("001"))


class TestMaximalPositions:
    def test_long_display_example(self):
        word = (0, 0, 0, 1, 0, 1, 2, 0, 4, 4, 2, 3, 2, 0, 6, 4, 1, 4,
                8, 8, 8, 5)
        positions, last_rep = maximal_positions(word)
        assert positions == {0, 3, 8, 14, 18}
        assert last_rep == {0: 2, 3: 3, 8: 9, 14: 14, 18: 20}

    def test_short_example(self):
        positions, last_rep = maximal_positions(as_word("011213232"))
        assert positions == {0, 1, 3, 5}
        # only the 1 at position 1 is a repeated maximal letter
        assert last_rep == {0: 0, 1: 2, 3: 3, 5: 5}

    def test_single_letter(self):
        assert maximal_positions((0,)) == ({0}, {0: 0})

    def test_rejects_invalid(self):
        with pytest.raises(ValueError):
            maximal_positions((0, 3))


def test_word_helpers():
    assert word_str((0, 1, 2)) == "012"
    assert word_str((0, 11)) == "0,11"
    assert as_word([0, 1]) == (0, 1)
    with pytest.raises(ValueError):
        as_word([-1])
