"""Words over the nonnegative integers and their pattern semantics.

Everything in this package is built on plain tuples of ints.  A *word* is
any finite sequence of nonnegative integers.  An *ascent sequence* is a
word x_1 x_2 ... x_n with x_1 = 0 in which every later letter is at most
one more than the number of ascents of the prefix before it.  A *pattern*
is a word whose set of distinct values is {0, 1, ..., k}; an occurrence of
a pattern in a word is a subsequence whose letters compare exactly like
the pattern letters do (equal pattern letters must be matched by equal
word letters, strict inequalities by strict inequalities).

All functions are pure and operate on immutable tuples, so values can be
shared freely between threads.  Positions reported by functions in this
module are 0-based; the traditional presentation of ascent sequences is
1-based, so examples in docstrings shift by one.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple[int, ...]


def as_word(letters: Iterable[int] | str) -> Word:
    """Coerce a digit string or an iterable of ints to a word tuple.

    >>> as_word("0101312052")
    (0, 1, 0, 1, 3, 1, 2, 0, 5, 2)
    """
    if isinstance(letters, str):
        w = tuple(int(ch) for ch in letters)
    else:
        w = tuple(int(x) for x in letters)
    if any(x < 0 for x in w):
        raise ValueError("letters must be nonnegative")
    return w


def word_str(w: Sequence[int]) -> str:
    """Compact display form: digits concatenated while all letters fit."""
    if w and max(w) > 9:
        return ",".join(str(x) for x in w)
    return "".join(str(x) for x in w)


# ---------------------------------------------------------------------------
# ascent / descent counts and membership tests


def asc(w: Sequence[int]) -> int:
    """Number of positions j with w[j] < w[j+1]."""
    return sum(1 for j in range(len(w) - 1) if w[j] < w[j + 1])


def des(w: Sequence[int]) -> int:
    """Number of positions j with w[j] > w[j+1]."""
    return sum(1 for j in range(len(w) - 1) if w[j] > w[j + 1])


def is_ascent_sequence(w: Sequence[int]) -> bool:
    """True iff w is a valid ascent sequence.

    The empty word is not an ascent sequence.  0101312052 is one;
    0012143 is not, because the 4 exceeds asc(00121) + 1 = 3.
    """
    if not w or w[0] != 0:
        return False
    a = 0
    for i in range(1, len(w)):
        if w[i] < 0 or w[i] > a + 1:
            return False
        if w[i] > w[i - 1]:
            a += 1
    return True


def check_ascent_sequence(w: Sequence[int]) -> Word:
    w = tuple(w)
    if not is_ascent_sequence(w):
        raise ValueError(f"not an ascent sequence: {word_str(w)}")
    return w


def is_restricted(w: Sequence[int]) -> bool:
    """True iff w is an ascent sequence with every letter >= running max - 1."""
    if not is_ascent_sequence(w):
        return False
    m = w[0]
    for i in range(1, len(w)):
        if w[i] < m - 1:
            return False
        if w[i] > m:
            m = w[i]
    return True


def is_rgf(w: Sequence[int]) -> bool:
    """True iff w is a restricted growth function.

    A word starting with 0 in which the first occurrence of every letter
    k > 0 is preceded by an occurrence of k - 1; such words are exactly
    the canonical encodings of set partitions.  001021 is an RGF while
    01013 is not (no 2 before the 3).
    """
    if not w or w[0] != 0:
        return False
    m = 0
    for x in w:
        if x > m:
            if x > m + 1:
                return False
            m = x
    return True


# ---------------------------------------------------------------------------
# statistics on nonempty words


def _require_nonempty(w: Sequence[int]) -> None:
    if not w:
        raise ValueError("statistic undefined on the empty word")


def lrmax(w: Sequence[int]) -> int:
    """Number of letters strictly greater than everything before them."""
    _require_nonempty(w)
    count, best = 0, -1
    for x in w:
        if x > best:
            count += 1
            best = x
    return count


def lrmin(w: Sequence[int]) -> int:
    _require_nonempty(w)
    count, best = 0, None
    for x in w:
        if best is None or x < best:
            count += 1
            best = x
    return count


def rlmax(w: Sequence[int]) -> int:
    """Number of letters strictly greater than everything after them."""
    _require_nonempty(w)
    count, best = 0, -1
    for x in reversed(w):
        if x > best:
            count += 1
            best = x
    return count


def rlmin(w: Sequence[int]) -> int:
    _require_nonempty(w)
    count, best = 0, None
    for x in reversed(w):
        if best is None or x < best:
            count += 1
            best = x
    return count


def zeros(w: Sequence[int]) -> int:
    """Number of 0 letters."""
    _require_nonempty(w)
    return sum(1 for x in w if x == 0)


def fwd(w: Sequence[int]) -> int:
    """Length of the longest weakly decreasing suffix.

    fwd(01123035523220) = 4, the length of the final 3220.
    """
    _require_nonempty(w)
    i = len(w) - 1
    while i > 0 and w[i - 1] >= w[i]:
        i -= 1
    return len(w) - i


STATISTICS = {
    "asc": asc,
    "des": des,
    "lrmax": lrmax,
    "lrmin": lrmin,
    "rlmax": rlmax,
    "rlmin": rlmin,
    "zeros": zeros,
    "fwd": fwd,
}


def stat(w: Sequence[int], which: str) -> int:
    """Evaluate a named statistic; see STATISTICS for the valid names."""
    try:
        f = STATISTICS[which]
    except KeyError:
        raise ValueError(f"unknown statistic {which!r}") from None
    return f(w)


# ---------------------------------------------------------------------------
# patterns and containment


def normalize_pattern(w: Sequence[int]) -> Word:
    """Rank-compress a word so its values form an initial segment 0..k.

    Words that induce the same relative order describe the same pattern;
    for instance 01013 and 01012 normalize identically, and 275 becomes
    021.  Idempotent on already normalized patterns.
    """
    if not w:
        raise ValueError("empty pattern")
    ranks = {v: i for i, v in enumerate(sorted(set(w)))}
    return tuple(ranks[x] for x in w)


def is_pattern(w: Sequence[int]) -> bool:
    """True iff the distinct values of w are exactly 0..k for some k."""
    return bool(w) and sorted(set(w)) == list(range(len(set(w))))


def _match(w: Sequence[int], p: Sequence[int], wi: int, pi: int,
           assign: list, stop: int) -> bool:
    """Match p[pi:stop] into w[wi:] under the partial value assignment."""
    if pi == stop:
        return True
    v = p[pi]
    a = assign[v]
    if a is None:
        lo, hi = -1, None
        for u, letter in enumerate(assign):
            if letter is None:
                continue
            if u < v:
                if letter > lo:
                    lo = letter
            elif u > v and (hi is None or letter < hi):
                hi = letter
    else:
        lo, hi = a - 1, a + 1
    last = len(w) - (stop - pi) + 1
    for t in range(wi, last):
        x = w[t]
        if x <= lo or (hi is not None and x >= hi):
            continue
        assign[v] = x
        if _match(w, p, t + 1, pi + 1, assign, stop):
            assign[v] = a
            return True
        assign[v] = a
    return False


def contains(w: Sequence[int], p: Sequence[int]) -> bool:
    """True iff the word w has an occurrence of the pattern p.

    Non-normalized patterns are normalized silently.  Backtracking over
    pattern positions with remaining-length pruning; for the short
    patterns and desk-scale words used here this is never the bottleneck.

    >>> contains((0, 1, 2, 3, 1, 2, 3), (0, 0, 1))
    True
    >>> contains((0, 1, 2, 3, 2, 1), (0, 0, 1))
    False
    """
    p = normalize_pattern(p)
    if len(p) > len(w):
        return False
    assign: list = [None] * (max(p) + 1)
    return _match(w, p, 0, 0, assign, len(p))


def avoids(w: Sequence[int], p: Sequence[int]) -> bool:
    return not contains(w, p)


def extension_completes(w: Sequence[int], c: int, p: Sequence[int]) -> bool:
    """Would appending letter c to w create an occurrence of p ending there?

    This is the incremental form of containment used while growing
    prefixes: a prefix that avoids p gains an occurrence only if the new
    letter can serve as the final pattern letter.
    """
    k = len(p)
    if len(w) + 1 < k:
        return False
    assign: list = [None] * (max(p) + 1)
    v = p[k - 1]
    assign[v] = c
    return _match(w, p, 0, 0, assign, k - 1)


def _count_matches(w: Sequence[int], p: Sequence[int], wi: int, pi: int,
                   assign: list) -> int:
    if pi == len(p):
        return 1
    v = p[pi]
    a = assign[v]
    if a is None:
        lo, hi = -1, None
        for u, letter in enumerate(assign):
            if letter is None:
                continue
            if u < v:
                if letter > lo:
                    lo = letter
            elif u > v and (hi is None or letter < hi):
                hi = letter
    else:
        lo, hi = a - 1, a + 1
    total = 0
    last = len(w) - (len(p) - pi) + 1
    for t in range(wi, last):
        x = w[t]
        if x <= lo or (hi is not None and x >= hi):
            continue
        assign[v] = x
        total += _count_matches(w, p, t + 1, pi + 1, assign)
        assign[v] = a
    return total


def count_occurrences(w: Sequence[int], p: Sequence[int]) -> int:
    """Number of index subsequences of w order-isomorphic to p.

    count_occurrences((0,1,2,3,1,2,3), (0,0,1)) == 3: the subsequences
    112, 113 and 223.
    """
    p = normalize_pattern(p)
    if len(p) > len(w):
        return 0
    assign: list = [None] * (max(p) + 1)
    return _count_matches(w, p, 0, 0, assign)


# ---------------------------------------------------------------------------
# permutations


def is_permutation(entries: Sequence[int]) -> bool:
    """True iff entries is an arrangement of 1..n."""
    n = len(entries)
    return n > 0 and sorted(entries) == list(range(1, n + 1))


def check_permutation(entries: Sequence[int]) -> tuple[int, ...]:
    entries = tuple(entries)
    if not is_permutation(entries):
        raise ValueError(f"not a permutation of 1..n: {entries}")
    return entries


def perm_contains(pi: Sequence[int], p: Sequence[int]) -> bool:
    """Classical permutation-pattern containment.

    The pattern must have distinct letters; it is normalized silently, so
    both the 0-based form (2,0,1) and the 1-based form (3,1,2) denote the
    same classical pattern.
    """
    p = normalize_pattern(p)
    if len(set(p)) != len(p):
        raise ValueError("permutation patterns must have distinct letters")
    return contains(pi, p)


# ---------------------------------------------------------------------------
# maximal letters


def maximal_positions(x: Sequence[int]) -> tuple[set[int], dict[int, int]]:
    """Maximal letters of an ascent sequence and their last repetitions.

    A letter is maximal when it is as large as the ascent bound allows at
    its position (the initial zero counts).  A maximal letter followed
    immediately by a run of equal letters is *repeated*; the run's final
    position is its last repetition, and a non-repeated maximal letter is
    its own last repetition.

    Returns ``(positions, last_rep)`` where positions is the 0-based set
    of maximal positions and last_rep maps each of them to the 0-based
    position of its last repetition.
    """
    x = check_ascent_sequence(x)
    n = len(x)
    positions: set[int] = set()
    a = 0
    for i in range(n):
        if i == 0 or x[i] == a + 1:
            positions.add(i)
        if i > 0 and x[i] > x[i - 1]:
            a += 1
    last_rep: dict[int, int] = {}
    for i in sorted(positions):
        j = i
        while j + 1 < n and x[j + 1] == x[i]:
            j += 1
        last_rep[i] = j
    return positions, last_rep
