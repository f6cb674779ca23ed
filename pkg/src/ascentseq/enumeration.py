"""Exhaustive generation of ascent sequences, avoiders and relatives.

All generators stream lazily in lexicographic order and are deterministic.
Avoider enumeration prunes: a prefix that already contains the pattern is
never extended, which is sound because containment is monotone under
appending letters.  Counting runs over the same pruned prefix tree but
collapses the final level through ``count_allowed``, so no sequence is
materialized; with ``threads > 1`` the tree is split into independent
subtrees at a fixed depth and the per-subtree counts are summed, which
gives bit-identical results to a sequential run.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import bijections
from .core import (contains, extension_completes, normalize_pattern, stat,
                   word_str)
from .incremental import Tracker, make_tracker

DEFAULT_SPLIT_DEPTH = 4


@dataclass
class CountSeries:
    """Counting sequence keyed by length, over a contiguous range 1..n_max."""

    label: str
    values: dict[int, int] = field(default_factory=dict)

    def as_list(self) -> list[int]:
        return [self.values[n] for n in sorted(self.values)]

    @property
    def n_max(self) -> int:
        return max(self.values)


def _check_length(n: int) -> None:
    if n < 1:
        raise ValueError("length must be at least 1")


# ---------------------------------------------------------------------------
# plain ascent sequences


def generate_ascent_sequences(n: int):
    """Yield every ascent sequence of length n, lexicographically."""
    _check_length(n)

    def extend(prefix: list, a: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        last = prefix[-1]
        for c in range(a + 2):
            prefix.append(c)
            yield from extend(prefix, a + 1 if c > last else a)
            prefix.pop()

    yield from extend([0], 0)


def count_ascent_sequences(n: int) -> int:
    """Number of ascent sequences of length n.

    Dynamic programming over (ascents so far, last letter) states; used as
    a cross-check against the exhaustive generator.
    """
    _check_length(n)
    states = Counter({(0, 0): 1})
    for _ in range(n - 1):
        nxt: Counter = Counter()
        for (a, last), ways in states.items():
            for c in range(a + 2):
                nxt[(a + 1 if c > last else a, c)] += ways
        states = nxt
    return sum(states.values())


# ---------------------------------------------------------------------------
# pattern avoiders


def avoiders(p, n: int):
    """Yield the p-avoiding ascent sequences of length n, lexicographically."""
    _check_length(n)
    p = normalize_pattern(p)
    tr = make_tracker(p, n + 2)
    forbid, step = tr.forbid, tr.step
    if forbid(tr.state, 0):
        return

    def extend(prefix: list, state, a: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        last = prefix[-1]
        for c in range(a + 2):
            if forbid(state, c):
                continue
            prefix.append(c)
            yield from extend(prefix, step(state, c), a + 1 if c > last else a)
            prefix.pop()

    yield from extend([0], step(tr.state, 0), 0)


def _count_walk(tr: Tracker, state, last: int, a: int, depth: int,
                n_max: int, counts: list, check) -> None:
    counts[depth] += 1
    if depth == n_max:
        return
    if check is not None:
        check()
    forbid, step = tr.forbid, tr.step
    if depth + 1 == n_max:
        counts[n_max] += tr.count_allowed(state, a + 1)
        return
    for c in range(a + 2):
        if not forbid(state, c):
            _count_walk(tr, step(state, c), c, a + 1 if c > last else a,
                        depth + 1, n_max, counts, check)


def _subtree_roots(tr: Tracker, depth: int, n_max: int, counts: list):
    """Count nodes above the split depth and collect the subtree roots."""
    roots = []

    def walk(state, last, a, d):
        if d == depth:
            roots.append((state, last, a))
            return
        counts[d] += 1
        for c in range(a + 2):
            if not tr.forbid(state, c):
                walk(tr.step(state, c), c, a + 1 if c > last else a, d + 1)

    if not tr.forbid(tr.state, 0):
        walk(tr.step(tr.state, 0), 0, 0, 1)
    return roots


def count_avoiders(p, n_max: int, threads: int = 1,
                   split_depth: int = DEFAULT_SPLIT_DEPTH,
                   check=None) -> CountSeries:
    """Count p-avoiding ascent sequences for every length 1..n_max.

    ``check``, when given, is called periodically during the walk and may
    raise to abort cleanly (used for CLI budget guards).
    """
    _check_length(n_max)
    p = normalize_pattern(p)
    tr = make_tracker(p, n_max + 2)
    counts = [0] * (n_max + 1)
    if threads > 1 and n_max > split_depth:
        roots = _subtree_roots(tr, split_depth, n_max, counts)

        def work(root):
            state, last, a = root
            local = [0] * (n_max + 1)
            _count_walk(tr, state, last, a, split_depth, n_max, local, check)
            return local

        with ThreadPoolExecutor(max_workers=threads) as pool:
            for local in pool.map(work, roots):
                for i, v in enumerate(local):
                    counts[i] += v
    else:
        if not tr.forbid(tr.state, 0):
            _count_walk(tr, tr.step(tr.state, 0), 0, 0, 1, n_max, counts,
                        check)
    return CountSeries(word_str(p), {n: counts[n] for n in range(1, n_max + 1)})


# ---------------------------------------------------------------------------
# restricted ascent sequences


def generate_restricted(n: int):
    """Yield the restricted ascent sequences of length n (letters never drop
    more than one below the running maximum), lexicographically."""
    _check_length(n)

    def extend(prefix: list, a: int, m: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        last = prefix[-1]
        for c in range(max(0, m - 1), a + 2):
            prefix.append(c)
            yield from extend(prefix, a + 1 if c > last else a, max(m, c))
            prefix.pop()

    yield from extend([0], 0, 0)


# ---------------------------------------------------------------------------
# pattern-avoiding permutations


def perm_avoiders(q, n: int):
    """Yield the permutations of 1..n avoiding the (distinct-letter)
    pattern q, lexicographically, growing prefixes with pruning."""
    _check_length(n)
    q = normalize_pattern(q)
    if len(set(q)) != len(q):
        raise ValueError("permutation patterns must have distinct letters")

    def extend(prefix: list, used: set):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            if v in used or extension_completes(prefix, v, q):
                continue
            prefix.append(v)
            used.add(v)
            yield from extend(prefix, used)
            used.remove(v)
            prefix.pop()

    yield from extend([], set())


# ---------------------------------------------------------------------------
# set partitions


def generate_set_partitions(n: int):
    """Yield all partitions of {1, ..., n} in standard form (blocks sorted
    ascending, ordered by minima), enumerated via their growth strings."""
    _check_length(n)

    def extend(labels: list, m: int):
        if len(labels) == n:
            blocks: list[list[int]] = [[] for _ in range(m + 1)]
            for i, b in enumerate(labels):
                blocks[b].append(i + 1)
            yield tuple(tuple(b) for b in blocks)
            return
        for b in range(m + 2):
            labels.append(b)
            yield from extend(labels, max(m, b))
            labels.pop()

    yield from extend([0], 0)


# ---------------------------------------------------------------------------
# modified ascent sequences


def modified_avoiders(p, n: int):
    """Yield (x, modified(x)) for the ascent sequences x of length n whose
    modified word avoids p.  Containment is tested on the modified word,
    which need not itself be an ascent sequence."""
    p = normalize_pattern(p)
    for x in generate_ascent_sequences(n):
        w = bijections.modify(x)
        if not contains(w, p):
            yield x, w


def count_modified_avoiders(p, n: int, check=None) -> int:
    total = 0
    for _ in modified_avoiders(p, n):
        if check is not None:
            check()
        total += 1
    return total


# ---------------------------------------------------------------------------
# statistic distributions


def distribution(p, n: int, which: str) -> Counter:
    """Histogram of a statistic over the p-avoiding ascent sequences of
    length n."""
    hist: Counter = Counter()
    for x in avoiders(p, n):
        hist[stat(x, which)] += 1
    return hist


def _described_set(descriptor, n: int):
    try:
        kind, p = descriptor
    except (TypeError, ValueError):
        raise ValueError(f"unknown set descriptor {descriptor!r}") from None
    if kind == "avoiders":
        return avoiders(p, n)
    if kind == "perm-avoiders":
        return perm_avoiders(p, n)
    if kind == "modified-avoiders":
        return (w for _, w in modified_avoiders(p, n))
    raise ValueError(f"unknown set descriptor kind {kind!r}")


def joint_distribution(descriptor, n: int, s1: str, s2: str) -> Counter:
    """Joint histogram of two statistics over a described set.

    The descriptor is a pair ``(kind, pattern)`` with kind one of
    ``avoiders``, ``perm-avoiders`` or ``modified-avoiders``; statistics
    on the modified sets are evaluated on the modified words.
    """
    hist: Counter = Counter()
    for w in _described_set(descriptor, n):
        hist[(stat(w, s1), stat(w, s2))] += 1
    return hist
