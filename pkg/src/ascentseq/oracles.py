"""Closed-form reference counts, Wilf classification and conjecture checks.

Everything here is exact big-integer arithmetic.  The conjecture runners
compare brute-force enumeration against an independent oracle for each
length and report a per-length verdict; a failing length always carries a
concrete witness.  Nothing in this module extrapolates limits or proves
anything; it checks statements numerically at desk scale.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from math import comb

from .core import asc, fwd, normalize_pattern, word_str, zeros
from .enumeration import (CountSeries, avoiders, count_avoiders,
                          generate_set_partitions, joint_distribution,
                          modified_avoiders)

# ---------------------------------------------------------------------------
# closed forms


def catalan(n: int) -> int:
    """C_n = binom(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    """N(n, k) = binom(n, k) * binom(n, k - 1) / n for 1 <= k <= n.

    The Narayana numbers refine the Catalan numbers: summing a row gives
    C_n.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return comb(n, k) * comb(n, k - 1) // n


def half_power_formula(n: int) -> int:
    """(3^(n-1) + 1) / 2, the 102-avoider count at length n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return (3 ** (n - 1) + 1) // 2


def ternary_even_twos_count(n: int) -> int:
    """Number of ternary words of length n with an even number of 2s."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return (3 ** n + 1) // 2


def dyck_height5_count(n: int) -> int:
    """Dyck paths of semilength n and height at most 5, via the linear
    recurrence a(n) = 5a(n-1) - 6a(n-2) + a(n-3) seeded with 1, 2, 5."""
    if n < 1:
        raise ValueError("n must be at least 1")
    seeds = [1, 2, 5]
    if n <= 3:
        return seeds[n - 1]
    a3, a2, a1 = seeds
    for _ in range(n - 3):
        a3, a2, a1 = a2, a1, 5 * a1 - 6 * a2 + a3
    return a1


def binomial_transform_catalan(n: int) -> int:
    """Binomial transform of the Catalan numbers, offset so that the
    values start 1, 2, 5, 15, 51 at n = 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return sum(comb(n - 1, k) * catalan(k) for k in range(n))


def bell(n: int) -> int:
    """Number of set partitions of an n-element set, by the Bell triangle."""
    if n < 1:
        raise ValueError("n must be at least 1")
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[-1]


def stirling2(n: int, k: int) -> int:
    """Number of set partitions of an n-element set into k blocks."""
    if n < 0 or k < 0:
        raise ValueError("need nonnegative arguments")
    if k > n:
        return 0
    row = [1] + [0] * k
    for _ in range(n):
        row = [0] + [row[j - 1] + j * row[j] for j in range(1, k + 1)]
    return row[k]


# ---------------------------------------------------------------------------
# non-k-crossing set partitions


def _arcs(sp) -> list[tuple[int, int]]:
    return [(b[i], b[i + 1]) for b in sp for i in range(len(b) - 1)]


def _has_k_crossing(sp, k: int) -> bool:
    """k arcs mutually cross when their openers and closers interleave as
    a_1 < ... < a_k < b_1 < ... < b_k.  Arcs join consecutive elements of
    a block; pairwise-crossing neighborhoods are kept as bitmasks and a
    k-clique is searched among them."""
    arcs = sorted(_arcs(sp))
    m = len(arcs)
    if m < k:
        return False
    cross = [0] * m
    for i in range(m):
        a1, b1 = arcs[i]
        for j in range(i + 1, m):
            a2, b2 = arcs[j]
            if a1 < a2 < b1 < b2:
                cross[i] |= 1 << j
                cross[j] |= 1 << i

    def clique(candidates: int, need: int) -> bool:
        if need == 0:
            return True
        while candidates:
            low = candidates & -candidates
            candidates ^= low
            i = low.bit_length() - 1
            if clique(candidates & cross[i], need - 1):
                return True
        return False

    return clique((1 << m) - 1, k)


def non_k_crossing_partition_count(n: int, k: int) -> int:
    """Partitions of {1..n} whose arc diagram has no k mutually crossing
    arcs; k = 2 recovers the non-crossing partitions."""
    if n < 1 or k < 2:
        raise ValueError("need n >= 1 and k >= 2")
    return sum(1 for sp in generate_set_partitions(n)
               if not _has_k_crossing(sp, k))


# ---------------------------------------------------------------------------
# Wilf classification


@dataclass
class WilfReport:
    """Partition of a pattern set into classes with identical counting
    sequences on 1..n_max, plus the first separating length for every
    pair of distinct classes (keyed by class representatives)."""

    n_max: int
    classes: list[list[str]]
    series: dict[str, CountSeries]
    separations: dict[tuple[str, str], int] = field(default_factory=dict)


def _pattern_sort_key(label: str):
    return (len(label), label)


def wilf_classify(patterns, n_max: int, threads: int = 1,
                  check=None) -> WilfReport:
    """Group patterns by their avoider-count series on lengths 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    labels = []
    seen = set()
    for p in patterns:
        q = normalize_pattern(p if not isinstance(p, str) else
                              tuple(int(ch) for ch in p))
        label = word_str(q)
        if label not in seen:
            seen.add(label)
            labels.append(label)
    series = {label: count_avoiders(label_to_pattern(label), n_max,
                                    threads=threads, check=check)
              for label in labels}
    groups: dict[tuple, list[str]] = {}
    for label in labels:
        groups.setdefault(tuple(series[label].as_list()), []).append(label)
    classes = sorted((sorted(g, key=_pattern_sort_key) for g in groups.values()),
                     key=lambda g: _pattern_sort_key(g[0]))
    separations: dict[tuple[str, str], int] = {}
    for i, g1 in enumerate(classes):
        for g2 in classes[i + 1:]:
            a, b = g1[0], g2[0]
            va, vb = series[a].values, series[b].values
            n = next(m for m in range(1, n_max + 1) if va[m] != vb[m])
            separations[(a, b)] = n
    return WilfReport(n_max, classes, series, separations)


def label_to_pattern(label: str) -> tuple[int, ...]:
    return tuple(int(ch) for ch in label)


def all_patterns(max_len: int) -> list[str]:
    """All patterns of length 1..max_len (value sets must be initial
    segments of the nonnegative integers), as digit strings."""
    out = []
    for m in range(1, max_len + 1):
        for w in product(range(m), repeat=m):
            if sorted(set(w)) == list(range(len(set(w)))):
                out.append(word_str(w))
    return out


# ---------------------------------------------------------------------------
# growth rates


def growth_rate_estimates(cs: CountSeries) -> list[tuple[int, float]]:
    """Per-length root estimates (n, x_n^(1/n)); no limit is extrapolated."""
    out = []
    for n in sorted(cs.values):
        x = cs.values[n]
        if x <= 0:
            raise ValueError(f"count at n={n} is not positive")
        out.append((n, x ** (1.0 / n)))
    return out


# ---------------------------------------------------------------------------
# conjecture suite


@dataclass
class ConjectureVerdict:
    n: int
    holds: bool
    witness: str | None = None


@dataclass
class ConjectureResult:
    conjecture: str
    n_max: int
    verdicts: list[ConjectureVerdict]

    @property
    def holds(self) -> bool:
        return all(v.holds for v in self.verdicts)


DEFAULT_CONJECTURE_NMAX = {
    "bi-021": 10,
    "0012": 10,
    "210": 12,
    "0123": 11,
    "0021-wilf": 11,
    "0021-count": 11,
    "modi": 10,
}

MODIFIED_PATTERNS = ("101", "0101", "1021", "1102", "1120", "1210")


def _verdict_counts(name: str, n: int, got: int, want: int,
                    source: str) -> ConjectureVerdict:
    if got == want:
        return ConjectureVerdict(n, True)
    return ConjectureVerdict(
        n, False, f"{name}: got {got}, {source} gives {want}")


def _histogram_verdict(n, h1, h2, what) -> ConjectureVerdict:
    if h1 == h2:
        return ConjectureVerdict(n, True)
    keys = sorted(set(h1) | set(h2))
    diff = next(k for k in keys if h1.get(k, 0) != h2.get(k, 0))
    return ConjectureVerdict(
        n, False,
        f"{what} differ at key {diff}: {h1.get(diff, 0)} vs {h2.get(diff, 0)}")


def _run_bi_021(n_max: int, check) -> list[ConjectureVerdict]:
    out = []
    for n in range(1, n_max + 1):
        if check is not None:
            check()
        h1 = joint_distribution(("avoiders", (0, 2, 1)), n, "asc", "rlmin")
        h2 = joint_distribution(("perm-avoiders", (0, 2, 1)), n, "asc", "rlmin")
        out.append(_histogram_verdict(
            n, h1, h2, "(asc, rlmin) on 021-avoiders vs 132-avoiding perms"))
    return out


def _run_0012(n_max: int, check) -> list[ConjectureVerdict]:
    out = []
    for n in range(1, n_max + 1):
        if check is not None:
            check()
        words = list(avoiders((0, 0, 1, 2), n))
        v = _verdict_counts("|A_0012|", n, len(words), catalan(n), "Catalan")
        if not v.holds:
            out.append(v)
            continue
        h_fwd = Counter((asc(w), fwd(w)) for w in words)
        h_zeros = Counter((asc(w), zeros(w)) for w in words)
        h_perm = joint_distribution(("perm-avoiders", (0, 2, 1)), n,
                                    "asc", "rlmax")
        v = _histogram_verdict(n, h_fwd, h_perm,
                               "(asc, fwd) vs (asc, rlmax) on 132-avoiders")
        if v.holds:
            v = _histogram_verdict(n, h_fwd, h_zeros,
                                   "(asc, fwd) vs (asc, zeros)")
        if v.holds:
            h_asc = Counter()
            for (a, _), m in h_fwd.items():
                h_asc[a] += m
            want = {k - 1: narayana(n, k) for k in range(1, n + 1)}
            want = {k: v2 for k, v2 in want.items() if v2}
            v = _histogram_verdict(n, dict(h_asc), want,
                                   "asc distribution vs Narayana")
        out.append(v)
    return out


def _run_210(n_max: int, check) -> list[ConjectureVerdict]:
    series = count_avoiders((2, 1, 0), n_max, check=check)
    out = []
    for n in range(1, n_max + 1):
        if check is not None:
            check()
        want = non_k_crossing_partition_count(n, 3)
        out.append(_verdict_counts("|A_210|", n, series.values[n], want,
                                   "non-3-crossing partitions"))
    return out


def _run_0123(n_max: int, check) -> list[ConjectureVerdict]:
    series = count_avoiders((0, 1, 2, 3), n_max, check=check)
    return [_verdict_counts("|A_0123|", n, series.values[n],
                            dyck_height5_count(n), "height-5 Dyck recurrence")
            for n in range(1, n_max + 1)]


def _run_0021_wilf(n_max: int, check) -> list[ConjectureVerdict]:
    s1 = count_avoiders((0, 0, 2, 1), n_max, check=check)
    s2 = count_avoiders((1, 0, 1, 2), n_max, check=check)
    return [_verdict_counts("|A_0021|", n, s1.values[n], s2.values[n],
                            "|A_1012|") for n in range(1, n_max + 1)]


def _run_0021_count(n_max: int, check) -> list[ConjectureVerdict]:
    s1 = count_avoiders((0, 0, 2, 1), n_max, check=check)
    s2 = count_avoiders((1, 0, 1, 2), n_max, check=check)
    out = []
    for n in range(1, n_max + 1):
        want = binomial_transform_catalan(n)
        v = _verdict_counts("|A_0021|", n, s1.values[n], want,
                            "binomial transform of Catalan")
        if v.holds:
            v = _verdict_counts("|A_1012|", n, s2.values[n], want,
                                "binomial transform of Catalan")
        out.append(v)
    return out


def _run_modi(n_max: int, check) -> list[ConjectureVerdict]:
    out = []
    for n in range(1, n_max + 1):
        verdict = ConjectureVerdict(n, True)
        for label in MODIFIED_PATTERNS:
            if check is not None:
                check()
            hist = Counter()
            total = 0
            for x, _w in modified_avoiders(label_to_pattern(label), n):
                hist[asc(x)] += 1
                total += 1
            v = _verdict_counts(f"modified {label}-avoiders", n, total,
                                bell(n), "Bell")
            if v.holds:
                want = {k: stirling2(n, n - k) for k in range(n)
                        if stirling2(n, n - k)}
                v = _histogram_verdict(
                    n, dict(hist), want,
                    f"asc distribution on modified {label}-avoiders vs "
                    "blocks-reversed Stirling")
            if not v.holds:
                verdict = v
                break
        out.append(verdict)
    return out


_RUNNERS = {
    "bi-021": _run_bi_021,
    "0012": _run_0012,
    "210": _run_210,
    "0123": _run_0123,
    "0021-wilf": _run_0021_wilf,
    "0021-count": _run_0021_count,
    "modi": _run_modi,
}

CONJECTURE_IDS = tuple(_RUNNERS)


def run_conjecture(conjecture_id: str, n_max: int | None = None,
                   check=None) -> ConjectureResult:
    """Check one conjecture numerically for every length up to n_max.

    Valid ids: bi-021, 0012, 210, 0123, 0021-wilf, 0021-count, modi.
    Each id has a default n_max chosen so a run finishes in minutes.
    """
    try:
        runner = _RUNNERS[conjecture_id]
    except KeyError:
        raise ValueError(f"unknown conjecture id {conjecture_id!r}") from None
    if n_max is None:
        n_max = DEFAULT_CONJECTURE_NMAX[conjecture_id]
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    return ConjectureResult(conjecture_id, n_max, runner(n_max, check))
