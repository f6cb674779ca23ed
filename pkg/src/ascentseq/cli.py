"""Command-line front end.

Subcommands: count, list, dist, bijection, wilf, table, conjectures.
Output is deterministic (byte-identical across runs and thread settings)
in three formats: an aligned human table, CSV, or line-delimited JSON.
Exit codes: 0 success, 2 usage or domain errors, 3 budget refusals,
4 failed verifications (table mismatches, conjecture failures).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter

from .core import (STATISTICS, asc, des, is_pattern, normalize_pattern, stat,
                   word_str)
from .enumeration import (avoiders, count_avoiders, count_modified_avoiders,
                          modified_avoiders)
from .bijections import BIJECTIONS, partition_str, standardize_partition
from .fixtures import available_depth, expected_counts, table_patterns
from .oracles import (CONJECTURE_IDS, all_patterns, run_conjecture,
                      wilf_classify)

FORMAT_TAG = "ascentseq/1"
EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4


class BudgetExceeded(Exception):
    pass


class Budget:
    """Wall-clock guard; check() is cheap enough for inner loops."""

    def __init__(self, seconds: float):
        self.seconds = seconds
        self.deadline = time.monotonic() + seconds
        self.calls = 0

    def check(self):
        self.calls += 1
        if (self.calls & 0x3FF) == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"budget of {self.seconds:g}s exceeded")


# ---------------------------------------------------------------------------
# argument parsing helpers


def parse_n_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(text)
    if lo < 1 or hi < lo:
        raise ValueError(f"bad length range {text!r}")
    return lo, hi


def parse_cli_pattern(text: str) -> tuple[int, ...]:
    """Digit-string patterns only; non-normalized input is rejected."""
    if not text or not text.isdigit():
        raise ValueError(f"pattern must be a nonempty digit string: {text!r}")
    p = tuple(int(ch) for ch in text)
    if not is_pattern(p):
        suggestion = word_str(normalize_pattern(p))
        raise ValueError(
            f"pattern {text!r} is not in normal form; its values must be "
            f"0..k (did you mean {suggestion!r}?)")
    return p


def parse_word(text: str) -> tuple[int, ...]:
    if not text.isdigit() and text != "":
        raise ValueError(f"expected a digit string, got {text!r}")
    return tuple(int(ch) for ch in text)


def parse_partition(text: str):
    blocks = []
    for part in text.split("-"):
        if not part.isdigit():
            raise ValueError(f"bad partition block {part!r}")
        blocks.append(tuple(int(ch) for ch in part))
    return standardize_partition(blocks)


# ---------------------------------------------------------------------------
# output rendering


def emit(fmt: str, command: str, params: dict, columns: list[str],
         rows: list[dict], status: dict, out=None) -> None:
    out = out or sys.stdout
    if fmt == "jsonl":
        header = {"format": FORMAT_TAG, "command": command, **params}
        print(json.dumps(header, separators=(", ", ": ")), file=out)
        for row in rows:
            print(json.dumps({c: row[c] for c in columns},
                             separators=(", ", ": ")), file=out)
        print(json.dumps({"status": status}, separators=(", ", ": ")),
              file=out)
        return
    echo = " ".join(f"{k}={_plain(v)}" for k, v in params.items())
    print(f"# {FORMAT_TAG} {command} {echo}".rstrip(), file=out)
    if fmt == "csv":
        print(",".join(columns), file=out)
        for row in rows:
            print(",".join(_plain(row[c]) for c in columns), file=out)
    else:
        cells = [[_plain(row[c]) for c in columns] for row in rows]
        widths = [max([len(c)] + [len(r[i]) for r in cells])
                  for i, c in enumerate(columns)]
        print("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip(),
              file=out)
        for r in cells:
            print("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip(),
                  file=out)
    if not status.get("complete", True):
        print(f"# incomplete: {status['reason']}", file=out)


def _plain(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(_plain(x) for x in v)
    return str(v)


# ---------------------------------------------------------------------------
# subcommands


def cmd_count(args) -> int:
    p = parse_cli_pattern(args.pattern)
    lo, hi = parse_n_range(args.n)
    budget = Budget(args.budget_seconds)
    rows, status = [], {"complete": True}
    try:
        for n in range(lo, hi + 1):
            if args.modified:
                c = count_modified_avoiders(p, n, check=budget.check)
            else:
                c = count_avoiders(p, n, threads=args.threads,
                                   check=budget.check).values[n]
            rows.append({"n": n, "count": c})
    except BudgetExceeded as exc:
        status = {"complete": False, "reason": str(exc)}
    emit(args.format, "count",
         {"pattern": args.pattern, "n": args.n, "modified": args.modified,
          "threads": args.threads},
         ["n", "count"], rows, status)
    return EXIT_BUDGET if not status["complete"] else EXIT_OK


def cmd_list(args) -> int:
    p = parse_cli_pattern(args.pattern)
    lo, hi = parse_n_range(args.n)
    budget = Budget(args.budget_seconds)
    rows, status = [], {"complete": True}
    try:
        for n in range(lo, hi + 1):
            for w in avoiders(p, n):
                budget.check()
                rows.append({"n": n, "sequence": word_str(w)})
    except BudgetExceeded as exc:
        status = {"complete": False, "reason": str(exc)}
    emit(args.format, "list", {"pattern": args.pattern, "n": args.n},
         ["n", "sequence"], rows, status)
    return EXIT_BUDGET if not status["complete"] else EXIT_OK


def cmd_dist(args) -> int:
    p = parse_cli_pattern(args.pattern)
    lo, hi = parse_n_range(args.n)
    stats = [s.strip() for s in args.stats.split(",") if s.strip()]
    if not 1 <= len(stats) <= 2:
        raise ValueError("--stats takes one or two statistic names")
    for s in stats:
        if s not in STATISTICS:
            raise ValueError(f"unknown statistic {s!r}; "
                             f"choose from {sorted(STATISTICS)}")
    budget = Budget(args.budget_seconds)
    rows, status = [], {"complete": True}
    kind = "modified-avoiders" if args.modified else "avoiders"
    try:
        for n in range(lo, hi + 1):
            hist: Counter = Counter()
            if args.modified:
                words = (w for _, w in modified_avoiders(p, n))
            else:
                words = avoiders(p, n)
            for w in words:
                budget.check()
                hist[tuple(stat(w, s) for s in stats)] += 1
            for key in sorted(hist):
                row = {"n": n}
                row.update({s: key[i] for i, s in enumerate(stats)})
                row["count"] = hist[key]
                rows.append(row)
    except BudgetExceeded as exc:
        status = {"complete": False, "reason": str(exc)}
    emit(args.format, "dist",
         {"pattern": args.pattern, "n": args.n, "stats": ",".join(stats),
          "set": kind},
         ["n", *stats, "count"], rows, status)
    return EXIT_BUDGET if not status["complete"] else EXIT_OK


_PARTITION_INPUT = {"rgf-encode"}


def _bijection_stats(name: str, src, dst) -> dict:
    if name == "phi":
        return {"asc_in": asc(src), "des_out": des(dst)}
    if name in ("seq102-to-ternary", "ternary-to-seq102"):
        t = dst if name.endswith("ternary") else src
        return {"twos": list(t).count(2)}
    if name in ("rgf-encode", "rgf-decode"):
        sp = src if name == "rgf-encode" else dst
        return {"blocks": len(sp)}
    if name == "perm231-to-ncpartition":
        return {"asc_in": asc(src), "blocks": len(dst)}
    return {"asc_in": asc(src), "asc_out": asc(dst)}


def cmd_bijection(args) -> int:
    try:
        func = BIJECTIONS[args.name]
    except KeyError:
        raise ValueError(f"unknown bijection {args.name!r}; choose from "
                         f"{sorted(BIJECTIONS)}") from None
    if args.name in _PARTITION_INPUT:
        src = parse_partition(args.input)
    else:
        src = parse_word(args.input)
    dst = func(src)
    render = partition_str if isinstance(dst[0] if dst else 0, tuple) else word_str
    src_text = partition_str(src) if args.name in _PARTITION_INPUT else word_str(src)
    row = {"name": args.name, "input": src_text, "output": render(dst)}
    row.update(_bijection_stats(args.name, src, dst))
    emit(args.format, "bijection", {"name": args.name, "input": src_text},
         list(row), [row], {"complete": True})
    return EXIT_OK


def cmd_wilf(args) -> int:
    if args.pattern:
        labels = [word_str(parse_cli_pattern(t.strip()))
                  for t in args.pattern.split(",")]
    else:
        labels = all_patterns(4)
    lo, hi = parse_n_range(args.n)
    budget = Budget(args.budget_seconds)
    try:
        report = wilf_classify(labels, hi, threads=args.threads,
                               check=budget.check)
    except BudgetExceeded as exc:
        emit(args.format, "wilf", {"n": args.n}, ["class", "patterns"], [],
             {"complete": False, "reason": str(exc)})
        return EXIT_BUDGET
    rows = [{"class": i + 1, "size": len(g), "patterns": " ".join(g)}
            for i, g in enumerate(report.classes)]
    if args.format == "jsonl":
        rows += [{"class": "", "size": "",
                  "patterns": f"separation {a} {b} n={n}"}
                 for (a, b), n in sorted(report.separations.items())]
    emit(args.format, "wilf",
         {"n": args.n, "patterns": len(labels)},
         ["class", "size", "patterns"], rows, {"complete": True})
    return EXIT_OK


def cmd_table(args) -> int:
    budget = Budget(args.budget_seconds)
    rows, status = [], {"complete": True}
    mismatched = False
    try:
        for label in table_patterns():
            p = tuple(int(ch) for ch in label)
            n_max = available_depth(label, args.nmax)
            want = expected_counts(label, n_max)
            got = count_avoiders(p, n_max, threads=args.threads,
                                 check=budget.check).values
            diffs = [n for n in sorted(want) if n <= n_max
                     and got[n] != want[n]]
            if diffs:
                mismatched = True
                n = diffs[0]
                verdict = f"mismatch at n={n}: got {got[n]}, want {want[n]}"
            else:
                verdict = "ok"
            rows.append({"pattern": label, "n_max": n_max, "status": verdict})
    except BudgetExceeded as exc:
        status = {"complete": False, "reason": str(exc)}
    emit(args.format, "table", {"nmax": args.nmax},
         ["pattern", "n_max", "status"], rows, status)
    if not status["complete"]:
        return EXIT_BUDGET
    return EXIT_VERIFY if mismatched else EXIT_OK


def cmd_conjectures(args) -> int:
    ids = [args.name] if args.name else list(CONJECTURE_IDS)
    for cid in ids:
        if cid not in CONJECTURE_IDS:
            raise ValueError(f"unknown conjecture {cid!r}; choose from "
                             f"{list(CONJECTURE_IDS)}")
    n_max = parse_n_range(args.n)[1] if args.n else None
    budget = Budget(args.budget_seconds)
    rows, status = [], {"complete": True}
    failed = False
    try:
        for cid in ids:
            res = run_conjecture(cid, n_max, check=budget.check)
            bad = [v for v in res.verdicts if not v.holds]
            failed = failed or bool(bad)
            rows.append({
                "conjecture": cid,
                "n_max": res.n_max,
                "verdict": "holds" if not bad else "fails",
                "detail": "" if not bad else f"n={bad[0].n}: {bad[0].witness}",
            })
    except BudgetExceeded as exc:
        status = {"complete": False, "reason": str(exc)}
    emit(args.format, "conjectures", {"n": args.n or "default"},
         ["conjecture", "n_max", "verdict", "detail"], rows, status)
    if not status["complete"]:
        return EXIT_BUDGET
    return EXIT_VERIFY if failed else EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ascentseq",
        description="Pattern avoidance in ascent sequences: counting, "
                    "listing, distributions, bijections and verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, threads=False):
        sp.add_argument("--format", choices=("table", "csv", "jsonl"),
                        default="table", help="output format")
        sp.add_argument("--budget-seconds", type=float, default=300.0,
                        help="abort enumeration after this many seconds")
        if threads:
            sp.add_argument("--threads", type=int, default=1,
                            help="prefix-split workers for counting")

    sp = sub.add_parser("count", help="count avoiders by length")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--n", required=True, help="length or range a..b")
    sp.add_argument("--modified", action="store_true",
                    help="count sequences whose modified word avoids the "
                         "pattern")
    common(sp, threads=True)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("list", help="list avoiders lexicographically")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--n", required=True)
    common(sp)
    sp.set_defaults(func=cmd_list)

    sp = sub.add_parser("dist", help="statistic distribution over avoiders")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--n", required=True)
    sp.add_argument("--stats", required=True, help="one or two of "
                    "asc,des,lrmax,lrmin,rlmax,rlmin,zeros,fwd")
    sp.add_argument("--modified", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_dist)

    sp = sub.add_parser("bijection", help="apply a named map to one input")
    sp.add_argument("--name", required=True)
    sp.add_argument("--input", required=True)
    common(sp)
    sp.set_defaults(func=cmd_bijection)

    sp = sub.add_parser("wilf", help="group patterns by counting sequence")
    sp.add_argument("--pattern", default=None,
                    help="comma-separated patterns (default: all of length "
                         "at most 4)")
    sp.add_argument("--n", required=True, help="classify on lengths 1..n")
    common(sp, threads=True)
    sp.set_defaults(func=cmd_wilf)

    sp = sub.add_parser("table", help="regenerate the reference counting "
                                      "table and diff it")
    sp.add_argument("--nmax", type=int, required=True)
    common(sp, threads=True)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("conjectures", help="run the conjecture suite")
    sp.add_argument("--name", default=None,
                    help=f"one of {', '.join(CONJECTURE_IDS)}")
    sp.add_argument("--n", default=None, help="override the default range")
    common(sp)
    sp.set_defaults(func=cmd_conjectures)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
