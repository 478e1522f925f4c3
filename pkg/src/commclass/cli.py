"""Command-line front end.

Subcommands: ``count``, ``enumerate``, ``list``, ``render``, ``verify``,
``oracle``.  Machine output goes to stdout (JSON by default for reports,
see ``--format``), diagnostics to stderr.  Exit codes are a stable
contract: 0 success, 2 verification mismatch, 1 usage or runtime error.

The shell itself is single-threaded; ``--threads`` (default from
COMMCLASS_THREADS) is passed through to the engine, and results are
identical for every thread count.
"""

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from types import MappingProxyType

from .core import (
    Permutation,
    Word,
    longest_element,
    permutation_from_string,
    permutation_to_string,
    word_from_string,
    word_to_string,
)
from .engine import (
    DEFAULT_ORACLE_BUDGET,
    TimeLimitExceeded,
    count_commutation_classes,
    enumerate_classes,
    iter_canonical_words,
    partition_reduced_words,
)
from .reduced import (
    count_reduced_words,
    count_reduced_words_longest,
    enumerate_reduced_words,
)
from .representations import heap_of_word, rhombic_tiling, wiring_diagram
from .svgrender import geometry_json, render_svg

__all__ = [
    "KNOWN_CLASS_COUNTS",
    "RANK4_CLASS_SIZES",
    "RunReport",
    "console",
    "dump_json",
    "main",
]

# Published class counts for the order-reversing permutation, ranks
# 1..10 (OEIS A006245).  Decimal strings: the later values overflow the
# 53-bit float-safe range of common JSON consumers.
KNOWN_CLASS_COUNTS: MappingProxyType = MappingProxyType({
    1: "1",
    2: "1",
    3: "2",
    4: "8",
    5: "62",
    6: "908",
    7: "24698",
    8: "1232944",
    9: "112018190",
    10: "18410581880",
})

# Published class sizes at rank 4: the 16 reduced words split 8 ways.
RANK4_CLASS_SIZES = (1, 1, 1, 1, 2, 2, 4, 4)


def dump_json(data) -> str:
    """Canonical one-line JSON: fixed field order, no added whitespace.

    Parsing and re-dumping the output is byte-identical, which tests
    rely on.
    """
    return json.dumps(data, separators=(",", ":"))


@dataclass
class RunReport:
    """What a counting command did, machine-readable."""

    command: str
    rank: int
    result: str
    elapsed_seconds: float
    threads: int
    verification: str  # "match" | "mismatch" | "unknown-rank"
    authoritative: bool = True

    def to_json(self) -> str:
        return dump_json({
            "command": self.command,
            "rank": self.rank,
            "result": self.result,
            "elapsed_seconds": self.elapsed_seconds,
            "threads": self.threads,
            "verification": self.verification,
            "authoritative": self.authoritative,
        })

    def to_text(self) -> str:
        lines = [
            f"command:      {self.command}",
            f"rank:         {self.rank}",
            f"result:       {self.result}",
            f"elapsed:      {self.elapsed_seconds:.3f}s",
            f"threads:      {self.threads}",
            f"verification: {self.verification}",
        ]
        if not self.authoritative:
            lines.append("authoritative: false (aborted by time limit)")
        return "\n".join(lines)


class _Parser(argparse.ArgumentParser):
    # Usage errors must exit 1; argparse's default is 2, which this CLI
    # reserves for verification mismatches.
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _default_threads() -> int:
    raw = os.environ.get("COMMCLASS_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="commclass",
        description="Count, enumerate, and draw commutation classes of "
                    "reduced words in the symmetric group.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    threads_default = _default_threads()

    def add_target(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, default=None,
                       help="rank; the target is the order-reversing permutation n..1")
        p.add_argument("--perm", default=None,
                       help='explicit one-line permutation, e.g. "[4,3,2,1]"')

    p_count = sub.add_parser("count", help="count reduced words or commutation classes")
    p_count.add_argument("kind", choices=("classes", "reduced"))
    add_target(p_count)
    p_count.add_argument("--threads", type=int, default=threads_default,
                         help="worker threads for the class count "
                              f"(default {threads_default}, from COMMCLASS_THREADS)")
    p_count.add_argument("--time-limit", type=float, default=None,
                         help="abort the class count after this many seconds "
                              "(exit 1, partial non-authoritative report)")
    p_count.add_argument("--format", choices=("json", "text"), default="json")

    p_enum = sub.add_parser("enumerate", help="stream reduced words or classes")
    p_enum.add_argument("kind", choices=("reduced", "classes"))
    add_target(p_enum)
    p_enum.add_argument("--members", action="store_true",
                        help="attach full membership to each class record")
    p_enum.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_enum.add_argument("--budget", type=int, default=DEFAULT_ORACLE_BUDGET,
                        help="refuse --members beyond this many reduced words")

    p_list = sub.add_parser("list", help="list commutation classes with sizes")
    add_target(p_list)
    p_list.add_argument("--members", action="store_true",
                        help="attach full membership to each class record")
    p_list.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_list.add_argument("--budget", type=int, default=DEFAULT_ORACLE_BUDGET,
                        help="refuse --members beyond this many reduced words")

    p_render = sub.add_parser("render", help="draw a heap, wiring diagram, or tiling")
    p_render.add_argument("--kind", choices=("heap", "network", "tiling"), required=True)
    p_render.add_argument("--word", default=None,
                          help="the word to draw, digits (321323) or comma form (10,2,1)")
    p_render.add_argument("--all", action="store_true",
                          help="draw every class of the rank-n order-reversing permutation")
    p_render.add_argument("--n", type=int, default=None,
                          help="rank (inferred from --word when omitted)")
    p_render.add_argument("--outdir", default=None,
                          help="directory for batch output, one file per class")
    p_render.add_argument("-o", "--output", default=None,
                          help="output file for single-word mode (default stdout)")
    p_render.add_argument("--coords", action="store_true",
                          help="emit JSON geometry instead of SVG")
    p_render.add_argument("--offset", type=float, default=None,
                          help="tiling angle offset in radians (default pi/(2n))")

    p_verify = sub.add_parser("verify", help="check counts against published values and the oracle")
    p_verify.add_argument("--n-max", type=int, default=5,
                          help="check ranks 1..n-max (default 5)")
    p_verify.add_argument("--threads", type=int, default=threads_default)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--budget", type=int, default=DEFAULT_ORACLE_BUDGET,
                          help="oracle stage budget in reduced words")

    p_oracle = sub.add_parser("oracle", help="brute-force cross-checks")
    p_oracle.add_argument("action", choices=("verify",))
    add_target(p_oracle)
    p_oracle.add_argument("--budget", type=int, default=DEFAULT_ORACLE_BUDGET)
    p_oracle.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _resolve_target(args) -> Permutation:
    if args.perm is not None:
        return permutation_from_string(args.perm)
    if args.n is not None:
        if args.n < 1:
            raise ValueError(f"rank must be at least 1, got {args.n}")
        return longest_element(args.n)
    raise ValueError("one of --n or --perm is required")


def _is_longest(w: Permutation) -> bool:
    return w.images == tuple(range(w.rank, 0, -1))


# --- count ------------------------------------------------------------------

def _cmd_count(args, command_echo: str) -> int:
    target = _resolve_target(args)
    threads = max(1, args.threads)
    started = time.monotonic()

    if args.kind == "reduced":
        if _is_longest(target):
            count = count_reduced_words_longest(target.rank)
        else:
            count = count_reduced_words(target)
        # No embedded ground truth for reduced counts.
        verification = "unknown-rank"
        report = RunReport(command_echo, target.rank, str(count),
                           time.monotonic() - started, threads, verification)
        print(report.to_json() if args.format == "json" else report.to_text())
        return 0

    try:
        count = count_commutation_classes(target, threads=threads,
                                          time_limit=args.time_limit)
    except TimeLimitExceeded as exc:
        report = RunReport(command_echo, target.rank, str(exc.partial_count),
                           time.monotonic() - started, threads,
                           "unknown-rank", authoritative=False)
        print(report.to_json() if args.format == "json" else report.to_text())
        print(f"commclass: {exc}", file=sys.stderr)
        return 1

    if _is_longest(target) and target.rank in KNOWN_CLASS_COUNTS:
        expected = KNOWN_CLASS_COUNTS[target.rank]
        verification = "match" if str(count) == expected else "mismatch"
    else:
        verification = "unknown-rank"
    report = RunReport(command_echo, target.rank, str(count),
                       time.monotonic() - started, threads, verification)
    print(report.to_json() if args.format == "json" else report.to_text())
    if verification == "mismatch":
        print(f"commclass: count {count} does not match the published value "
              f"{KNOWN_CLASS_COUNTS[target.rank]} at rank {target.rank}",
              file=sys.stderr)
        return 2
    return 0


# --- enumerate / list -------------------------------------------------------

def _class_records(args):
    target = _resolve_target(args)
    if args.members:
        word_count = count_reduced_words(target)
        if word_count > args.budget:
            raise ValueError(
                f"--members needs all {word_count} reduced words, over the "
                f"budget of {args.budget}; raise --budget to force"
            )
    return enumerate_classes(target, members=args.members)


def _emit_classes(args) -> int:
    records = _class_records(args)
    if args.format == "json":
        payload = []
        for record in records:
            entry = {
                "canonical": word_to_string(record.canonical),
                "size": str(record.size),
            }
            if record.members is not None:
                entry["members"] = [word_to_string(m) for m in record.members]
            payload.append(entry)
        print(dump_json(payload))
        return 0
    if args.format == "csv":
        print("canonical,size,members" if args.members else "canonical,size")
        for record in records:
            row = f"{word_to_string(record.canonical)},{record.size}"
            if record.members is not None:
                row += "," + " ".join(word_to_string(m) for m in record.members)
            print(row)
        return 0
    for record in records:
        row = f"{word_to_string(record.canonical)}\t{record.size}"
        if record.members is not None:
            row += "\t" + " ".join(word_to_string(m) for m in record.members)
        print(row)
    return 0


def _cmd_enumerate(args) -> int:
    if args.kind == "classes":
        return _emit_classes(args)
    target = _resolve_target(args)
    if args.format == "json":
        words = [word_to_string(word) for word in enumerate_reduced_words(target)]
        print(dump_json(words))
        return 0
    for word in enumerate_reduced_words(target):
        print(word_to_string(word))
    return 0


# --- render -----------------------------------------------------------------

def _render_object(kind: str, word: Word, offset: float | None):
    if kind == "heap":
        return heap_of_word(word)
    if kind == "network":
        return wiring_diagram(word)
    return rhombic_tiling(word, offset)


def _render_payload(args, word: Word) -> str:
    obj = _render_object(args.kind, word, args.offset)
    if args.coords:
        return dump_json(geometry_json(obj)) + "\n"
    return render_svg(obj)


def _cmd_render(args) -> int:
    if args.all:
        if args.n is None:
            raise ValueError("--all requires --n")
        if args.outdir is None:
            raise ValueError("--all requires --outdir")
        os.makedirs(args.outdir, exist_ok=True)
        suffix = ".json" if args.coords else ".svg"
        written = 0
        for canonical in iter_canonical_words(longest_element(args.n)):
            name = word_to_string(canonical) or "empty"
            path = os.path.join(args.outdir, name + suffix)
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(_render_payload(args, canonical))
            written += 1
        print(f"commclass: wrote {written} files to {args.outdir}", file=sys.stderr)
        return 0

    if args.word is None:
        raise ValueError("one of --word or --all is required")
    rank = args.n
    if rank is None:
        probe = [int(p) for p in args.word.split(",")] if "," in args.word \
            else [int(ch) for ch in args.word.strip()]
        if not probe:
            raise ValueError("empty --word needs an explicit --n")
        rank = max(probe) + 1
    word = word_from_string(args.word, rank)
    payload = _render_payload(args, word)
    if args.output is None:
        sys.stdout.write(payload)
    else:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(payload)
    return 0


# --- verify -----------------------------------------------------------------

def _cmd_verify(args, command_echo: str) -> int:
    threads = max(1, args.threads)
    started = time.monotonic()
    rows = []
    all_ok = True
    last_result = "0"
    for n in range(1, args.n_max + 1):
        target = longest_element(n)
        count = count_commutation_classes(target, threads=threads)
        last_result = str(count)
        row = {"rank": n, "classes": str(count)}
        ok = True
        notes = []

        if n in KNOWN_CLASS_COUNTS:
            expected = KNOWN_CLASS_COUNTS[n]
            row["reference"] = expected
            if str(count) != expected:
                ok = False
                notes.append(f"reference={expected}")

        if n <= 6 and count_reduced_words_longest(n) <= args.budget:
            classes = partition_reduced_words(target, budget=args.budget)
            row["oracle"] = str(len(classes))
            if len(classes) != count:
                ok = False
                notes.append(f"oracle={len(classes)}")
            if n == 4:
                sizes = tuple(sorted(len(c) for c in classes))
                row["sizes"] = list(sizes)
                if sizes != RANK4_CLASS_SIZES:
                    ok = False
                    notes.append(f"sizes={sizes}")

        row["ok"] = ok
        rows.append(row)
        all_ok = all_ok and ok
        if args.format == "text":
            detail = " ".join(
                f"{key}={row[key]}" for key in ("classes", "reference", "oracle")
                if key in row
            )
            if "sizes" in row:
                detail += " sizes=" + ",".join(str(s) for s in row["sizes"])
            status = "PASS" if ok else "FAIL"
            suffix = f"  ({'; '.join(notes)})" if notes else ""
            print(f"{status} rank {n}: {detail}{suffix}")

    elapsed = time.monotonic() - started
    if args.format == "json":
        print(dump_json({
            "command": command_echo,
            "rank": args.n_max,
            "result": last_result,
            "elapsed_seconds": elapsed,
            "threads": threads,
            "verification": "match" if all_ok else "mismatch",
            "ranks": rows,
        }))
    else:
        status = "all checks passed" if all_ok else "FAILURES above"
        print(f"verify: ranks 1..{args.n_max}, {status} ({elapsed:.3f}s)")
    return 0 if all_ok else 2


# --- oracle -----------------------------------------------------------------

def _cmd_oracle(args) -> int:
    target = _resolve_target(args)
    started = time.monotonic()
    classes = partition_reduced_words(target, budget=args.budget)
    dfs_words = list(iter_canonical_words(target))
    brute_canonicals = sorted(min(c, key=lambda w: w.letters).letters for c in classes)
    dfs_canonicals = sorted(w.letters for w in dfs_words)
    ok = brute_canonicals == dfs_canonicals
    elapsed = time.monotonic() - started
    if args.format == "json":
        print(dump_json({
            "target": permutation_to_string(target),
            "rank": target.rank,
            "brute_classes": str(len(classes)),
            "dfs_classes": str(len(dfs_words)),
            "canonicals_agree": ok,
            "elapsed_seconds": elapsed,
        }))
    else:
        status = "PASS" if ok else "FAIL"
        print(f"{status} oracle {permutation_to_string(target)}: "
              f"brute={len(classes)} dfs={len(dfs_words)} "
              f"canonicals_agree={'yes' if ok else 'no'} ({elapsed:.3f}s)")
    return 0 if ok else 2


# --- entry points -----------------------------------------------------------

def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    args = parser.parse_args(argv)
    command_echo = " ".join(argv)
    try:
        if args.command == "count":
            return _cmd_count(args, command_echo)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "list":
            args.kind = "classes"
            return _emit_classes(args)
        if args.command == "render":
            return _cmd_render(args)
        if args.command == "verify":
            return _cmd_verify(args, command_echo)
        if args.command == "oracle":
            return _cmd_oracle(args)
        parser.error(f"unknown command {args.command!r}")
    except BrokenPipeError:
        return 1
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"commclass: error: {exc}", file=sys.stderr)
        return 1
    return 1


def console() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console()
