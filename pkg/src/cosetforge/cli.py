"""``cosetforge`` command-line interface."""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import oracle
from .codes import BUILTIN_CODES, builtin_code
from .cosetleaders import (
    compute_coset_table,
    covering_radius,
    newton_radius,
    unique_leader_split,
    wdcl,
)
from .decoder import decode
from .errors import CosetForgeError
from .gf2 import LinearCode, Word, make_code, read_matrix
from .leadercodewords import compute_leader_codewords
from .ordering import TieBreak, make_order

SCHEMA_VERSION = 1
COMMANDS = ("coset-leaders", "leader-codewords", "decode", "stats", "oracle-check")
SUITES = ("leaders", "testset", "zeroneighbours")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


@dataclass
class RunConfig:
    command: str
    source: str
    code: LinearCode = field(repr=False)
    order: str = "degrevlex"
    output: str = "text"
    max_cosets: int = 1 << 24
    max_oracle_n: int = oracle.MAX_VORONOI_N
    seed: int = 0
    word: Word | None = None
    mode: str = "table"
    all_nearest: bool = False
    l1_only: bool = False
    stats: bool = False
    suite: str = "all"
    dump_matrix: bool = False


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cosetforge",
        description="Coset leaders, leader codewords and complete decoding of binary linear codes.",
        epilog="MATRIX is a parity-check matrix file or builtin:NAME "
        f"(NAME in {', '.join(BUILTIN_CODES)}). "
        "'cosetforge builtin NAME COMMAND ...' is accepted as well.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("matrix", help="parity-check matrix file or builtin:NAME")
    common.add_argument("--order", choices=[t.value for t in TieBreak], default="degrevlex")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--max-cosets", type=_positive, default=1 << 24)
    common.add_argument("--dump-matrix", action="store_true", help="print the reduced parity-check matrix and exit")

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("coset-leaders", parents=[common], help="list every coset with its leaders")
    p.add_argument("--stats", action="store_true", help="append code statistics")

    p = sub.add_parser("leader-codewords", parents=[common], help="compute L(C) and L1(C)")
    p.add_argument("--l1-only", action="store_true")

    p = sub.add_parser("decode", parents=[common], help="decode one received word")
    p.add_argument("--word", required=True, help="received word as a 0/1 string, coordinate 1 first")
    p.add_argument("--mode", choices=["table", "testset"], default="table")
    p.add_argument("--all-nearest", action="store_true", help="list every nearest error pattern")

    sub.add_parser("stats", parents=[common], help="weight distribution, radii and test-set sizes")

    p = sub.add_parser("oracle-check", parents=[common], help="compare against brute force")
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p.add_argument("--max-oracle-n", type=_positive, default=oracle.MAX_VORONOI_N)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _rewrite_builtin(argv: list[str], parser: argparse.ArgumentParser) -> list[str]:
    # builtin NAME [COMMAND [flags...]]  ->  COMMAND builtin:NAME [flags...]
    if not argv or argv[0] != "builtin":
        return argv
    if len(argv) < 2:
        parser.error("builtin needs a code name")
    name, rest = argv[1], argv[2:]
    if not rest or rest[0].startswith("-"):
        rest = ["stats", *rest]
    return [rest[0], f"builtin:{name}", *rest[1:]]


def load_code(source: str) -> LinearCode:
    if source.startswith("builtin:"):
        return builtin_code(source.split(":", 1)[1])
    return make_code(read_matrix(source))


def parse_args(argv: Sequence[str] | None = None) -> RunConfig:
    """Parse and validate; invalid input exits with status 2."""
    parser = _build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(_rewrite_builtin(argv, parser))
    try:
        code = load_code(args.matrix)
    except FileNotFoundError:
        parser.error(f"matrix file not found: {args.matrix}")
    except (CosetForgeError, ValueError) as exc:
        parser.error(str(exc))
    word = None
    if args.command == "decode":
        try:
            word = Word.from_string(args.word)
        except ValueError as exc:
            parser.error(str(exc))
        if word.length != code.n:
            parser.error(f"--word has length {word.length}, code length is {code.n}")
    return RunConfig(
        command=args.command,
        source=args.matrix,
        code=code,
        order=args.order,
        output="json" if args.json else "text",
        max_cosets=args.max_cosets,
        max_oracle_n=getattr(args, "max_oracle_n", oracle.MAX_VORONOI_N),
        seed=getattr(args, "seed", 0),
        word=word,
        mode=getattr(args, "mode", "table"),
        all_nearest=getattr(args, "all_nearest", False),
        l1_only=getattr(args, "l1_only", False),
        stats=getattr(args, "stats", False),
        suite=getattr(args, "suite", "all"),
        dump_matrix=args.dump_matrix,
    )


def _stats(table, lset=None) -> dict[str, Any]:
    code = table.code
    low, high = unique_leader_split(table)
    rho = covering_radius(table)
    out = {
        "n": code.n,
        "k": code.k,
        "d": code.min_distance,
        "t": code.t,
        "num_cosets": len(table),
        "coset_leaders": table.leader_count,
        "wdcl": wdcl(table),
        "covering_radius": rho,
        "newton_radius": newton_radius(table),
        "unique_leader_cosets": low + high,
        "unique_within_t": low,
        "unique_beyond_t": high,
        "iterations": table.iterations,
        "iteration_bound": code.n * table.leader_count,
        "perfect": rho == code.t,
    }
    if lset is not None:
        out["leader_codewords"] = len(lset)
        out["l1"] = len(lset.l1_words)
    return out


def _coset_leaders(config: RunConfig, order) -> dict[str, Any]:
    table, _ = compute_coset_table(config.code, order, max_cosets=config.max_cosets)
    report = _stats(table)
    report["cosets"] = [
        {
            "syndrome": str(r.syndrome),
            "weight": r.weight,
            "representative": str(r.representative),
            "leaders": [str(w) for w in r.leaders],
        }
        for r in table.records
    ]
    return report


def _leader_codewords(config: RunConfig, order) -> dict[str, Any]:
    _, lset = compute_leader_codewords(config.code, order, max_cosets=config.max_cosets)
    return {
        "codewords": [
            {
                "word": str(e.word),
                "weight": e.weight,
                "in_l1": e.in_l1,
                "witness": {"n1": str(e.n1), "n2": str(e.n2), "i": e.i},
            }
            for e in lset
            if e.in_l1 or not config.l1_only
        ],
        "counts": {"L": len(lset), "L1": len(lset.l1_words)},
    }


def _decode(config: RunConfig, order) -> dict[str, Any]:
    table, lset = compute_leader_codewords(config.code, order, max_cosets=config.max_cosets)
    res = decode(
        config.code,
        config.word,
        table=table,
        leader_codewords=lset,
        mode=config.mode,
        all_nearest=config.all_nearest,
    )
    out = {
        "mode": config.mode,
        "received": str(res.received),
        "codeword": str(res.codeword),
        "error": str(res.error),
        "distance": res.distance,
        "unique": res.unique,
    }
    if res.all_nearest is not None:
        out["all_nearest"] = [str(w) for w in order.sorted(res.all_nearest)]
    return out


def _oracle_check(config: RunConfig, order) -> dict[str, Any]:
    code = config.code
    suites = SUITES if config.suite == "all" else (config.suite,)
    if code.n > config.max_oracle_n:
        raise CosetForgeError(f"n = {code.n} exceeds --max-oracle-n {config.max_oracle_n}")
    table, lset = compute_leader_codewords(code, order, max_cosets=config.max_cosets)
    results: dict[str, dict[str, Any]] = {}

    if "leaders" in suites:
        brute = oracle.brute_coset_leaders(code)
        mine = {r.syndrome: frozenset(r.leaders) for r in table.records}
        bad = next((s for s in brute if mine.get(s) != brute[s]), None)
        results["leaders"] = {
            "status": "PASS" if bad is None and len(mine) == len(brute) else "FAIL",
            "counterexample": None if bad is None else {
                "syndrome": str(bad),
                "expected": sorted(str(w) for w in brute[bad]),
                "got": sorted(str(w) for w in mine.get(bad, ())),
            },
        }
    if "testset" in suites:
        brute_l = oracle.brute_leader_codewords(code)
        diff = sorted(str(w) for w in brute_l ^ lset.words)
        hole = oracle.find_test_set_counterexample(code, lset.l1_words)
        misdecoded = _sampled_decode_mismatch(code, table, lset, config.seed)
        ok = not diff and hole is None and misdecoded is None
        results["testset"] = {
            "status": "PASS" if ok else "FAIL",
            "counterexample": None if ok else {
                "symmetric_difference": diff[:1],
                "unimproved_word": None if hole is None else str(hole),
                "misdecoded_word": misdecoded,
            },
        }
    if "zeroneighbours" in suites:
        if code.n > oracle.MAX_GREEDY_N:
            results["zeroneighbours"] = {"status": "SKIP", "counterexample": None}
        else:
            strong = oracle.brute_zero_neighbours(code).strong
            greedy = oracle.greedy_min_testset(code)
            diff = sorted(str(w) for w in strong ^ lset.words)
            outside = sorted(str(w) for w in greedy - lset.words)
            ok = not diff and not outside
            results["zeroneighbours"] = {
                "status": "PASS" if ok else "FAIL",
                "counterexample": None if ok else {
                    "symmetric_difference": diff[:1],
                    "greedy_outside_L": outside[:1],
                },
            }
    return {"suites": results}


def _sampled_decode_mismatch(code, table, lset, seed: int, samples: int = 2000) -> str | None:
    """First word whose test-set decoding distance differs from brute force."""
    nearest = oracle.nearest_distances(code)
    if code.n <= 12:
        words = range(1 << code.n)
    else:
        rng = random.Random(seed)
        words = [rng.getrandbits(code.n) for _ in range(samples)]
    for x in words:
        y = Word(x, code.n)
        res = decode(code, y, table=table, leader_codewords=lset, mode="testset")
        if res.distance != nearest[x]:
            return str(y)
    return None


_RUNNERS = {
    "coset-leaders": _coset_leaders,
    "leader-codewords": _leader_codewords,
    "decode": _decode,
    "oracle-check": _oracle_check,
}


def run(config: RunConfig) -> dict[str, Any]:
    """Execute the configured command and return its JSON-ready report."""
    order = make_order(config.code.n, config.order)
    if config.command == "stats":
        table, lset = compute_leader_codewords(config.code, order, max_cosets=config.max_cosets)
        body = _stats(table, lset)
    else:
        body = _RUNNERS[config.command](config, order)
    return {"schema": SCHEMA_VERSION, "command": config.command, "source": config.source,
            "order": config.order, **body}


def _render_text(config: RunConfig, report: dict[str, Any]) -> str:
    lines: list[str] = []
    cmd = config.command
    if cmd == "coset-leaders":
        lines.append(
            f"[{report['n']},{report['k']}] code: {report['num_cosets']} cosets, "
            f"{report['coset_leaders']} coset leaders ({report['order']})"
        )
        per_weight: dict[int, int] = {}
        for c in report["cosets"]:
            w = c["weight"]
            per_weight[w] = per_weight.get(w, 0) + 1
            leaders = ", ".join(Word.from_string(x).pretty() for x in c["leaders"])
            lines.append(f"CL_{w}^{per_weight[w]}\t[{leaders}]")
        if config.stats:
            lines.append("")
            lines.extend(_stat_lines(report))
    elif cmd == "leader-codewords":
        counts = report["counts"]
        lines.append(f"|L(C)| = {counts['L']}, |L1(C)| = {counts['L1']}")
        for c in report["codewords"]:
            mark = "L1" if c["in_l1"] else "  "
            lines.append(f"{mark} w={c['weight']:<3} {Word.from_string(c['word']).pretty()}")
    elif cmd == "decode":
        lines.append(f"received  {report['received']}")
        lines.append(f"codeword  {report['codeword']}")
        lines.append(f"error     {Word.from_string(report['error']).pretty()} (distance {report['distance']})")
        lines.append(f"unique    {'yes' if report['unique'] else 'no'}")
        if "all_nearest" in report:
            nearest = ", ".join(Word.from_string(x).pretty() for x in report["all_nearest"])
            lines.append(f"leaders   [{nearest}]")
    elif cmd == "stats":
        lines.extend(_stat_lines(report))
    elif cmd == "oracle-check":
        for name, res in report["suites"].items():
            line = f"{name}: {res['status']}"
            if res["counterexample"]:
                line += f"  counterexample: {json.dumps(res['counterexample'], sort_keys=True)}"
            lines.append(line)
    return "\n".join(lines) + "\n"


def _stat_lines(report: dict[str, Any]) -> list[str]:
    keys = ["n", "k", "d", "t", "num_cosets", "coset_leaders", "wdcl", "covering_radius",
            "newton_radius", "unique_leader_cosets", "unique_within_t", "unique_beyond_t",
            "iterations", "iteration_bound", "perfect", "leader_codewords", "l1"]
    return [f"{k:<20} {report[k]}" for k in keys if k in report]


def emit_report(config: RunConfig, report: dict[str, Any], stream=None) -> int:
    stream = stream or sys.stdout
    try:
        if config.output == "json":
            stream.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
        else:
            stream.write(_render_text(config, report))
        stream.flush()
    except OSError as exc:
        print(f"cosetforge: cannot write report: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if config.command == "oracle-check":
        if any(r["status"] == "FAIL" for r in report["suites"].values()):
            return EXIT_MISMATCH
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    config = parse_args(argv)
    if config.dump_matrix:
        sys.stdout.write(config.code.H.to_text())
        return EXIT_OK
    try:
        report = run(config)
    except CosetForgeError as exc:
        print(f"cosetforge: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return emit_report(config, report)


if __name__ == "__main__":
    sys.exit(main())
