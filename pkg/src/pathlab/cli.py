"""Command-line interface.

Subcommands: table, verify, inspect, cycle, build, decorate, sched, enumerate.
Exit codes: 0 success, 1 a verification or validation failed, 2 usage error
(argparse's own convention for bad arguments is also 2).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .adr import D_fast, S_fast, S_recursive, dyck_decorate, is_adr, parity_decorate
from .bridge import ScheduleNotOne, path_from_sdw
from .cutting import cutting_cycle, ordered_cycle, sched_one_members
from .enumeration import D_brute, PathFamily, S_brute, generate
from .paths import (
    PathError,
    area,
    area_word,
    attack_pairs,
    contractible_valleys,
    dinv,
    format_path,
    is_dyck,
    parse_path,
    shift,
)
from .schedule import (
    ShiftedDiagonalWord,
    decreasing_runs,
    diagonal_word,
    format_perm,
    parse_perm,
    revmaj,
    schedule_numbers,
    u_statistic,
)
from .verify import CHECKS, default_jobs, run_suite

USAGE_ERROR = 2
CHECK_FAILED = 1


class CliError(Exception):
    def __init__(self, message: str, code: int = USAGE_ERROR):
        super().__init__(message)
        self.code = code


def cmd_table(args) -> int:
    methods = {
        ("S", "brute"): S_brute,
        ("S", "fast"): S_fast,
        ("S", "recursive"): S_recursive,
        ("D", "brute"): D_brute,
        ("D", "fast"): D_fast,
    }
    fn = methods.get((args.stat, args.method))
    if fn is None:
        raise CliError(f"method {args.method!r} is not available for stat {args.stat!r}")
    rows = [(k, fn(args.n, k)) for k in range(args.n)]
    if args.format == "json":
        payload = {
            "stat": args.stat,
            "n": args.n,
            "method": args.method,
            "rows": [{"k": k, "poly": p.to_json()} for k, p in rows],
        }
        print(json.dumps(payload, indent=2))
    else:
        for k, p in rows:
            print(f"{k}: {p}")
    return 0


def cmd_verify(args) -> int:
    if args.check not in CHECKS:
        raise CliError(f"unknown check {args.check!r}; known: {', '.join(sorted(CHECKS))}")
    failed = False
    for report in run_suite(args.check, args.max_n, args.jobs):
        print(report.line())
        print(f"# elapsed {report.elapsed:.2f}s", file=sys.stderr)
        failed = failed or not report.ok
    return CHECK_FAILED if failed else 0


def _parse_object(text: str):
    if ":" in text:
        return parse_path(text)
    return parse_perm(text)


def cmd_inspect(args) -> int:
    try:
        obj = _parse_object(args.object)
    except (PathError, ValueError) as exc:
        raise CliError(str(exc)) from exc
    if hasattr(obj, "steps"):
        path = obj
        sdw = diagonal_word(path)
        cycle = cutting_cycle(path)
        info = {
            "kind": "path",
            "text": format_path(path),
            "n": path.n,
            "k": len(path.decorations),
            "dyck": is_dyck(path),
            "area_word": list(area_word(path)),
            "shift": shift(path),
            "area": area(path),
            "dinv": dinv(path),
            "contractible_valleys": sorted(contractible_valleys(path)),
            "attack_pairs": sorted(
                [p.i, p.j, p.kind] for p in attack_pairs(path)
            ),
            "diagonal_word": format_perm(sdw.word),
            "schedule_word": list(schedule_numbers(sdw)),
            "cycle_size": len(cycle.members),
            "cycle_canonical": format_path(cycle.canonical),
        }
    else:
        word = obj
        witness = is_adr(word)
        info = {
            "kind": "word",
            "text": format_perm(word),
            "n": word.n,
            "k": len(word.decorated),
            "runs": [list(r) for r in decreasing_runs(word)],
            "revmaj": revmaj(word),
            "is_adr": bool(witness),
            "valid_shifts": sorted(witness.valid_shifts),
            "dyck_decoration": format_perm(dyck_decorate(word.values)),
            "parity_decoration": format_perm(parity_decorate(word.values)),
        }
    if args.format == "json":
        print(json.dumps(info, indent=2))
    else:
        for key, value in info.items():
            print(f"{key}: {value}")
    return 0


def cmd_cycle(args) -> int:
    path = parse_path(args.path)
    cycle = cutting_cycle(path)
    members = ordered_cycle(path)
    marked = set(sched_one_members(cycle))
    if args.format == "json":
        payload = {
            "size": len(members),
            "canonical": format_path(cycle.canonical),
            "members": [
                {
                    "path": format_path(q),
                    "dinv": dinv(q),
                    "area": area(q),
                    "schedule_one": q in marked,
                }
                for q in members
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        for q in members:
            flags = []
            if q == cycle.canonical:
                flags.append("canonical")
            if q in marked:
                flags.append("schedule-one")
            suffix = f"  [{', '.join(flags)}]" if flags else ""
            print(f"dinv={dinv(q)} area={area(q)} {format_path(q)}{suffix}")
    return 0


def cmd_build(args) -> int:
    word = parse_perm(args.word)
    try:
        path = path_from_sdw(word, args.shift)
    except ScheduleNotOne as exc:
        raise CliError(str(exc)) from exc
    print(format_path(path))
    return 0


def cmd_decorate(args) -> int:
    word = parse_perm(args.perm)
    if word.decorated:
        raise CliError("decorate expects an undecorated permutation")
    decorated = (
        dyck_decorate(word.values) if args.mode == "dyck" else parity_decorate(word.values)
    )
    witness = is_adr(decorated)
    print(format_perm(decorated))
    print(f"valid shifts: {sorted(witness.valid_shifts)}")
    print(f"revmaj: {revmaj(decorated)}")
    return 0


def cmd_sched(args) -> int:
    word = parse_perm(args.perm)
    runs = decreasing_runs(word)
    print(f"runs: {' | '.join(' '.join(map(str, r)) for r in runs)}")
    for s in range(len(runs)):
        sdw = ShiftedDiagonalWord(word, s)
        sched = schedule_numbers(sdw)
        print(f"shift {s}: {' '.join(map(str, sched))}  (u={u_statistic(sdw)})")
    return 0


def cmd_enumerate(args) -> int:
    family = PathFamily(args.n, args.k, args.kind)
    if args.format == "json":
        print(json.dumps([format_path(p) for p in generate(family)], indent=2))
    else:
        for path in generate(family):
            print(format_path(path))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathlab",
        description="Statistics, schedules and cutting cycles of decorated labeled paths.",
    )
    parser.add_argument("--version", action="version", version=f"pathlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="signed enumerator table for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stat", choices=("S", "D"), default="S")
    p.add_argument("--method", choices=("brute", "fast", "recursive"), default="fast")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("check", help=f"one of: {', '.join(sorted(CHECKS))}")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: PATHLAB_JOBS or 1)")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("inspect", help="statistics of a path or decorated permutation")
    p.add_argument("object", help="path like NNEENE:1,2,3:3 or word like 7* 8 4* 2 3 5 6 1")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_inspect)

    p = sub.add_parser("cycle", help="cutting cycle of a path, in dinv order")
    p.add_argument("path")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_cycle)

    p = sub.add_parser("build", help="the unique path of an all-ones word and shift")
    p.add_argument("word")
    p.add_argument("--shift", type=int, required=True)
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("decorate", help="canonical decoration of a permutation")
    p.add_argument("perm")
    p.add_argument("--mode", choices=("dyck", "parity"), default="parity")
    p.set_defaults(fn=cmd_decorate)

    p = sub.add_parser("sched", help="runs and schedule words of a decorated permutation")
    p.add_argument("perm")
    p.set_defaults(fn=cmd_sched)

    p = sub.add_parser("enumerate", help="list a whole path family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", choices=("square", "dyck"), default="square")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", None) is None and hasattr(args, "jobs"):
        args.jobs = default_jobs()
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (PathError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
