"""Command line front end.

Subcommands: analyze, check, generate, witness, rado-span, classify,
verify.  Every command prints one JSON report to stdout.  Exit codes:
0 verdict computed, 1 suite failures or a negative verdict under
--expect yes, 2 invalid input, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .errors import (
    BadParams,
    BudgetExhausted,
    FormatError,
    HomoglabError,
    NotADirectoryBase,
    OrderTooLarge,
    SeedNotLocalMorphism,
    StarNumberZero,
    Undominated,
)
from .formats import read_graph, write_graph
from .graphs import analyze, cone_set, independence_number
from .homogeneity import AgePartition, decide_hh_conditions, decide_xy, kk_okk
from .presentations import (
    classify_mb,
    extension_witness,
    parse_spec,
    spanning_rado,
    truncate,
)
from .verify import (
    DEFAULT_SEED,
    cross_validate_hh,
    find_triangle_dom2,
    rs_truncation,
    verify_alpha_bound_family,
    verify_directory_lemmas,
    verify_directory_lemmas_random,
    verify_neighbor_richness,
)

_AGE_LIMIT = 10


def _report(argv: list[str], payload: dict) -> dict:
    return {
        "tool": {"name": "homoglab", "version": __version__},
        "command": list(argv),
        "payload": payload,
    }


def _emit(argv: list[str], payload: dict) -> None:
    print(json.dumps(_report(argv, payload), indent=2, sort_keys=False))


def _partition_dict(part: AgePartition) -> dict:
    return {
        "classes": [
            {
                "code": cls.code.hex(),
                "order": cls.representative.n,
                "representative_edges": list(cls.representative.edges()),
                "embeddings": [list(e) for e in cls.embeddings],
            }
            for cls in part.classes
        ],
        "kk": sorted(code.hex() for code in part.kk),
        "okk": sorted(code.hex() for code in part.okk),
        "conflicts": [
            {
                "code": c.code.hex(),
                "coned_embedding": list(c.coned_embedding),
                "cone_vertex": c.cone_vertex,
                "coneless_embedding": list(c.coneless_embedding),
            }
            for c in part.conflicts
        ],
    }


def _parse_vertex_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad vertex list {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homoglab",
        description="Exact analysis of finite graphs and finitely presented countable graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="independence, star number, directories, age partition")
    p.add_argument("file")
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")

    p = sub.add_parser("check", help="decide XY-homogeneity of a finite graph")
    p.add_argument("file")
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p.add_argument("--x", required=True, choices=tuple("HMI"))
    p.add_argument("--y", required=True, choices=tuple("HMEBAI"))
    p.add_argument("--method", choices=("direct", "conditions"), default="direct")
    p.add_argument("--expect", choices=("yes", "no"))

    p = sub.add_parser("generate", help="truncate a presentation to a graph file")
    p.add_argument("spec")
    p.add_argument("--truncate", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")

    p = sub.add_parser("witness", help="bounded cone/co-cone witness search")
    p.add_argument("spec")
    p.add_argument("--cone", default="")
    p.add_argument("--cocone", default="")
    p.add_argument("--budget", type=int, default=1 << 16)

    p = sub.add_parser("rado-span", help="greedy spanning selection with extension schedule")
    p.add_argument("spec")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=1 << 16)

    p = sub.add_parser("classify", help="bimorphism-class probe of a presentation")
    p.add_argument("spec")
    p.add_argument("--budget", type=int, default=512)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "suite",
        choices=(
            "directory-lemmas",
            "richness",
            "triangle-dom2",
            "alpha-bound",
            "cross-validate",
        ),
    )
    p.add_argument("--family", default="rs:3")
    p.add_argument("--truncate", type=int, default=9)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--max-order", type=int, default=40)
    p.add_argument("--threshold", type=int, default=1)
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--part-size", type=int, default=2)
    p.add_argument("--random", action="store_true", help="run the random-graph campaign")

    return parser


def _cmd_analyze(args, argv) -> int:
    g = read_graph(args.file, args.format)
    report = analyze(g)
    payload: dict = {
        "order": g.n,
        "edge_count": g.edge_count(),
        "analysis": report.to_dict(),
    }
    if g.n <= _AGE_LIMIT:
        payload["age_partition"] = _partition_dict(kk_okk(g, g.n))
    else:
        payload["age_partition"] = {
            "skipped": f"age computation is capped at order {_AGE_LIMIT}"
        }
    _emit(argv, payload)
    return 0


def _cmd_check(args, argv) -> int:
    g = read_graph(args.file, args.format)
    if args.method == "conditions":
        if args.x != "H" or args.y != "H":
            raise BadParams("the conditions method only decides x=H, y=H")
        report = decide_hh_conditions(g)
    else:
        report = decide_xy(g, args.x, args.y)
    _emit(argv, {"check": report.to_dict()})
    if args.expect == "yes" and not report.verdict:
        return 1
    if args.expect == "no" and report.verdict:
        return 1
    return 0


def _cmd_generate(args, argv) -> int:
    p = parse_spec(args.spec)
    g = truncate(p, args.truncate)
    write_graph(g, args.output, args.format)
    _emit(
        argv,
        {
            "presentation": p.describe(),
            "truncation": args.truncate,
            "written": args.output,
            "format": args.format,
            "order": g.n,
            "edge_count": g.edge_count(),
        },
    )
    return 0


def _cmd_witness(args, argv) -> int:
    p = parse_spec(args.spec)
    a = _parse_vertex_list(args.cone)
    b = _parse_vertex_list(args.cocone)
    result = extension_witness(p, a, b, args.budget)
    _emit(
        argv,
        {
            "presentation": p.describe(),
            "cone_over": list(a),
            "cocone_over": list(b),
            "budget": args.budget,
            "result": result.to_dict(),
        },
    )
    return 3 if result.status == "exhausted" else 0


def _cmd_rado_span(args, argv) -> int:
    p = parse_spec(args.spec)
    try:
        construction = spanning_rado(p, args.n, args.budget)
    except BudgetExhausted as exc:
        _emit(
            argv,
            {
                "presentation": p.describe(),
                "error": "budget-exhausted",
                "requirement": exc.requirement.to_dict(),
                "detail": exc.detail,
            },
        )
        return 3
    problems = construction.verify(p)
    _emit(
        argv,
        {
            "presentation": p.describe(),
            "construction": construction.to_dict(),
            "replay_problems": problems,
        },
    )
    return 0 if not problems else 1


def _cmd_classify(args, argv) -> int:
    p = parse_spec(args.spec)
    report = classify_mb(p, args.budget)
    _emit(argv, {"presentation": p.describe(), "classification": report.to_dict()})
    return 0


def _cmd_verify(args, argv) -> int:
    if args.suite == "directory-lemmas":
        if args.random:
            report = verify_directory_lemmas_random(
                count=args.count, seed=args.seed, max_order=args.max_order
            )
        else:
            g = truncate(parse_spec(args.family), args.truncate)
            _, directory = independence_number(g)
            report = verify_directory_lemmas(g, directory)
    elif args.suite == "richness":
        g = truncate(parse_spec(args.family), args.truncate)
        _, directory = independence_number(g)
        report = verify_neighbor_richness(g, directory, args.threshold)
    elif args.suite == "triangle-dom2":
        g = truncate(parse_spec(args.family), args.truncate)
        _, directory = independence_number(g)
        result = find_triangle_dom2(g, directory)
        _emit(argv, {"triangle_dom2": result.to_dict()})
        return 0
    elif args.suite == "alpha-bound":
        report = verify_alpha_bound_family(
            range(args.n_min, args.n_max + 1), part_sizes=(args.part_size,)
        )
    else:
        report = cross_validate_hh(min(args.n_max, 7))
    _emit(argv, {"suite_report": report.to_dict()})
    return 0 if report.passed else 1


_COMMANDS = {
    "analyze": _cmd_analyze,
    "check": _cmd_check,
    "generate": _cmd_generate,
    "witness": _cmd_witness,
    "rado-span": _cmd_rado_span,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
}


def run(argv: list[str]) -> int:
    threads = os.environ.get("HOMOGLAB_THREADS")
    if threads is not None:
        try:
            if int(threads) < 1:
                raise ValueError
        except ValueError:
            print(f"HOMOGLAB_THREADS must be a positive integer, got {threads!r}", file=sys.stderr)
            return 2
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args, argv)
    except (
        BadParams,
        FormatError,
        NotADirectoryBase,
        OrderTooLarge,
        SeedNotLocalMorphism,
        StarNumberZero,
        Undominated,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except HomoglabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
