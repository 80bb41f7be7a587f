"""Command-line interface.

Subcommands: check, salience, witness, verify, moody, census, flipped,
bound, fixtures.  Reports are JSON documents (``schema: 1``) printed to
stdout except where a plain format is the natural one (census TSV, flipped
choice files, bound lines).  Exit codes: 0 on success (a false verdict is
still success), 1 on data errors, 2 on usage errors.

Reports are byte-identical across runs for fixed input and flags; wall
times are attached only when --timings is given.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import lab
from .attention import build_csla_witness, is_cla, verify_salient_filter
from .axioms import AXIOMS, Witness, check_axiom
from .core import ChoiceFunction, GroundSet, Menu
from .errors import NotRls, SalienceLabError
from .fileio import (
    csla_witness_to_dict,
    parse_choice_file,
    relation_pairs,
    rls_witness_to_dict,
    rs_witness_to_dict,
    serialize_choice,
    witness_from_json,
)
from .fixtures import builtin_fixtures, get_fixture
from .salience import build_rls_witness, is_rls, revealed_salience, verify_rls_witness

CHECK_ORDER = AXIOMS + ("rls", "cla")


def _load_choice(path: str) -> ChoiceFunction:
    return parse_choice_file(Path(path).read_text(encoding="utf-8"))


def _menu_labels(ground: GroundSet, mask: Menu) -> list[str]:
    return sorted(ground.menu_labels(mask))


def _witness_dict(ground: GroundSet, w: Witness | None) -> dict | None:
    if w is None:
        return None
    return {
        "menus": [_menu_labels(ground, m) for m in w.menus],
        "items": [ground.labels[i] for i in w.items],
    }


def _emit(args: argparse.Namespace, report: dict, started: float) -> int:
    if getattr(args, "timings", False):
        report["timings"] = {"total_s": round(time.perf_counter() - started, 6)}
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    c = _load_choice(args.file)
    requested = tuple(args.axiom) if args.axiom else CHECK_ORDER
    verdicts = []
    for axiom in requested:
        if axiom == "rls":
            v = is_rls(c)
        elif axiom == "cla":
            v = is_cla(c)
        else:
            v = check_axiom(c, axiom)
        verdicts.append(
            {
                "axiom": v.axiom,
                "holds": v.holds,
                "witness": _witness_dict(c.ground, v.witness),
            }
        )
    report = {
        "schema": 1,
        "command": "check",
        "input": args.file,
        "verdicts": verdicts,
    }
    return _emit(args, report, started)


def _cmd_salience(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    c = _load_choice(args.file)
    rs = revealed_salience(c)
    provenance = []
    for (x, y), switch in sorted(rs.provenance.items()):
        provenance.append(
            {
                "pair": [c.ground.labels[x], c.ground.labels[y]],
                "switch": {
                    "base": _menu_labels(c.ground, switch.base),
                    "added": c.ground.labels[switch.added],
                    "old": c.ground.labels[switch.old_choice],
                    "new": c.ground.labels[switch.new_choice],
                },
            }
        )
    provenance.sort(key=lambda entry: entry["pair"])
    report = {
        "schema": 1,
        "command": "salience",
        "input": args.file,
        "revealed_salience": relation_pairs(c.ground, rs.relation),
        "provenance": provenance,
    }
    return _emit(args, report, started)


def _cmd_witness(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    c = _load_choice(args.file)
    report = {
        "schema": 1,
        "command": "witness",
        "input": args.file,
        "model": args.model,
    }
    try:
        if args.model == "rls":
            w = build_rls_witness(c)
            report["witness"] = rls_witness_to_dict(c.ground, w)
            report["verified"] = verify_rls_witness(c, w)
        elif args.model == "csla":
            w = build_csla_witness(c)
            report["witness"] = csla_witness_to_dict(c.ground, w)
            report["verified"] = verify_salient_filter(c, w)
        else:  # rs-trivial
            w = lab.trivial_rs(c)
            report["witness"] = rs_witness_to_dict(c.ground, w)
            report["verified"] = lab.verify_rs_witness(c, w)
    except NotRls as exc:
        report["witness"] = None
        report["reason"] = str(exc)
    return _emit(args, report, started)


def _cmd_verify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    c = _load_choice(args.file)
    text = Path(args.witness).read_text(encoding="utf-8")
    model, witness = witness_from_json(c.ground, text, args.model)
    if model == "rls":
        valid = verify_rls_witness(c, witness)
    elif model == "csla":
        valid = verify_salient_filter(c, witness)
    else:
        valid = lab.verify_rs_witness(c, witness)
    report = {
        "schema": 1,
        "command": "verify",
        "input": args.file,
        "witness_file": args.witness,
        "model": model,
        "valid": valid,
    }
    return _emit(args, report, started)


def _cmd_moody(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    c = _load_choice(args.file)
    k = lab.minimal_rationale_count(c)
    report = {
        "schema": 1,
        "command": "moody",
        "input": args.file,
        "items": c.n,
        "minimal_rationales": k,
        "moody": k == c.n,
    }
    return _emit(args, report, started)


def _cmd_census(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    table = lab.classify_census(args.n, jobs=args.jobs)
    if args.format == "tsv":
        print("\t".join(lab.CensusTable.TSV_COLUMNS))
        print(table.tsv_row())
        return 0
    report = {"schema": 1, "command": "census", **table.to_json_dict()}
    return _emit(args, report, started)


def _cmd_flipped(args: argparse.Namespace) -> int:
    c = lab.make_flipped_choice(args.n, fill_rule=args.fill)
    sys.stdout.write(serialize_choice(c))
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    result = lab.hereditary_bound(args.q, args.n)
    print(f"bound ({result.q}/864)^{result.exponent}")
    print(f"exact value: {result.value.numerator}/{result.value.denominator}")
    print(f"magnitude: <= 10^{result.magnitude}")
    return 0


def _cmd_fixtures(args: argparse.Namespace) -> int:
    if args.id is None:
        for f in builtin_fixtures():
            print(f"{f.fixture_id}\t{f.description}")
        return 0
    fixture = get_fixture(args.id)
    if args.witness:
        if fixture.rs_witness is None:
            print(f"error: fixture {args.id!r} has no witness", file=sys.stderr)
            return 1
        print(json.dumps(fixture.rs_witness, indent=2, sort_keys=True))
        return 0
    sys.stdout.write(fixture.choice_text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="saliencelab",
        description="Decide, witness, and count bounded-rationality properties "
        "of finite choice functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="axiom verdicts for a choice file")
    p.add_argument("file")
    p.add_argument(
        "--axiom",
        action="append",
        choices=CHECK_ORDER,
        help="restrict to one axiom (repeatable); default: all",
    )
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("salience", help="revealed salience digraph with provenance")
    p.add_argument("file")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=_cmd_salience)

    p = sub.add_parser("witness", help="construct and verify a rationalization")
    p.add_argument("file")
    p.add_argument("--model", required=True, choices=("rls", "csla", "rs-trivial"))
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("verify", help="replay a witness JSON against a choice file")
    p.add_argument("file")
    p.add_argument("--witness", required=True, help="path to witness JSON")
    p.add_argument("--model", choices=("rls", "csla", "rs"), help="override inference")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("moody", help="minimal number of distinct rationales")
    p.add_argument("file")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=_cmd_moody)

    p = sub.add_parser("census", help="isomorphism census with property counts")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("flipped", help="emit an oscillating choice file")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--fill", choices=("worst", "best"), default="worst")
    p.set_defaults(func=_cmd_flipped)

    p = sub.add_parser("bound", help="hereditary density bound from a class count")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("fixtures", help="list or dump the built-in fixtures")
    p.add_argument("--id", help="print this fixture's choice file")
    p.add_argument("--witness", action="store_true", help="print its witness JSON")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SalienceLabError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
