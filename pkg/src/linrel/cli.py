"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 parse failure, 3 property
suite failure.  Reports are JSON with sorted keys, so equal inputs give
byte-identical output.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import checks
from . import decomp as dc
from . import exactalg as ea
from . import relcore as rc
from . import symplin as sp
from . import wwcat as ww
from .instance import (Instance, InstanceParseError, InstanceValidationError, dumps,
                       load_instance, relation_json, subspace_json)

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_SUITE = 0, 1, 2, 3


def _ww_json(m: ww.WWMorphism) -> dict:
    return {"tag": m.tag.value, "defect": m.defect, "excess": m.excess,
            "shadow": relation_json(m.shadow)}


def _ww_from_args(inst: Instance, args) -> ww.WWMorphism:
    if args.name:
        if args.name not in inst.ww:
            raise InstanceValidationError(f"no ww morphism named {args.name!r}")
        entry = inst.ww[args.name]
        tag = entry.get("tag", args.tag or "lrel")
        return ww.WWMorphism(ww.Category.parse(tag), inst.relation(entry["shadow"]),
                             int(entry.get("defect", 0)), int(entry.get("excess", 0)))
    if not args.chain:
        raise InstanceValidationError("give --chain or --name")
    return ww.ww_from_chain(inst.chain(args.chain), args.tag or "lrel")


def cmd_compose(args) -> dict:
    inst = load_instance(args.input)
    links = inst.chain(args.chain)
    splits = []
    for j in range(1, len(links)):
        left, right = rc.compose_chain(links[:j]), rc.compose_chain(links[j:])
        splits.append({
            "split": j,
            "excess_left": rc.excess_seq(links[:j]),
            "excess_pair": rc.excess_pair(left, right),
            "excess_right": rc.excess_seq(links[j:]),
            "defect_left": rc.defect_seq(links[:j]),
            "defect_pair": rc.defect_pair(left, right),
            "defect_right": rc.defect_seq(links[j:]),
        })
    return {
        "chain": args.chain,
        "composite": relation_json(rc.compose_chain(links)),
        "excess": rc.excess_seq(links),
        "defect": rc.defect_seq(links),
        "splits": splits,
    }


def cmd_ww(args) -> dict:
    inst = load_instance(args.input)
    return {"morphism": _ww_json(_ww_from_args(inst, args))}


def cmd_ww_two_term(args) -> dict:
    inst = load_instance(args.input)
    m = _ww_from_args(inst, args)
    a, b = ww.ww_two_term(m)
    verdict = ww.verify_two_term(m, a, b)
    verdict["round_trip"] = ww.ww_from_chain([a, b], m.tag) == m
    return {
        "morphism": _ww_json(m),
        "Q": {"name": a.source.name, "dim": a.source.dim},
        "A": relation_json(a),
        "B": relation_json(b),
        "checks": verdict,
        "passed": sum(verdict.values()),
        "failed": len(verdict) - sum(verdict.values()),
    }


def cmd_check(args) -> dict:
    fld = ea.parse_field(args.field)
    return checks.run_suite(args.suite, args.seed, args.cases, fld, args.max_dim, args.tag)


def cmd_decompose(args) -> dict:
    inst = load_instance(args.input)
    name = args.name
    try:
        if name in inst.triples:
            t = inst.triples[name]
            m = dc.triple_multiplicities(t["dim"], t["A"], t["B"], t["C"])
            kind = "triple"
        elif name in inst.pairs:
            p = inst.pairs[name]
            m = dc.isotropic_pair_multiplicities(p["space"], p["A"], p["B"])
            kind = "isotropic_pair"
        else:
            raise InstanceValidationError(f"no triple or pair named {name!r}")
    except dc.DecompositionError as exc:
        raise InstanceValidationError(str(exc)) from None
    d, e, s = dc.ww_indices_from_multiplicities(m)
    return {"name": name, "kind": kind, "multiplicities": vars(m),
            "predicted": {"defect": d, "excess": e, "shadow_dim": s}}


def cmd_cotangent(args) -> dict:
    inst = load_instance(args.input)
    if args.chain:
        links = inst.chain(args.chain)
        lifted = [sp.cotangent(f) for f in links]
        return {
            "chain": args.chain,
            "defect": rc.defect_seq(links),
            "excess": rc.excess_seq(links),
            "cotangent_defect": rc.defect_seq(lifted),
            "cotangent_excess": rc.excess_seq(lifted),
            "composite": relation_json(rc.compose_chain(lifted)),
        }
    f = inst.relation(args.name)
    return {"relation": args.name, "cotangent": relation_json(sp.cotangent(f))}


def cmd_invariants(args) -> dict:
    inst = load_instance(args.input)
    f = inst.relation(args.name)
    inv = rc.iso_invariants(f)
    return {
        "relation": args.name,
        "invariants": vars(inv),
        "kernel": subspace_json(rc.kernel(f)),
        "indeterminacy": subspace_json(rc.indeterminacy(f)),
        "domain": subspace_json(rc.domain(f)),
        "image": subspace_json(rc.image(f)),
        "predicates": {
            "injective": rc.is_injective(f),
            "coinjective": rc.is_coinjective(f),
            "surjective": rc.is_surjective(f),
            "cosurjective": rc.is_cosurjective(f),
            "reduction": rc.is_reduction(f),
            "coreduction": rc.is_coreduction(f),
        },
    }


COMMANDS = {
    "compose": cmd_compose,
    "ww": cmd_ww,
    "ww-two-term": cmd_ww_two_term,
    "check": cmd_check,
    "decompose": cmd_decompose,
    "cotangent": cmd_cotangent,
    "invariants": cmd_invariants,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linrel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, metavar="PATH")
        p.add_argument("--output", metavar="PATH")
        return p

    common(sub.add_parser("compose", help="compose a chain")).add_argument("--chain", required=True)
    for name in ("ww", "ww-two-term"):
        p = common(sub.add_parser(name))
        p.add_argument("--chain")
        p.add_argument("--name", help="a morphism from the file's 'ww' section")
        p.add_argument("--tag", choices=["lrel", "slrel", "ilrel", "clrel"])
    p = common(sub.add_parser("check", help="run a seeded property suite"), needs_input=False)
    p.add_argument("suite", choices=sorted(checks.SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--field", default="q", help="q or gf:P")
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--tag", choices=["lrel", "slrel", "ilrel", "clrel"])
    common(sub.add_parser("decompose")).add_argument("--name", required=True)
    p = common(sub.add_parser("cotangent"))
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--name")
    group.add_argument("--chain")
    common(sub.add_parser("invariants")).add_argument("--name", required=True)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    echo = {k: v for k, v in sorted(vars(args).items()) if k not in ("output",)}
    try:
        body = COMMANDS[args.command](args)
    except InstanceParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ea.LinRelError, ValueError, KeyError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report = {"command": echo, **body}
    text = dumps(report)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "check" and body["failed"]:
        return EXIT_SUITE
    if args.command == "ww-two-term" and body["failed"]:
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
