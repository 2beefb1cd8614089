"""Command-line interface.

Boolean queries print "true"/"false" and exit 0; structural results print
JSON with sorted keys.  Parse and usage problems exit 2 with a message on
stderr; a selfcheck property violation exits 1.  Rationals travel as strings
("3/2", "-1") so nothing is ever rounded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import generators, lattice
from .classify import SumTerm, canonical_form, forest_to_term, term_to_forest
from .conelab import (
    FinCone,
    cone_member,
    dual_vector,
    is_pointed,
    kp_member_general,
    kp_pointedness_check,
    lex_embed,
)
from .errors import LexconeError
from .lexvec import LexVector, dual_generators, is_positive, leq, pairing
from .poset import Poset, classify_forest, product
from .rationals import format_rational
from .selfcheck import SUITES, RunConfig, run_selfcheck
from .tensor import kp_decompose, kp_member


def _load_json(text: str):
    """Inline JSON if the argument looks like JSON, else a file path."""
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        return json.loads(stripped)
    with open(text, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _poset(text: str) -> Poset:
    return Poset.from_json(_load_json(text))


def _vector(P: Poset, text: str) -> LexVector:
    data = _load_json(text)
    if not isinstance(data, dict):
        raise ValueError("vector JSON must be an object of label -> rational string")
    return LexVector(P, data)


def _cone(text: str) -> FinCone:
    return FinCone.from_json(_load_json(text))


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _emit_bool(flag: bool) -> None:
    print("true" if flag else "false")


def _default_seed() -> int:
    return int(os.environ.get("LEXCONE_SEED", "0"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexcone",
        description="Exact lexicographic cones over finite posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    poset_cmd = sub.add_parser("poset", help="validate or describe a poset file")
    poset_sub = poset_cmd.add_subparsers(dest="action", required=True)
    for action in ("check", "info"):
        p = poset_sub.add_parser(action)
        p.add_argument("file", help="poset JSON (path or inline)")

    p = sub.add_parser("positive", help="cone membership of a vector")
    p.add_argument("--poset", required=True)
    p.add_argument("--vec", required=True)

    p = sub.add_parser("leq", help="order comparison of two vectors")
    p.add_argument("--poset", required=True)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)

    for name in ("sup", "inf"):
        p = sub.add_parser(name, help=f"lattice {name} of two vectors (forest poset)")
        p.add_argument("--poset", required=True)
        p.add_argument("--lhs", required=True)
        p.add_argument("--rhs", required=True)

    p = sub.add_parser("abs", help="lattice absolute value (forest poset)")
    p.add_argument("--poset", required=True)
    p.add_argument("--vec", required=True)

    p = sub.add_parser("nosup-witness", help="descending chain of upper bounds on a non-forest")
    p.add_argument("--poset", required=True)
    p.add_argument("--start", help="starting upper bound (default: e_s)")
    p.add_argument("--steps", type=int, default=50)

    p = sub.add_parser("decompose", help="write a positive vector over the canonical generators")
    p.add_argument("--poset", required=True)
    p.add_argument("--vec", required=True)

    p = sub.add_parser("dual-gens", help="generators of the dual cone")
    p.add_argument("--poset", required=True)

    for name in ("tensor-member", "tensor-decompose"):
        p = sub.add_parser(name, help="projective tensor cone over two posets")
        p.add_argument("--left", required=True, help="poset JSON for the left factor")
        p.add_argument("--right", required=True, help="poset JSON for the right factor")
        p.add_argument("--vec", required=True, help='vector JSON keyed by "s|t" labels')

    cone_cmd = sub.add_parser("cone", help="finitely generated rational cones")
    cone_sub = cone_cmd.add_subparsers(dest="action", required=True)
    p = cone_sub.add_parser("member")
    p.add_argument("--cone", required=True)
    p.add_argument("--vec", required=True, help="JSON list of rational strings")
    p = cone_sub.add_parser("pointed")
    p.add_argument("--cone", required=True)
    p = cone_sub.add_parser("dual-vector")
    p.add_argument("--cone", required=True)
    p = cone_sub.add_parser("embed")
    p.add_argument("--cone", required=True)

    kp_cmd = sub.add_parser("kp", help="projective cone of two rational cones")
    kp_sub = kp_cmd.add_subparsers(dest="action", required=True)
    p = kp_sub.add_parser("check")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=None)
    p = kp_sub.add_parser("member")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--matrix", required=True, help="JSON rows of rational strings")

    cls_cmd = sub.add_parser("classify", help="forest <-> lexicographic-union term")
    cls_sub = cls_cmd.add_subparsers(dest="action", required=True)
    p = cls_sub.add_parser("to-term")
    p.add_argument("--poset", required=True)
    p = cls_sub.add_parser("to-forest")
    p.add_argument("--term", required=True)

    p = sub.add_parser("selfcheck", help="run the seeded property suites")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--max-poset-size", type=int, default=8)
    p.add_argument("--max-dim", type=int, default=4)
    p.add_argument("--suite", action="append", choices=sorted(SUITES), default=None)

    return parser


def _run(args) -> int:
    cmd = args.command

    if cmd == "poset":
        P = _poset(args.file)
        if args.action == "check":
            _emit_bool(True)
        else:
            report = classify_forest(P)
            info = {
                "elements": list(P.elements),
                "covers": [list(c) for c in P.covers()],
                "minimal": sorted(P.minimal_elements()),
                "is_forest": report.is_forest,
                "linear_extension": P.linear_extension(),
            }
            if report.is_forest:
                info["trees"] = [
                    {"root": t.root, "members": sorted(t.members)} for t in report.trees
                ]
            else:
                info["wedge_witness"] = list(report.witness)
            _emit(info)
        return 0

    if cmd == "positive":
        P = _poset(args.poset)
        _emit_bool(is_positive(_vector(P, args.vec)))
        return 0

    if cmd == "leq":
        P = _poset(args.poset)
        _emit_bool(leq(_vector(P, args.lhs), _vector(P, args.rhs)))
        return 0

    if cmd in ("sup", "inf"):
        P = _poset(args.poset)
        f, g = _vector(P, args.lhs), _vector(P, args.rhs)
        out = lattice.sup(f, g) if cmd == "sup" else lattice.inf(f, g)
        _emit(out.to_json())
        return 0

    if cmd == "abs":
        P = _poset(args.poset)
        _emit(lattice.abs_(_vector(P, args.vec)).to_json())
        return 0

    if cmd == "nosup-witness":
        P = _poset(args.poset)
        witness = lattice.no_sup_witness(P)
        start = _vector(P, args.start) if args.start else None
        chain = witness.chain(start, steps=args.steps)
        _emit(
            {
                "wedge": list(witness.triple),
                "f": witness.f.to_json(),
                "chain": [h.to_json() for h in chain.bounds],
            }
        )
        return 0

    if cmd == "decompose":
        P = _poset(args.poset)
        _emit(generators.decompose(P, _vector(P, args.vec)).to_json())
        return 0

    if cmd == "dual-gens":
        P = _poset(args.poset)
        _emit([g.to_json() for g in dual_generators(P)])
        return 0

    if cmd in ("tensor-member", "tensor-decompose"):
        S = _poset(args.left)
        T = _poset(args.right)
        u = LexVector(product(S, T), _load_json(args.vec))
        if cmd == "tensor-member":
            _emit_bool(kp_member(S, T, u))
        else:
            _emit(kp_decompose(S, T, u).to_json())
        return 0

    if cmd == "cone":
        C = _cone(args.cone)
        if args.action == "member":
            _emit_bool(cone_member(C, _load_json(args.vec)))
        elif args.action == "pointed":
            _emit_bool(is_pointed(C))
        elif args.action == "dual-vector":
            _emit([format_rational(a) for a in dual_vector(C)])
        else:
            _emit(lex_embed(C).to_json())
        return 0

    if cmd == "kp":
        X = _cone(args.left)
        Y = _cone(args.right)
        if args.action == "member":
            _emit_bool(kp_member_general(X, Y, _load_json(args.matrix)))
            return 0
        seed = args.seed if args.seed is not None else _default_seed()
        report = kp_pointedness_check(X, Y, trials=args.trials, seed=seed)
        _emit(report.to_json())
        return 0

    if cmd == "classify":
        if args.action == "to-term":
            F = _poset(args.poset)
            _emit(forest_to_term(F).to_json())
        else:
            term = SumTerm.from_json(_load_json(args.term))
            _emit(term_to_forest(term).to_json())
        return 0

    if cmd == "selfcheck":
        seed = args.seed if args.seed is not None else _default_seed()
        cfg = RunConfig(
            seed=seed,
            trials=args.trials,
            max_poset_size=args.max_poset_size,
            max_dim=args.max_dim,
            suites=tuple(args.suite) if args.suite else None,
        )
        report = run_selfcheck(cfg)
        _emit(report)
        return 0 if report["ok"] else 1

    raise AssertionError(f"unhandled command {cmd!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except (LexconeError, ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
