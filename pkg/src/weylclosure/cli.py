"""Command-line surface: riquier, member, solve, prop1 and verify-witness.

Exit codes: 0 on success, 1 when a decision command answers "false",
2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from .closure import (
    Witness,
    membership_via_lemma1,
    oracle_division_member_1d,
    verify_witness,
    weyl_closure_member,
)
from .errors import WeylClosureError
from .formatting import format_operator, format_polynomial
from .jets import (
    basis_denominators,
    constraint_matrix,
    formal_solve,
    pick_regular_point,
    solution_space_dim,
)
from .linalg import nullity
from .parsing import parse_operator, parse_rational
from .riquier import complete_to_riquier_basis
from .systemio import (
    SystemFile,
    format_derivative,
    jet_to_json,
    load_system,
    parse_initial_conditions,
    parse_point,
)


def _emit(document: dict) -> None:
    json.dump(document, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _resolve_point(args, system: SystemFile, basis):
    if getattr(args, "point", None):
        return parse_point(args.point, system.m, system.field_mode)
    if system.point is not None:
        return system.point
    return pick_regular_point(basis_denominators(basis), system.m)


def _cmd_riquier(args) -> int:
    system = load_system(args.system, args.field)
    basis = complete_to_riquier_basis(system.generators, system.m, system.n)
    s = args.s if args.s is not None else (system.s if system.s is not None else basis.s0)
    _emit({
        "basis": [format_operator(p) for p in basis.elements],
        "s0": basis.s0,
        "parametric": [
            format_derivative(d, system.m, system.n)
            for d in basis.parametric_up_to(s)
        ],
        "s": s,
    })
    return 0


def _cmd_member(args) -> int:
    system = load_system(args.system, args.field)
    if args.q is not None:
        q = parse_operator(args.q, system.m, system.n, system.field_mode)
    elif system.q is not None:
        q = system.q
    else:
        raise WeylClosureError("no candidate q given (use --q or a 'q:' line)")
    result = weyl_closure_member(q, system.generators)
    document = {
        "member": result.member,
        "normal_form": format_operator(result.normal_form),
        "witness": None,
    }
    if result.witness is not None:
        document["witness"] = {
            "w": format_polynomial(result.witness.w),
            "cofactors": [format_operator(h) for h in result.witness.cofactors],
        }
    if args.cross_check:
        lemma = membership_via_lemma1(q, system.generators)
        document["lemma1_member"] = lemma
        agree = lemma == result.member
        if system.m == 1 and system.n == 1 and len(system.generators) == 1:
            euclid = oracle_division_member_1d(q, system.generators[0])
            document["euclidean_member"] = euclid
            agree = agree and euclid == result.member
        if not agree:
            _emit(document)
            print("cross-check disagreement", file=sys.stderr)
            return 2
    _emit(document)
    return 0 if result.member else 1


def _cmd_solve(args) -> int:
    system = load_system(args.system, args.field)
    basis = complete_to_riquier_basis(system.generators, system.m, system.n)
    point = _resolve_point(args, system, basis)
    init = {}
    if args.init:
        init = parse_initial_conditions(args.init, system.m, system.n,
                                        system.field_mode)
    if args.order is not None:
        order = args.order
    elif system.truncation is not None:
        order = system.truncation
    else:
        order = basis.s0 + 4
    jet = formal_solve(basis, point, init, order)
    _emit(jet_to_json(jet))
    return 0


def _cmd_prop1(args) -> int:
    system = load_system(args.system, args.field)
    basis = complete_to_riquier_basis(system.generators, system.m, system.n)
    point = _resolve_point(args, system, basis)
    s = args.s if args.s is not None else (system.s if system.s is not None else basis.s0)
    matrix = constraint_matrix(basis, s, point)
    _emit({
        "rows": len(matrix.rows),
        "columns": len(matrix.columns),
        "nullity": nullity(matrix.rows, len(matrix.columns)),
        "parametric_count": len(basis.parametric_up_to(s)),
        "s": s,
    })
    return 0


def _cmd_verify_witness(args) -> int:
    system = load_system(args.system, args.field)
    if args.q is not None:
        q = parse_operator(args.q, system.m, system.n, system.field_mode)
    elif system.q is not None:
        q = system.q
    else:
        raise WeylClosureError("no candidate q given (use --q or a 'q:' line)")
    w = parse_rational(args.w, system.m, system.field_mode)
    if not w.is_polynomial():
        raise WeylClosureError("witness w must be a polynomial")
    cofactors = [
        parse_operator(text, system.m, 1, system.field_mode) for text in args.h
    ]
    valid = verify_witness(Witness(w.num, cofactors), q, system.generators)
    _emit({"valid": valid})
    return 0 if valid else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylclosure",
        description="Exact Weyl-closure membership, Riquier bases and formal jet solutions.",
    )
    parser.add_argument("--field", choices=("real", "complex"), default="real",
                        help="field mode used when the system file does not declare one")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("riquier", help="compute a Riquier basis and parametric derivatives")
    p.add_argument("system")
    p.add_argument("--s", type=int, default=None)
    p.set_defaults(func=_cmd_riquier)

    p = sub.add_parser("member", help="decide Weyl-closure membership with a witness")
    p.add_argument("system")
    p.add_argument("--q", default=None, help="candidate operator row")
    p.add_argument("--cross-check", action="store_true",
                   help="also run the independent decision paths and compare")
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("solve", help="compute a truncated formal solution jet")
    p.add_argument("system")
    p.add_argument("--point", default=None, help="base point coordinates, comma separated")
    p.add_argument("--init", default=None,
                   help="parametric initial values, e.g. '1=1, D=0'")
    p.add_argument("--order", type=int, default=None, help="truncation order T")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("prop1", help="jet-constraint matrix dimensions and nullity")
    p.add_argument("system")
    p.add_argument("--point", default=None)
    p.add_argument("--s", type=int, default=None)
    p.set_defaults(func=_cmd_prop1)

    p = sub.add_parser("verify-witness", help="check a witness identity exactly")
    p.add_argument("system")
    p.add_argument("--q", default=None)
    p.add_argument("--w", required=True, help="witness polynomial")
    p.add_argument("--h", action="append", default=[],
                   help="cofactor operator (repeat once per generator)")
    p.set_defaults(func=_cmd_verify_witness)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (WeylClosureError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
