"""Command-line front end.

Exit codes: 0 success / PASS, 1 FAIL, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .pipeline import (
    MERIDIAN_BOUNDS,
    ABasisResult,
    a_polynomial,
    b_polynomial,
    peripheral_to_abasis,
    specialize_and_swap,
    verify_orthogonality,
)
from .quantum_plane import GroebnerBasis, buchberger
from .quantum_torus import clear_to_plane
from .skein_torus import SkeinParseError, bp_relators
from .solid_torus import annihilator_search

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _emit_basis(basis, args, **extra) -> None:
    if args.output:
        io.write_ideal(args.output, basis, **extra)
    if args.json:
        print(io.dumps_ideal(io.ideal_to_json(basis, **extra)), end="")
    else:
        for f in basis:
            print(f)


def _plane_gens(polys, coords):
    if coords == "monomial":
        return list(polys)
    gens = []
    for x in polys:
        if x:
            gens.append(clear_to_plane(x)[0])
    return gens


def cmd_gb(args) -> int:
    polys, coords, header = io.read_ideal(args.ideal)
    gens = _plane_gens(polys, coords)
    if not any(gens):
        raise io.InputError(f"{args.ideal}: all generators are zero")
    G = buchberger(gens, t0=-1 if args.t_minus_one else None)
    _emit_basis(G.polys, args)
    return EXIT_OK


def cmd_abasis(args) -> int:
    knot = io.read_knot(args.knot)
    res = peripheral_to_abasis(knot)
    if not args.json:
        print(f"# knot {knot.name}, bounding curve {list(knot.bounding_curve)}")
        for g, sh in zip(res.cleared, res.shifts):
            print(f"# cleared by l^{sh.a} m^{sh.b}: {g}")
    _emit_basis(res.basis.polys, args, convention=list(knot.bounding_curve), knot=knot.name)
    return EXIT_OK


def _read_basis(path) -> ABasisResult:
    polys, coords, header = io.read_ideal(path)
    if coords != "monomial":
        raise io.InputError(f"{path}: a basis file must use monomial coordinates")
    conv = tuple(header.get("convention", MERIDIAN_BOUNDS))
    if conv not in ((0, 1), (1, 0)):
        raise io.InputError(f"{path}.convention: must be [0, 1] or [1, 0]")
    return ABasisResult(GroebnerBasis(tuple(polys)), [], conv, True)


def cmd_specialize(args) -> int:
    for p in specialize_and_swap(_read_basis(args.basis)):
        print(p.as_expr().factor())
    return EXIT_OK


def cmd_apoly(args) -> int:
    ps = specialize_and_swap(_read_basis(args.basis))
    B = b_polynomial(ps)
    A = a_polynomial(B)
    print(f"B = {B.as_expr().factor()}   (principal closure, not radical)")
    print(f"A = {A.as_expr().factor()}")
    return EXIT_OK


def cmd_verify(args) -> int:
    knot = io.read_knot(args.knot)
    if knot.kappa is None:
        raise io.InputError(f"{args.knot}: knot has no kappa sequence")
    report = verify_orthogonality(knot, args.depth)
    for line in report.lines():
        print(line)
    print("PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_annihilate(args) -> int:
    z = io.read_kappa(args.kappa)
    res = annihilator_search(z, args.pmax, args.qmax, args.depth)
    print(f"# nullspace of dimension {len(res.vectors)}, verified through c = {args.depth} only")
    for s in res.skeins():
        print(s)
    return EXIT_OK


def cmd_relators(args) -> int:
    for r in bp_relators(flipped=args.flipped):
        print(r)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ncapoly", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def out_flags(p):
        p.add_argument("--json", action="store_true", help="print the basis as an ideal file")
        p.add_argument("-o", "--output", help="also write the basis to this ideal file")

    p = sub.add_parser("gb", help="minimal reduced Groebner basis of a left ideal")
    p.add_argument("--ideal", required=True)
    p.add_argument("--t-minus-one", action="store_true", help="specialize at t = -1 (commutative case)")
    out_flags(p)
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("abasis", help="A-basis from a knot file")
    p.add_argument("--knot", required=True)
    out_flags(p)
    p.set_defaults(func=cmd_abasis)

    p = sub.add_parser("specialize", help="basis at t = -1 in character coordinates")
    p.add_argument("--basis", required=True)
    p.set_defaults(func=cmd_specialize)

    p = sub.add_parser("apoly", help="B- and A-polynomial from a basis file")
    p.add_argument("--basis", required=True)
    p.set_defaults(func=cmd_apoly)

    p = sub.add_parser("verify", help="check peripheral generators against kappa")
    p.add_argument("--knot", required=True)
    p.add_argument("--depth", type=int, default=50)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("annihilate", help="bounded search for skeins annihilating kappa")
    p.add_argument("--kappa", required=True, help="kappa file or builtin:unknot")
    p.add_argument("--pmax", type=int, default=1)
    p.add_argument("--qmax", type=int, default=1)
    p.add_argument("--depth", type=int, default=20)
    p.set_defaults(func=cmd_annihilate)

    p = sub.add_parser("relators", help="Bullock-Przytycki relators under the torus isomorphism")
    p.add_argument("--flipped", action="store_true", help="use the opposite stacking order")
    p.set_defaults(func=cmd_relators)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    for name in ("depth", "pmax", "qmax"):
        if getattr(args, name, 0) is not None and getattr(args, name, 0) < 0:
            print(f"error: --{name} must be nonnegative", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args)
    except (io.InputError, SkeinParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
