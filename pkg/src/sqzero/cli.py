"""Command-line front end.

Exit codes: 0 on success, 1 on a domain error, 2 on a parse error.  With
``--json`` results and errors are printed as JSON (sorted keys).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import boundary, orbital, render
from .dims import orbit_dim_formula, orbit_dim_oracle
from .errors import DomainError, ParseError, SizeError, SqzeroError
from .linalg import Matrix
from .normal import classify, normalize, verify_normalization
from .rank import hasse, leq
from .roots import Torus, Unipotent, positive_roots, product, inverse_product, x_of
from .scalars import GaussQ, format_scalar, parse_scalar
from .slp import (
    class_counts,
    endpoints,
    enumerate_slp,
    fixed_points,
    format_pattern,
    is_maximal,
    parse,
    total_bridges,
    total_crossings,
)

OUT_DIR_ENV = "SQZERO_OUT_DIR"


def _check_n(n: int, args) -> None:
    if n > args.max_n:
        raise SizeError(f"n={n} exceeds --max-n {args.max_n}")


def _pattern(text: str, args):
    L = parse(text)
    _check_n(L.n, args)
    return L


def read_matrix(path: str) -> Matrix:
    """Whitespace-separated rows of exact scalars, or a JSON list of rows."""
    text = Path(path).read_text() if path != "-" else sys.stdin.read()
    stripped = text.strip()
    try:
        if stripped.startswith("["):
            rows = [[parse_scalar(str(v)) for v in r] for r in json.loads(stripped)]
        else:
            rows = [
                [parse_scalar(tok) for tok in line.split()]
                for line in stripped.splitlines()
                if line.strip() and not line.lstrip().startswith("#")
            ]
    except (ValueError, json.JSONDecodeError) as e:
        raise ParseError(f"cannot read matrix: {e}") from None
    if not rows or any(len(r) != len(rows) for r in rows):
        raise ParseError("matrix must be square and nonempty")
    return Matrix(rows)


def _scalar(v) -> str:
    # sympy values only appear after --allow-irrational
    if isinstance(v, (int, Fraction, GaussQ)):
        return format_scalar(v)
    return str(v)


def format_matrix(M: Matrix) -> str:
    cells = [[_scalar(v) for v in r] for r in M.rows]
    w = max((len(c) for r in cells for c in r), default=1)
    return "\n".join(" ".join(c.rjust(w) for c in r) for r in cells)


def _matrix_json(M: Matrix) -> list:
    return [[_scalar(v) for v in r] for r in M.rows]


# commands; each returns (json_obj, text)

def cmd_enum(args):
    _check_n(args.n, args)
    pats = [format_pattern(L) for L in enumerate_slp(args.n, args.k)]
    return {"n": args.n, "k": args.k, "count": len(pats), "patterns": pats}, "\n".join(pats)


def cmd_stats(args):
    L = _pattern(args.pattern, args)
    p, q, r = class_counts(L)
    d = {
        "pattern": format_pattern(L),
        "l": len(L.arcs),
        "b": total_bridges(L),
        "c": total_crossings(L),
        "Ep": sorted(endpoints(L)),
        "Fp": sorted(fixed_points(L)),
        "maximal": is_maximal(L),
        "classes": {"positive": p, "mixed": q, "central": r},
    }
    text = "\n".join(f"{k}: {d[k]}" for k in ("pattern", "l", "b", "c", "Ep", "Fp", "maximal"))
    return d, text


def cmd_dim(args):
    L = _pattern(args.pattern, args)
    d = {
        "pattern": format_pattern(L),
        "formula": orbit_dim_formula(L),
        "oracle": orbit_dim_oracle(L),
        "b": total_bridges(L),
        "c": total_crossings(L),
    }
    return d, f"formula: {d['formula']}\noracle: {d['oracle']}\nb: {d['b']}\nc: {d['c']}"


def cmd_order(args):
    L1, L2 = _pattern(args.first, args), _pattern(args.second, args)
    if L1.n != L2.n:
        raise DomainError("patterns have different n")
    a, b = leq(L1, L2), leq(L2, L1)
    rel = "=" if a and b else "<" if a else ">" if b else "incomparable"
    text = "L1 incomparable with L2" if rel == "incomparable" else f"L1 {rel} L2"
    return {"first": format_pattern(L1), "second": format_pattern(L2), "relation": rel}, text


def cmd_hasse(args):
    _check_n(args.n, args)
    h = hasse(args.n, args.k)
    text = "\n".join(f"{u} > {v}" for u, v in h["edges"])
    return h, text


def cmd_boundary(args):
    L = _pattern(args.pattern, args)
    rep = boundary.report(L)
    lines = [f"{rep['pattern']}  dim {rep['dim']}"]
    for key in ("N", "D"):
        for e in rep[key]:
            flag = "ok" if e["verified"] else "FAILED"
            lines.append(f"{key} {e['case']:<10} drop {e['dim_drop']}  {e['pattern']}  {e['witness_text']}  [{flag}]")
    lines.append("C: " + ", ".join(rep["C"]))
    return rep, "\n".join(lines)


def cmd_classify(args):
    X = read_matrix(args.matrix)
    L = classify(X)
    return {"pattern": format_pattern(L)}, format_pattern(L)


def cmd_normalize(args):
    X = read_matrix(args.matrix)
    res = normalize(X, allow_irrational=args.allow_irrational)
    ok = verify_normalization(X, res)
    steps = [str(s) for s in res.steps]
    d = {"pattern": format_pattern(res.pattern), "witness": _matrix_json(res.witness), "steps": steps, "verified": ok}
    text = f"{format_pattern(res.pattern)}\n{format_matrix(res.witness)}\nverified: {ok}"
    return d, text


def cmd_conjugate(args):
    """A random Borel conjugate of X_L with small rational coefficients."""
    L = _pattern(args.pattern, args)
    rng = random.Random(args.seed)
    n = L.n
    factors = [Torus(i, Fraction(rng.choice([1, 2, 3, -1, -2]), rng.choice([1, 2, 3]))) for i in range(1, n + 1)]
    factors += [Unipotent(r, Fraction(rng.randint(-3, 3), rng.choice([1, 2]))) for r in positive_roots(n)]
    rng.shuffle(factors)
    Y = product(factors, n) @ x_of(L) @ inverse_product(factors, n)
    return {"pattern": format_pattern(L), "matrix": _matrix_json(Y)}, format_matrix(Y)


def _tableau_or_pattern(text: str, args):
    if "col2" in text:
        T = orbital.parse_sdt(text)
        _check_n(T.n, args)
        return T
    return _pattern(text, args)


def cmd_tableau(args):
    x = _tableau_or_pattern(args.input, args)
    if isinstance(x, orbital.TwoColumnSDT):
        T = x
        L = orbital.lp_of(T)
    else:
        L = x
        T = orbital.sdt_of(L)
    d = {
        "tableau": orbital.format_sdt(T),
        "pattern": format_pattern(L),
        "word": orbital.w_of(T),
        "steinberg": sorted(str(r) for r in orbital.steinberg_subspace(T)),
        "external": sorted(c.label() for c in orbital.external_pairs_formula(T)),
    }
    if args.to_lp:
        return d, d["pattern"]
    if args.to_sdt:
        return d, d["tableau"]
    text = "\n".join([d["tableau"], d["pattern"], f"w_T = {d['word']}", orbital.render_sdt(T)])
    return d, text


def cmd_closure(args):
    T = orbital.parse_sdt(args.tableau)
    _check_n(T.n, args)
    if args.chain:
        lines = orbital.closure_chain(T)
        d = {"tableau": orbital.format_sdt(T), "lines": [[str(c) for c in line] for line in lines]}
        text = "\n".join(f"k={T.k - 1 - i}: " + " u ".join(d["lines"][i]) for i in range(len(lines)))
        return d, text
    ci = orbital.variety_closure_intersection(T, args.drop)
    d = {
        "tableau": orbital.format_sdt(T),
        "drop": args.drop,
        "components": [str(c) for c in ci.components],
        "irreducible": ci.irreducible,
        "contains_orbital_variety": ci.contains_orbital_variety,
        "is_orbital_variety": ci.is_orbital_variety,
        "is_union_of_orbital_varieties": ci.is_union_of_orbital_varieties,
    }
    return d, "\n".join(d["components"])


def cmd_render(args):
    x = _tableau_or_pattern(args.input, args)
    if isinstance(x, orbital.TwoColumnSDT):
        out = render.svg_tableau(x) if args.format == "svg" else render.ascii_tableau(x) + "\n"
    else:
        out = render.svg_pattern(x) if args.format == "svg" else render.ascii_pattern(x) + "\n"
    return {"format": args.format, "output": out}, out.rstrip("\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sqzero", description="Square-zero Borel orbits in the symplectic nilradical.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--out", help="write output to FILE (relative to $%s if set)" % OUT_DIR_ENV)
    p.add_argument("--max-n", type=int, default=8, help="refuse inputs with larger n")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enum", help="list symmetric link patterns")
    s.add_argument("n", type=int)
    s.add_argument("-k", type=int, default=None, help="number of arcs")
    s.set_defaults(func=cmd_enum)

    for name, func, hlp in [
        ("stats", cmd_stats, "arc, bridge and crossing statistics"),
        ("dim", cmd_dim, "orbit dimension by formula and by linear algebra"),
        ("boundary", cmd_boundary, "codimension-one boundary with witnesses"),
    ]:
        s = sub.add_parser(name, help=hlp)
        s.add_argument("pattern")
        s.set_defaults(func=func)

    s = sub.add_parser("order", help="compare two patterns")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_order)

    s = sub.add_parser("hasse", help="cover relations as JSON")
    s.add_argument("n", type=int)
    s.add_argument("-k", type=int, default=None)
    s.set_defaults(func=cmd_hasse, json_default=True)

    s = sub.add_parser("classify", help="pattern of a square-zero matrix")
    s.add_argument("matrix", help="matrix file, or - for stdin")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("normalize", help="pattern and conjugating matrix")
    s.add_argument("matrix")
    s.add_argument("--allow-irrational", action="store_true")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("conjugate", help="random Borel conjugate of X_L")
    s.add_argument("pattern")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_conjugate)

    s = sub.add_parser("tableau", help="convert between tableaux and maximal patterns")
    s.add_argument("input")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--to-lp", action="store_true")
    g.add_argument("--to-sdt", action="store_true")
    s.set_defaults(func=cmd_tableau)

    s = sub.add_parser("closure", help="closure of an orbital variety in smaller orbits")
    s.add_argument("tableau")
    s.add_argument("--drop", type=int, choices=(1, 2), default=1)
    s.add_argument("--chain", action="store_true", help="all smaller orbits, one line each")
    s.set_defaults(func=cmd_closure)

    s = sub.add_parser("render", help="draw a pattern or tableau")
    s.add_argument("input")
    s.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    s.set_defaults(func=cmd_render)
    return p


def _emit(text: str, args) -> None:
    if args.out:
        path = Path(args.out)
        base = os.environ.get(OUT_DIR_ENV)
        if base and not path.is_absolute():
            path = Path(base) / path
        path.write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        obj, text = args.func(args)
    except ParseError as e:
        return _fail(args, "parse", e, 2)
    except SqzeroError as e:
        return _fail(args, "domain", e, 1)
    if args.command == "render" and not args.json:
        _emit(obj["output"].rstrip("\n"), args)
        return 0
    if args.json or getattr(args, "json_default", False):
        _emit(json.dumps(obj, indent=2, sort_keys=True), args)
    else:
        _emit(text, args)
    return 0


def _fail(args, kind: str, e: Exception, code: int) -> int:
    if args.json:
        print(json.dumps({"error": kind, "type": type(e).__name__, "message": str(e)}, sort_keys=True))
    else:
        print(f"error: {e}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
