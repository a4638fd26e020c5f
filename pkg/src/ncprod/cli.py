"""Command-line front end.

Exit codes: 0 success, 1 mathematical error, 2 parse error,
3 configuration error, 4 verify-suite failure.
"""

import argparse
import json
import sys

from . import checks
from .errors import ConfigError, NcprodError, ParseError
from .expr import format_coefficient, format_element, parse_element
from .lattice import (
    IntegerLattice,
    center_lattice,
    commutator_pairing,
    is_central_monomial,
    quotient_image,
    quotient_type,
    smith_normal_form,
)
from .obstruct import obstruction
from .twisted import AlgebraConfig
from .valtheory import inv, nth_root, residue, val

EXIT_VERIFY = 4


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def _parse_blocks(text):
    try:
        blocks = tuple(int(b) for b in text.split(",") if b.strip())
    except ValueError:
        raise ConfigError(f"--blocks must be comma-separated integers, got {text!r}")
    return AlgebraConfig(blocks)


def _parse_vector(text):
    try:
        return tuple(int(a) for a in text.strip().strip("()").split(","))
    except ValueError:
        raise ParseError(f"exponent vector must be comma-separated integers, got {text!r}")


def parse_matrix(text):
    """``2,0;0,3`` -> [[2, 0], [0, 3]]."""
    try:
        rows = [[int(x) for x in row.split(",")] for row in text.split(";") if row.strip()]
    except ValueError:
        raise ParseError(f"matrix entries must be integers, got {text!r}")
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ParseError(f"matrix rows must be nonempty and of equal length: {text!r}")
    return rows


def _matrix_text(M):
    return ";".join(",".join(str(x) for x in row) for row in M)


def _vec_text(v):
    return "(" + ",".join(str(a) for a in v) + ")"


def _strs(v):
    return [str(a) for a in v]


def _need_config(args):
    if not args.blocks:
        raise ConfigError(f"'{args.command}' requires --blocks")
    return _parse_blocks(args.blocks)


def _element_record(f):
    return {
        "text": format_element(f),
        "mode": f.mode.value,
        "prec": None if f.prec is None else str(f.prec),
        "terms": [
            {"exponent": _strs(alpha), "coeff": _strs(c.coeffs), "coeff_text": format_coefficient(c)}
            for alpha, c in f.sorted_terms()
        ],
    }


# -- subcommands: each returns (text, json-record) ---------------------------

def cmd_normalize(args):
    cfg = _need_config(args)
    f = parse_element(args.expr, cfg)
    return format_element(f), _element_record(f)


def cmd_val(args):
    cfg = _need_config(args)
    v = val(parse_element(args.expr, cfg))
    return v.to_text(), {"value": None if v.is_infinite else _strs(v.value), "infinite": v.is_infinite}


def cmd_residue(args):
    cfg = _need_config(args)
    c = residue(parse_element(args.expr, cfg))
    return c.to_text(), {"coeffs": _strs(c.coeffs), "text": c.to_text()}


def cmd_inv(args):
    cfg = _need_config(args)
    g = inv(parse_element(args.expr, cfg), args.prec)
    return format_element(g), _element_record(g)


def cmd_root(args):
    cfg = _need_config(args)
    b = nth_root(parse_element(args.expr, cfg), args.n, args.prec)
    return format_element(b), _element_record(b)


def cmd_pairing(args):
    cfg = _need_config(args)
    p = commutator_pairing(cfg, _parse_vector(args.alpha), _parse_vector(args.beta))
    value = p.to_cycnum().to_text()
    text = f"exponent={p.exponent} m={p.m} value={value}"
    return text, {"exponent": str(p.exponent), "m": str(p.m), "value": value}


def cmd_image(args):
    cfg = _need_config(args)
    img = quotient_image(cfg, _parse_vector(args.alpha))
    moduli = [cfg.blocks[k // 2] for k in range(cfg.dim)]
    text = f"{_vec_text(img)} mod {_vec_text(moduli)}"
    return text, {"image": _strs(img), "moduli": _strs(moduli)}


def cmd_central(args):
    cfg = _need_config(args)
    ok = is_central_monomial(cfg, _parse_vector(args.alpha))
    return ("true" if ok else "false"), {"central": ok}


def cmd_snf(args):
    M = parse_matrix(args.matrix)
    U, S, V = smith_normal_form(M)
    diag = [S[i][i] for i in range(min(len(S), len(S[0])))]
    text = "\n".join([
        f"U = {_matrix_text(U)}",
        f"S = {_matrix_text(S)}",
        f"V = {_matrix_text(V)}",
        f"invariant factors = {_vec_text(diag)}",
    ])
    rec = {
        "U": [_strs(r) for r in U],
        "S": [_strs(r) for r in S],
        "V": [_strs(r) for r in V],
        "invariant_factors": _strs(diag),
    }
    return text, rec


def cmd_grouptype(args):
    if args.matrix:
        M = parse_matrix(args.matrix)
        lat = IntegerLattice(len(M[0]), tuple(tuple(r) for r in M))
    elif args.blocks:
        lat = center_lattice(_parse_blocks(args.blocks))
    else:
        raise ConfigError("grouptype needs a matrix or --blocks")
    t = quotient_type(lat.dim, lat)
    order = "inf" if t.order is None else str(t.order)
    text = (
        f"{t.to_text()}  invariant factors={_vec_text(t.invariant_factors)} "
        f"free_rank={t.free_rank} rank={t.rank} order={order}"
    )
    rec = {
        "invariant_factors": _strs(t.invariant_factors),
        "free_rank": str(t.free_rank),
        "rank": str(t.rank),
        "order": order,
        "text": t.to_text(),
    }
    return text, rec


def cmd_obstruction(args):
    v = obstruction(args.n, args.char)
    cert = v.certificate
    lines = [
        f"verdict: {v.verdict.value}",
        f"n = {cert.n}, char = {cert.char}",
        f"factorization: {' * '.join(map(str, cert.factorization))}",
        f"forced G: {cert.group_type} (rank {cert.group_rank})",
        f"D2 bound: rank {cert.d2_bound}",
        f"witness prime: {cert.witness_prime if cert.witness_prime else '-'}",
        f"D1: {cert.witness_d1.describe()}",
        f"D2: {cert.witness_d2.describe()}",
        "trail:",
    ] + [f"  {t}" for t in cert.trail]
    return "\n".join(lines), v.to_dict()


def cmd_verify(args):
    results = checks.run_suites(args.seed, args.trials)
    text = "\n".join(r.line() for r in results)
    rec = {
        "seed": str(args.seed),
        "trials": str(args.trials),
        "suites": [
            {"name": r.name, "passed": r.passed, "checks": str(r.checks), "detail": r.detail}
            for r in results
        ],
    }
    return text, rec, all(r.passed for r in results)


def build_parser():
    common = _ArgumentParser(add_help=False)
    common.add_argument("--blocks", help="block sizes n1,n2,... (each >= 2)")
    common.add_argument("--prec", type=int, default=8, help="total-degree precision N (default 8)")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = _ArgumentParser(prog="ncprod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    for name, fn, help_ in [
        ("normalize", cmd_normalize, "print the canonical normal form"),
        ("val", cmd_val, "valuation (minimum of support, right-to-left lex)"),
        ("residue", cmd_residue, "image in the residue field"),
        ("inv", cmd_inv, "inverse modulo total degree > N"),
    ]:
        add(name, fn, help_).add_argument("expr")
    p = add("root", cmd_root, "unique n-th root in 1 + m_D")
    p.add_argument("--n", type=int, required=True, help="root degree")
    p.add_argument("expr")
    p = add("pairing", cmd_pairing, "commutator pairing of two exponent vectors")
    p.add_argument("alpha")
    p.add_argument("beta")
    add("image", cmd_image, "class in Gamma_D/Gamma_F").add_argument("alpha")
    add("central", cmd_central, "is x^alpha central").add_argument("alpha")
    add("snf", cmd_snf, "Smith normal form of a matrix like 2,0;0,3").add_argument("matrix")
    add("grouptype", cmd_grouptype, "type of Z^d / rowspace(matrix), or Gamma_D/Gamma_F").add_argument(
        "matrix", nargs="?"
    )
    p = add("obstruction", cmd_obstruction, "run the noncrossed-product rank argument")
    p.add_argument("n", type=int)
    p.add_argument("--char", type=int, default=0, help="characteristic of k (0 or a prime)")
    p = add("verify", cmd_verify, "run every property suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=500)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except NcprodError as exc:
        print(f"error: {exc}", file=err)
        return exc.exit_code
    ok = True
    if len(result) == 3:
        text, rec, ok = result
    else:
        text, rec = result
    if args.json:
        print(json.dumps({"command": args.command, "result": rec}, indent=2), file=out)
    else:
        print(text, file=out)
    return 0 if ok else EXIT_VERIFY


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
