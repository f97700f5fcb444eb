"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 computation error.
Negative d works positionally (``classgroup -5``), as ``--d=-5``, or after
``--``.
"""
import argparse
import ast
import json
import os
import re
import sys

from . import capitulation, classgroup, cyclotomic, ideals, splitting
from .claims import DEFAULT_BOUNDS, DEFAULT_FIELDS, render_report, run_claims
from .errors import InputError, ParseError, WorkbenchError
from .quadfield import QuadraticField


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def parse_element(K, text):
    """Parse an element of K: integers, fractions, ``r`` or ``sqrt(d)`` or
    ``√d`` for sqrt(d), ``w`` for the integral basis element, + - * / ** ()."""
    src = re.sub(r"√\(?(-?\d+)\)?", r"sqrt(\1)", text.strip())
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse element {text!r}") from exc

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return K(node.value)
        if isinstance(node, ast.Name):
            if node.id == "r":
                return K.sqrt_d()
            if node.id == "w":
                return K.w
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id == "sqrt":
            if len(node.args) == 1:
                v = ev(node.args[0])
                if v == K.d:
                    return K.sqrt_d()
            raise ParseError(f"only sqrt({K.d}) is available in {K}")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                return a / b
            if isinstance(node.op, ast.Pow) and b.b == 0 and b.a.denominator == 1:
                return a ** int(b.a)
        raise ParseError(f"unsupported syntax in {text!r}")

    return ev(tree)


def _int(text):
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"expected an integer, got {text!r}")


def _field(args):
    d = args.d_opt if args.d_opt is not None else args.d
    if d is None:
        raise UsageError("missing field parameter d")
    return QuadraticField(_int(d))


def _frac(x):
    return f"{x.numerator}/{x.denominator}"


def default_bound():
    env = os.environ.get("WORKBENCH_BOUND")
    if env:
        return _int(env)
    return capitulation.DEFAULT_BOUND


# -- subcommands ------------------------------------------------------------

def cmd_field(args):
    K = _field(args)
    mk = classgroup.minkowski_bound(K)
    data = {"d": K.d, "D": K.D, "omega": K.omega_str,
            "ramified": sorted(splitting.ramified_set(K)), "minkowski": _frac(mk)}
    text = (f"d = {K.d}\nD = {K.D}\nomega = {K.omega_str}\n"
            f"ramified = {', '.join(map(str, data['ramified']))}\n"
            f"minkowski <= {float(mk):.6f} ({_frac(mk)})")
    return data, text


def cmd_ideal(args):
    K = _field(args)
    I = ideals.from_generators(K, [parse_element(K, g) for g in args.gens])
    data = {"ideal": I.to_json(), "text": I.to_text()}
    lines = [f"{I}  {I.to_text()}"]
    if args.dual:
        J = ideals.dual(I)
        data["dual"] = J.to_json()
        lines.append(f"dual = {J}  {J.to_text()}")
    if args.norm:
        data["norm"] = _frac(I.norm())
        lines.append(f"norm = {I.norm()}")
    if args.principal:
        g = ideals.generator(I)
        data["principal"] = g is not None
        data["generator"] = str(g) if g is not None else None
        lines.append(f"principal: generator {g}" if g is not None else "not principal")
    if args.order:
        n = ideals.class_order(I)
        data["order"] = n
        lines.append(f"class order = {n}")
    return data, "\n".join(lines)


def cmd_classgroup(args):
    K = _field(args)
    C = classgroup.class_group(K)
    gens = ", ".join(str(G) for G in C.generators)
    if C.h == 1:
        text = "h = 1, trivial"
    else:
        word = "generator" if len(C.generators) == 1 else "generators"
        text = f"h = {C.h}, {C.structure_str()}, {word} {gens}"
    return C.to_json(), text


def cmd_sclass(args):
    K = _field(args)
    try:
        S = {int(p) for p in args.primes.split(",") if p.strip()}
    except ValueError:
        raise UsageError(f"bad prime list {args.primes!r}")
    Q = classgroup.s_class_group(K, S)
    data = Q.to_json()
    data["S"] = sorted(S)
    return data, f"S = {sorted(S)}: h_S = {Q.h}, {Q.structure_str()}"


def cmd_witness(args):
    K = _field(args)
    w = splitting.nonufd_witness(K)
    if w is None:
        return {"d": K.d, "witness": None}, "no witness below bound"
    data = w.to_json()
    return data, f"{w.p1} * {w.p2} = ({w.q1}) * ({w.q2})"


def cmd_capitulate(args):
    K = _field(args)
    gens = [parse_element(K, g) for g in args.ideal.split(",")]
    I = ideals.from_generators(K, gens)
    bound = args.bound if args.bound is not None else default_bound()
    if ideals.is_principal(I) is not None:
        g = ideals.generator(I)
        return ({"d": K.d, "ideal": I.to_json(), "n": 1, "status": capitulation.FOUND,
                 "gamma": str(g), "verified": True},
                f"{I} is already principal, generated by {g}")
    cert = capitulation.capitulate(K, I, bound=bound)
    data = cert.to_json()
    if cert.status == capitulation.FOUND:
        text = (f"{I}: order {cert.order.n}, x^{cert.order.n} = {cert.order.alpha}, "
                f"FOUND gamma = {cert.gamma_coords()[0]}/{cert.gamma_coords()[1]} "
                f"(verified {cert.checked})")
    else:
        text = f"{I}: UNDECIDED within bound {bound}"
    return data, text


def cmd_gauss(args):
    p = _int(args.p)
    g = cyclotomic.gauss_sum(p)
    ok = cyclotomic.verify_gauss_square(p)
    sign = -1 if p % 4 == 3 else 1
    data = {"p": p, "coeffs": list(g.coeffs), "square": sign * p, "verified": ok}
    return data, f"g = {g}\ng^2 = {sign * p}: {'verified' if ok else 'FAILED'}"


def cmd_sqrt_embed(args):
    d = _int(args.d_opt if args.d_opt is not None else args.d)
    n, w = cyclotomic.embed_sqrt(d)
    data = cyclotomic.witness_json(d, n, w)
    return data, f"sqrt({d}) = {w} in Q(zeta_{n}); verified {data['verified']}"


def _load_config(path):
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}")
    if not isinstance(cfg, dict) or set(cfg) - {"fields", "bounds"}:
        raise UsageError("config must be {fields: [...], bounds: {...}}")
    fields = cfg.get("fields", list(DEFAULT_FIELDS))
    bounds = cfg.get("bounds", {})
    if not all(isinstance(d, int) for d in fields):
        raise UsageError("config fields must be integers")
    if set(bounds) - set(DEFAULT_BOUNDS):
        raise UsageError(f"unknown bounds {sorted(set(bounds) - set(DEFAULT_BOUNDS))}")
    return fields, bounds


def cmd_claims(args):
    if args.fields and args.config:
        raise UsageError("use either --fields or --config")
    bounds = {}
    if args.config:
        fields, bounds = _load_config(args.config)
    elif args.fields:
        fields = [_int(x) for x in args.fields.split(",") if x.strip()]
    else:
        fields = list(DEFAULT_FIELDS)
    if "WORKBENCH_BOUND" in os.environ and "capitulation_bound" not in bounds:
        bounds["capitulation_bound"] = default_bound()
    report = run_claims(fields, bounds)
    return report, None


# -- parser -----------------------------------------------------------------

def _add_d(p):
    p.add_argument("d", nargs="?", help="squarefree integer d (negative values allowed)")
    p.add_argument("--d", dest="d_opt", metavar="D", help="alternative spelling, e.g. --d=-5")


def build_parser():
    parser = _Parser(prog="quadbench", description="Exact workbench for quadratic fields.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.set_defaults(func=func)
        return p

    p = add("field", cmd_field, "discriminant, integral basis, ramified primes, Minkowski bound")
    _add_d(p)
    p = add("ideal", cmd_ideal, "ideal generated by elements (use r for sqrt(d), w for the basis element)")
    p.add_argument("d")
    p.add_argument("gens", nargs="+")
    p.add_argument("--d", dest="d_opt", metavar="D")
    p.add_argument("--dual", action="store_true")
    p.add_argument("--norm", action="store_true")
    p.add_argument("--principal", action="store_true")
    p.add_argument("--order", action="store_true")
    p = add("classgroup", cmd_classgroup, "class group structure and representatives")
    _add_d(p)
    p = add("sclass", cmd_sclass, "class group with the primes above S inverted")
    _add_d(p)
    p.add_argument("--primes", required=True, help="comma-separated rational primes")
    p = add("witness", cmd_witness, "irreducibles p1 p2 = q1 q2 showing non-unique factorization")
    _add_d(p)
    p = add("capitulate", cmd_capitulate, "principality certificate in a cyclic extension")
    _add_d(p)
    p.add_argument("--ideal", required=True, help="comma-separated generators")
    p.add_argument("--bound", type=int, default=None)
    p = add("gauss", cmd_gauss, "quadratic Gauss sum and its square")
    p.add_argument("p")
    p = add("sqrt-embed", cmd_sqrt_embed, "sqrt(d) inside a cyclotomic field")
    _add_d(p)
    p = add("claims", cmd_claims, "run the claim harness")
    p.add_argument("--fields", help="comma-separated list of d")
    p.add_argument("--config", help="JSON file {fields: [...], bounds: {...}}")
    return parser


_LIST_FLAGS = ("--fields", "--primes")


def _join_list_flags(argv):
    """``--fields -5,-23`` would read as an unknown flag; glue the value on."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--":
            out.append(tok)
            out.extend(it)
            break
        if tok in _LIST_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = _join_list_flags(sys.argv[1:] if argv is None else list(argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError(parser.format_help())
        result, text = args.func(args)
    except UsageError as exc:
        stderr.write(str(exc).rstrip() + "\n")
        return 1
    except InputError as exc:
        stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 1
    except WorkbenchError as exc:
        stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 2
    if args.command == "claims":
        stdout.write(render_report(result, args.format))
    elif args.format == "json":
        stdout.write(json.dumps(result, sort_keys=True, indent=2) + "\n")
    else:
        stdout.write(text + "\n")
    return 0


def run():
    sys.exit(main())
