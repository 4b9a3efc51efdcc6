"""Command-line front end.

Exit codes: 0 success, 1 decoding failure, 2 usage or configuration error.

Code descriptor files start with a kind line (``gabidulin``, ``kk`` or
``mv``) followed by that code's own descriptor lines.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import bench
from .ffield import make_field, random_rank_error
from .gabidulin import DecodingFailure, GabidulinCode, example1
from .interp import format_trace
from .kk import KKCode
from .mv import MVCode, make_code
from .subspace import SubspaceBasis


class UsageError(Exception):
    pass


def load_code(path: str):
    text = Path(path).read_text(encoding="utf-8")
    kind, _, body = text.strip().partition("\n")
    kind = kind.strip()
    if kind == "gabidulin":
        return GabidulinCode.from_description(body)
    if kind == "kk":
        return KKCode.from_description(body)
    if kind == "mv":
        return MVCode.from_description(body)
    raise UsageError(f"unknown code kind {kind!r} in {path}")


def dump_code(code) -> str:
    kind = {GabidulinCode: "gabidulin", KKCode: "kk", MVCode: "mv"}[type(code)]
    return f"{kind}\n{code.describe()}\n"


def _field_of(code):
    return code.big if isinstance(code, MVCode) else code.field


def _q_of(code) -> int:
    return _field_of(code).q


def read_vector(text: str, field) -> list[int]:
    return [field.parse(tok) for tok in text.split()]


def write_vector(vec, field) -> str:
    return " ".join(field.render(a) for a in vec) + "\n"


def _read_message(code, text: str) -> list[int]:
    if isinstance(code, MVCode):
        return [int(tok) for tok in text.split()]
    return read_vector(text, code.field)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _parse_modulus(s: str | None):
    return None if s is None else [int(c) for c in s.split(",")]


# --- subcommands --------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.kind == "gabidulin":
        if args.example1:
            code = example1()[0]
        else:
            _need(args, "q", "m", "n", "k")
            field = make_field(args.q, args.m, _parse_modulus(args.modulus))
            if args.points:
                code = GabidulinCode(field, args.n, args.k, tuple(field.parse(t) for t in args.points.split(",")))
            else:
                code = GabidulinCode.standard(field, args.n, args.k)
    elif args.kind == "kk":
        _need(args, "q", "m", "l", "k")
        field = make_field(args.q, args.m, _parse_modulus(args.modulus))
        if args.points:
            code = KKCode(field, args.l, args.k, tuple(field.parse(t) for t in args.points.split(",")))
        else:
            code = KKCode.standard(field, args.l, args.k)
    else:
        _need(args, "q", "m", "l", "k", "L")
        code = make_code(args.q, args.m, args.l, args.k, args.L, seed=args.seed, modulus=_parse_modulus(args.modulus))
    _emit(dump_code(code), args.out)
    return 0


def _need(args, *names) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing required option(s): " + ", ".join("--" + n for n in missing))


def cmd_encode(args) -> int:
    code = load_code(args.code)
    u = _read_message(code, Path(args.inp).read_text(encoding="utf-8"))
    if isinstance(code, GabidulinCode):
        _emit(write_vector(code.encode(u), code.field), args.out)
    else:
        _emit(code.encode(u).dumps(), args.out)
    return 0


def cmd_corrupt(args) -> int:
    code = load_code(args.code)
    rng = random.Random(args.seed)
    text = Path(args.inp).read_text(encoding="utf-8")
    if isinstance(code, GabidulinCode):
        f = code.field
        x = read_vector(text, f)
        if args.error:
            e = read_vector(Path(args.error).read_text(encoding="utf-8"), f)
        else:
            e = random_rank_error(f, code.n, args.t, rng)
        if len(e) != len(x):
            raise UsageError("error vector length does not match the codeword")
        _emit(write_vector([f.add(a, b) for a, b in zip(x, e)], f), args.out)
        return 0
    V = SubspaceBasis.loads(text, _q_of(code))
    if isinstance(code, KKCode):
        U = code.channel(V, args.rho, args.t, rng)
    else:
        if args.rho:
            raise UsageError("the MV channel has no erasures")
        U = code.channel(V, args.t, rng)
    _emit(U.dumps(), args.out)
    return 0


def cmd_decode(args) -> int:
    code = load_code(args.code)
    text = Path(args.inp).read_text(encoding="utf-8")
    if isinstance(code, MVCode):
        U = SubspaceBasis.loads(text, code.q)
        res = code.interpolate(code.extract_points(U))
        lines = [f"functionals {res.num_functionals}", f"Q = {res.Q}"]
        if not res.within_bounds:
            lines.append("FAIL degree " + " ".join(f"Q{s}:{d}>{b}" for s, d, b in res.violations))
            _emit("\n".join(lines) + "\n", args.out)
            return 1
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    try:
        if isinstance(code, GabidulinCode):
            u = code.decode(read_vector(text, code.field))
        else:
            u = code.decode(SubspaceBasis.loads(text, code.field.q))
    except DecodingFailure as exc:
        _emit(f"FAIL {exc.reason}\n", args.out)
        return 1
    _emit(write_vector(u, code.field), args.out)
    return 0


def cmd_trace(args) -> int:
    code = load_code(args.code)
    if not isinstance(code, (GabidulinCode, KKCode)):
        raise UsageError("trace needs a gabidulin or kk code")
    text = Path(args.inp).read_text(encoding="utf-8")
    if isinstance(code, GabidulinCode):
        result = code.interpolation(read_vector(text, code.field))
    else:
        result = code.interpolation(SubspaceBasis.loads(text, code.field.q))
    out = format_trace(code.field, result, normalize=args.normalize)
    status = 0
    try:
        from .gabidulin import factor_message

        f = factor_message(result.minimum, code.k, result)
        out += "message = " + write_vector([f.coeff(i) for i in range(code.k)], code.field)
    except DecodingFailure as exc:
        out += f"FAIL {exc.reason}\n"
        status = 1
    _emit(out, args.out)
    return status


def cmd_bench(args) -> int:
    if args.code:
        code = load_code(args.code)
        if not isinstance(code, MVCode):
            raise UsageError("bench needs an mv code")
    else:
        code = make_code(args.q, args.m, args.l, args.k, args.L, seed=args.seed)
    t_max = code.max_errors() if args.t is None else args.t
    if t_max > code.max_errors() or t_max < 0:
        raise UsageError(f"t range 0..{t_max} leaves the feasible range 0..{code.max_errors()}")
    rows = bench.run(code, range(t_max + 1), reps=args.reps, seed=args.seed)
    _emit(bench.to_csv(rows), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lininterp", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a code descriptor")
    g.add_argument("kind", choices=["gabidulin", "kk", "mv"])
    for name in ("q", "m", "n", "k", "l", "L"):
        g.add_argument(f"--{name}", type=int)
    g.add_argument("--modulus", help="comma-separated coefficients, lowest degree first")
    g.add_argument("--points", help="comma-separated evaluation points / alphas")
    g.add_argument("--example1", action="store_true", help="the worked (6,2) Gabidulin example")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    for name, func, hlp in (
        ("encode", cmd_encode, "encode a message"),
        ("corrupt", cmd_corrupt, "pass a codeword through the channel"),
        ("decode", cmd_decode, "decode a received word or subspace"),
        ("trace", cmd_trace, "print the interpolation trace"),
    ):
        s = sub.add_parser(name, help=hlp)
        s.add_argument("--code", required=True)
        s.add_argument("--in", dest="inp", required=True)
        s.add_argument("--out")
        s.set_defaults(func=func)
        if name == "corrupt":
            s.add_argument("--seed", type=int, default=0)
            s.add_argument("--t", type=int, default=0)
            s.add_argument("--rho", type=int, default=0)
            s.add_argument("--error", help="explicit additive error vector (gabidulin only)")
        if name == "trace":
            s.add_argument("--normalize", action="store_true")

    b = sub.add_parser("bench", help="interpolation vs Gaussian elimination timing (CSV)")
    b.add_argument("--code")
    b.add_argument("--q", type=int, default=3)
    b.add_argument("--m", type=int, default=2)
    b.add_argument("--l", type=int, default=2)
    b.add_argument("--k", type=int, default=1)
    b.add_argument("--L", type=int, default=2)
    b.add_argument("--t", type=int, help="largest t (default: largest feasible)")
    b.add_argument("--reps", type=int, default=9)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--out")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
