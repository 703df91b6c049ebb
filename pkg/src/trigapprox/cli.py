"""Command-line front end: ``trigapprox error | sweep | verify``.

Exit codes: 0 success, 1 usage error (bad flags, unparsable psi or method,
empty grid), 2 failed precondition (non-convex alpha sequence, uncertified
truncation, or a failing verification check).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from .exact_errors import (
    ErrorResult,
    pointwise_error_general,
    pointwise_error_interp,
    poisson_pointwise,
    poisson_uniform,
    sobolev_pointwise,
    sobolev_uniform,
    uniform_error_convex,
)
from .exceptions import PreconditionError, TruncationError, ValidationError
from .interpolation import TrigPolynomial, aliased_coeffs, fourier_lagrange_coeffs, nodes
from .kernels import BetaSequence, PsiSequence, make_psi, parse_psi
from .methods import MultiplierSet, parse_method, preset_multipliers
from .oracle import monte_carlo_sup, verify_attainment

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2

SUITES = ("aliasing", "duality", "crossform")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default; 2 is reserved for preconditions here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------- output

def _fmt_float(v: float) -> str:
    if math.isnan(v) or math.isinf(v):
        return "null"
    text = format(v, ".17g")
    # keep floats recognisable as floats after a round trip
    return text if any(c in text for c in ".en") else text + ".0"


def to_json(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON with every float written to 17 significant digits."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {to_json(v, indent, _level + 1)}"
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + to_json(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _csv_num(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".11e")
    return str(v)


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(header)
    for row in rows:
        w.writerow([_csv_num(v) for v in row])
    return buf.getvalue()


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


# ---------------------------------------------------------------- evaluation

def _parse_inputs(args, n: int):
    try:
        psi = parse_psi(args.psi)
        mults = parse_method(args.method, n)
    except ValidationError as exc:
        raise UsageError(str(exc)) from None
    return psi, mults


def evaluate_error(psi: PsiSequence, mults: MultiplierSet, n: int, x: float | None,
                   uniform: bool, tol: float) -> ErrorResult:
    """Dispatch to the closed form or series evaluator that fits the request."""
    if uniform:
        if not mults.is_interp:
            raise UsageError("--uniform is available only for --method interp")
        if psi.family == "geometric":
            value = poisson_uniform(psi.param, n)
            return ErrorResult(value, 0.0, 0,
                               {"n": n, "method": "interp", "psi": f"geometric:q={psi.param!r}",
                                "formula": "poisson-closed-form-uniform"})
        if psi.family == "power":
            return sobolev_uniform(psi.param, n, tol)
        return uniform_error_convex(psi, n, tol)
    if mults.is_interp:
        return pointwise_error_interp(psi, n, x, tol)
    return pointwise_error_general(psi, mults, x, tol)


def _check_common(args) -> None:
    if not args.tol > 0.0 or not math.isfinite(args.tol):
        raise UsageError("--tol must be a positive number")


def cmd_error(args) -> str:
    _check_common(args)
    if args.n is None:
        raise UsageError("error requires --n")
    if not args.uniform and args.x is None:
        raise UsageError("error requires --x unless --uniform is given")
    psi, mults = _parse_inputs(args, args.n)
    res = evaluate_error(psi, mults, args.n, args.x, args.uniform, args.tol)
    if args.format == "csv":
        return to_csv(["value", "truncation_bound", "terms_used"],
                      [[res.value, res.truncation_bound, res.terms_used]])
    return to_json(res.to_dict()) + "\n"


def _x_grid(x_from: float, x_to: float, points: int) -> np.ndarray:
    xs = x_from + (x_to - x_from) * np.arange(points) / (points - 1)
    xs[-1] = x_to
    return xs


def cmd_sweep(args) -> str:
    _check_common(args)
    rows = []
    if args.x_from is not None or args.x_to is not None:
        if args.x_from is None or args.x_to is None or args.points is None:
            raise UsageError("an x-sweep needs --x-from, --x-to and --points")
        if args.points < 2:
            raise UsageError("--points must be >= 2")
        if not args.x_to > args.x_from:
            raise UsageError("empty x grid: --x-to must exceed --x-from")
        if args.n is None:
            raise UsageError("an x-sweep requires --n")
        psi, mults = _parse_inputs(args, args.n)
        key = "x"
        for x in _x_grid(args.x_from, args.x_to, args.points):
            res = evaluate_error(psi, mults, args.n, float(x), False, args.tol)
            rows.append([float(x), res.value, res.truncation_bound])
    elif args.n_from is not None or args.n_to is not None:
        if args.n_from is None or args.n_to is None:
            raise UsageError("an n-sweep needs --n-from and --n-to")
        if args.n_from < 1 or args.n_to < args.n_from:
            raise UsageError("empty n grid: need 1 <= --n-from <= --n-to")
        if not args.uniform and args.x is None:
            raise UsageError("an n-sweep requires --x unless --uniform is given")
        key = "n"
        for n in range(args.n_from, args.n_to + 1):
            psi, mults = _parse_inputs(args, n)
            res = evaluate_error(psi, mults, n, args.x, args.uniform, args.tol)
            rows.append([n, res.value, res.truncation_bound])
    else:
        raise UsageError("sweep needs an x grid (--x-from/--x-to/--points) "
                         "or an n grid (--n-from/--n-to)")
    header = [key, "value", "truncation_bound"]
    if args.format == "json":
        return to_json([dict(zip(header, r)) for r in rows]) + "\n"
    return to_csv(header, rows)


# ---------------------------------------------------------------- verify suites

def _check(suite: str, name: str, passed: bool, **numbers) -> dict:
    return {"suite": suite, "name": name, "pass": bool(passed), **numbers}


def _suite_configs(args):
    if args.psi is not None:
        try:
            psis = [parse_psi(args.psi)]
        except ValidationError as exc:
            raise UsageError(str(exc)) from None
    else:
        psis = [make_psi("geometric", 0.5), make_psi("power", 2.0)]
    ns = [args.n] if args.n is not None else [1, 3]
    if any(n < 1 for n in ns):
        raise UsageError("--n must be >= 1")
    return psis, ns


def suite_aliasing(args, rng: np.random.Generator, count: int = 20) -> list[dict]:
    """Sampled coefficients against folded series coefficients."""
    out = []
    for i in range(count):
        n = int(rng.integers(1, 21))
        deg = int(rng.integers(1, 5 * (2 * n + 1)))
        p = TrigPolynomial(float(rng.standard_normal()), rng.standard_normal(deg),
                           rng.standard_normal(deg))
        sampled = fourier_lagrange_coeffs(p(nodes(n)), n)
        folded = aliased_coeffs(p, n)
        diff = max(float(np.max(np.abs(sampled.a - folded.a))),
                   float(np.max(np.abs(sampled.b - folded.b))))
        out.append(_check("aliasing", f"poly{i}", diff <= 1e-11,
                          n=n, degree=deg, max_difference=diff, allowed=1e-11))
    return out


def _agree(a: ErrorResult, b: ErrorResult | float, rel: float) -> tuple[bool, float, float]:
    bv, bb = (b.value, b.truncation_bound) if isinstance(b, ErrorResult) else (b, 0.0)
    diff = abs(a.value - bv)
    allowed = a.truncation_bound + bb + rel * max(abs(a.value), abs(bv), 1e-300)
    return diff <= allowed, diff, allowed


def suite_crossform(args, rng: np.random.Generator, points: int = 3) -> list[dict]:
    """Three-way agreement: general series, interpolation series, closed form or integral."""
    psis, ns = _suite_configs(args)
    tol = min(args.tol, 1e-12)
    out = []
    for psi in psis:
        for n in ns:
            interp = preset_multipliers("interp", n)
            N = 2 * n + 1
            xs = rng.uniform(0.0, 2.0 * math.pi / N, points)
            for x in xs:
                x = float(x)
                gen = pointwise_error_general(psi, interp, x, tol)
                ser = pointwise_error_interp(psi, n, x, tol)
                if psi.family == "geometric":
                    ref, rel, label = poisson_pointwise(psi.param, n, x), 1e-10, "poisson"
                else:
                    ref, rel, label = sobolev_pointwise(psi.param, n, x, 1e-12), 1e-7, "weyl"
                ok, d, al = _agree(gen, ser, 1e-12)
                out.append(_check("crossform", f"general-vs-interp n={n} x={x!r}", ok,
                                  psi=_label(psi), value=gen.value, reference=ser.value,
                                  difference=d, allowed=al))
                ok, d, al = _agree(ser, ref, rel)
                out.append(_check("crossform", f"interp-vs-{label} n={n} x={x!r}", ok,
                                  psi=_label(psi), value=ser.value,
                                  reference=ref if isinstance(ref, float) else ref.value,
                                  difference=d, allowed=al))
            uni = uniform_error_convex(psi, n, tol)
            peak = pointwise_error_interp(psi, n, math.pi / N, tol)
            if psi.family == "geometric":
                ref, rel, label = poisson_uniform(psi.param, n), 1e-10, "poisson"
            else:
                ref, rel, label = sobolev_uniform(psi.param, n, 1e-12), 1e-7, "weyl"
            ok, d, al = _agree(uni, ref, rel)
            out.append(_check("crossform", f"uniform-vs-{label} n={n}", ok, psi=_label(psi),
                              value=uni.value,
                              reference=ref if isinstance(ref, float) else ref.value,
                              difference=d, allowed=al))
            ok, d, al = _agree(uni, peak, 1e-12)
            out.append(_check("crossform", f"uniform-vs-peak n={n}", ok, psi=_label(psi),
                              value=uni.value, reference=peak.value, difference=d, allowed=al))
    return out


def suite_duality(args, rng: np.random.Generator, mc_samples: int = 20) -> list[dict]:
    """Attainment by the extremal member and soundness of random members."""
    psis, ns = _suite_configs(args)
    methods = [args.method] if args.method is not None else ["interp", "zero"]
    out = []
    for psi in psis:
        for n in ns:
            for meth in methods:
                try:
                    mults = parse_method(meth, n)
                except ValidationError as exc:
                    raise UsageError(str(exc)) from None
                x = float(rng.uniform(0.0, 2.0 * math.pi))
                beta = BetaSequence.random(int(rng.integers(0, 2 ** 31)))
                rep = verify_attainment(psi, beta, mults, x, tol=args.tol)
                deg = 3 * (2 * n + 1) + n
                mc = monte_carlo_sup(psi, beta, mults, x, mc_samples, deg,
                                     int(rng.integers(0, 2 ** 31)))
                sound = mc <= rep.theoretical + rep.delta
                d = rep.to_dict()
                d.pop("details", None)
                d["mc_max"] = mc
                out.append(_check("duality", f"{_label(psi)} n={n} {mults.name} x={x!r}",
                                  rep.passed and sound, attainment=rep.passed,
                                  soundness=sound, **d))
    return out


def _label(psi: PsiSequence) -> str:
    return f"{psi.family}:{'q' if psi.family == 'geometric' else 'r'}={psi.param!r}"


def cmd_verify(args) -> tuple[str, bool]:
    _check_common(args)
    suites = SUITES if args.suite == "all" else (args.suite,)
    root = np.random.SeedSequence(args.seed)
    # one independent stream per suite, so running a subset changes nothing
    streams = dict(zip(SUITES, root.spawn(len(SUITES))))
    runners = {"aliasing": suite_aliasing, "duality": suite_duality,
               "crossform": suite_crossform}
    checks = []
    for s in suites:
        checks.extend(runners[s](args, np.random.default_rng(streams[s])))
    passed = all(c["pass"] for c in checks)
    if args.format == "csv":
        text = to_csv(["suite", "name", "pass"],
                      [[c["suite"], c["name"], c["pass"]] for c in checks])
    else:
        text = to_json({"seed": args.seed, "suite": args.suite, "pass": passed,
                        "checks": checks}) + "\n"
    return text, passed


# ---------------------------------------------------------------- entry point

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trigapprox",
                     description="Sharp errors of trigonometric interpolation and "
                                 "Fourier-Lagrange linear methods.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(p, psi_required=True):
        p.add_argument("--psi", required=psi_required,
                       help="geometric:q=<q> or power:r=<r>")
        p.add_argument("--method", default=None if not psi_required else "interp",
                       help="interp, zero or custom:<file.json> (default interp)")
        p.add_argument("--n", type=int, help="order n (2n+1 nodes)")
        p.add_argument("--tol", type=float, default=1e-10,
                       help="truncation tolerance (default 1e-10)")
        p.add_argument("--format", choices=("json", "csv"), default=None)
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--out", default=None, help="write to this file instead of stdout")

    p = sub.add_parser("error", help="sharp pointwise or uniform error")
    common(p)
    p.add_argument("--x", type=float, default=None)
    p.add_argument("--uniform", action="store_true")

    p = sub.add_parser("sweep", help="error over an x grid or a range of n")
    common(p)
    p.add_argument("--x", type=float, default=None, help="fixed x for an n-sweep")
    p.add_argument("--uniform", action="store_true", help="uniform error for an n-sweep")
    p.add_argument("--x-from", type=float, default=None)
    p.add_argument("--x-to", type=float, default=None)
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--n-from", type=int, default=None)
    p.add_argument("--n-to", type=int, default=None)

    p = sub.add_parser("verify", help="run the verification suites")
    common(p, psi_required=False)
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "error":
            args.format = args.format or "json"
            text, ok = cmd_error(args), True
        elif args.command == "sweep":
            args.format = args.format or "csv"
            text, ok = cmd_sweep(args), True
        else:
            args.format = args.format or "json"
            text, ok = cmd_verify(args)
    except UsageError as exc:
        print(f"trigapprox: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, TruncationError) as exc:
        print(f"trigapprox: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValidationError as exc:
        print(f"trigapprox: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
