"""Acceptance criteria, one test per criterion.

Each test records a ``criterion <k>: PASS|FAIL <details>`` line; the lines
are printed in the terminal summary (see conftest.py) and also when the
module is run as a script.
"""

from __future__ import annotations

import json
import math
import subprocess
import sys

import numpy as np
import pytest

from trigapprox import (
    BetaSequence,
    TrigPolynomial,
    aliased_coeffs,
    eval_interpolant,
    fourier_lagrange_coeffs,
    gamma_fn,
    make_psi,
    monte_carlo_sup,
    nodes,
    pointwise_error_general,
    pointwise_error_interp,
    poisson_pointwise,
    poisson_uniform,
    preset_multipliers,
    sobolev_pointwise,
    sobolev_uniform,
    uniform_error_convex,
    verify_attainment,
)
from trigapprox.exact_errors import alpha_convexity_check

RESULTS: dict[int, str] = {}


def record(k: int, ok: bool, detail: str) -> None:
    line = f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[k] = line
    print(line, flush=True)
    assert ok, line


def _rng(k: int) -> np.random.Generator:
    return np.random.default_rng([2024, k])


def _random_poly(rng, deg):
    return TrigPolynomial(rng.standard_normal(), rng.standard_normal(deg), rng.standard_normal(deg))


def test_criterion_1_interpolation_exactness():
    rng = _rng(1)
    worst = 0.0
    for _ in range(200):
        p = _random_poly(rng, int(rng.integers(1, 41)))
        n = int(rng.integers(1, 21))
        xs = nodes(n)
        c = fourier_lagrange_coeffs(p(xs), n)
        worst = max(worst, float(np.max(np.abs(eval_interpolant(c, xs) - p(xs)))))
    record(1, worst <= 1e-12, f"max node residual {worst:.3e} (limit 1e-12, 200 polynomials)")


def test_criterion_2_aliasing():
    rng = _rng(2)
    worst = 0.0
    for _ in range(100):
        n = int(rng.integers(1, 21))
        p = _random_poly(rng, int(rng.integers(1, 6 * (2 * n + 1))))
        sampled = fourier_lagrange_coeffs(p(nodes(n)), n)
        folded = aliased_coeffs(p, n)
        worst = max(worst, float(np.max(np.abs(sampled.a - folded.a))),
                    float(np.max(np.abs(sampled.b - folded.b))))
    record(2, worst <= 1e-11, f"max coefficient difference {worst:.3e} (limit 1e-11, 100 functions)")


def test_criterion_3_general_vs_interp_series():
    rng = _rng(3)
    psis = [make_psi("geometric", q) for q in (0.3, 0.5, 0.9)] + \
           [make_psi("power", r) for r in (1.0, 2.0)]
    worst = 0.0
    for psi in psis:
        for n in (1, 5, 20):
            mults = preset_multipliers("interp", n)
            for x in rng.uniform(0.0, 2 * math.pi, 100):
                g = pointwise_error_general(psi, mults, x, tol=1e-13)
                s = pointwise_error_interp(psi, n, x, tol=1e-13)
                worst = max(worst, abs(g.value - s.value))
    record(3, worst <= 1e-12, f"max |general - interp| {worst:.3e} (limit 1e-12, 1500 points)")


def test_criterion_4_poisson():
    rng = _rng(4)
    worst = raw = 0.0
    for q in (0.3, 0.5, 0.9):
        for n in (1, 5, 20):
            psi = make_psi("geometric", q)
            for x in rng.uniform(0.0, 2 * math.pi, 100):
                s = pointwise_error_interp(psi, n, x, tol=1e-14)
                c = poisson_pointwise(q, n, x)
                if c > 0.0:
                    worst = max(worst, max(abs(s.value - c) - s.truncation_bound, 0.0) / c)
                    raw = max(raw, abs(s.value - c) / c)
            closed = poisson_uniform(q, n)
            peak = pointwise_error_interp(psi, n, math.pi / (2 * n + 1), tol=1e-14)
            worst = max(worst, max(abs(peak.value - closed) - peak.truncation_bound, 0.0) / closed)
            if alpha_convexity_check(psi, n, 50).is_convex_on_prefix:
                u = uniform_error_convex(psi, n, tol=1e-14)
                worst = max(worst, max(abs(u.value - closed) - u.truncation_bound, 0.0) / closed)
    spot = poisson_uniform(0.5, 1)
    ok = worst <= 1e-10 and abs(spot - 0.32322) <= 1e-4
    record(4, ok, f"max relative excess {worst:.3e} (limit 1e-10, raw {raw:.1e}); "
                  f"q=0.5 n=1 uniform {spot:.6f} (0.32322 +- 1e-4)")


def test_criterion_5_weyl_and_gamma():
    rng = _rng(5)
    worst = raw = 0.0
    for r in (0.75, 1.0, 2.0):
        for n in (1, 5, 20):
            psi = make_psi("power", r)
            u = uniform_error_convex(psi, n, tol=1e-13)
            w = sobolev_uniform(r, n, tol=1e-13)
            worst = max(worst, max(abs(u.value - w.value) - u.truncation_bound, 0.0) / w.value)
            raw = max(raw, abs(u.value - w.value) / w.value)
            for x in rng.uniform(0.0, 2 * math.pi, 10):
                s = pointwise_error_interp(psi, n, x, tol=1e-13)
                wp = sobolev_pointwise(r, n, x, tol=1e-13)
                if wp.value > 0.0:
                    worst = max(worst, max(abs(s.value - wp.value) - s.truncation_bound, 0.0)
                                / wp.value)
                    raw = max(raw, abs(s.value - wp.value) / wp.value)
    gam = max(abs(gamma_fn(2.0) - 1.0), abs(gamma_fn(4.0) / 6.0 - 1.0),
              abs(gamma_fn(1.5) / (math.sqrt(math.pi) / 2) - 1.0))
    ok = worst <= 1e-7 and gam <= 1e-13
    record(5, ok, f"max relative excess {worst:.3e} (limit 1e-7, raw {raw:.1e}); "
                  f"gamma relative error {gam:.1e} (limit 1e-13)")


def _random_config(rng):
    if rng.random() < 0.5:
        psi = make_psi("geometric", float(rng.uniform(0.2, 0.9)))
    else:
        psi = make_psi("power", float(rng.choice([2.0, 2.5, 3.0])))
    n = int(rng.integers(1, 11))
    preset = str(rng.choice(["interp", "zero"]))
    x = float(rng.uniform(0.0, 2 * math.pi))
    beta = BetaSequence.random(int(rng.integers(0, 2 ** 31)))
    return psi, n, preset, x, beta


def test_criterion_6_duality_attainment():
    rng = _rng(6)
    eps = 1e-6
    worst_ratio, mc_excess, failures = math.inf, -math.inf, 0
    for _ in range(50):
        psi, n, preset, x, beta = _random_config(rng)
        mults = preset_multipliers(preset, n)
        # combined truncation bounds must stay below eps * value / 2
        rep = verify_attainment(psi, beta, mults, x, tol=1e-13, rel_gap=eps / 4,
                                max_degree=1 << 21)
        E = rep.theoretical
        if E == 0.0:
            continue
        bounds = rep.details["kernel_gap"] + rep.details["series_bound"]
        if not bounds < eps * E / 2 or not rep.passed:
            failures += 1
        worst_ratio = min(worst_ratio, rep.achieved / E)
        mc = monte_carlo_sup(psi, beta, mults, x, 20, 3 * (2 * n + 1) + n,
                             int(rng.integers(0, 2 ** 31)))
        mc_excess = max(mc_excess, mc - (E + rep.delta))
    ok = failures == 0 and worst_ratio >= 1 - eps and mc_excess <= 0.0
    record(6, ok, f"min achieved/theoretical {worst_ratio:.10f} (limit {1 - eps}); "
                  f"max MC excess over value+delta {mc_excess:.3e} (must be <= 0); "
                  f"{failures} attainment failures")


def test_criterion_7_beta_invariance():
    rng = _rng(7)
    psi = make_psi("power", 2.0)
    mults = preset_multipliers("zero", 3)
    x = float(rng.uniform(0.0, 2 * math.pi))
    thetas, passed = set(), 0
    for _ in range(10):
        beta = BetaSequence.random(int(rng.integers(0, 2 ** 31)))
        rep = verify_attainment(psi, beta, mults, x)
        thetas.add(rep.theoretical)
        passed += rep.passed
    ok = len(thetas) == 1 and passed == 10
    record(7, ok, f"{len(thetas)} distinct theoretical value(s); {passed}/10 attainment checks pass")


def test_criterion_8_max_location():
    worst = 0.0
    detail = []
    for fam, param, n in (("geometric", 0.5, 1), ("geometric", 0.9, 3),
                          ("power", 1.0, 1), ("power", 2.0, 2)):
        psi = make_psi(fam, param)
        N = 2 * n + 1
        xs = np.linspace(0.0, 2 * math.pi / N, 10 ** 4)
        vals = np.array([pointwise_error_interp(psi, n, x, tol=1e-12).value for x in xs])
        step = xs[1] - xs[0]
        off = abs(xs[int(np.argmax(vals))] - math.pi / N) / step
        worst = max(worst, off)
        detail.append(f"{fam}:{param} n={n} {off:.2f}")
    record(8, worst <= 1.0, "argmax offset in grid steps: " + ", ".join(detail))


def _cli(args):
    proc = subprocess.run([sys.executable, "-m", "trigapprox.cli", *args], capture_output=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_criterion_9_cli():
    runs = [
        ["error", "--psi", "geometric:q=0.5", "--method", "interp", "--n", "1", "--uniform"],
        ["sweep", "--psi", "geometric:q=0.5", "--n", "1", "--x-from", "0",
         "--x-to", repr(2 * math.pi / 3), "--points", "31"],
        ["verify", "--suite", "all", "--seed", "42"],
    ]
    identical = all(_cli(a) == _cli(a) for a in runs)
    code0, out0, _ = _cli(runs[0])
    value_ok = code0 == 0 and abs(json.loads(out0)["value"] - 0.32322) <= 1e-4
    verify_ok = _cli(runs[2])[0] == 0
    code_q, _, err_q = _cli(["error", "--psi", "geometric:q=1.5", "--method", "interp",
                             "--n", "1", "--x", "0"])
    code_flag, _, _ = _cli(["error", "--no-such-flag"])
    code_grid, _, _ = _cli(["sweep", "--psi", "power:r=1", "--n", "1", "--x-from", "1",
                            "--x-to", "0", "--points", "4"])
    code_pre, _, _ = _cli(["error", "--psi", "power:r=0.51", "--method", "zero", "--n", "1",
                           "--x", "1e-9", "--tol", "1e-15"])
    codes_ok = (code_q, code_flag, code_grid, code_pre) == (1, 1, 1, 2) \
        and b"q must lie in (0,1)" in err_q
    ok = identical and value_ok and verify_ok and codes_ok
    record(9, ok, f"byte-identical={identical}; exit codes (bad q, bad flag, empty grid, "
                  f"uncertifiable) = {(code_q, code_flag, code_grid, code_pre)} "
                  f"(expected (1, 1, 1, 2)); verify exit 0={verify_ok}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
