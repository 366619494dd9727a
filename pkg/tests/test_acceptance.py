"""Acceptance criteria, one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
report. Tolerances are pinned here and nowhere else.
"""

import math
import random

import numpy as np
import pytest

import fockvolterra as fv
from fockvolterra import calibration, verify
from fockvolterra.cli import main
from fockvolterra.series import TruncatedSeries as TS


def report(name, ok):
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}")
    assert ok


def test_01_norm_oracle_agreement():
    """series_norm(z^n) vs monomial_norm to 1e-10 over the params grid, n <= 60."""
    worst = 0.0
    for p in (1.0, 2.0, 4.0):
        for alpha in (0.5, 1.0, 2.0):
            for big_a in (1.0, 2.0, 3.0, 2.5):
                params = fv.FockParams(p, alpha, big_a)
                scheme = fv.build_scheme(params, 60)
                for n in range(61):
                    q = fv.series_norm(TS.monomial(n), params, scheme)
                    c = fv.monomial_norm(n, params)
                    worst = max(worst, abs(q / c - 1.0))
    print(f"  worst relative error: {worst:.3e}")
    report("1 norm oracle agreement (<=1e-10)", worst <= 1e-10)


def test_02_resolvent_identity():
    """(I - T_g/lambda) R h = h to 1e-12 over a (symbol, h, lambda) grid."""
    rng = np.random.default_rng(3)
    symbols = [
        fv.PolynomialSymbol([1.0]),
        fv.PolynomialSymbol([0.5j, 1.0]),
        fv.PolynomialSymbol([0.25, -0.5, 1.0]),
    ]
    hs = []
    for deg in (2, 5, 8):
        c = rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1)
        hs.append(TS(c / np.linalg.norm(c)))
    lams = [1.0, -2.0, 0.5j, 1 + 1j, 3.0]
    worst = 0.0
    for g in symbols:
        for h in hs:
            for lam in lams:
                order = h.order + 4 * g.degree + 8
                rh = fv.resolvent_apply(g, lam, h, order)
                resid = fv.add(rh, fv.scale(fv.apply_tg(g, rh), -1.0 / lam))
                resid = fv.add(resid, fv.scale(h.truncated(resid.order), -1.0))
                valid = order - g.degree
                worst = max(worst, float(np.max(np.abs(resid.coeffs[: valid + 1]))))
    print(f"  worst residual: {worst:.3e}")
    report("2 resolvent identity (<=1e-12)", worst <= 1e-12)


def test_03_spectral_radius_theorem_witness():
    """Estimates within 3% of |b|/alpha; monotone non-decreasing in maxM."""
    ok = True
    for b, alpha in ((1.0, 1.0), (2.0, 1.0), (1.0, 2.0)):
        params = fv.FockParams(2.0, alpha, 2.0)
        g = fv.PolynomialSymbol([0, b])
        est, _ = fv.spectral_radius_estimate(g, params, 64, 512)
        target = b / alpha
        print(f"  b={b} alpha={alpha}: estimate {est:.5f}, target {target}")
        ok &= abs(est / target - 1.0) <= 0.03
        seq = [
            fv.spectral_radius_estimate(g, params, 16, m)[0]
            for m in (64, 128, 256, 512)
        ]
        ok &= all(x <= y + 1e-15 for x, y in zip(seq, seq[1:]))
    report("3 spectral radius witness (3%, monotone in maxM)", ok)


def test_04_spectrum_region_agreement():
    """200-point annulus scan agrees with classify_spectrum, no stray verdicts."""
    params = fv.FockParams(2.0, 1.0, 2.0)
    g = fv.PolynomialSymbol([0, 1.0])
    desc = fv.classify_spectrum(g, params)
    assert desc.kind == "disk" and desc.radius == 1.0
    grid = [
        r * np.exp(2j * np.pi * j / 50)
        for r in (0.5, 0.9, 1.1, 2.0)
        for j in range(50)
    ]
    results = fv.membership_scan(g, params, grid)
    ok = len(results) == 200
    for lam, verdict in results:
        if abs(lam) < desc.radius:
            ok &= verdict is fv.MembershipVerdict.NON_MEMBER
        else:
            ok &= verdict is fv.MembershipVerdict.MEMBER
    report("4 spectrum region agreement (200 points, 100%)", ok)


def test_05_boundedness_trichotomy():
    """9-case degree-vs-A grid classified per the compactness criterion."""
    ok = True
    for big_a in (1.0, 2.0, 3.0):
        params = fv.FockParams(2.0, 1.0, big_a)
        for deg in (1, 2, 3):
            g = fv.PolynomialSymbol.from_power_coeffs([0.0] * deg + [1.0])
            trend, _ = fv.boundedness_diagnostic(g, params, 400)
            want = "Vanishing" if deg < big_a else (
                "Bounded" if deg == big_a else "Diverging"
            )
            print(f"  A={big_a} deg={deg}: {trend} (want {want})")
            ok &= trend == want
    report("5 boundedness trichotomy (9/9)", ok)


def test_06_littlewood_paley_band():
    """lp_rhs/series_norm inside the frozen band; quotient stable to 1% under refinement."""
    params = fv.FockParams(2.0, 0.5, 2.0)
    family = verify.lp_family(40)
    scheme = fv.build_scheme(params, 60)
    lo, hi = fv.lp_ratio_experiment(family, params, scheme)
    band_lo, band_hi = calibration.LP_RATIO_BAND
    ok = band_lo <= lo and hi <= band_hi and math.isfinite(hi / lo)
    scheme2 = fv.build_scheme(
        params, 60,
        radial_nodes=2 * scheme.radial_r.size,
        angular_count=2 * scheme.angular_count,
    )
    lo2, hi2 = fv.lp_ratio_experiment(family, params, scheme2)
    drift = abs((hi2 / lo2) / (hi / lo) - 1.0)
    print(f"  band [{lo:.6f}, {hi:.6f}], quotient {hi/lo:.6f}, refinement drift {drift:.2e}")
    ok &= drift <= 0.01
    report("6 Littlewood-Paley band (frozen, 1% stable)", ok)


def test_07_weighted_inequality():
    """Twisted-LP LHS/RHS bounded by one constant, 10% stable under refinement."""
    params = fv.FockParams(2.0, 1.0, 2.0)
    fam = [
        TS.monomial(n, coeff=math.exp(-fv.log_monomial_norm(n, params)))
        for n in range(20)
    ]
    ok = True
    for lam in (4.0, 8.0, -4.0):
        a_eff = 1.0 - abs(1.0 / lam)
        eff = fv.FockParams(2.0, a_eff, 2.0)
        scheme = fv.build_scheme(eff, 20)
        worst = fv.weighted_lp_experiment(1.0, 2, lam, params, fam, scheme)
        scheme2 = fv.build_scheme(
            eff, 20,
            radial_nodes=2 * scheme.radial_r.size,
            angular_count=2 * scheme.angular_count,
        )
        worst2 = fv.weighted_lp_experiment(1.0, 2, lam, params, fam, scheme2)
        print(f"  lambda={lam}: ratio {worst:.4f} (refined {worst2:.4f})")
        ok &= worst <= calibration.WEIGHTED_LP_BOUND
        ok &= abs(worst2 / worst - 1.0) <= 0.10
    report("7 weighted inequality (single constant, 10% stable)", ok)


def test_08_boundary_term_decay():
    """Majorant strictly decreasing from R>=2 and below 1e-8 by R=6."""
    params = fv.FockParams(2.0, 1.0, 2.0)
    vals = fv.boundary_term_decay(TS.one(0), 1.0, 2, 4.0, params, [1, 2, 3, 4, 5, 6])
    v = [x for _, x in vals]
    print("  majorant:", ", ".join(f"{x:.2e}" for x in v))
    ok = all(b < a for a, b in zip(v[1:], v[2:]))  # strictly decreasing from R=2
    ok &= v[-1] < 1e-8
    report("8 boundary-term decay", ok)


def test_09_resolvent_blowup_inside_disk():
    """Probe ratio grows >=10x (order 32->96) inside; <5% drift (64->128) outside."""
    params = fv.FockParams(2.0, 1.0, 2.0)
    g = fv.PolynomialSymbol([0, 1.0])
    probes = [TS.monomial(n) for n in range(0, 25, 4)]

    def probe(lam, order):
        scheme = fv.build_scheme(params, order)
        return fv.resolvent_norm_probe(g, lam, params, probes, order, scheme)

    inside_lo, inside_hi = probe(0.5, 32), probe(0.5, 96)
    outside_lo, outside_hi = probe(3.0, 64), probe(3.0, 128)
    growth = inside_hi / inside_lo
    drift = abs(outside_hi / outside_lo - 1.0)
    print(f"  inside growth: {growth:.3e}; outside drift: {drift:.3e}")
    ok = growth >= 10.0 and drift < 0.05
    report("9 resolvent blow-up inside the disk", ok)


def test_10_determinism_and_parsing(capsys):
    """Byte-identical CLI reruns; 50-case grammar corpus round-trips exactly."""
    argv = ["scan", "--g", "z^2+(0.5-1i)z", "--grid-count", "10", "--grid-rings", "3",
            "--format", "csv"]
    main(argv)
    out1 = capsys.readouterr().out
    main(argv)
    out2 = capsys.readouterr().out
    ok = out1.encode() == out2.encode() and len(out1) > 0

    rng = random.Random(915)
    for _ in range(50):
        nterms = rng.randint(1, 4)
        parts = []
        for i in range(nterms):
            if rng.random() < 0.4:
                c = f"({rng.uniform(-9, 9):.8g}{rng.choice('+-')}{rng.uniform(0, 9):.8g}i)"
            else:
                c = f"{rng.uniform(-9, 9):.8g}"
            power = rng.randint(1 if i == 0 else 0, 6)
            parts.append(c if power == 0 else f"{c}z^{power}" if power > 1 else f"{c}z")
        text = "+".join(parts)
        g, _ = fv.parse_symbol(text)
        again, _ = fv.parse_symbol(fv.format_symbol(g))
        ok &= bool(np.array_equal(g.coeffs, again.coeffs))
    with capsys.disabled():
        report("10 determinism & parser round-trip", ok)
