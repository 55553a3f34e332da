import math

import gicbounds as gb


def test_anchor_rate():
    P, g = 100.0, math.sqrt(0.5)
    expect = 0.5 * math.log2(g * P + (P + 1) / g)
    assert abs(gb.r_sym_star(P, g) - expect) < 1e-12


def test_bound_ordering():
    ch = gb.ChannelParams.symmetric(100.0, math.sqrt(0.3))
    best = gb.best_upper(ch)
    assert best.feasible
    assert best.value <= gb.kramer_sym(100.0, math.sqrt(0.3)) + 1e-12
    assert best.value >= gb.underline_r(100.0, math.sqrt(0.3)) - 1e-9


def test_minimize_and_kappa_roundtrip():
    ch = gb.ChannelParams.symmetric(50.0, math.sqrt(0.4))
    r = gb.minimize_bound("thm5", ch)
    assert r.feasible
    again = gb.thm5_bound(ch, r.kappa)
    assert abs(again.value - r.value) < 1e-12


def test_analysis_helpers():
    assert abs(gb.delta_inf(0.5)) < 1e-12
    name, alpha, g2 = gb.classify(1000.0, math.sqrt(0.5))
    assert name == "moderate"
    assert abs(g2 - 0.5) < 1e-12


def test_region_points():
    pts = gb.region_boundary("etw", 7.0, 0.2, 50)
    assert len(pts) == 51
    r1s = [p[0] for p in pts]
    assert all(a >= b - 1e-12 for a, b in zip(r1s, r1s[1:]))
    inner = gb.region_boundary("tdm", 7.0, 0.2, 50)
    assert inner[0][0] <= pts[0][0] + 1e-9


def test_acceptance_subset():
    entries = gb.run_acceptance(only="delta_inf")
    assert len(entries) == 4
    assert all(e["pass"] for e in entries)
