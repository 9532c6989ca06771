import math

import pytest

import irc_gdof as g


def test_closed_form():
    d = g.gdof_irc(g.StrengthExponents(0.7, 1.1, 0.2))
    assert d.value == pytest.approx(1.4, abs=1e-12)
    assert d.argmin_index == 3
    assert g.gdof_ic(1.0) == pytest.approx(1.0)
    assert g.gdof_ic(2.0) == pytest.approx(2.0)


def test_regime_error():
    with pytest.raises(g.RegimeError):
        g.gdof_irc(g.StrengthExponents(0.1, 1.0, 0.2))
    with pytest.raises(g.IrcError):
        g.capacity(-2.0)


def test_round_trip():
    e = g.StrengthExponents(0.7, 1.1, 0.2)
    back = g.recover_exponents(g.realize(e, 1e20))
    assert back.alpha == pytest.approx(0.7, abs=1e-9)
    assert back.gamma == pytest.approx(0.2, abs=1e-9)


def test_bounds_and_rates():
    ch = g.realize(g.StrengthExponents(0.7, 1.1, 0.2), 1e30)
    report = g.bound_report(ch)
    alloc = g.example_allocation(ch)
    rate = g.weak_rates(ch, alloc).sum_rate
    assert rate <= report.tightest + 1e-9
    assert rate / (0.5 * math.log2(1e30)) == pytest.approx(1.4, abs=0.1)


def test_slope_and_sweep():
    est = g.estimate_slope(lambda ch: g.cutset_bounds(ch)[1], g.StrengthExponents(0.7, 1.1, 0.2))
    assert est.final_slope == pytest.approx(2.0, abs=0.05)
    rows = g.sweep(1.1, 0.2, 0.2, 1.0, steps=5, k_max=2, resolution=4)
    assert len(rows) == 5
    csv = g.sweep_csv(rows)
    assert csv.startswith("alpha,d_formula,d_ic,d_converse_numeric,d_fdf_numeric,argmin\n")
