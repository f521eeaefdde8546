import math
import random

import pytest

from ampkit import (
    INF,
    BjtLoads,
    IllPosedError,
    MosLoads,
    Quantity,
    make_bjt,
    make_mos,
)
from ampkit.nodal import solve_bjt, solve_mos
from ampkit.sampling import draw_bjt, draw_bjt_loads


FOOTNOTE9 = make_bjt(10e-3, 100, 10e3)


def test_follower_gain_with_and_without_feedback():
    # gm=10mS, beta=100, ro=10k, R_C=1k, R_E=100: the follower gain barely
    # moves between the open and shorted feedback cases
    open_fb = solve_bjt(Quantity.AV_CC, FOOTNOTE9, BjtLoads(r_e=100, r_c=1000, r_f=INF))
    diode = solve_bjt(Quantity.AV_CC, FOOTNOTE9, BjtLoads(r_e=100, r_c=1000, r_f=0))
    assert open_fb == pytest.approx(0.48, abs=0.005)
    assert diode == pytest.approx(0.50, abs=0.01)
    assert diode == pytest.approx(0.504950495049505, rel=1e-12)


def test_input_impedance_collapse_when_diode_connected():
    r_open = solve_bjt(Quantity.R_BASE, FOOTNOTE9, BjtLoads(r_e=100, r_c=1000, r_f=INF))
    r_diode = solve_bjt(Quantity.R_BASE, FOOTNOTE9, BjtLoads(r_e=100, r_c=1000, r_f=0))
    assert r_open == pytest.approx(19.1e3, abs=50)
    assert r_diode == pytest.approx(165, abs=1)
    assert r_open / r_diode > 100


def test_undegenerated_ce_gain_is_minus_gm_rc():
    p = make_bjt(10e-3, 100, INF)
    g = solve_bjt(Quantity.AV_CE, p, BjtLoads(r_e=0, r_c=1000, r_f=INF))
    assert g == pytest.approx(-10.0, rel=1e-12)


def test_cb_gain_no_degeneration_sign():
    p = make_bjt(10e-3, 100, INF)
    g = solve_bjt(Quantity.AV_CB, p, BjtLoads(r_b=0, r_c=1000, r_f=INF))
    assert g == pytest.approx(+10.0, rel=1e-12)


def test_mos_source_impedance_with_body_effect():
    p = make_mos(10e-3, 1e-3, INF)
    r = solve_mos(Quantity.R_SOURCE, p, MosLoads(r_g=0, r_d=0, r_f=INF))
    assert r == pytest.approx(1 / (10e-3 + 1e-3), rel=1e-12)


def test_mos_undegenerated_drain_impedance_is_ro():
    p = make_mos(9.36e-3, 0.0, 14.4e3)
    r = solve_mos(Quantity.R_DRAIN, p, MosLoads(r_g=100, r_s=0, r_f=INF))
    assert r == pytest.approx(14.4e3, rel=1e-12)


def test_deterministic_bitwise():
    rng = random.Random(7)
    for _ in range(50):
        p = draw_bjt(rng)
        loads = draw_bjt_loads(rng)
        for q in (Quantity.AV_CE, Quantity.AV_CC, Quantity.R_BASE, Quantity.R_COLLECTOR):
            assert solve_bjt(q, p, loads) == solve_bjt(q, p, loads)


def test_floating_collector_is_ill_posed():
    p = make_bjt(10e-3, 100, INF)
    with pytest.raises(IllPosedError):
        solve_bjt(Quantity.R_COLLECTOR, p, BjtLoads(r_b=100, r_e=100, r_f=INF))


def test_input_short_is_ill_posed():
    with pytest.raises(IllPosedError):
        solve_bjt(Quantity.AV_CE, FOOTNOTE9, BjtLoads(r_e=100, r_c=0, r_f=0))


def test_gate_probe_with_open_drain_and_body_effect_rejected():
    p = make_mos(10e-3, 1e-3, 10e3)
    with pytest.raises(IllPosedError):
        solve_mos(Quantity.R_GATE, p, MosLoads(r_s=100, r_d=INF, r_f=1000))
    with pytest.raises(IllPosedError):
        solve_mos(Quantity.R_SOURCE, p, MosLoads(r_g=100, r_d=INF, r_f=1000))
    # without body effect both probes are fine
    p0 = make_mos(10e-3, 0.0, 10e3)
    rg = solve_mos(Quantity.R_GATE, p0, MosLoads(r_s=100, r_d=INF, r_f=1000))
    rs = solve_mos(Quantity.R_SOURCE, p0, MosLoads(r_g=100, r_d=INF, r_f=1000))
    # the two ground-referenced probes see the same two-terminal core
    assert rg - 100 == pytest.approx(rs - 100, rel=1e-12)


def test_gain_scale_invariance():
    # gains are invariant under scaling all resistances by s and all
    # transconductances by 1/s
    rng = random.Random(11)
    for _ in range(200):
        gm = rng.uniform(1e-3, 1e-1)
        beta = rng.uniform(20, 500)
        ro = rng.uniform(1e2, 1e6)
        loads = dict(r_e=rng.uniform(1, 1e4), r_c=rng.uniform(1, 1e4), r_f=rng.uniform(10, 1e6))
        s = rng.uniform(1e-2, 1e2)
        for q in (Quantity.AV_CE, Quantity.AV_CB, Quantity.AV_CC):
            base_loads = BjtLoads(r_b=loads["r_e"], **loads) if q is Quantity.AV_CB else BjtLoads(**loads)
            g1 = solve_bjt(q, make_bjt(gm, beta, ro), base_loads)
            scaled = BjtLoads(
                r_e=base_loads.r_e.ohms * s, r_b=base_loads.r_b.ohms * s,
                r_c=base_loads.r_c.ohms * s,
                r_f=base_loads.r_f.ohms * s)
            g2 = solve_bjt(q, make_bjt(gm / s, beta, ro * s), scaled)
            assert g2 == pytest.approx(g1, rel=1e-9)


def test_zero_ohm_feedback_collapses_nodes():
    # r_f = 0 ties collector to the driven base: unity gain regardless
    g = solve_bjt(Quantity.AV_CE, FOOTNOTE9, BjtLoads(r_e=100, r_c=1000, r_f=0))
    assert g == 1.0
