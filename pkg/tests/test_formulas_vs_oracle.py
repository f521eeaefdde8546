"""The anchor property of the whole package: every closed-form GENERAL row
agrees with the nodal oracle to 1e-9 over random physical parameters,
including 0/INF corner injections, and the two sides agree on which load
combinations are ill-posed."""

import math
import random

import pytest

from ampkit import (
    INF,
    AmpkitError,
    BjtLoads,
    MosLoads,
    Quantity,
    Variant,
    make_bjt,
    make_mos,
)
from ampkit.formulas import bjt_eval, mos_eval, supported_variants
from ampkit.nodal import solve_bjt, solve_mos
from ampkit.sampling import (
    agree,
    draw_bjt,
    draw_bjt_loads,
    draw_mos,
    draw_mos_loads,
    rel_err,
)

BJT_QUANTITIES = [q for q in Quantity if not q.is_mos]
MOS_QUANTITIES = [q for q in Quantity if q.is_mos]


def _check_bjt_point(q, p, loads, rtol=1e-9):
    try:
        want = solve_bjt(q, p, loads)
    except AmpkitError:
        with pytest.raises(AmpkitError):
            bjt_eval(q, Variant.GENERAL, p, loads)
        return None
    got = bjt_eval(q, Variant.GENERAL, p, loads)
    assert agree(got, want, rtol, atol=1e-12), (
        f"{q.name}: closed form {got!r} vs oracle {want!r} "
        f"(rel err {rel_err(got, want):.3e}) at p={p}, loads={loads}")
    return rel_err(got, want)


def _check_mos_point(q, p, loads, rtol=1e-9):
    try:
        want = solve_mos(q, p, loads)
    except AmpkitError:
        with pytest.raises(AmpkitError):
            mos_eval(q, p, loads)
        return None
    got = mos_eval(q, p, loads)
    assert agree(got, want, rtol, atol=1e-12), (
        f"{q.name}: closed form {got!r} vs oracle {want!r} "
        f"(rel err {rel_err(got, want):.3e}) at p={p}, loads={loads}")
    return rel_err(got, want)


@pytest.mark.parametrize("q", BJT_QUANTITIES, ids=lambda q: q.name)
def test_bjt_general_matches_oracle_random(q):
    rng = random.Random(hash(q.name) & 0xFFFF)
    for _ in range(2000):
        _check_bjt_point(q, draw_bjt(rng), draw_bjt_loads(rng))


@pytest.mark.parametrize("q", BJT_QUANTITIES, ids=lambda q: q.name)
def test_bjt_general_matches_oracle_corners(q):
    rng = random.Random(hash(q.name) & 0xFFF1)
    for _ in range(3000):
        p = draw_bjt(rng, inf_ro_prob=0.2)
        loads = draw_bjt_loads(rng, corner_prob=0.35)
        _check_bjt_point(q, p, loads)


@pytest.mark.parametrize("q", BJT_QUANTITIES, ids=lambda q: q.name)
def test_bjt_general_matches_oracle_beta_inf(q):
    rng = random.Random(hash(q.name) & 0xFF3)
    for _ in range(800):
        base = draw_bjt(rng, inf_ro_prob=0.2)
        p = make_bjt(base.gm, math.inf, base.ro)
        loads = draw_bjt_loads(rng, corner_prob=0.25)
        _check_bjt_point(q, p, loads)


@pytest.mark.parametrize("q", MOS_QUANTITIES, ids=lambda q: q.name)
def test_mos_matches_oracle_random(q):
    rng = random.Random(hash(q.name) & 0xFFFF)
    for _ in range(2000):
        _check_mos_point(q, draw_mos(rng), draw_mos_loads(rng))


@pytest.mark.parametrize("q", MOS_QUANTITIES, ids=lambda q: q.name)
def test_mos_matches_oracle_corners(q):
    rng = random.Random(hash(q.name) & 0xFF7)
    for _ in range(3000):
        p = draw_mos(rng, inf_ro_prob=0.2)
        loads = draw_mos_loads(rng, corner_prob=0.35)
        _check_mos_point(q, p, loads)


def _pin(loads: BjtLoads, field: str, value: float) -> BjtLoads:
    kw = {f: getattr(loads, f).ohms for f in ("r_e", "r_b", "r_c", "r_f")}
    kw[field] = value
    return BjtLoads(**kw)


_PINS = {
    Variant.NO_DEGEN: ("load", None, 0.0),   # per-quantity field
    Variant.NO_FEEDBACK: ("load", "r_f", math.inf),
    Variant.NO_RO: ("ro", None, math.inf),
    Variant.RF_ZERO: ("load", "r_f", 0.0),
    Variant.RC_ZERO: ("load", "r_c", 0.0),
    Variant.RE_INF: ("load", "r_e", math.inf),
    Variant.RC_INF: ("load", "r_c", math.inf),
    Variant.RB_ZERO: ("load", "r_b", 0.0),
    Variant.RE_ZERO: ("load", "r_e", 0.0),
}

_NO_DEGEN_FIELD = {
    Quantity.AV_CE: "r_e",
    Quantity.R_BASE: "r_e",
    Quantity.AV_CB: "r_b",
    Quantity.R_EMITTER: "r_b",
}


@pytest.mark.parametrize("q", BJT_QUANTITIES, ids=lambda q: q.name)
def test_special_rows_equal_pinned_general(q):
    # every special-case row equals the GENERAL row with the corresponding
    # load pinned, to 1e-12
    rng = random.Random(hash(q.name) & 0x7F3)
    variants = [v for v in supported_variants(q) if v is not Variant.GENERAL]
    for _ in range(600):
        p = draw_bjt(rng)
        loads = draw_bjt_loads(rng)
        for v in variants:
            kind, field, value = _PINS[v]
            if kind == "ro":
                pp = make_bjt(p.gm, p.beta, INF)
                pinned = loads
            else:
                pp = p
                pinned = _pin(loads, field or _NO_DEGEN_FIELD[q], value)
            try:
                want = bjt_eval(q, Variant.GENERAL, pp, pinned)
            except AmpkitError:
                with pytest.raises(AmpkitError):
                    bjt_eval(q, v, pp, pinned)
                continue
            got = bjt_eval(q, v, pp, pinned)
            assert agree(got, want, 1e-12), (
                f"{q.name}/{v.name}: row {got!r} vs pinned general {want!r} "
                f"at p={pp}, loads={pinned}")


@pytest.mark.parametrize("q", BJT_QUANTITIES, ids=lambda q: q.name)
def test_special_rows_match_oracle_at_corners(q):
    # the special rows themselves also face the oracle, with corner loads
    rng = random.Random(hash(q.name) & 0x5F5)
    variants = [v for v in supported_variants(q) if v is not Variant.GENERAL]
    for _ in range(800):
        p = draw_bjt(rng)
        loads = draw_bjt_loads(rng, corner_prob=0.3)
        for v in variants:
            kind, field, value = _PINS[v]
            if kind == "ro":
                pp = make_bjt(p.gm, p.beta, INF)
                pinned = loads
            else:
                pp = p
                pinned = _pin(loads, field or _NO_DEGEN_FIELD[q], value)
            try:
                want = solve_bjt(q, pp, pinned)
            except AmpkitError:
                with pytest.raises(AmpkitError):
                    bjt_eval(q, v, pp, pinned)
                continue
            got = bjt_eval(q, v, pp, pinned)
            assert agree(got, want, 1e-9, atol=1e-12), (
                f"{q.name}/{v.name}: row {got!r} vs oracle {want!r} "
                f"at p={pp}, loads={pinned}")


def test_mos_rows_equal_bjt_rows_at_beta_inf():
    # with gmb = 0 the MOS expressions are the beta -> inf bipolar ones
    rng = random.Random(0xBEEF)
    pairs = [
        (Quantity.AV_CS, Quantity.AV_CE),
        (Quantity.AV_CG, Quantity.AV_CB),
        (Quantity.AV_CD, Quantity.AV_CC),
        (Quantity.R_GATE, Quantity.R_BASE),
        (Quantity.R_SOURCE, Quantity.R_EMITTER),
        (Quantity.R_DRAIN, Quantity.R_COLLECTOR),
    ]
    for _ in range(500):
        gm = rng.uniform(1e-3, 1e-1)
        ro = rng.uniform(1e2, 1e6)
        mos_p = make_mos(gm, 0.0, ro)
        bjt_p = make_bjt(gm, math.inf, ro)
        r = {k: rng.uniform(1.0, 1e6) for k in ("low", "in", "top", "fb")}
        mos_l = MosLoads(r_s=r["low"], r_g=r["in"], r_d=r["top"], r_f=r["fb"])
        bjt_l = BjtLoads(r_e=r["low"], r_b=r["in"], r_c=r["top"], r_f=r["fb"])
        for mq, bq in pairs:
            m = mos_eval(mq, mos_p, mos_l)
            b = bjt_eval(bq, Variant.GENERAL, bjt_p, bjt_l)
            assert agree(m, b, 1e-9), (mq, bq, m, b)
