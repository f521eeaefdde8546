import math

import pytest
from hypothesis import given, strategies as st

from ampkit import INF, Resistance, make_bjt, make_mos, parallel


def test_parallel_basics():
    assert parallel(Resistance(1000), Resistance(1000)).ohms == 500
    assert parallel(INF, Resistance(250)).ohms == 250
    assert parallel(Resistance(0), Resistance(5000)).ohms == 0
    assert parallel(INF, INF).is_inf


def test_resistance_rejects_bad_values():
    with pytest.raises(ValueError):
        Resistance(-1.0)
    with pytest.raises(ValueError):
        Resistance(float("nan"))
    with pytest.raises(TypeError):
        Resistance("10k")


def test_conductance():
    assert Resistance(250).conductance == 1 / 250
    assert INF.conductance == 0.0
    with pytest.raises(ZeroDivisionError):
        Resistance(0).conductance


ext = st.one_of(
    st.just(0.0),
    st.just(math.inf),
    st.floats(min_value=1e-3, max_value=1e9),
)


@given(ext, ext)
def test_parallel_commutative(a, b):
    assert parallel(a, b) == parallel(b, a)


@given(ext, ext, ext)
def test_parallel_associative(a, b, c):
    left = parallel(parallel(a, b), c).ohms
    right = parallel(a, parallel(b, c)).ohms
    assert left == pytest.approx(right, rel=1e-12, abs=0.0) or left == right


@given(ext, ext)
def test_parallel_bounded_and_never_nan(a, b):
    r = parallel(a, b).ohms
    assert not math.isnan(r)
    assert r <= min(a, b) * (1 + 1e-12) or math.isinf(min(a, b))


def test_make_bjt_physical_coupling():
    p = make_bjt(10e-3, 100, 10e3)
    assert p.alpha == 100 / 101
    assert p.r_pi.ohms == pytest.approx(10e3, rel=1e-15)
    assert p.gm * p.r_pi.ohms == pytest.approx(p.beta, rel=1e-15)
    assert 0 < p.alpha < 1 < p.beta + 1


def test_make_bjt_beta_inf_limit():
    p = make_bjt(9.36e-3, math.inf, 14.4e3)
    assert p.alpha == 1.0
    assert p.r_pi.is_inf


def test_make_bjt_small_beta():
    assert make_bjt(1.0, 1.0, INF).alpha == 0.5


@pytest.mark.parametrize("gm,beta", [(0.0, 100), (-1e-3, 100), (1e-3, 0.0), (1e-3, -5)])
def test_make_bjt_rejects_nonphysical(gm, beta):
    with pytest.raises(ValueError):
        make_bjt(gm, beta, 10e3)


def test_make_mos_validation():
    p = make_mos(10e-3, 1e-3, INF)
    assert p.r_m == 100.0
    assert p.r_mb.ohms == 1000.0
    assert make_mos(10e-3, 0.0, 1e4).r_mb.is_inf
    with pytest.raises(ValueError):
        make_mos(-1e-3, 0.0, 1e4)
    with pytest.raises(ValueError):
        make_mos(1e-3, -1e-6, 1e4)
    with pytest.raises(ValueError):
        make_mos(1e-3, 0.0, 0.0)
