"""Closed-form gain/impedance expressions, encoded row by row.

Each table row is a standalone evaluator over (device params, loads) that
reads only the symbols the printed expression contains.  Infinite loads are
handled structurally: wherever the printed form would hit an indeterminate
ratio, the evaluator switches to the exact algebraic limit (frozen into code
and proved equal by the symbolic module), so no large-float or NaN path
exists.  A zero that a nonphysical (reciprocity-transformed) parameter set
drives a denominator to raises PoleError.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .model import (
    BjtLoads,
    BjtParams,
    IllPosedError,
    MosLoads,
    MosParams,
    PinMismatchError,
    PoleError,
    Quantity,
    Resistance,
    UnsupportedVariantError,
    Variant,
    as_resistance,
)

_INF = math.inf
_isinf = math.isinf


def _inv(x: float) -> float:
    """1/x on the extended line: inv(0) = inf, inv(inf) = 0."""
    if x == 0.0:
        return _INF
    if _isinf(x):
        return 0.0
    return 1.0 / x


def _par(x: float, y: float) -> float:
    """Algebraic x*y/(x+y) with exact absorption of 0 and +-inf.

    Unlike model.parallel this accepts negative operands, because the
    reciprocity transform feeds nonphysical values through the same printed
    expressions; x + y = 0 is then a genuine pole.
    """
    if x == 0.0 or y == 0.0:
        return 0.0
    if _isinf(x):
        return y
    if _isinf(y):
        return x
    s = x + y
    if s == 0.0:
        raise PoleError("parallel combination hits the pole x + y = 0")
    return x * y / s


def _par3(x: float, y: float, z: float) -> float:
    return _par(_par(x, y), z)


def _sfrac(x: float, y: float) -> float:
    """x/(x+y) for nonnegative extended x, y (a voltage-divider ratio)."""
    if x == 0.0:
        return 0.0
    if _isinf(x):
        if _isinf(y):
            raise PoleError("indeterminate divider inf/(inf + inf)")
        return 1.0
    if _isinf(y):
        return 0.0
    return x / (x + y)


def _div(num: float, den: float, ctx: str) -> float:
    if den == 0.0:
        raise PoleError(f"{ctx}: denominator vanished at these parameters")
    r = num / den
    if math.isnan(r):
        raise PoleError(f"{ctx}: indeterminate at these parameters")
    return r


def _finite(x: float, ctx: str) -> float:
    if math.isnan(x):
        raise PoleError(f"{ctx}: indeterminate at these parameters")
    if _isinf(x):
        raise IllPosedError(f"{ctx}: diverges; the measuring circuit has no "
                            "finite answer for these loads")
    return x + 0.0


def _rpi(p: BjtParams) -> float:
    return _INF if _isinf(p.beta) else p.beta / p.gm


# --------------------------------------------------------------------------
# Common-emitter voltage gain
# --------------------------------------------------------------------------

def _av_ce_general(p: BjtParams, l: BjtLoads) -> float:
    gm, a, b, ro = p.gm, p.alpha, p.beta, p.ro.ohms
    re, rc, rf = l.r_e.ohms, l.r_c.ohms, l.r_f.ohms
    if rf == 0.0:
        if rc == 0.0:
            raise IllPosedError("av_ce: r_f = 0 and r_c = 0 short the driven "
                                "base to ground")
        return 1.0  # collector tied to the driven base
    if _isinf(re):
        scale = gm / a + _inv(ro)
        num = -(gm * _inv(b * ro)) / scale - _inv(rf)
        den = _inv(_par(rc, rf)) + (_inv(ro) * gm / b) / scale
        return _div(-num, den, "av_ce")
    d = 1.0 + gm * re / a + re * _inv(ro)
    num = gm * (1.0 - re * _inv(b * ro)) / d - _inv(rf)
    den = _inv(_par(rc, rf)) + _inv(ro) * (1.0 + gm * re / b) / d
    return _div(-num, den, "av_ce")


def _av_ce_no_degen(p: BjtParams, l: BjtLoads) -> float:
    gm, ro = p.gm, p.ro.ohms
    rc, rf = l.r_c.ohms, l.r_f.ohms
    if rf == 0.0:
        if rc == 0.0:
            raise IllPosedError("av_ce: r_f = 0 and r_c = 0 short the driven "
                                "base to ground")
        return 1.0
    return -(gm - _inv(rf)) * _par3(rc, rf, ro)


def _av_ce_no_feedback(p: BjtParams, l: BjtLoads) -> float:
    gm, a, b, ro = p.gm, p.alpha, p.beta, p.ro.ohms
    re, rc = l.r_e.ohms, l.r_c.ohms
    if _isinf(re):
        scale = gm / a + _inv(ro)
        num = -(gm * _inv(b * ro)) / scale
        den = _inv(rc) + (_inv(ro) * gm / b) / scale
        return _div(-num, den, "av_ce")
    d = 1.0 + gm * re / a + re * _inv(ro)
    num = gm * (1.0 - re * _inv(b * ro)) / d
    den = _inv(rc) + _inv(ro) * (1.0 + gm * re / b) / d
    return _div(-num, den, "av_ce")


def _av_ce_no_ro(p: BjtParams, l: BjtLoads) -> float:
    gm, a = p.gm, p.alpha
    re, rc, rf = l.r_e.ohms, l.r_c.ohms, l.r_f.ohms
    if rf == 0.0:
        if rc == 0.0:
            raise IllPosedError("av_ce: r_f = 0 and r_c = 0 short the driven "
                                "base to ground")
        return 1.0
    gm_deg = 0.0 if _isinf(re) else gm / (1.0 + gm * re / a)
    return -(gm_deg - _inv(rf)) * _par(rc, rf)


# --------------------------------------------------------------------------
# Common-base voltage gain
# --------------------------------------------------------------------------

def _av_cb_general(p: BjtParams, l: BjtLoads) -> float:
    gm, a, b, ro = p.gm, p.alpha, p.beta, p.ro.ohms
    rb, rc, rf = l.r_b.ohms, l.r_c.ohms, l.r_f.ohms
    if rf == 0.0:
        num = gm / a + _inv(ro)
        den = _inv(_par(rc, ro)) + _inv(rb) + gm / a
        return _div(num, den, "av_cb")
    if _isinf(rb):
        scale = gm / b + _inv(rf)
        if scale == 0.0:
            raise IllPosedError("av_cb: base floating")
        num = gm * _inv(a * rf) / scale + _inv(ro)
        den = _inv(_par(rc, ro)) + _inv(rf) * (gm / a) / scale
        return _div(num, den, "av_cb")
    db = 1.0 + gm * rb / b + rb * _inv(rf)
    num = gm * (1.0 + rb * _inv(a * rf)) / db + _inv(ro)
    den = _inv(_par(rc, ro)) + _inv(rf) * (1.0 + gm * rb / a) / db
    return _div(num, den, "av_cb")


def _av_cb_no_degen(p: BjtParams, l: BjtLoads) -> float:
    gm, ro = p.gm, p.ro.ohms
    rc, rf = l.r_c.ohms, l.r_f.ohms
    return (gm + _inv(ro)) * _par3(rc, rf, ro)


def _av_cb_no_feedback(p: BjtParams, l: BjtLoads) -> float:
    gm, b, ro = p.gm, p.beta, p.ro.ohms
    rb, rc = l.r_b.ohms, l.r_c.ohms
    if _isinf(rb) and _isinf(b):
        raise IllPosedError("av_cb: base floating")
    gm_deg = 0.0 if _isinf(rb) else gm / (1.0 + gm * rb / b)
    return (gm_deg + _inv(ro)) * _par(rc, ro)


def _av_cb_no_ro(p: BjtParams, l: BjtLoads) -> float:
    gm, a, b = p.gm, p.alpha, p.beta
    rb, rc, rf = l.r_b.ohms, l.r_c.ohms, l.r_f.ohms
    if rf == 0.0:
        return _div(gm / a, _inv(rc) + _inv(rb) + gm / a, "av_cb")
    if _isinf(rb):
        scale = gm / b + _inv(rf)
        if scale == 0.0:
            raise IllPosedError("av_cb: base floating")
        num = gm * _inv(a * rf) / scale
        den = _inv(rc) + _inv(rf) * (gm / a) / scale
        return _div(num, den, "av_cb")
    db = 1.0 + gm * rb / b + rb * _inv(rf)
    num = gm * (1.0 + rb * _inv(a * rf)) / db
    den = _inv(rc) + _inv(rf) * (1.0 + gm * rb / a) / db
    return _div(num, den, "av_cb")


# --------------------------------------------------------------------------
# Common-collector (emitter follower) voltage gain
# --------------------------------------------------------------------------

def _av_cc_general(p: BjtParams, l: BjtLoads) -> float:
    gm, a, b, ro = p.gm, p.alpha, p.beta, p.ro.ohms
    re, rc, rf = l.r_e.ohms, l.r_c.ohms, l.r_f.ohms
    if rf == 0.0 and rc == 0.0:
        raise IllPosedError("av_cc: r_f = 0 and r_c = 0 short the driven "
                            "base to ground")
    x = _par(rc, rf)
    if _isinf(ro) and _isinf(x):
        raise IllPosedError("av_cc: r_c, r_f and ro all infinite leave the "
                            "collector floating")
    if _isinf(ro):
        return _div(gm / a, gm / a + _inv(re), "av_cc")
    if _isinf(x):
        if _isinf(b):
            if _isinf(re):
                raise IllPosedError("av_cc: collector-emitter loop is "
                                    "isolated for these loads")
            return 0.0
        return _div(gm / b, gm / b + _inv(re), "av_cc")
    num = (gm / a) * ro + (gm / b) * x + _sfrac(rc, rf)
    den = (gm / a) * ro + (gm / b) * x + (ro + x) * _inv(re) + 1.0
    return _div(num, den, "av_cc")


def _av_cc_re_inf(p: BjtParams, l: BjtLoads) -> float:
    gm, a, b, ro = p.gm, p.alpha, p.beta, p.ro.ohms
    rc, rf = l.r_c.ohms, l.r_f.ohms
    if rf == 0.0 and rc == 0.0:
        raise IllPosedError("av_cc: r_f = 0 and r_c = 0 short the driven "
                            "base to ground")
    x = _par(rc, rf)
    if _isinf(ro) or _isinf(x):
        if _isinf(ro) and _isinf(x):
            raise IllPosedError("av_cc: collector floating")
        if _isinf(x) and _isinf(b):
            raise IllPosedError("av_cc: collector-emitter loop is isolated "
                                "for these loads")
        return 1.0
    num = (gm / a) * ro + (gm / b) * x + _sfrac(rc, rf)
    den = (gm / a) * ro + (gm / b) * x + 1.0
    return _div(num, den, "av_cc")


def _av_cc_rf_zero(p: BjtParams, l: BjtLoads) -> float:
    gm, a, ro = p.gm, p.alpha, p.ro.ohms
    re = l.r_e.ohms
    if l.r_c.ohms == 0.0:
        raise IllPosedError("av_cc: diode connection with r_c = 0 shorts "
                            "the driven base to ground")
    y = _par(re, ro)
    if _isinf(y):
        return 1.0
    num = (gm / a) * y + _sfrac(re, ro)
    return _div(num, (gm / a) * y + 1.0, "av_cc")


def _av_cc_rc_zero(p: BjtParams, l: BjtLoads) -> float:
    gm, a, ro = p.gm, p.alpha, p.ro.ohms
    re = l.r_e.ohms
    if l.r_f.ohms == 0.0:
        raise IllPosedError("av_cc: r_f = 0 with the collector grounded "
                            "shorts the driven base")
    y = _par(re, ro)
    if _isinf(y):
        return 1.0
    return _div((gm / a) * y, (gm / a) * y + 1.0, "av_cc")


def _av_cc_no_ro(p: BjtParams, l: BjtLoads) -> float:
    gm, a = p.gm, p.alpha
    re = l.r_e.ohms
    if l.r_f.ohms == 0.0 and l.r_c.ohms == 0.0:
        raise IllPosedError("av_cc: r_f = 0 and r_c = 0 short the driven "
                            "base to ground")
    if _isinf(l.r_c.ohms) and _isinf(l.r_f.ohms):
        raise IllPosedError("av_cc: collector floating (ro neglected)")
    if _isinf(re):
        return 1.0
    return _div(gm * re / a, gm * re / a + 1.0, "av_cc")


# --------------------------------------------------------------------------
# Resistance looking into the base
# --------------------------------------------------------------------------

def _r_base_general(p: BjtParams, l: BjtLoads) -> float:
    gm, a, b, ro = p.gm, p.alpha, p.beta, p.ro.ohms
    re, rc, rf = l.r_e.ohms, l.r_c.ohms, l.r_f.ohms
    if _isinf(re) and _isinf(rc):
        raise IllPosedError("r_base: r_e and r_c both infinite leave the "
                            "probe current no return path")
    if _isinf(rc) and _isinf(ro) and _isinf(rf):
        raise IllPosedError("r_base: collector floating")
    if _isinf(re) and _isinf(ro) and _isinf(rf):
        raise IllPosedError("r_base: emitter dead-ends the probe current")
    if _isinf(rf):
        rpi = _rpi(p)
        if _isinf(rpi):
            raise IllPosedError("r_base: base floating (beta = inf with "
                                "r_f = inf)")
        if _isinf(ro):
            return rpi + (b / a) * re
        if _isinf(rc):
            return rpi + re
        if _isinf(re):
            return rpi + (b / a) * ro + rc
        return rpi + re * ((b / a) * ro + rc) / (rc + re + ro)
    if _isinf(re) and _isinf(ro):
        return rc + rf
    if _isinf(rc) and _isinf(ro):
        return a / gm + re
    if _isinf(re):
        num = rf + rc + gm * (ro / a + _par(rc, rf) / b) * (rc + rf)
        den = 1.0 + gm * rf / b + gm * ro / a
        return _div(num, den, "r_base")
    if _isinf(rc):
        num = rf + (re + ro) + (gm / a) * ro * re + (gm / b) * rf * re
        den = 1.0 + gm * rf / b + gm * ro / a
        return _div(num, den, "r_base")
    if _isinf(ro):
        num = rf + rc + (gm / a) * re * (rc + rf)
        den = 1.0 + gm * rf / b + (gm / a) * (rc + re)
        return _div(num, den, "r_base")
    t = 0.0 if re == 0.0 else re * (rc + rf) / (rc + re + ro)
    num = rf + _par(rc, re + ro) + gm * (ro / a + _par(rc, rf) / b) * t
    den = 1.0 + gm * rf / b + gm * _par(rc + re, ro) / a
    return _div(num, den, "r_base")


def _r_base_no_degen(p: BjtParams, l: BjtLoads) -> float:
    gm, ro = p.gm, p.ro.ohms
    rc, rf = l.r_c.ohms, l.r_f.ohms
    rpi = _rpi(p)
    x = _par(rc, ro)
    if _isinf(x):
        if _isinf(rf):
            raise IllPosedError("r_base: collector floating")
        inner = 1.0 / gm
    elif _isinf(rf):
        inner = _INF
    else:
        inner = _div(rf + x, 1.0 + gm * x, "r_base")
    return _finite(_par(rpi, inner), "r_base")


def _r_base_no_degen_alt(p: BjtParams, l: BjtLoads) -> float:
    """Alternate printing: alpha*r_m against the 1 - gm*R_F denominator."""
    gm, a, ro = p.gm, p.alpha, p.ro.ohms
    rc, rf = l.r_c.ohms, l.r_f.ohms
    x = _par(rc, ro)
    if _isinf(rf) or _isinf(x):
        raise PoleError("r_base: alternate form indeterminate")
    return _par(a / gm, _div(rf + x, 1.0 - gm * rf, "r_base"))


def _r_base_no_feedback(p: BjtParams, l: BjtLoads) -> float:
    gm, b, ro = p.gm, p.beta, p.ro.ohms
    re, rc = l.r_e.ohms, l.r_c.ohms
    rpi = _rpi(p)
    if _isinf(rpi):
        raise IllPosedError("r_base: base floating (beta = inf with no "
                            "feedback path)")
    if (_isinf(re) and _isinf(ro)) or (_isinf(re) and _isinf(rc)) \
            or (_isinf(rc) and _isinf(ro)):
        raise IllPosedError("r_base: loads leave the probe without a unique "
                            "answer")
    if _isinf(ro):
        return rpi + (b + 1.0) * re
    if _isinf(rc):
        return rpi + re
    if _isinf(re):
        return rpi + (b + 1.0) * ro + rc
    return rpi + re * ((b + 1.0) * ro + rc) / (ro + rc + re)


def _r_base_no_ro(p: BjtParams, l: BjtLoads) -> float:
    gm, a, b = p.gm, p.alpha, p.beta
    re, rc, rf = l.r_e.ohms, l.r_c.ohms, l.r_f.ohms
    rpi = _rpi(p)
    if _isinf(re) and _isinf(rc):
        raise IllPosedError("r_base: no return path for the probe current")
    if _isinf(rc) and _isinf(rf):
        raise IllPosedError("r_base: collector floating")
    left = rpi + (b + 1.0) * re if not _isinf(re) else _INF
    d = 1.0 + gm * re / a if not _isinf(re) else _INF
    if _isinf(rc):
        right = _div(d, gm, "r_base") if not _isinf(d) else _INF
    else:
        right = _div(rc + rf, 1.0 + (gm * rc / d if not _isinf(d) else 0.0),
                     "r_base")
    return _finite(_par(left, right), "r_base")


def _r_base_no_ro_alt(p: BjtParams, l: BjtLoads) -> float:
    """Alternate printing with alpha*r_m + R_E and 1 - gm*R_F/(...)."""
    gm, a = p.gm, p.alpha
    re, rc, rf = l.r_e.ohms, l.r_c.ohms, l.r_f.ohms
    d = 1.0 + gm * re / a
    left = a / gm + re
    right = _div(rc + rf, 1.0 - gm * rf / d, "r_base")
    return _par(left, right)


def _r_base_re_inf(p: BjtParams, l: BjtLoads) -> float:
    gm, b, ro = p.gm, p.beta, p.ro.ohms
    rc, rf = l.r_c.ohms, l.r_f.ohms
    rpi = _rpi(p)
    if _isinf(rc):
        raise IllPosedError("r_base: no return path for the probe current")
    if _isinf(rf) and (_isinf(ro) or _isinf(rpi)):
        raise IllPosedError("r_base: probe dead-ends with r_f = inf")
    inner = rpi + (b + 1.0) * ro if not _isinf(rpi) else _INF
    return _par(inner, rf) + rc


def _r_base_rc_inf(p: BjtParams, l: BjtLoads) -> float:
    gm, ro = p.gm, p.ro.ohms
    re, rf = l.r_e.ohms, l.r_f.ohms
    rpi = _rpi(p)
    if _isinf(re):
        raise IllPosedError("r_base: no return path for the probe current")
    if _isinf(rf) and (_isinf(ro) or _isinf(rpi)):
        raise IllPosedError("r_base: collector floating")
    inner = 1.0 / gm if _isinf(ro) else _div(rf + ro, 1.0 + gm * ro, "r_base")
    return _par(rpi, inner) + re


def _r_base_rc_inf_alt(p: BjtParams, l: BjtLoads) -> float:
    """Alternate printing: (alpha*r_m || (R_F+ro)/(1 - gm*R_F)) + R_E."""
    gm, a, ro = p.gm, p.alpha, p.ro.ohms
    re, rf = l.r_e.ohms, l.r_f.ohms
    return _par(a / gm, _div(rf + ro, 1.0 - gm * rf, "r_base")) + re


# --------------------------------------------------------------------------
# Resistance looking into the emitter
# --------------------------------------------------------------------------

def _r_emitter_general(p: BjtParams, l: BjtLoads) -> float:
    gm, a, b, ro = p.gm, p.alpha, p.beta, p.ro.ohms
    rb, rc, rf = l.r_b.ohms, l.r_c.ohms, l.r_f.ohms
    if _isinf(rb) and _isinf(rc):
        raise IllPosedError("r_emitter: r_b and r_c both infinite leave the "
                            "probe current no return path")
    if _isinf(rc) and _isinf(rf) and _isinf(ro):
        raise IllPosedError("r_emitter: collector floating")
    if _isinf(rb) and _isinf(rf) and _isinf(ro):
        raise IllPosedError("r_emitter: base dead-ends the probe current")
    if _isinf(ro):
        # exact limit of the general row; a/b = 1/(beta+1)
        if _isinf(rb):
            return a / gm + rc + (a / b) * rf
        if _isinf(rc):
            return a / gm + rb
        if _isinf(rf):
            return a / gm + (a / b) * rb
        if rb == 0.0:
            return a / gm
        return a / gm + rb * (rc + (a / b) * rf) / (rb + rc + rf)
    if _isinf(rb) and _isinf(rf):
        if _isinf(_rpi(p)):
            raise IllPosedError("r_emitter: base floating")
        return rc + ro
    if _isinf(rc) and _isinf(rf):
        # open collector: the gm current loops back through ro and cancels
        # the transistor action, leaving the full r_pi in series
        rpi = _rpi(p)
        if _isinf(rpi):
            raise IllPosedError("r_emitter: probe dead-ends at the open "
                                "collector")
        return rpi + rb
    if _isinf(rb):
        num = ro + rc + gm * (rf / b + _par(rc, ro) / a) * (rc + ro)
        den = 1.0 + gm * ro / a + gm * rf / b
        return _div(num, den, "r_emitter")
    if _isinf(rc):
        num = ro + rb + rf + gm * (rf / b + ro / a) * rb
        den = 1.0 + gm * ro / a + gm * rf / b
        return _div(num, den, "r_emitter")
    if _isinf(rf):
        num = ro + rc + (gm / b) * rb * (rc + ro)
        den = 1.0 + gm * ro / a + (gm / b) * (rb + rc)
        return _div(num, den, "r_emitter")
    tb = 0.0 if rb == 0.0 else rb * (rc + ro) / (rb + rc + rf)
    num = ro + _par(rc, rb + rf) + gm * (rf / b + _par(rc, ro) / a) * tb
    den = 1.0 + gm * ro / a + gm * _par(rb + rc, rf) / b
    return _div(num, den, "r_emitter")


def _r_emitter_no_degen(p: BjtParams, l: BjtLoads) -> float:
    gm, ro = p.gm, p.ro.ohms
    rc, rf = l.r_c.ohms, l.r_f.ohms
    rpi = _rpi(p)
    x = _par(rc, rf)
    if _isinf(ro):
        if _isinf(x):
            raise IllPosedError("r_emitter: collector floating")
        inner = 1.0 / gm
    elif _isinf(x):
        inner = _INF
    else:
        inner = _div(ro + x, 1.0 + gm * ro, "r_emitter")
    return _finite(_par(rpi, inner), "r_emitter")


def _r_emitter_no_degen_alt(p: BjtParams, l: BjtLoads) -> float:
    """Table's alternate printing: alpha*r_m in parallel with the
    1 - gm*(R_C || R_F) form (poles where that denominator vanishes)."""
    gm, a, ro = p.gm, p.alpha, p.ro.ohms
    rc, rf = l.r_c.ohms, l.r_f.ohms
    x = _par(rc, rf)
    if _isinf(x):
        raise PoleError("r_emitter: alternate form indeterminate")
    return _par(a / gm, _div(ro + x, 1.0 - gm * x, "r_emitter"))


def _r_emitter_no_feedback(p: BjtParams, l: BjtLoads) -> float:
    gm, b, ro = p.gm, p.beta, p.ro.ohms
    rb, rc = l.r_b.ohms, l.r_c.ohms
    rpi = _rpi(p)
    if _isinf(rb) and _isinf(rc):
        raise IllPosedError("r_emitter: no return path for the probe current")
    if _isinf(rc) and _isinf(ro):
        raise IllPosedError("r_emitter: collector floating")
    if _isinf(rb) and _isinf(rpi):
        raise IllPosedError("r_emitter: base floating")
    left = rpi + rb
    db = _INF if (_isinf(rb) and not _isinf(b)) else 1.0 + gm * rb / b
    if _isinf(ro):
        right = _div(db, gm, "r_emitter") if not _isinf(db) else _INF
    elif _isinf(rc):
        right = _INF
    else:
        right = _div(rc + ro, 1.0 + (0.0 if _isinf(db) else gm * ro / db),
                     "r_emitter")
    return _finite(_par(left, right), "r_emitter")


def _r_emitter_no_feedback_alt(p: BjtParams, l: BjtLoads) -> float:
    """Alternate printing with alpha*r_m + R_B/(beta+1) and 1 - gm*R_C/(...)."""
    gm, a, b, ro = p.gm, p.alpha, p.beta, p.ro.ohms
    rb, rc = l.r_b.ohms, l.r_c.ohms
    db = 1.0 + gm * rb / b
    left = a / gm + rb / (b + 1.0)
    right = _div(rc + ro, 1.0 - gm * rc / db, "r_emitter")
    return _par(left, right)


def _r_emitter_no_ro(p: BjtParams, l: BjtLoads) -> float:
    gm, a, b = p.gm, p.alpha, p.beta
    rb, rc, rf = l.r_b.ohms, l.r_c.ohms, l.r_f.ohms
    if _isinf(rb) and _isinf(rc):
        raise IllPosedError("r_emitter: no return path for the probe current")
    if _isinf(rc) and _isinf(rf):
        raise IllPosedError("r_emitter: collector floating")
    if _isinf(rb) and _isinf(rf):
        raise IllPosedError("r_emitter: base dead-ends the probe current")
    arm = a / gm
    if _isinf(rb):
        return arm + rc + rf / (b + 1.0)
    if _isinf(rc):
        return arm + rb
    if _isinf(rf):
        return arm + rb / (b + 1.0)
    if rb == 0.0:
        return arm
    return arm + rb * (rc + rf / (b + 1.0)) / (rb + rc + rf)


def _r_emitter_rc_inf(p: BjtParams, l: BjtLoads) -> float:
    gm, ro = p.gm, p.ro.ohms
    rb, rf = l.r_b.ohms, l.r_f.ohms
    rpi = _rpi(p)
    if _isinf(rb):
        raise IllPosedError("r_emitter: no return path for the probe current")
    if _isinf(rf) and (_isinf(ro) or _isinf(rpi)):
        raise IllPosedError("r_emitter: collector floating")
    inner = 1.0 / gm if _isinf(ro) else _div(rf + ro, 1.0 + gm * ro,
                                             "r_emitter")
    return _par(rpi, inner) + rb


def _r_emitter_rc_inf_alt(p: BjtParams, l: BjtLoads) -> float:
    """Alternate printing: (alpha*r_m || (R_F+ro)/(1 - gm*R_F)) + R_B."""
    gm, a, ro = p.gm, p.alpha, p.ro.ohms
    rb, rf = l.r_b.ohms, l.r_f.ohms
    return _par(a / gm, _div(rf + ro, 1.0 - gm * rf, "r_emitter")) + rb


# --------------------------------------------------------------------------
# Resistance looking into the collector
# --------------------------------------------------------------------------

def _r_collector_general(p: BjtParams, l: BjtLoads) -> float:
    gm, a, b, ro = p.gm, p.alpha, p.beta, p.ro.ohms
    rb, re, rf = l.r_b.ohms, l.r_e.ohms, l.r_f.ohms
    if _isinf(ro) and _isinf(rf):
        raise IllPosedError("r_collector: ro and r_f both infinite leave the "
                            "collector floating")
    if _isinf(rb) and _isinf(re):
        raise IllPosedError("r_collector: r_b and r_e both infinite leave "
                            "the probe current no return path")
    if _isinf(rb) and _isinf(rf) and _isinf(_rpi(p)):
        raise IllPosedError("r_collector: base floating")
    if _isinf(ro):
        if _isinf(rb):
            return a / gm + re + (a / b) * rf
        if _isinf(re):
            return rb + rf
        num = (1.0 + gm * re / a) * (rb + rf) + (0.0 if _isinf(b)
                                                 else gm * rb * rf / b)
        den = 1.0 + gm * (rb + re) / a
        return _div(num, den, "r_collector")
    if _isinf(rf):
        if _isinf(b):
            return ro + re + gm * ro * re / a
        if _isinf(rb):
            return ro + re
        if _isinf(re):
            return b / gm + rb + (b / a) * ro
        num = (ro + re) * (1.0 + gm * rb / b) + gm * ro * re / a
        den = 1.0 + gm * (rb + re) / b
        return _div(num, den, "r_collector")
    if _isinf(rb):
        num = (ro + re + gm * ro * re / a) + (0.0 if _isinf(b)
                                              else gm * rf / b) * (ro + re)
        den = 1.0 + gm * ro / a + (0.0 if _isinf(b) else gm * rf / b)
        return _div(num, den, "r_collector")
    if _isinf(re):
        num = (1.0 + gm * ro / a) * (rb + rf) + (0.0 if _isinf(b)
                                                 else gm * rb * rf / b)
        den = 1.0 + gm * ro / a + (0.0 if _isinf(b) else gm * rf / b)
        return _div(num, den, "r_collector")
    gbb = 0.0 if _isinf(b) else gm * rb * rf / b
    gfb = 0.0 if _isinf(b) else gm * rf / b
    num = (ro + re + gm * ro * re / a) * (rb + rf) / (ro + rf) \
        + gbb * (ro + re) / (ro + rf)
    den = 1.0 + (1.0 + gm * ro / a + gfb) * (rb + re) / (ro + rf)
    return _div(num, den, "r_collector")


def _r_collector_rb_zero(p: BjtParams, l: BjtLoads) -> float:
    gm, a, b, ro = p.gm, p.alpha, p.beta, p.ro.ohms
    re, rf = l.r_e.ohms, l.r_f.ohms
    if _isinf(ro) and _isinf(rf):
        raise IllPosedError("r_collector: collector floating")
    if _isinf(re):
        inner = _INF if _isinf(b) else (b / gm) * (1.0 + gm * ro / a)
        return _finite(_par(rf, inner), "r_collector")
    inner = _div(ro + re + gm * ro * re / a, 1.0 + gm * re / b, "r_collector")
    return _finite(_par(rf, inner), "r_collector")


def _r_collector_re_zero(p: BjtParams, l: BjtLoads) -> float:
    gm, a, b, ro = p.gm, p.alpha, p.beta, p.ro.ohms
    rb, rf = l.r_b.ohms, l.r_f.ohms
    if _isinf(ro) and _isinf(rf):
        raise IllPosedError("r_collector: collector floating")
    if _isinf(rb):
        inner = a / gm + (0.0 if _isinf(b) else a * rf / b)
        return _finite(_par(ro, inner), "r_collector")
    fb_term = 0.0 if (_isinf(b) or rb == 0.0 or rf == 0.0) else gm * rb * rf / b
    num = rb + rf + fb_term
    inner = _div(num, 1.0 + gm * rb / a, "r_collector")
    return _finite(_par(ro, inner), "r_collector")


def _r_collector_no_feedback(p: BjtParams, l: BjtLoads) -> float:
    gm, a, b, ro = p.gm, p.alpha, p.beta, p.ro.ohms
    rb, re = l.r_b.ohms, l.r_e.ohms
    if _isinf(ro):
        raise IllPosedError("r_collector: collector floating (no feedback "
                            "path and ro = inf)")
    if _isinf(rb) and _isinf(re):
        raise IllPosedError("r_collector: no return path for the probe "
                            "current")
    if _isinf(b):
        if _isinf(re):
            raise IllPosedError("r_collector: collector-emitter loop is "
                                "isolated (beta = inf, r_e = inf)")
        if _isinf(rb):
            raise IllPosedError("r_collector: base floating")
        return ro + re + gm * ro * re / a
    if _isinf(rb):
        return ro + re
    if _isinf(re):
        return b / gm + rb + (b / a) * ro
    num = (ro + re) * (1.0 + gm * rb / b) + gm * ro * re / a
    den = 1.0 + gm * (rb + re) / b
    return _div(num, den, "r_collector")


def _r_collector_no_ro(p: BjtParams, l: BjtLoads) -> float:
    gm, a, b = p.gm, p.alpha, p.beta
    rb, re, rf = l.r_b.ohms, l.r_e.ohms, l.r_f.ohms
    if _isinf(rf):
        raise IllPosedError("r_collector: collector floating (ro = inf and "
                            "r_f = inf)")
    if _isinf(rb) and _isinf(re):
        raise IllPosedError("r_collector: no return path for the probe "
                            "current")
    if _isinf(rb):
        return a / gm + re + (0.0 if _isinf(b) else a * rf / b)
    if _isinf(re):
        return rb + rf
    num = (rb + rf) * (1.0 + gm * re / a) + (0.0 if _isinf(b)
                                             else gm * rb * rf / b)
    den = 1.0 + gm * (rb + re) / a
    return _div(num, den, "r_collector")


def _r_collector_re_inf(p: BjtParams, l: BjtLoads) -> float:
    gm, b, ro = p.gm, p.beta, p.ro.ohms
    rb, rf = l.r_b.ohms, l.r_f.ohms
    rpi = _rpi(p)
    if _isinf(rb):
        raise IllPosedError("r_collector: no return path for the probe "
                            "current")
    if _isinf(rf) and (_isinf(ro) or _isinf(rpi)):
        raise IllPosedError("r_collector: collector floating")
    inner = _INF if (_isinf(rpi) or _isinf(ro)) else rpi + (b + 1.0) * ro
    return _par(inner, rf) + rb


# --------------------------------------------------------------------------
# MOS rows
# --------------------------------------------------------------------------

def _av_cs(p: MosParams, l: MosLoads) -> float:
    gm, gmb, ro = p.gm, p.gmb, p.ro.ohms
    rs, rd, rf = l.r_s.ohms, l.r_d.ohms, l.r_f.ohms
    if rf == 0.0:
        if rd == 0.0:
            raise IllPosedError("av_cs: r_f = 0 and r_d = 0 short the driven "
                                "gate to ground")
        return 1.0
    ds = 1.0 + (gm + gmb) * rs + rs * _inv(ro) if not _isinf(rs) else _INF
    num = (0.0 if _isinf(ds) else gm / ds) - _inv(rf)
    den = _inv(_par(rd, rf)) + (0.0 if _isinf(ds) else _inv(ro) / ds)
    return _div(-num, den, "av_cs")


def _av_cg(p: MosParams, l: MosLoads) -> float:
    gm, gmb, ro = p.gm, p.gmb, p.ro.ohms
    rg, rd, rf = l.r_g.ohms, l.r_d.ohms, l.r_f.ohms
    if _isinf(rg) and _isinf(rf):
        raise IllPosedError("av_cg: gate floating")
    num = gm + gmb + _inv(ro)
    if _isinf(rg):
        den = _inv(_par(rd, ro)) + gm
    else:
        den = _inv(_par(rd, ro)) + (1.0 + gm * rg) * _inv(rg + rf)
    return _div(num, den, "av_cg")


def _av_cd(p: MosParams, l: MosLoads) -> float:
    gm, gmb, ro = p.gm, p.gmb, p.ro.ohms
    rs, rd, rf = l.r_s.ohms, l.r_d.ohms, l.r_f.ohms
    if rf == 0.0 and rd == 0.0:
        raise IllPosedError("av_cd: r_f = 0 and r_d = 0 short the driven "
                            "gate to ground")
    x = _par(rd, rf)
    if _isinf(x) and _isinf(ro):
        raise IllPosedError("av_cd: drain floating")
    if _isinf(x) and _isinf(rs):
        raise IllPosedError("av_cd: source-drain loop is isolated")
    if _isinf(ro):
        return _div(gm, gm + gmb + _inv(rs), "av_cd")
    if _isinf(x):
        return 0.0  # no DC path for drain current, so no source current
    num = gm * ro + _sfrac(rd, rf)
    den = (gm + gmb) * ro + (ro + x) * _inv(rs) + 1.0
    return _div(num, den, "av_cd")


def _r_gate(p: MosParams, l: MosLoads) -> float:
    gm, gmb, ro = p.gm, p.gmb, p.ro.ohms
    rs, rd, rf = l.r_s.ohms, l.r_d.ohms, l.r_f.ohms
    if _isinf(rf):
        raise IllPosedError("r_gate: gate floating with r_f = inf")
    if _isinf(rd) and gmb != 0.0:
        raise IllPosedError("r_gate: r_d = inf with gmb > 0 is ill-defined "
                            "(the body tie loses its reference)")
    if _isinf(rd) and _isinf(rs):
        raise IllPosedError("r_gate: no return path for the probe current")
    # pole-free rearrangement of the printed row: the R_F/R_S and R_F/R_D
    # ratios are expanded so r_s = 0 and r_d = 0 are regular points
    if _isinf(rs):
        return rf + rd
    if _isinf(ro):
        num = 1.0 + (gm + gmb) * rs - gm * rf
        if _isinf(rd):
            # the transconductance itself carries the probe current
            return rf + num / gm
        den = gm * rd + 1.0 + (gm + gmb) * rs
        return rf + rd * num / den
    m = ro + rs + (gm + gmb) * ro * rs
    n = m - gm * ro * rf
    if _isinf(rd):
        return rf + n / (1.0 + gm * ro)
    return rf + rd * n / (rd * (1.0 + gm * ro) + m)


def _rs_divider(rd, rg, rf, gm, gmb, ro) -> float:
    # [R_D/(R_G+R_D+R_F)] * [((1+gm*ro)R_G + R_F)/(1+(gm+gmb)*ro)] with the
    # two factors taken jointly so every single-INF corner is exact; the
    # caller guards double-INF load combinations.
    if rd == 0.0:
        return 0.0
    if _isinf(ro):
        if _isinf(rd):
            return rg  # gmb == 0 here, guarded by the caller
        if _isinf(rg):
            return rd * gm / (gm + gmb)
        if _isinf(rf):
            return 0.0
        return rd * (gm * rg) / ((rg + rd + rf) * (gm + gmb))
    c1 = 1.0 + gm * ro
    c2 = 1.0 + (gm + gmb) * ro
    if _isinf(rd):
        return (c1 * rg + rf) / c2
    if _isinf(rg):
        return rd * c1 / c2
    if _isinf(rf):
        return rd / c2
    return rd * (c1 * rg + rf) / ((rg + rd + rf) * c2)


def _r_source(p: MosParams, l: MosLoads) -> float:
    gm, gmb, ro = p.gm, p.gmb, p.ro.ohms
    rg, rd, rf = l.r_g.ohms, l.r_d.ohms, l.r_f.ohms
    if _isinf(rg) and _isinf(rf):
        raise IllPosedError("r_source: gate floating")
    if _isinf(rd) and gmb != 0.0:
        raise IllPosedError("r_source: r_d = inf with gmb > 0 is ill-defined "
                            "(the body tie loses its reference)")
    if _isinf(rd) and (_isinf(rf) or _isinf(rg)):
        raise IllPosedError("r_source: no return path for the probe current")
    base = _par3(1.0 / gm, _inv(gmb), ro)
    return base + _rs_divider(rd, rg, rf, gm, gmb, ro)


def _r_drain(p: MosParams, l: MosLoads) -> float:
    gm, gmb, ro = p.gm, p.gmb, p.ro.ohms
    rg, rs, rf = l.r_g.ohms, l.r_s.ohms, l.r_f.ohms
    if _isinf(rg) and _isinf(rf):
        raise IllPosedError("r_drain: gate floating")
    if _isinf(ro) and _isinf(rf):
        raise IllPosedError("r_drain: drain floating")
    if _isinf(rs) and (_isinf(rg) or _isinf(rf)):
        raise IllPosedError("r_drain: no return path for the probe current")
    s = _sfrac(rg, rf)
    if _isinf(ro):
        inner = _INF if (_isinf(rs) or s == 0.0) \
            else (1.0 + (gm + gmb) * rs) / (gm * s)
    elif _isinf(rs):
        inner = _INF
    else:
        inner = _div(ro + rs + (gm + gmb) * ro * rs, 1.0 + gm * ro * s,
                     "r_drain")
    return _finite(_par(rg + rf, inner), "r_drain")


# --------------------------------------------------------------------------
# Row registry and the public evaluators
# --------------------------------------------------------------------------

# pins: load-field -> value the row fixes; None in the "ro" slot means the
# row also pins the device's output resistance to INF (the r_o -> inf rows)
_ROWS: dict[tuple[Quantity, Variant], tuple] = {
    (Quantity.AV_CE, Variant.GENERAL): (_av_ce_general, {}, False),
    (Quantity.AV_CE, Variant.NO_DEGEN): (_av_ce_no_degen, {"r_e": 0.0}, False),
    (Quantity.AV_CE, Variant.NO_FEEDBACK): (_av_ce_no_feedback, {"r_f": _INF}, False),
    (Quantity.AV_CE, Variant.NO_RO): (_av_ce_no_ro, {}, True),
    (Quantity.AV_CB, Variant.GENERAL): (_av_cb_general, {}, False),
    (Quantity.AV_CB, Variant.NO_DEGEN): (_av_cb_no_degen, {"r_b": 0.0}, False),
    (Quantity.AV_CB, Variant.NO_FEEDBACK): (_av_cb_no_feedback, {"r_f": _INF}, False),
    (Quantity.AV_CB, Variant.NO_RO): (_av_cb_no_ro, {}, True),
    (Quantity.AV_CC, Variant.GENERAL): (_av_cc_general, {}, False),
    (Quantity.AV_CC, Variant.RE_INF): (_av_cc_re_inf, {"r_e": _INF}, False),
    (Quantity.AV_CC, Variant.RF_ZERO): (_av_cc_rf_zero, {"r_f": 0.0}, False),
    (Quantity.AV_CC, Variant.RC_ZERO): (_av_cc_rc_zero, {"r_c": 0.0}, False),
    (Quantity.AV_CC, Variant.NO_RO): (_av_cc_no_ro, {}, True),
    (Quantity.R_BASE, Variant.GENERAL): (_r_base_general, {}, False),
    (Quantity.R_BASE, Variant.NO_DEGEN): (_r_base_no_degen, {"r_e": 0.0}, False),
    (Quantity.R_BASE, Variant.NO_FEEDBACK): (_r_base_no_feedback, {"r_f": _INF}, False),
    (Quantity.R_BASE, Variant.NO_RO): (_r_base_no_ro, {}, True),
    (Quantity.R_BASE, Variant.RE_INF): (_r_base_re_inf, {"r_e": _INF}, False),
    (Quantity.R_BASE, Variant.RC_INF): (_r_base_rc_inf, {"r_c": _INF}, False),
    (Quantity.R_EMITTER, Variant.GENERAL): (_r_emitter_general, {}, False),
    (Quantity.R_EMITTER, Variant.NO_DEGEN): (_r_emitter_no_degen, {"r_b": 0.0}, False),
    (Quantity.R_EMITTER, Variant.NO_FEEDBACK): (_r_emitter_no_feedback, {"r_f": _INF}, False),
    (Quantity.R_EMITTER, Variant.NO_RO): (_r_emitter_no_ro, {}, True),
    (Quantity.R_EMITTER, Variant.RC_INF): (_r_emitter_rc_inf, {"r_c": _INF}, False),
    (Quantity.R_COLLECTOR, Variant.GENERAL): (_r_collector_general, {}, False),
    (Quantity.R_COLLECTOR, Variant.RB_ZERO): (_r_collector_rb_zero, {"r_b": 0.0}, False),
    (Quantity.R_COLLECTOR, Variant.RE_ZERO): (_r_collector_re_zero, {"r_e": 0.0}, False),
    (Quantity.R_COLLECTOR, Variant.NO_FEEDBACK): (_r_collector_no_feedback, {"r_f": _INF}, False),
    (Quantity.R_COLLECTOR, Variant.NO_RO): (_r_collector_no_ro, {}, True),
    (Quantity.R_COLLECTOR, Variant.RE_INF): (_r_collector_re_inf, {"r_e": _INF}, False),
}

_MOS_ROWS = {
    Quantity.AV_CS: _av_cs,
    Quantity.AV_CG: _av_cg,
    Quantity.AV_CD: _av_cd,
    Quantity.R_GATE: _r_gate,
    Quantity.R_SOURCE: _r_source,
    Quantity.R_DRAIN: _r_drain,
}

# rows the tables print in two algebraically equal ways; the alternate form
# trades the 1 + gm*(...) denominator for a 1 - gm*(...) one and has poles
# where that denominator vanishes
DUAL_FORMS: dict[tuple[Quantity, Variant], tuple] = {
    (Quantity.R_BASE, Variant.NO_DEGEN): (_r_base_no_degen, _r_base_no_degen_alt),
    (Quantity.R_BASE, Variant.NO_RO): (_r_base_no_ro, _r_base_no_ro_alt),
    (Quantity.R_BASE, Variant.RC_INF): (_r_base_rc_inf, _r_base_rc_inf_alt),
    (Quantity.R_EMITTER, Variant.NO_DEGEN): (_r_emitter_no_degen, _r_emitter_no_degen_alt),
    (Quantity.R_EMITTER, Variant.NO_FEEDBACK): (_r_emitter_no_feedback, _r_emitter_no_feedback_alt),
    (Quantity.R_EMITTER, Variant.RC_INF): (_r_emitter_rc_inf, _r_emitter_rc_inf_alt),
}


def supported_variants(q: Quantity) -> tuple[Variant, ...]:
    return tuple(v for (qq, v) in _ROWS if qq is q)


def bjt_eval(q: Quantity, v: Variant, p: BjtParams, loads: BjtLoads,
             check_pins: bool = True) -> float:
    """Evaluate one printed table row.

    With check_pins=True (the default) the loads must actually take the
    value the row pins them to (e.g. NO_FEEDBACK demands r_f = INF); pass
    check_pins=False to use the row as an approximation of a circuit whose
    loads do not satisfy the pin, which is how the sweep command co-plots
    approximation rows against the exact ones.
    """
    if q.is_mos:
        raise ValueError(f"{q} is a MOS quantity; use mos_eval")
    try:
        fn, pins, pin_ro = _ROWS[(q, v)]
    except KeyError:
        extra = ""
        if q is Quantity.R_COLLECTOR and v is Variant.NO_DEGEN:
            extra = " (R_COLLECTOR has two degeneration rows: RB_ZERO and RE_ZERO)"
        raise UnsupportedVariantError(
            f"no table row for ({q.name}, {v.name}); supported variants: "
            f"{', '.join(x.name for x in supported_variants(q))}{extra}") from None
    if check_pins:
        for field, want in pins.items():
            got = getattr(loads, field).ohms
            if got != want:
                raise PinMismatchError(
                    f"({q.name}, {v.name}) pins {field} = "
                    f"{'inf' if _isinf(want) else want}, but got {got}; pass "
                    "check_pins=False to evaluate the row as an approximation")
        if pin_ro and not p.ro.is_inf:
            raise PinMismatchError(
                f"({q.name}, {v.name}) neglects the output resistance and "
                f"requires ro = INF, but got {p.ro.ohms}; pass "
                "check_pins=False to evaluate the row as an approximation")
    return _finite(fn(p, loads), q.value)


def mos_eval(q: Quantity, p: MosParams, loads: MosLoads) -> float:
    """Evaluate the (single, general) MOS table row for the quantity."""
    if not q.is_mos:
        raise ValueError(f"{q} is a bipolar quantity; use bjt_eval")
    return _finite(_MOS_ROWS[q](p, loads), q.value)


# --------------------------------------------------------------------------
# Intuitive decompositions and the auxiliary closed forms
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class EffectiveCE:
    """Degeneration-adjusted transconductance / output resistance whose
    assembly -(gm_eff - 1/R_F)(R_C || R_F || ro_eff) equals the general
    common-emitter gain."""

    gm_eff: float
    ro_eff: Resistance


@dataclass(frozen=True)
class EffectiveCB:
    """Base-degeneration analogue: (gm_eff + 1/ro)(R_C || rf_eff || ro)
    equals the general common-base gain."""

    gm_eff: float
    rf_eff: Resistance


def effective_ce(p: BjtParams, loads: BjtLoads) -> EffectiveCE:
    gm, a, b, ro = p.gm, p.alpha, p.beta, p.ro.ohms
    re = loads.r_e.ohms
    if _isinf(re):
        scale = gm / a + _inv(ro)
        gm_eff = -(gm * _inv(b * ro)) / scale
        ro_eff = _INF if _isinf(ro) else ro * scale * b / gm
        return EffectiveCE(gm_eff, as_resistance(ro_eff))
    d = 1.0 + gm * re / a + re * _inv(ro)
    gm_eff = gm * (1.0 - re * _inv(b * ro)) / d
    ro_eff = _INF if _isinf(ro) else ro * d / (1.0 + gm * re / b)
    return EffectiveCE(gm_eff, as_resistance(ro_eff))


def effective_cb(p: BjtParams, loads: BjtLoads) -> EffectiveCB:
    gm, a, b = p.gm, p.alpha, p.beta
    rb, rf = loads.r_b.ohms, loads.r_f.ohms
    if rf == 0.0:
        return EffectiveCB(gm / a, as_resistance(rb / (1.0 + gm * rb / a)))
    if _isinf(rb):
        scale = gm / b + _inv(rf)
        gm_eff = gm * _inv(a * rf) / scale
        rf_eff = _INF if _isinf(rf) else rf * scale * a / gm
        return EffectiveCB(gm_eff, as_resistance(rf_eff))
    db = 1.0 + gm * rb / b + rb * _inv(rf)
    gm_eff = gm * (1.0 + rb * _inv(a * rf)) / db
    rf_eff = _INF if _isinf(rf) else rf * db / (1.0 + gm * rb / a)
    return EffectiveCB(gm_eff, as_resistance(rf_eff))


def assemble_av_ce(eff: EffectiveCE, loads: BjtLoads) -> float:
    rc, rf = loads.r_c.ohms, loads.r_f.ohms
    return -(eff.gm_eff - _inv(rf)) * _par3(rc, rf, eff.ro_eff.ohms)


def assemble_av_cb(eff: EffectiveCB, p: BjtParams, loads: BjtLoads) -> float:
    ro = p.ro.ohms
    rc = loads.r_c.ohms
    return (eff.gm_eff + _inv(ro)) * _par3(rc, eff.rf_eff.ohms, ro)


class OpenTerminalKind(Enum):
    """Two-terminal equivalents seen when the far terminal is opened."""

    R_BE_OPEN_COLLECTOR = "r_be_open_collector"
    R_BC_OPEN_EMITTER = "r_bc_open_emitter"
    R_GS_OPEN_DRAIN = "r_gs_open_drain"
    R_GD_OPEN_SOURCE = "r_gd_open_source"


def open_terminal_equiv(kind: OpenTerminalKind,
                        p: BjtParams | MosParams,
                        r_fb: Resistance | float) -> float:
    """Equivalent two-terminal resistance with the far terminal open.

    Consistency contract: adding the far-side load back reproduces the
    corresponding current-source-bias table row.  The open-drain case
    requires gmb = 0; with body effect the two-terminal impedance does not
    exist.  May return inf (e.g. the base-collector pair with r_f = INF and
    ro = INF sees no branch at all).
    """
    rf = as_resistance(r_fb).ohms
    if kind is OpenTerminalKind.R_GD_OPEN_SOURCE:
        return rf
    if kind is OpenTerminalKind.R_GS_OPEN_DRAIN:
        if not isinstance(p, MosParams):
            raise TypeError("the open-drain equivalent needs MOS parameters")
        if p.gmb != 0.0:
            raise IllPosedError("r_gs with the drain open is ill-defined "
                                "when gmb > 0")
        ro = p.ro.ohms
        return 1.0 / p.gm if _isinf(ro) else (rf + ro) / (1.0 + p.gm * ro)
    if not isinstance(p, BjtParams):
        raise TypeError(f"{kind.name} needs bipolar parameters")
    gm, b, ro = p.gm, p.beta, p.ro.ohms
    rpi = _rpi(p)
    if kind is OpenTerminalKind.R_BE_OPEN_COLLECTOR:
        inner = 1.0 / gm if _isinf(ro) else (rf + ro) / (1.0 + gm * ro)
        return _par(rpi, inner)
    # base-collector pair, emitter open
    inner = _INF if (_isinf(rpi) or _isinf(ro)) else rpi + (b + 1.0) * ro
    return _par(inner, rf)


def blackman_rb(p: BjtParams, loads: BjtLoads) -> float:
    """r_b(R_E = 0) by Blackman's impedance formula Z0*(1+Tsc)/(1+Toc).

    Z0 is the port impedance with the controlled source disabled; the
    short-circuit return ratio is 0 and the open-circuit one is
    gm*[(r_pi+R_F) || R_C || ro] * r_pi/(r_pi+R_F).
    """
    gm, ro = p.gm, p.ro.ohms
    rc, rf = loads.r_c.ohms, loads.r_f.ohms
    rpi = _rpi(p)
    z0 = _par(rpi, _INF if _isinf(rf) else rf + _par(rc, ro))
    t_oc = gm * _par3(rpi + rf, rc, ro) * _sfrac(rpi, rf)
    t_sc = 0.0
    return _finite(_div(z0 * (1.0 + t_sc), 1.0 + t_oc, "blackman"), "blackman")


@dataclass(frozen=True)
class CascodeLimits:
    """r_c with R_B = 0 and R_F = INF, and its two design-rule limits."""

    exact: float
    beta_inf: float
    re_inf: float


def cascode_rc_limits(p: BjtParams, r_e_load: Resistance | float) -> CascodeLimits:
    gm, b, ro = p.gm, p.beta, p.ro.ohms
    re = as_resistance(r_e_load).ohms
    rpi = _rpi(p)
    exact = ro + (1.0 + gm * ro) * _par(re, rpi)
    beta_inf = ro + (1.0 + gm * ro) * re
    re_inf = rpi + (b + 1.0) * ro
    return CascodeLimits(exact=exact, beta_inf=beta_inf, re_inf=re_inf)
