"""Seeded random parameter draws shared by the test suite and cmd_verify.

Resistances are log-uniform over [1 ohm, 10 Mohm] with optional 0/INF corner
injection; gm is log-uniform over [0.1 mS, 100 mS]; beta uniform over
[20, 500].  Everything is driven by an explicit random.Random so runs are
reproducible bit for bit.
"""

from __future__ import annotations

import math
import random

from .model import INF, BjtLoads, BjtParams, MosLoads, MosParams, Resistance, make_bjt, make_mos

R_LO, R_HI = 1.0, 1e7
GM_LO, GM_HI = 1e-4, 1e-1


def log_uniform(rng: random.Random, lo: float, hi: float) -> float:
    return math.exp(rng.uniform(math.log(lo), math.log(hi)))


def draw_resistance(rng: random.Random, corner_prob: float = 0.0,
                    allow_zero: bool = True) -> Resistance:
    if corner_prob > 0.0 and rng.random() < corner_prob:
        if allow_zero and rng.random() < 0.5:
            return Resistance(0.0)
        return INF
    return Resistance(log_uniform(rng, R_LO, R_HI))


def draw_bjt(rng: random.Random, inf_ro_prob: float = 0.0) -> BjtParams:
    gm = log_uniform(rng, GM_LO, GM_HI)
    beta = rng.uniform(20.0, 500.0)
    ro = INF if rng.random() < inf_ro_prob else Resistance(log_uniform(rng, R_LO, R_HI))
    return make_bjt(gm, beta, ro)


def draw_mos(rng: random.Random, inf_ro_prob: float = 0.0,
             zero_gmb_prob: float = 0.3) -> MosParams:
    gm = log_uniform(rng, GM_LO, GM_HI)
    gmb = 0.0 if rng.random() < zero_gmb_prob else log_uniform(rng, 1e-5, 1e-2)
    ro = INF if rng.random() < inf_ro_prob else Resistance(log_uniform(rng, R_LO, R_HI))
    return make_mos(gm, gmb, ro)


def draw_bjt_loads(rng: random.Random, corner_prob: float = 0.0) -> BjtLoads:
    return BjtLoads(
        r_e=draw_resistance(rng, corner_prob),
        r_b=draw_resistance(rng, corner_prob),
        r_c=draw_resistance(rng, corner_prob),
        r_f=draw_resistance(rng, corner_prob),
    )


def draw_mos_loads(rng: random.Random, corner_prob: float = 0.0) -> MosLoads:
    return MosLoads(
        r_s=draw_resistance(rng, corner_prob),
        r_g=draw_resistance(rng, corner_prob),
        r_d=draw_resistance(rng, corner_prob),
        r_f=draw_resistance(rng, corner_prob),
    )


def rel_err(a: float, b: float) -> float:
    """Relative disagreement with a 1e-15 absolute floor near zero."""
    scale = max(abs(a), abs(b), 1e-15)
    return abs(a - b) / scale


def agree(a: float, b: float, rtol: float, atol: float = 1e-15) -> bool:
    """|a-b| within rtol of the larger magnitude, with an absolute floor.

    Oracle comparisons pass atol=1e-12: Gaussian elimination leaves an
    O(eps)-of-the-intermediate-scale residue where the exact answer is 0,
    which no purely relative tolerance can absorb.
    """
    return abs(a - b) <= max(rtol * max(abs(a), abs(b)), atol)
