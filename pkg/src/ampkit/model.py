"""Core domain types: extended resistances, device parameters, loads, quantities.

Every resistance in this library lives on the extended nonnegative real line
[0, +inf].  Infinity is a first-class value (an absent load, a current-source
bias, an ideal transistor output), never a large float stand-in, so that
limit behavior is exact rather than a victim of catastrophic cancellation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class AmpkitError(Exception):
    """Base class for all library-specific errors."""


class IllPosedError(AmpkitError):
    """The requested circuit has no unique solution (e.g. a floating node)."""


class PoleError(AmpkitError):
    """A closed-form expression was evaluated at a pole or indeterminate point."""


class UnsupportedVariantError(AmpkitError):
    """The (quantity, variant) pair has no table row."""


class PinMismatchError(AmpkitError):
    """A load value conflicts with the value a special-case row pins it to."""


@dataclass(frozen=True)
class Resistance:
    """A nonnegative resistance in ohms, or the distinguished value INF.

    NaN and negative values are rejected at construction, so downstream
    arithmetic never has to defend against them.
    """

    ohms: float

    def __post_init__(self):
        v = self.ohms
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise TypeError(f"resistance must be a real number, got {v!r}")
        v = float(v)
        if math.isnan(v) or v < 0.0:
            raise ValueError(f"resistance must be >= 0 or inf, got {v!r}")
        object.__setattr__(self, "ohms", v)

    @property
    def is_inf(self) -> bool:
        return math.isinf(self.ohms)

    @property
    def conductance(self) -> float:
        """1/R in siemens; exactly 0.0 for INF.  R = 0 has no conductance."""
        if self.ohms == 0.0:
            raise ZeroDivisionError("a 0-ohm branch has no finite conductance; "
                                    "collapse the node instead")
        return 0.0 if self.is_inf else 1.0 / self.ohms

    def __float__(self) -> float:
        return self.ohms

    def __repr__(self) -> str:
        return "INF" if self.is_inf else f"Resistance({self.ohms!r})"


INF = Resistance(math.inf)


def as_resistance(r: Resistance | float | int) -> Resistance:
    return r if isinstance(r, Resistance) else Resistance(r)


def parallel(a: Resistance | float, b: Resistance | float) -> Resistance:
    """Parallel combination a*b/(a+b) on extended resistances.

    INF is the identity element and 0 the absorbing element, so the result
    is exact for every pair (commutative, result <= min(a, b)).
    """
    x = as_resistance(a).ohms
    y = as_resistance(b).ohms
    if x == 0.0 or y == 0.0:
        return Resistance(0.0)
    if math.isinf(x):
        return Resistance(y)
    if math.isinf(y):
        return Resistance(x)
    return Resistance(x * y / (x + y))


@dataclass(frozen=True)
class BjtParams:
    """Small-signal bipolar parameters.

    alpha and beta are stored independently: the physical constructor
    (make_bjt) couples them as alpha = beta/(beta+1), while the base-emitter
    reciprocity transform intentionally produces decoupled, nonphysical
    values (negative gm, alpha = -beta, ...).  Build instances through
    make_bjt unless you are that transform.
    """

    gm: float
    alpha: float
    beta: float
    ro: Resistance

    def __post_init__(self):
        if self.gm == 0.0 or math.isnan(self.gm):
            raise ValueError("gm must be nonzero")
        object.__setattr__(self, "ro", as_resistance(self.ro))

    @property
    def r_pi(self) -> Resistance:
        """beta/gm (INF in the beta -> inf limit)."""
        if math.isinf(self.beta):
            return INF
        return Resistance(self.beta / self.gm)

    @property
    def r_m(self) -> float:
        return 1.0 / self.gm


def make_bjt(gm: float, beta: float, ro: Resistance | float) -> BjtParams:
    """Physical constructor: gm > 0, beta > 0, ro > 0 (possibly INF).

    beta = inf is accepted as the ideal-transistor limit (alpha = 1), which
    is also how the MOS expressions emerge from the bipolar ones.
    """
    if not gm > 0.0 or math.isinf(gm) or math.isnan(gm):
        raise ValueError(f"gm must be a positive finite number, got {gm!r}")
    if not beta > 0.0 or math.isnan(beta):
        raise ValueError(f"beta must be positive, got {beta!r}")
    r = as_resistance(ro)
    if r.ohms == 0.0:
        raise ValueError("ro must be positive (possibly INF)")
    alpha = 1.0 if math.isinf(beta) else beta / (beta + 1.0)
    return BjtParams(gm=gm, alpha=alpha, beta=beta, ro=r)


@dataclass(frozen=True)
class MosParams:
    """Small-signal MOS parameters; the body sits at small-signal ground."""

    gm: float
    gmb: float
    ro: Resistance

    def __post_init__(self):
        object.__setattr__(self, "ro", as_resistance(self.ro))

    @property
    def r_m(self) -> float:
        return 1.0 / self.gm

    @property
    def r_mb(self) -> Resistance:
        """1/gmb; INF when the body effect is absent."""
        return INF if self.gmb == 0.0 else Resistance(1.0 / self.gmb)


def make_mos(gm: float, gmb: float, ro: Resistance | float) -> MosParams:
    if not gm > 0.0 or math.isinf(gm) or math.isnan(gm):
        raise ValueError(f"gm must be a positive finite number, got {gm!r}")
    if not gmb >= 0.0 or math.isinf(gmb) or math.isnan(gmb):
        raise ValueError(f"gmb must be a nonnegative finite number, got {gmb!r}")
    r = as_resistance(ro)
    if r.ohms == 0.0:
        raise ValueError("ro must be positive (possibly INF)")
    return MosParams(gm=gm, gmb=gmb, ro=r)


@dataclass(frozen=True)
class BjtLoads:
    """External resistors around a bipolar transistor.

    r_e: emitter-ground, r_b: base-ground, r_c: collector-ground,
    r_f: base-collector ("feedback").  Every field defaults to INF (absent).
    Each quantity reads only the loads present in its measuring circuit:
    the driven/probed terminal's own load never participates.
    """

    r_e: Resistance = INF
    r_b: Resistance = INF
    r_c: Resistance = INF
    r_f: Resistance = INF

    def __post_init__(self):
        for name in ("r_e", "r_b", "r_c", "r_f"):
            object.__setattr__(self, name, as_resistance(getattr(self, name)))


@dataclass(frozen=True)
class MosLoads:
    """External resistors around a MOS transistor (gate/source/drain/feedback)."""

    r_s: Resistance = INF
    r_g: Resistance = INF
    r_d: Resistance = INF
    r_f: Resistance = INF

    def __post_init__(self):
        for name in ("r_s", "r_g", "r_d", "r_f"):
            object.__setattr__(self, name, as_resistance(getattr(self, name)))


class Quantity(Enum):
    """The twelve gains/impedances the library knows how to compute."""

    AV_CE = "av_ce"
    AV_CB = "av_cb"
    AV_CC = "av_cc"
    R_BASE = "r_base"
    R_EMITTER = "r_emitter"
    R_COLLECTOR = "r_collector"
    AV_CS = "av_cs"
    AV_CG = "av_cg"
    AV_CD = "av_cd"
    R_GATE = "r_gate"
    R_SOURCE = "r_source"
    R_DRAIN = "r_drain"

    @property
    def is_mos(self) -> bool:
        return self in _MOS_QUANTITIES

    @property
    def is_gain(self) -> bool:
        return self.value.startswith("av_")


_MOS_QUANTITIES = frozenset({
    Quantity.AV_CS, Quantity.AV_CG, Quantity.AV_CD,
    Quantity.R_GATE, Quantity.R_SOURCE, Quantity.R_DRAIN,
})


class Variant(Enum):
    """Table-row selector for the bipolar quantities.

    GENERAL is the exact expression; the others are the printed special
    cases.  NO_DEGEN pins the quantity's own degeneration resistor (r_e for
    AV_CE/R_BASE, r_b for AV_CB/R_EMITTER); R_COLLECTOR has one of each, so
    it uses the explicit RB_ZERO/RE_ZERO tags instead.
    """

    GENERAL = "general"
    NO_DEGEN = "no_degen"
    NO_FEEDBACK = "no_feedback"
    NO_RO = "no_ro"
    RF_ZERO = "rf_zero"
    RC_ZERO = "rc_zero"
    RE_INF = "re_inf"
    RC_INF = "rc_inf"
    RB_ZERO = "rb_zero"
    RE_ZERO = "re_zero"
