"""ampkit: exact small-signal gain/impedance expressions for the three
single-transistor amplifier topologies (bipolar and MOS), a numeric nodal
oracle they are verified against, and an exact rational-function kernel that
proves each table expression identical to its nodal derivation.
"""

from .model import (
    INF,
    AmpkitError,
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
    make_bjt,
    make_mos,
    parallel,
)
from .nodal import solve_bjt, solve_mos

__all__ = [
    "INF",
    "AmpkitError",
    "BjtLoads",
    "BjtParams",
    "IllPosedError",
    "MosLoads",
    "MosParams",
    "PinMismatchError",
    "PoleError",
    "Quantity",
    "Resistance",
    "UnsupportedVariantError",
    "Variant",
    "make_bjt",
    "make_mos",
    "parallel",
    "solve_bjt",
    "solve_mos",
]
