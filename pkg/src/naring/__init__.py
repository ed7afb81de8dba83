"""Workbench for finite non-associative magmas and magma rings.

Construct loops and groupoids from Cayley tables or parametric families,
build their rings over Z_m / Z / Q, and exhaustively decide identities,
special elements, substructures and Smarandache-style predicates.
"""

from .caps import CapExceeded, global_cap
from .magma import (
    Magma,
    build,
    classify,
    commutator,
    associator,
    derived_subloop,
    divide,
    enumerate_substructures,
    holds_identity,
    jordan_loop,
    l_loop,
    nuclei,
    smarandache_magma_check,
    z_groupoid,
)
from .report import PropertyReport, Witness
from .ring import (
    MagmaRing,
    RingElement,
    ring,
    envelope,
)

__all__ = [
    "CapExceeded",
    "global_cap",
    "Magma",
    "MagmaRing",
    "PropertyReport",
    "RingElement",
    "Witness",
    "associator",
    "build",
    "classify",
    "commutator",
    "derived_subloop",
    "divide",
    "enumerate_substructures",
    "envelope",
    "holds_identity",
    "jordan_loop",
    "l_loop",
    "nuclei",
    "ring",
    "smarandache_magma_check",
    "z_groupoid",
]
