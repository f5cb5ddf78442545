"""Constructive irreducibles, atom censuses and certificate checking in small domains."""

from __future__ import annotations

from .core import (
    BezoutCertificate,
    Factorization,
    bezout,
    canonical_associate,
    condition_e_witness,
    factor,
    inverse,
    irreducible_divisor,
    is_irreducible,
    is_unit,
)
from .rings import GAUSS, Z, RingDescriptor, RingElement, poly_fq, trunc

__version__ = "0.1.0"

__all__ = [
    "GAUSS",
    "BezoutCertificate",
    "Factorization",
    "RingDescriptor",
    "RingElement",
    "Z",
    "bezout",
    "canonical_associate",
    "condition_e_witness",
    "factor",
    "inverse",
    "irreducible_divisor",
    "is_irreducible",
    "is_unit",
    "poly_fq",
    "trunc",
]
