"""Domain-level operations and the certificate types every module emits.

Everything here is a pure function of immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from . import gaussian as gs
from . import polyfq as pf
from .errors import (
    FactorizationOverflow,
    InvalidInput,
    InvariantViolation,
    IsUnit,
    NotComaximal,
    UnsupportedRing,
    ZeroElement,
)
from .intfactor import DEFAULT, IntegerFactorizer
from .rings import RingDescriptor, RingElement

EUCLIDEAN_KINDS = ("z", "gauss", "poly-fq")


@dataclass(frozen=True)
class Factorization:
    unit: RingElement
    factors: tuple[tuple[RingElement, int], ...]

    def replay(self) -> RingElement:
        out = self.unit
        for f, m in self.factors:
            out = out * f**m
        return out

    def to_json(self) -> dict:
        return {
            "unit": self.unit.to_json(),
            "factors": [[f.to_json(), m] for f, m in self.factors],
        }

    @classmethod
    def from_json(cls, obj: dict) -> Factorization:
        try:
            return cls(
                RingElement.from_json(obj["unit"]),
                tuple((RingElement.from_json(f), int(m)) for f, m in obj["factors"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed factorization {obj!r}") from exc


@dataclass(frozen=True)
class BezoutCertificate:
    a: RingElement
    b: RingElement
    u: RingElement
    v: RingElement

    def verify(self) -> bool:
        try:
            return self.u * self.a + self.v * self.b == self.a.ring.one
        except InvalidInput:
            return False

    def to_json(self) -> dict:
        return {k: getattr(self, k).to_json() for k in ("a", "b", "u", "v")}

    @classmethod
    def from_json(cls, obj: dict) -> BezoutCertificate:
        try:
            return cls(*(RingElement.from_json(obj[k]) for k in ("a", "b", "u", "v")))
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed certificate {obj!r}") from exc


@dataclass(frozen=True)
class ConditionEWitness:
    x: RingElement
    y: RingElement
    value: RingElement


def _require_nonzero(x: RingElement) -> None:
    if not x:
        raise ZeroElement(f"operation undefined for 0 in {x.ring}")


def is_unit(x: RingElement) -> bool:
    return bool(x) and x.ring.impl.is_unit(x.payload)


def inverse(x: RingElement) -> RingElement:
    if not is_unit(x):
        raise InvalidInput(f"{x} is not a unit")
    return RingElement(x.ring, x.ring.impl.inverse(x.payload))


def canonical_associate(x: RingElement) -> tuple[RingElement, RingElement]:
    """Return ``(u, x_can)`` with ``x == u * x_can``."""
    _require_nonzero(x)
    u, c = x.ring.impl.canonical_associate(x.payload)
    return RingElement(x.ring, u), RingElement(x.ring, c)


def _divmod(a: RingElement, b: RingElement) -> tuple[RingElement, RingElement]:
    ring = a.ring
    if ring.kind == "z":
        q, r = divmod(a.payload, b.payload)
        return ring(q), ring(r)
    if ring.kind == "gauss":
        q, r = gs.gdivmod(a.payload, b.payload)
        return ring(q), ring(r)
    if ring.kind == "poly-fq":
        q, r = pf.p_divmod(ring.impl.F, a.payload, b.payload)
        return RingElement(ring, q), RingElement(ring, r)
    raise UnsupportedRing(f"no division algorithm in {ring}")


def exact_quotient(a: RingElement, b: RingElement) -> RingElement:
    """``a / b`` when ``b`` divides ``a`` (raises otherwise)."""
    if a.ring.kind == "trunc":
        c = a.ring.impl.divides(b.payload, a.payload)
        if c is None:
            raise InvalidInput(f"{b} does not divide {a}")
        return RingElement(a.ring, c)
    q, r = _divmod(a, b)
    if r:
        raise InvalidInput(f"{b} does not divide {a}")
    return q


def bezout(a: RingElement, b: RingElement) -> BezoutCertificate:
    """Extended Euclid; the certificate satisfies ``u*a + v*b == 1``."""
    ring = a.ring
    if b.ring != ring:
        raise InvalidInput("elements from different rings")
    if ring.kind not in EUCLIDEAN_KINDS:
        raise UnsupportedRing(f"bezout needs a Euclidean ring, got {ring}")
    r0, r1 = a, b
    s0, s1 = ring.one, ring.zero
    t0, t1 = ring.zero, ring.one
    while r1:
        quo, rem = _divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    if not is_unit(r0):
        raise NotComaximal(f"gcd({a}, {b}) = {r0} is not a unit", gcd=r0)
    inv = inverse(r0)
    cert = BezoutCertificate(a, b, s0 * inv, t0 * inv)
    if not cert.verify():
        raise InvariantViolation("extended Euclid produced a bad certificate")
    return cert


def factor(x: RingElement, factorizer: IntegerFactorizer = DEFAULT) -> Factorization:
    """Unit times canonical irreducibles, sorted by the ring's canonical order."""
    _require_nonzero(x)
    ring = x.ring
    if ring.kind == "z":
        n = x.payload
        facs = factorizer.factor(n)
        return Factorization(
            ring(1 if n > 0 else -1), tuple((ring(p), m) for p, m in facs.items())
        )
    if ring.kind == "gauss":
        unit, facs = gs.factor(x.payload, factorizer)
        return Factorization(ring(unit), tuple((ring(g), m) for g, m in facs))
    if ring.kind == "poly-fq":
        lead, facs = pf.factor_poly(ring.impl.F, x.payload)
        return Factorization(
            RingElement(ring, (lead,)), tuple((RingElement(ring, g), m) for g, m in facs)
        )
    raise UnsupportedRing(f"no factorization algorithm for {ring}")


def is_irreducible(x: RingElement) -> bool:
    """Independent irreducibility test (does not go through ``factor``)."""
    if not x or is_unit(x):
        return False
    ring = x.ring
    if ring.kind == "z":
        return DEFAULT.is_prime(abs(x.payload))
    if ring.kind == "gauss":
        n = gs.norm(x.payload)
        if DEFAULT.is_prime(n):
            return True
        r = _isqrt_exact(n)
        return r is not None and r % 4 == 3 and DEFAULT.is_prime(r)
    if ring.kind == "poly-fq":
        return pf.is_irreducible(ring.impl.F, x.payload)
    impl = ring.impl
    return impl.e <= impl.valuation(x.payload) <= 2 * impl.e - 1


def _isqrt_exact(n: int) -> int | None:
    r = isqrt(n)
    return r if r * r == n else None


def least_irreducible(ring: RingDescriptor) -> RingElement:
    """Canonically least irreducible: 2, 1+i, t (or t^e in a truncated ring)."""
    if ring.kind == "z":
        return ring(2)
    if ring.kind == "gauss":
        return ring((1, 1))
    if ring.kind == "poly-fq":
        return ring((0, 1))
    return RingElement(ring, ring.impl.t_power(ring.e))


def least_nonzero_nonunit(ring: RingDescriptor) -> RingElement:
    return least_irreducible(ring)


def irreducible_divisor(x: RingElement) -> RingElement:
    _require_nonzero(x)
    if is_unit(x):
        raise IsUnit(f"{x} is a unit")
    ring = x.ring
    if ring.kind == "trunc":
        impl = ring.impl
        if impl.valuation(x.payload) <= 2 * impl.e - 1:
            return canonical_associate(x)[1]
        return RingElement(ring, impl.t_power(impl.e))
    return factor(x).factors[0][0]


def condition_e_witness(x: RingElement) -> ConditionEWitness:
    """A ``y`` with ``y*x + 1`` a nonunit, by the rule for each ring."""
    _require_nonzero(x)
    ring = x.ring
    if ring.kind == "z":
        y = ring(1 if x.payload > 0 else -1)
    elif ring.kind == "gauss":
        y = ring(gs.gconj(x.payload))
    elif ring.kind == "poly-fq":
        y = ring((0, 1))
    else:
        raise UnsupportedRing(f"{ring} does not satisfy Condition (E)")
    value = y * x + 1
    if not value or is_unit(value):
        raise InvariantViolation(f"witness rule failed for {x}")
    return ConditionEWitness(x, y, value)


__all__ = [
    "BezoutCertificate",
    "ConditionEWitness",
    "Factorization",
    "FactorizationOverflow",
    "bezout",
    "canonical_associate",
    "condition_e_witness",
    "exact_quotient",
    "factor",
    "inverse",
    "irreducible_divisor",
    "is_irreducible",
    "is_unit",
    "least_irreducible",
    "least_nonzero_nonunit",
]
