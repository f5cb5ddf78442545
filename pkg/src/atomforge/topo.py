"""Finite-window checks of the periodic-function and Golomb-topology arguments over Z.

Every result here is about an explicit window of integers; nothing global is
claimed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, prod

from .errors import InvalidInput, InvalidPrimeList, NotCoprime, NotPositive
from .intfactor import DEFAULT, IntegerFactorizer


@dataclass(frozen=True)
class PeriodicityReport:
    irreducibles: tuple[int, ...]
    period: int
    window: tuple[int, int]
    verified: bool
    coset_check: bool
    external_primes: dict[int, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "irreducibles": list(self.irreducibles),
            "period": self.period,
            "window": list(self.window),
            "verified": self.verified,
            "coset_check": self.coset_check,
            "external_primes": {str(x): p for x, p in sorted(self.external_primes.items())},
        }


def _check_primes(primes, factorizer: IntegerFactorizer) -> tuple[int, ...]:
    ps = tuple(primes)
    if not ps:
        raise InvalidPrimeList("need at least one prime")
    if len(set(ps)) != len(ps):
        raise InvalidPrimeList(f"primes must be distinct: {list(ps)}")
    for p in ps:
        if not isinstance(p, int) or p < 2 or not factorizer.is_prime(p):
            raise InvalidPrimeList(f"{p!r} is not a prime")
    return ps


def characteristic(x: int, primes) -> int:
    """Product of ``1 - [p | x]``: 1 iff ``x`` is coprime to every listed prime."""
    return prod(1 - (x % p == 0) for p in primes)


def periodic_char_check(
    primes, window_radius: int, factorizer: IntegerFactorizer = DEFAULT
) -> PeriodicityReport:
    ps = _check_primes(primes, factorizer)
    if window_radius < 1:
        raise NotPositive("window radius must be positive")
    period = prod(ps)
    lo, hi = -window_radius, window_radius
    chi = {x: characteristic(x, ps) for x in range(lo, hi + 1)}
    verified = all(chi[x] == chi[x + period] for x in range(lo, hi - period + 1))
    coset_ok = True
    external: dict[int, int] = {}
    for x in range(lo, hi + 1):
        if (x - 1) % period:
            continue
        coset_ok &= chi[x] == 1
        if abs(x) == 1:
            continue
        outside = [p for p in factorizer.factor(abs(x)) if p not in ps]
        if outside:
            external[x] = outside[0]
        else:
            coset_ok = False
    return PeriodicityReport(ps, period, (lo, hi), verified, coset_ok, external)


def golomb_membership(x: int, b: int, a: int) -> bool:
    """Is ``x`` in the basic open set ``b + aZ``?  Requires ``gcd(a, b) = 1``."""
    if a < 1:
        raise NotPositive("modulus must be positive")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1: {b} + {a}Z is not a basic open set")
    return (x - b) % a == 0


def golomb_neighborhood(x: int, p: int) -> tuple[int, int] | None:
    """``(x, p)`` naming ``x + pZ`` when ``p`` does not divide ``x``; ``None`` otherwise."""
    if x % p == 0:
        return None
    return (x, p)


@dataclass(frozen=True)
class ClosednessReport:
    prime: int
    window: tuple[int, int]
    neighborhoods: tuple[tuple[int, int], ...]
    skipped: tuple[int, ...]
    verified: bool

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "window": list(self.window),
            "checked": len(self.neighborhoods),
            "skipped": list(self.skipped),
            "neighborhoods": [f"{x} + {p}Z" for x, p in self.neighborhoods],
            "verified": self.verified,
        }


def maximal_ideal_closed_check(
    p: int, window_radius: int, factorizer: IntegerFactorizer = DEFAULT
) -> ClosednessReport:
    """Exhibit a basic neighborhood missing ``pZ`` around each point of ``[1, r]`` outside ``pZ``."""
    if p < 2 or not factorizer.is_prime(p):
        raise InvalidInput(f"{p} is not a prime")
    if window_radius < 1:
        raise NotPositive("window radius must be positive")
    window = range(1, window_radius + 1)
    hoods, skipped = [], []
    ok = True
    for x in window:
        hood = golomb_neighborhood(x, p)
        if hood is None:
            skipped.append(x)
            continue
        hoods.append(hood)
        # every in-window point of x + pZ must avoid pZ
        ok &= all(z % p != 0 for z in window if golomb_membership(z, x, p))
    return ClosednessReport(p, (1, window_radius), tuple(hoods), tuple(skipped), ok)


__all__ = [
    "ClosednessReport",
    "PeriodicityReport",
    "characteristic",
    "golomb_membership",
    "golomb_neighborhood",
    "maximal_ideal_closed_check",
    "periodic_char_check",
]
