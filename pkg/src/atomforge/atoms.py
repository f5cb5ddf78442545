"""Atom census for the truncated local rings ``F_q + t^e F_{q^d}[[t]] mod t^N``.

A nonzero nonunit is irreducible exactly when ``e <= v <= 2e-1``: products of
two nonunits have valuation at least ``2e``, and anything with ``v >= 2e``
splits off ``t^e``.  Orbits under the unit group are computed by brute force
and compared with the closed form ``e (q^d-1)/(q-1) q^{d(e-1)}``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from .errors import InvalidInput, IsUnit, UnsupportedRing, WrongRingShape, ZeroElement
from .rings import RingDescriptor, RingElement


def _require_trunc(ring: RingDescriptor) -> None:
    if ring.kind != "trunc":
        raise UnsupportedRing(f"expected a truncated ring, got {ring}")


def is_irreducible_truncated(x: RingElement) -> bool:
    _require_trunc(x.ring)
    if not x:
        raise ZeroElement("0 is not irreducible")
    impl = x.ring.impl
    if impl.is_unit(x.payload):
        raise IsUnit(f"{x} is a unit")
    return impl.e <= impl.valuation(x.payload) <= 2 * impl.e - 1


def reducible_products(ring: RingDescriptor) -> frozenset:
    """All products of two nonzero nonunits, by exhaustive multiplication."""
    _require_trunc(ring)
    impl = ring.impl
    nonunits = list(impl.elements("nonunits-nonzero"))
    out = set()
    for i, a in enumerate(nonunits):
        for b in nonunits[i:]:
            out.add(impl.mul(a, b))
    return frozenset(out)


def brute_force_irreducible(x: RingElement, products: frozenset | None = None) -> bool:
    """Irreducibility by searching every two-nonunit factorization."""
    _require_trunc(x.ring)
    if not x or x.ring.impl.is_unit(x.payload):
        raise InvalidInput(f"{x} is not a nonzero nonunit")
    if products is None:
        products = reducible_products(x.ring)
    return x.payload not in products


# ---------------------------------------------------------------------------
# census


@dataclass(frozen=True)
class AtomCensus:
    ring: RingDescriptor
    irreducibles_total: int
    orbits: tuple[tuple[RingElement, int], ...]
    predicted: int
    truncation_stable: bool | None

    @property
    def observed(self) -> int:
        return len(self.orbits)

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            "irreducibles_total": self.irreducibles_total,
            "observed": self.observed,
            "predicted": self.predicted,
            "truncation_stable": self.truncation_stable,
            "orbits": [{"representative": r.to_json(), "size": s} for r, s in self.orbits],
        }


def predicted_atoms(q: int, d: int, e: int) -> int:
    return e * (q**d - 1) // (q - 1) * q ** (d * (e - 1))


def _elements_of_valuation(impl, v: int):
    """Elements of exact valuation ``v`` in enumeration order (slot 0 least significant)."""
    lead = [c for c in (impl.small if v == 0 else range(impl.F.order)) if c]
    low = (0,) * v
    for high in product(range(impl.F.order), repeat=impl.N - v - 1):
        tail = tuple(reversed(high))
        for c in lead:
            yield low + (c,) + tail


def _orbits_of_valuation(args) -> list[tuple[tuple, int]]:
    q, d, e, N, v = args
    impl = RingDescriptor("trunc", q, d, e, N).impl
    units = list(impl.elements("units"))
    seen: set = set()
    out = []
    for x in _elements_of_valuation(impl, v):
        if x in seen:
            continue
        orbit = {impl.mul(u, x) for u in units}
        seen |= orbit
        rep = min(orbit, key=impl.key)
        out.append((rep, len(orbit)))
    return out


def _orbits(ring: RingDescriptor, workers: int) -> list[tuple[tuple, int]]:
    impl = ring.impl
    impl.check_budget()
    jobs = [(ring.q, ring.d, ring.e, ring.N, v) for v in range(ring.e, 2 * ring.e)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_orbits_of_valuation, jobs))
    else:
        parts = [_orbits_of_valuation(j) for j in jobs]
    # valuation is an association invariant, so classes never straddle parts
    merged = [o for part in parts for o in part]
    return sorted(merged, key=lambda o: impl.key(o[0]))


def atom_census(ring: RingDescriptor, stability: bool = True, workers: int = 1) -> AtomCensus:
    """Enumerate irreducibles and partition them into association classes."""
    _require_trunc(ring)
    orbits = _orbits(ring, workers)
    stable = None
    if stability:
        stable = len(_orbits(ring.with_N(ring.N + 1), workers)) == len(orbits)
    return AtomCensus(
        ring,
        sum(s for _, s in orbits),
        tuple((RingElement(ring, r), s) for r, s in orbits),
        predicted_atoms(ring.q, ring.d, ring.e),
        stable,
    )


def association_canonical_form(x: RingElement) -> RingElement:
    """``t^2 + a_3 t^3`` or ``t^3 + a_4 t^4`` for an irreducible of ``k + t^2 k[[t]]``."""
    ring = x.ring
    _require_trunc(ring)
    if ring.d != 1 or ring.e != 2:
        raise WrongRingShape(f"canonical a_3/a_4 form needs d=1, e=2, got {ring}")
    if not is_irreducible_truncated(x):
        raise InvalidInput(f"{x} is not irreducible")
    impl = ring.impl
    a = x.payload
    v = impl.valuation(a)
    scale = impl.F.inv(a[v])
    nxt = impl.F.mul(scale, a[v + 1]) if v + 1 < ring.N else 0
    out = [0] * ring.N
    out[v] = 1
    if v + 1 < ring.N:
        out[v + 1] = nxt
    return RingElement(ring, tuple(out))


# ---------------------------------------------------------------------------
# primality and the Cohen-Kaplansky consequence


def _window_elements(ring: RingDescriptor) -> list[tuple]:
    impl = ring.impl
    limit = ring.N - ring.e - 1
    return [a for a in impl.elements("nonunits-nonzero") if impl.valuation(a) <= limit]


def prime_element_check(p: RingElement) -> tuple[bool, tuple[RingElement, RingElement] | None]:
    """Search for ``a, b`` with ``p | ab`` but ``p`` dividing neither.

    Candidates are restricted to ``v(a), v(b) <= N-e-1``; pairs whose product
    vanishes or leaves the divisibility window are skipped.
    """
    ring = p.ring
    _require_trunc(ring)
    if not is_irreducible_truncated(p):
        raise InvalidInput(f"{p} is not irreducible")
    impl = ring.impl
    cands = _window_elements(ring)
    divides = [impl.divides(p.payload, a) is not None for a in cands]
    for i, a in enumerate(cands):
        if divides[i]:
            continue
        for j in range(i, len(cands)):
            if divides[j]:
                continue
            ab = impl.mul(a, cands[j])
            if not any(ab) or impl.valuation(ab) > ring.N - ring.e:
                continue
            if impl.divides(p.payload, ab) is not None:
                return False, (RingElement(ring, a), RingElement(ring, cands[j]))
    return True, None


def ck_min_atoms_check(census: AtomCensus) -> bool:
    """At least three atoms whenever some irreducible is not prime.

    When every atom is prime the predicate does not apply and ``True`` is
    returned.
    """
    if all(prime_element_check(rep)[0] for rep, _ in census.orbits):
        return True
    return census.observed >= 3


def ck_applicable(census: AtomCensus) -> bool:
    return not all(prime_element_check(rep)[0] for rep, _ in census.orbits)


__all__ = [
    "AtomCensus",
    "association_canonical_form",
    "atom_census",
    "brute_force_irreducible",
    "ck_applicable",
    "ck_min_atoms_check",
    "is_irreducible_truncated",
    "predicted_atoms",
    "prime_element_check",
    "reducible_products",
]
