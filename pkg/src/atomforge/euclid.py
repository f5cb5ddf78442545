"""Constructive generators of pairwise comaximal irreducibles.

* :func:`euclid_step` -- from chosen ``f_1..f_n`` factor ``x = y f_1...f_n + 1``
  where ``y`` is the Condition (E) witness for the product, and keep its
  canonically least irreducible factor.
* :func:`pollack_step` -- primes avoiding a proper subgroup ``H`` of
  ``(Z/N)^x``, via ``P(t) = (alpha t + 1)(alpha beta - 1) f_1...f_n + alpha``.
* :func:`polyvalue_prime_generator` -- a new prime dividing some value ``f(n)``.

States are immutable; each step returns a new state.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import count as _count
from math import gcd, prod

from .core import (
    BezoutCertificate,
    Factorization,
    bezout,
    condition_e_witness,
    exact_quotient,
    factor,
    inverse,
    is_unit,
    least_irreducible,
    least_nonzero_nonunit,
)
from .errors import (
    FactorizationOverflow,
    InvalidInput,
    InvariantViolation,
    NotComaximal,
    UnsupportedRing,
    ZeroLeadingCoefficient,
)
from .intfactor import DEFAULT, IntegerFactorizer
from .rings import Z, RingDescriptor, RingElement

CONDITION_E_KINDS = ("z", "gauss", "poly-fq")


def _product(ring: RingDescriptor, elems) -> RingElement:
    out = ring.one
    for f in elems:
        out = out * f
    return out


def _pair_certificates(prior, new: RingElement) -> tuple[BezoutCertificate, ...]:
    try:
        return tuple(bezout(f, new) for f in prior)
    except NotComaximal as exc:
        raise InvariantViolation(f"new irreducible {new} is not comaximal with its predecessors") from exc


# ---------------------------------------------------------------------------
# Euclid-style sequence


@dataclass(frozen=True)
class EuclidStep:
    y: RingElement
    x: RingElement
    factorization: Factorization
    selected: RingElement
    certificates: tuple[BezoutCertificate, ...]


@dataclass(frozen=True)
class EuclidState:
    ring: RingDescriptor
    chosen: tuple[RingElement, ...] = ()
    certificates: tuple[BezoutCertificate, ...] = ()
    transcript: tuple[EuclidStep, ...] = ()


def euclid_step(state: EuclidState, factorizer: IntegerFactorizer = DEFAULT) -> EuclidState:
    ring = state.ring
    if ring.kind not in CONDITION_E_KINDS:
        raise UnsupportedRing(f"{ring} does not satisfy Condition (E)")
    if not state.chosen:
        return replace(state, chosen=(least_irreducible(ring),))
    P = _product(ring, state.chosen)
    witness = condition_e_witness(P)
    try:
        fac = factor(witness.value, factorizer)
    except FactorizationOverflow as exc:
        raise FactorizationOverflow(str(exc), exc.cofactor, state=state) from exc
    selected = fac.factors[0][0]
    if any(selected == f for f in state.chosen):
        raise InvariantViolation(f"{selected} was already chosen")
    certs = _pair_certificates(state.chosen, selected)
    step = EuclidStep(witness.y, witness.value, fac, selected, certs)
    return EuclidState(
        ring,
        state.chosen + (selected,),
        state.certificates + certs,
        state.transcript + (step,),
    )


def euclid_run(ring: RingDescriptor, count: int, factorizer: IntegerFactorizer = DEFAULT) -> EuclidState:
    state = EuclidState(ring)
    while len(state.chosen) < count:
        state = euclid_step(state, factorizer)
    return state


def proof_certificate(prior, i: int, y: RingElement, x: RingElement, new: RingElement) -> BezoutCertificate:
    """The identity ``1 = (x/new)*new - (y * prod_{j != i} f_j) * f_i`` read off the construction."""
    ring = new.ring
    others = _product(ring, (f for j, f in enumerate(prior) if j != i))
    return BezoutCertificate(prior[i], new, -(y * others), exact_quotient(x, new))


# ---------------------------------------------------------------------------
# Residue classes avoiding a subgroup


def nonunit_specialization(a: RingElement, b: RingElement) -> RingElement:
    """Some ``x`` making ``a*x + b`` a nonzero nonunit (case split on ``b``)."""
    ring = a.ring
    if ring.kind not in CONDITION_E_KINDS:
        raise UnsupportedRing(f"{ring} does not satisfy Condition (E)")
    if not a:
        raise ZeroLeadingCoefficient("leading coefficient must be nonzero")
    if not b:
        x = least_nonzero_nonunit(ring)
    elif is_unit(b):
        x = condition_e_witness(inverse(b) * a).y
    else:
        x = ring.zero
    value = a * x + b
    if not value or is_unit(value):
        raise InvariantViolation(f"specialization {x} of {a}t + {b} is not a nonzero nonunit")
    return x


def _search_order():
    yield 0
    for k in _count(1):
        yield k
        yield -k


@dataclass(frozen=True)
class PollackStep:
    x: int
    y: int
    sign: int
    factorization: Factorization
    selected: int
    residue: int
    certificates: tuple[BezoutCertificate, ...]


@dataclass(frozen=True)
class PollackState:
    modulus: int
    subgroup: frozenset
    alpha: int
    beta: int
    chosen: tuple[int, ...] = ()
    certificates: tuple[BezoutCertificate, ...] = ()
    transcript: tuple[PollackStep, ...] = ()

    def coefficients(self) -> tuple[int, int]:
        """``(a, b)`` with ``P(t) = a t + b``."""
        base = (self.alpha * self.beta - 1) * prod(self.chosen)
        return self.alpha * base, base + self.alpha


def unit_group(N: int) -> list[int]:
    return [a for a in range(1, N) if gcd(a, N) == 1]


def validate_subgroup(N: int, H) -> frozenset:
    if N < 3:
        raise InvalidInput("modulus must be at least 3")
    H = frozenset(h % N for h in H)
    units = set(unit_group(N))
    if not H or not H <= units:
        raise InvalidInput(f"{sorted(H)} is not a subset of (Z/{N})^x")
    if 1 not in H or any(a * b % N not in H for a in H for b in H):
        raise InvalidInput(f"{sorted(H)} is not closed under multiplication")
    if any(pow(a, -1, N) not in H for a in H):
        raise InvalidInput(f"{sorted(H)} is not closed under inverses")
    if H == units:
        raise InvalidInput("H must be a proper subgroup")
    return H


def pollack_init(modulus: int, subgroup) -> PollackState:
    H = validate_subgroup(modulus, subgroup)
    alpha = next(a for a in _count(2) if gcd(a, modulus) == 1 and a % modulus not in H)
    beta = pow(alpha, -1, modulus)
    if alpha * beta - 1 == 0:
        raise InvariantViolation("alpha*beta - 1 must be nonzero")
    return PollackState(modulus, H, alpha, beta)


def pollack_step(state: PollackState, factorizer: IntegerFactorizer = DEFAULT) -> PollackState:
    N, H, alpha = state.modulus, state.subgroup, state.alpha
    a, b = state.coefficients()
    guaranteed_x = nonunit_specialization(Z(a), Z(b)).payload
    for x in _search_order():
        y = a * x + b
        if abs(y) > 1 or x == guaranteed_x:
            break
    try:
        fac = factor(Z(y), factorizer)
    except FactorizationOverflow as exc:
        raise FactorizationOverflow(str(exc), exc.cofactor, state=state) from exc
    sign = fac.unit.payload
    residues = sign % N
    for g, m in fac.factors:
        residues = residues * pow(g.payload, m, N) % N
    if residues != alpha % N:
        raise InvariantViolation("factor classes do not multiply to the class of alpha")
    avoiding = [g.payload for g, _ in fac.factors if g.payload % N not in H]
    if not avoiding:
        raise InvariantViolation(f"no irreducible factor of {y} avoids H")
    g = avoiding[0]
    if gcd(g, N) != 1 or gcd(g, alpha) != 1:
        raise InvariantViolation(f"{g} shares a factor with the modulus or alpha")
    if g in state.chosen:
        raise InvariantViolation(f"{g} was already emitted")
    certs = _pair_certificates([Z(f) for f in state.chosen], Z(g))
    step = PollackStep(x, y, sign, fac, g, g % N, certs)
    return replace(
        state,
        chosen=state.chosen + (g,),
        certificates=state.certificates + certs,
        transcript=state.transcript + (step,),
    )


def pollack_run(modulus: int, subgroup, count: int, factorizer: IntegerFactorizer = DEFAULT) -> PollackState:
    state = pollack_init(modulus, subgroup)
    while len(state.chosen) < count:
        state = pollack_step(state, factorizer)
    return state


# ---------------------------------------------------------------------------
# Primes dividing values of an integer polynomial


@dataclass(frozen=True)
class PolyValuePrime:
    prime: int
    M: int
    n: int
    value: int
    f0_factors: tuple[tuple[int, int], ...]
    excluded: tuple[int, ...]


def poly_eval(coeffs, n: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc


def _strip(coeffs) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def polyvalue_prime_generator(
    coeffs, known, factorizer: IntegerFactorizer = DEFAULT, max_tries: int = 10_000
) -> PolyValuePrime:
    """A prime outside ``known`` dividing ``f(n)`` for an explicit ``n``.

    ``coeffs`` lists the integer coefficients constant term first.
    """
    f = _strip(coeffs)
    if len(f) < 2:
        raise InvalidInput("polynomial must be nonconstant")
    known = tuple(sorted(set(known)))
    if f[0] == 0:
        p = next(p for p in _count(2) if p not in known and factorizer.is_prime(p))
        return PolyValuePrime(p, 0, 0, 0, (), known)
    f0 = factorizer.factor(f[0])
    others = [q for q in known if f[0] % q]
    base = prod(p ** (a + 1) for p, a in f0.items()) * prod(others)
    excluded = set(f0) | set(others)
    for M in range(1, max_tries + 1):
        n = M * base
        value = poly_eval(f, n)
        if abs(value) <= 1:
            continue
        fresh = [p for p in factorizer.factor(value) if p not in excluded]
        if fresh:
            return PolyValuePrime(fresh[0], M, n, value, tuple(f0.items()), tuple(sorted(excluded)))
    raise InvariantViolation(f"no new prime among the first {max_tries} values")


def polyvalue_run(coeffs, count: int, factorizer: IntegerFactorizer = DEFAULT) -> list[PolyValuePrime]:
    known: list[int] = []
    out = []
    for _ in range(count):
        res = polyvalue_prime_generator(coeffs, known, factorizer)
        out.append(res)
        known.append(res.prime)
    return out


__all__ = [
    "EuclidState",
    "EuclidStep",
    "PollackState",
    "PollackStep",
    "PolyValuePrime",
    "euclid_run",
    "euclid_step",
    "nonunit_specialization",
    "pollack_init",
    "pollack_run",
    "pollack_step",
    "polyvalue_prime_generator",
    "polyvalue_run",
    "proof_certificate",
]
