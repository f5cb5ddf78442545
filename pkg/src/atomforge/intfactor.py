"""Exact integer factorization with deterministic primality proofs.

Pipeline for ``n``: trial division up to ``trial_bound``; every remaining
cofactor is either proven prime or split.  Splitting uses sympy's
elliptic-curve routine purely as a divisor oracle: each proposed divisor is
checked by exact division and re-enters the pipeline, so nothing it claims is
trusted.

Primality is never probabilistic.  Below ``MR_DETERMINISTIC_LIMIT`` the
Miller-Rabin test with the first thirteen prime bases is a proof (Sorenson and
Webster).  Above it a Pocklington-Lehmer certificate is built from the
factorization of ``n - 1``.  With ``extended=False`` the policy shrinks to
trial division plus deterministic primality below 2**64, and anything else
raises :class:`FactorizationOverflow`.
"""

from __future__ import annotations

from math import gcd, isqrt

from sympy.ntheory import ecm

from .errors import FactorizationOverflow

TRIAL_BOUND = 10**6
U64 = 1 << 64
MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
ECM_SEED = 1234

_SMALL_PRIMES: list[int] = []


def small_primes(bound: int = TRIAL_BOUND) -> list[int]:
    """Primes below ``bound`` by a sieve (cached for the default bound)."""
    global _SMALL_PRIMES
    if bound == TRIAL_BOUND and _SMALL_PRIMES:
        return _SMALL_PRIMES
    sieve = bytearray([1]) * bound
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(bound - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound, i)))
    primes = [i for i in range(bound) if sieve[i]]
    if bound == TRIAL_BOUND:
        _SMALL_PRIMES = primes
    return primes


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def miller_rabin_deterministic(n: int) -> bool:
    if n < 2:
        return False
    if n >= MR_DETERMINISTIC_LIMIT:
        raise ValueError("outside the proven range of the fixed-base test")
    for p in MR_BASES:
        if n % p == 0:
            return n == p
    return all(_strong_probable_prime(n, a) for a in MR_BASES)


class IntegerFactorizer:
    def __init__(self, trial_bound: int = TRIAL_BOUND, extended: bool = True):
        self.trial_bound = trial_bound
        self.extended = extended

    # -- primality --------------------------------------------------------------
    def is_prime(self, n: int) -> bool:
        """Deterministic primality; raises FactorizationOverflow when unprovable."""
        if n < 2:
            return False
        if n < MR_DETERMINISTIC_LIMIT and (self.extended or n < U64):
            return miller_rabin_deterministic(n)
        if not self.extended:
            raise FactorizationOverflow(f"{n} exceeds the deterministic primality range", n)
        if not all(_strong_probable_prime(n, a) for a in MR_BASES):
            return False
        return self._pocklington(n)

    def _pocklington(self, n: int) -> bool:
        # n - 1 fully factored, so F = n - 1 > sqrt(n).
        fac = self.factor(n - 1)
        for q in fac:
            for a in small_primes(1000):
                if pow(a, n - 1, n) != 1:
                    return False
                if gcd(pow(a, (n - 1) // q, n) - 1, n) == 1:
                    break
            else:
                raise FactorizationOverflow(f"no Pocklington witness found for {n}", n)
        return True

    # -- factorization ------------------------------------------------------------
    def factor(self, n: int) -> dict[int, int]:
        """Prime factorization of ``|n|`` as ``{prime: exponent}`` (sorted keys)."""
        n = abs(n)
        if n == 0:
            raise ValueError("cannot factor 0")
        out: dict[int, int] = {}
        for p in small_primes(self.trial_bound) if self.trial_bound > 2 else ():
            if p * p > n:
                break
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        if n > 1:
            for p, e in self._factor_cofactor(n).items():
                out[p] = out.get(p, 0) + e
        return dict(sorted(out.items()))

    def least_prime_factor(self, n: int) -> int:
        return next(iter(self.factor(n)))

    def _factor_cofactor(self, m: int) -> dict[int, int]:
        if self.is_prime(m):
            return {m: 1}
        if not self.extended:
            raise FactorizationOverflow(
                f"composite cofactor {m} resists trial division to {self.trial_bound}", m
            )
        try:
            proposals = sorted(int(f) for f in ecm(m, seed=ECM_SEED))
        except ValueError as exc:
            raise FactorizationOverflow(f"could not split {m}", m) from exc
        out: dict[int, int] = {}
        rest = m
        for f in proposals:
            if f <= 1 or f >= m or rest % f:
                continue
            e = 0
            while rest % f == 0:
                rest //= f
                e += 1
            for p, k in self._factor_cofactor(f).items():
                out[p] = out.get(p, 0) + k * e
        if rest == m:
            raise FactorizationOverflow(f"divisor oracle produced no split of {m}", m)
        if rest > 1:
            for p, k in self._factor_cofactor(rest).items():
                out[p] = out.get(p, 0) + k
        return out


DEFAULT = IntegerFactorizer()


def factor_int(n: int) -> dict[int, int]:
    return DEFAULT.factor(n)


def is_prime(n: int) -> bool:
    return DEFAULT.is_prime(n)


def trial_factor(n: int) -> dict[int, int]:
    """Plain trial division; exponential, kept as an independent oracle."""
    n = abs(n)
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out
