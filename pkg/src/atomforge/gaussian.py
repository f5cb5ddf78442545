"""Gaussian integer arithmetic on ``(re, im)`` pairs."""

from __future__ import annotations

from math import gcd

from .intfactor import DEFAULT, IntegerFactorizer

G = tuple  # (re, im)

UNITS: tuple[G, ...] = ((1, 0), (0, 1), (-1, 0), (0, -1))


def gmul(a: G, b: G) -> G:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def gconj(a: G) -> G:
    return (a[0], -a[1])


def norm(a: G) -> int:
    return a[0] * a[0] + a[1] * a[1]


def _round_div(n: int, d: int) -> int:
    # nearest integer to n/d for d > 0, halves rounded up
    return (2 * n + d) // (2 * d)


def gdivmod(a: G, b: G) -> tuple[G, G]:
    """Division with nearest-integer quotient, so ``norm(rem) <= norm(b)/2``."""
    n = norm(b)
    if n == 0:
        raise ZeroDivisionError("Gaussian division by zero")
    num = gmul(a, gconj(b))
    quo = (_round_div(num[0], n), _round_div(num[1], n))
    qb = gmul(quo, b)
    return quo, (a[0] - qb[0], a[1] - qb[1])


def exact_div(a: G, b: G) -> G | None:
    n = norm(b)
    num = gmul(a, gconj(b))
    if num[0] % n or num[1] % n:
        return None
    return (num[0] // n, num[1] // n)


def is_unit(a: G) -> bool:
    return norm(a) == 1


def canonical(a: G) -> tuple[G, G]:
    """``(u, c)`` with ``a = u*c``, u a unit and c in the quadrant re > 0, im >= 0."""
    for w in UNITS:
        c = gmul(w, a)
        if c[0] > 0 and c[1] >= 0:
            return gconj(w), c
    raise ValueError("zero has no canonical associate")


def key(a: G) -> tuple:
    return (norm(a), a[0], a[1])


def sqrt_minus_one(p: int) -> int:
    """Square root of -1 modulo a prime ``p = 1 (mod 4)``."""
    for c in range(2, p):
        if pow(c, (p - 1) // 2, p) == p - 1:
            return pow(c, (p - 1) // 4, p)
    raise ValueError(f"{p} is not a prime congruent to 1 mod 4")


def ggcd(a: G, b: G) -> G:
    while b != (0, 0):
        a, b = b, gdivmod(a, b)[1]
    return a


def prime_above(p: int) -> G:
    """Canonical Gaussian prime of norm ``p`` for ``p = 1 (mod 4)`` (the one with smaller re)."""
    s = sqrt_minus_one(p)
    pi = canonical(ggcd((p, 0), (s, 1)))[1]
    other = canonical(gconj(pi))[1]
    return min(pi, other, key=key)


def factor(a: G, factorizer: IntegerFactorizer = DEFAULT) -> tuple[G, list[tuple[G, int]]]:
    """Return ``(unit, [(canonical prime, multiplicity), ...])`` sorted by norm then (re, im)."""
    if a == (0, 0):
        raise ValueError("cannot factor 0")
    counts: dict[G, int] = {}

    def bump(g: G, m: int) -> None:
        counts[g] = counts.get(g, 0) + m

    content = gcd(a[0], a[1])
    prim = (a[0] // content, a[1] // content)
    for p, m in factorizer.factor(content).items():
        if p == 2:
            bump((1, 1), 2 * m)
        elif p % 4 == 3:
            bump((p, 0), m)
        else:
            pi = prime_above(p)
            bump(pi, m)
            bump(canonical(gconj(pi))[1], m)
    n = norm(prim)
    if n > 1:
        for p, m in factorizer.factor(n).items():
            if p == 2:
                bump((1, 1), m)
                continue
            pi = prime_above(p)
            bar = canonical(gconj(pi))[1]
            # a primitive element is divisible by exactly one of pi, conj(pi)
            g = pi if exact_div(prim, pi) is not None else bar
            bump(g, m)
    prod: G = (1, 0)
    for g, m in counts.items():
        for _ in range(m):
            prod = gmul(prod, g)
    unit = exact_div(a, prod)
    assert unit is not None and is_unit(unit)
    return unit, sorted(counts.items(), key=lambda it: key(it[0]))
