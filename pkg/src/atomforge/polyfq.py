"""Polynomials over a small finite field, including complete factorization.

Polynomials are tuples of field codes, constant term first, with no trailing
zeros; ``()`` is the zero polynomial.

Factorization runs squarefree decomposition, distinct-degree splitting and
Cantor-Zassenhaus equal-degree splitting.  The latter draws from a fixed-seed
generator; since the output is sorted canonically, the seed only affects
running time.  ``trial_division_factor`` is the slow exhaustive route kept as
a cross-check.
"""

from __future__ import annotations

import random
from itertools import product

from .fields import GF

Poly = tuple


def strip(a) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def deg(a: Poly) -> int:
    return len(a) - 1


def p_add(F: GF, a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    A = F.A
    out = list(a)
    for i, c in enumerate(b):
        out[i] = A[out[i]][c]
    return strip(out)


def p_neg(F: GF, a: Poly) -> Poly:
    return tuple(F.negs[c] for c in a)


def p_sub(F: GF, a: Poly, b: Poly) -> Poly:
    return p_add(F, a, p_neg(F, b))


def p_scale(F: GF, a: Poly, c: int) -> Poly:
    if c == 0:
        return ()
    row = F.M[c]
    return tuple(row[x] for x in a)


def p_mul(F: GF, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    A, M = F.A, F.M
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            row = M[x]
            for j, y in enumerate(b):
                if y:
                    out[i + j] = A[out[i + j]][row[y]]
    return strip(out)


def p_divmod(F: GF, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    A, M, neg = F.A, F.M, F.negs
    rem = list(a)
    inv_lead = F.inv(b[-1])
    db = len(b) - 1
    quo = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        c = M[c][inv_lead]
        quo[k - db] = c
        nc = neg[c]
        row = M[nc]
        for j, y in enumerate(b):
            if y:
                rem[k - db + j] = A[rem[k - db + j]][row[y]]
    return strip(quo), strip(rem[:db])


def p_mod(F: GF, a: Poly, b: Poly) -> Poly:
    return p_divmod(F, a, b)[1]


def p_monic(F: GF, a: Poly) -> Poly:
    if not a:
        return a
    return p_scale(F, a, F.inv(a[-1]))


def p_gcd(F: GF, a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, p_mod(F, a, b)
    return p_monic(F, a)


def p_xgcd(F: GF, a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, u, v)`` with ``u*a + v*b = g`` and ``g`` monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        quo, rem = p_divmod(F, r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, p_sub(F, s0, p_mul(F, quo, s1))
        t0, t1 = t1, p_sub(F, t0, p_mul(F, quo, t1))
    if not r0:
        return (), s0, t0
    c = F.inv(r0[-1])
    return p_scale(F, r0, c), p_scale(F, s0, c), p_scale(F, t0, c)


def p_powmod(F: GF, base: Poly, n: int, mod: Poly) -> Poly:
    result: Poly = (1,)
    base = p_mod(F, base, mod)
    while n:
        if n & 1:
            result = p_mod(F, p_mul(F, result, base), mod)
        n >>= 1
        if n:
            base = p_mod(F, p_mul(F, base, base), mod)
    return p_mod(F, result, mod)


def p_deriv(F: GF, a: Poly) -> Poly:
    return strip(F.from_int(i) and F.M[F.from_int(i)][c] for i, c in enumerate(a) if i > 0)


def p_pth_root(F: GF, a: Poly) -> Poly:
    p = F.p
    return strip(F.pth_root(a[i]) for i in range(0, len(a), p))


T: Poly = (0, 1)
ONE: Poly = (1,)


def squarefree_decomposition(F: GF, f: Poly) -> list[tuple[Poly, int]]:
    """Monic squarefree ``g_i`` with ``f = prod g_i**m_i`` for monic ``f``."""
    out: list[tuple[Poly, int]] = []
    if deg(f) < 1:
        return out
    fp = p_deriv(F, f)
    if not fp:
        return [(g, m * F.p) for g, m in squarefree_decomposition(F, p_pth_root(F, f))]
    c = p_gcd(F, f, fp)
    w = p_divmod(F, f, c)[0]
    i = 1
    while w != ONE:
        y = p_gcd(F, w, c)
        z = p_divmod(F, w, y)[0]
        if z != ONE:
            out.append((z, i))
        i += 1
        w = y
        c = p_divmod(F, c, y)[0]
    if c != ONE:
        out.extend((g, m * F.p) for g, m in squarefree_decomposition(F, p_pth_root(F, c)))
    return out


def distinct_degree(F: GF, f: Poly) -> list[tuple[Poly, int]]:
    out = []
    q = F.order
    h = p_mod(F, T, f)
    i = 1
    rest = f
    while deg(rest) >= 2 * i:
        h = p_powmod(F, h, q, rest)
        g = p_gcd(F, rest, p_sub(F, h, T))
        if g != ONE:
            out.append((g, i))
            rest = p_divmod(F, rest, g)[0]
            h = p_mod(F, h, rest)
        i += 1
    if deg(rest) >= 1:
        out.append((rest, deg(rest)))
    return out


def _equal_degree(F: GF, f: Poly, d: int, rng: random.Random) -> list[Poly]:
    n = deg(f)
    if n == d:
        return [f]
    q = F.order
    while True:
        r = strip(rng.randrange(q) for _ in range(n))
        if deg(r) < 1:
            continue
        if q % 2:
            s = p_sub(F, p_powmod(F, r, (q**d - 1) // 2, f), ONE)
        else:
            s, power = r, r
            for _ in range(F.k * d - 1):
                power = p_mod(F, p_mul(F, power, power), f)
                s = p_add(F, s, power)
        g = p_gcd(F, f, s)
        if 0 < deg(g) < n:
            other = p_divmod(F, f, g)[0]
            return _equal_degree(F, g, d, rng) + _equal_degree(F, other, d, rng)


def poly_key(a: Poly) -> tuple:
    """Canonical order: degree, then coefficients from the leading one down."""
    return (len(a), tuple(reversed(a)))


def factor_poly(F: GF, f: Poly) -> tuple[int, list[tuple[Poly, int]]]:
    """Return ``(unit, [(monic irreducible, multiplicity), ...])`` sorted canonically."""
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    lead = f[-1]
    f = p_monic(F, f)
    rng = random.Random(0)
    counts: dict[Poly, int] = {}
    for g, m in squarefree_decomposition(F, f):
        for h, d in distinct_degree(F, g):
            for irr in _equal_degree(F, h, d, rng):
                counts[irr] = counts.get(irr, 0) + m
    return lead, sorted(counts.items(), key=lambda it: poly_key(it[0]))


def is_irreducible(F: GF, f: Poly) -> bool:
    """Rabin's test."""
    n = deg(f)
    if n < 1:
        return False
    if n == 1:
        return True
    f = p_monic(F, f)
    q = F.order
    if p_powmod(F, T, q**n, f) != p_mod(F, T, f):
        return False
    r, m = 2, n
    primes = []
    while r * r <= m:
        if m % r == 0:
            primes.append(r)
            while m % r == 0:
                m //= r
        r += 1
    if m > 1:
        primes.append(m)
    for r in primes:
        h = p_sub(F, p_powmod(F, T, q ** (n // r), f), T)
        if p_gcd(F, f, h) != ONE:
            return False
    return True


def monic_polys(F: GF, n: int):
    """Monic polynomials of degree ``n`` in canonical order."""
    for high in product(range(F.order), repeat=n):
        yield tuple(reversed(high)) + (1,)


def trial_division_factor(F: GF, f: Poly) -> tuple[int, list[tuple[Poly, int]]]:
    """Exhaustive factorization by monic trial divisors of degree <= deg/2."""
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    lead = f[-1]
    rest = p_monic(F, f)
    out: list[tuple[Poly, int]] = []
    d = 1
    while 2 * d <= deg(rest):
        for g in monic_polys(F, d):
            m = 0
            while True:
                quo, rem = p_divmod(F, rest, g)
                if rem:
                    break
                rest, m = quo, m + 1
            if m:
                out.append((g, m))
        d += 1
    if deg(rest) >= 1:
        for i, (g, m) in enumerate(out):
            if g == rest:
                out[i] = (g, m + 1)
                break
        else:
            out.append((rest, 1))
    return lead, sorted(out, key=lambda it: poly_key(it[0]))
