"""Small finite fields GF(p^k) with table-driven arithmetic.

An element is an ``int`` code ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}`` where
``c_0 + c_1 x + ... + c_{k-1} x^{k-1}`` is its residue modulo the field's
defining polynomial.  Codes double as the fixed element ordering used for
canonical transversals.

Defining polynomials are the least monic irreducibles of degree ``k`` under
the same code ordering; for F_4, F_8 and F_9 this yields x^2+x+1, x^3+x+1 and
x^2+1.
"""

from __future__ import annotations

from functools import cache, cached_property
from itertools import product

import numpy as np

PRIME_POWERS = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1), 8: (2, 3), 9: (3, 2)}

MAX_ORDER = 729


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k`` for a supported prime power."""
    n, p = q, 2
    while p * p <= n and n % p:
        p += 1
    if n % p:
        p = n
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    if n != 1 or q < 2:
        raise ValueError(f"{q} is not a prime power")
    return p, k


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = a[:]
    inv = pow(f[-1], -1, p)
    while len(a) >= len(f):
        c = a[-1] * inv % p
        shift = len(a) - len(f)
        if c:
            for i, fc in enumerate(f):
                a[shift + i] = (a[shift + i] - c * fc) % p
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _irreducible_over_prime(f: list[int], p: int) -> bool:
    k = len(f) - 1
    for deg in range(1, k // 2 + 1):
        for tail in product(range(p), repeat=deg):
            if not _pmod(f, list(tail) + [1], p):
                return False
    return True


@cache
def conway_free_modulus(p: int, k: int) -> tuple[int, ...]:
    """Least monic irreducible of degree k over F_p (coefficients, constant first)."""
    if k == 1:
        return (0, 1)
    for code in range(p**k):
        tail = [(code // p**i) % p for i in range(k)]
        if tail[0] == 0:
            continue
        f = tail + [1]
        if _irreducible_over_prime(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class GF:
    """The field with ``p**k`` elements.  Use :func:`field` to get shared instances."""

    def __init__(self, p: int, k: int):
        if p**k > MAX_ORDER:
            raise ValueError(f"GF({p}^{k}) exceeds the supported order {MAX_ORDER}")
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = conway_free_modulus(p, k)

    def __repr__(self) -> str:
        return f"GF({self.order})"

    # -- construction helpers -------------------------------------------------
    def digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.k)]

    def from_digits(self, ds) -> int:
        return sum(int(c) % self.p * self.p**i for i, c in enumerate(ds))

    def _slow_mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        while prod and prod[-1] == 0:
            prod.pop()
        return self.from_digits(_pmod(prod, list(self.modulus), p))

    @cached_property
    def _logs(self) -> tuple[list[int], list[int]]:
        n = self.order - 1
        for g in range(1, self.order):
            exp = [1] * n
            x = 1
            for i in range(1, n):
                x = self._slow_mul(x, g)
                if x == 1:
                    break
                exp[i] = x
            else:
                if self._slow_mul(x, g) == 1:
                    log = [0] * self.order
                    for i, v in enumerate(exp):
                        log[v] = i
                    return exp, log
        raise AssertionError("field has no primitive element")  # pragma: no cover

    @cached_property
    def A(self) -> list[list[int]]:
        """Addition table."""
        codes = np.arange(self.order)
        total = np.zeros((self.order, self.order), dtype=np.int64)
        for i in range(self.k):
            w = self.p**i
            di = (codes // w) % self.p
            total += ((di[:, None] + di[None, :]) % self.p) * w
        return total.tolist()

    @cached_property
    def M(self) -> list[list[int]]:
        """Multiplication table."""
        exp, log = self._logs
        n = self.order - 1
        exp_a = np.array(exp + exp, dtype=np.int64)
        log_a = np.array(log, dtype=np.int64)
        table = exp_a[(log_a[:, None] + log_a[None, :]) % n]
        table[0, :] = 0
        table[:, 0] = 0
        return table.tolist()

    @cached_property
    def negs(self) -> list[int]:
        return [self.from_digits([-c for c in self.digits(a)]) for a in range(self.order)]

    @cached_property
    def invs(self) -> list[int]:
        exp, log = self._logs
        n = self.order - 1
        return [0] + [exp[(-log[a]) % n] for a in range(1, self.order)]

    # -- scalar API -------------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        return self.A[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.A[a][self.negs[b]]

    def neg(self, a: int) -> int:
        return self.negs[a]

    def mul(self, a: int, b: int) -> int:
        return self.M[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in a finite field")
        return self.invs[a]

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            return 0 if n > 0 else 1
        exp, log = self._logs
        return exp[(log[a] * n) % (self.order - 1)]

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` under Z -> F_p -> this field."""
        return n % self.p

    def subfield(self, q: int) -> list[int]:
        """Sorted codes of the subfield with ``q`` elements."""
        if self.order == q:
            return list(range(q))
        p, j = prime_power(q)
        if p != self.p or self.k % j:
            raise ValueError(f"F_{q} is not a subfield of {self!r}")
        return [a for a in range(self.order) if self.pow(a, q) == a]

    def pth_root(self, a: int) -> int:
        return self.pow(a, self.p ** (self.k - 1))


@cache
def field(p: int, k: int = 1) -> GF:
    return GF(p, k)


def field_of_order(q: int) -> GF:
    return field(*prime_power(q))
