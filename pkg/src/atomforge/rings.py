"""Concrete rings: Z, Z[i], F_q[t] and truncated subrings F_q + t^e F_{q^d}[[t]] mod t^N.

A :class:`RingDescriptor` names a ring; its ``impl`` does the arithmetic on raw
payloads and :class:`RingElement` wraps ``(descriptor, payload)`` with
operators.  Payload shapes:

* ``z``      -- ``int``
* ``gauss``  -- ``(re, im)``
* ``poly-fq``-- tuple of F_q codes, constant first, no trailing zeros
* ``trunc``  -- tuple of length N of F_{q^d} codes; slot 0 lies in the
  subfield F_q and slots 1..e-1 are zero
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Any, Iterator

from . import gaussian as gs
from . import polyfq as pf
from .errors import (
    BudgetExceeded,
    InvalidInput,
    OutsideSoundnessWindow,
    ZeroElement,
)
from .fields import PRIME_POWERS, field, prime_power

DEFAULT_BUDGET = 1 << 24
KINDS = ("z", "gauss", "poly-fq", "trunc")


def enumeration_budget() -> int:
    raw = os.environ.get("ATOMFORGE_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class RingDescriptor:
    kind: str
    q: int | None = None
    d: int | None = None
    e: int | None = None
    N: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise InvalidInput(f"unknown ring kind {self.kind!r}")
        if self.kind in ("poly-fq", "trunc") and self.q not in PRIME_POWERS:
            raise InvalidInput(f"q must be one of {sorted(PRIME_POWERS)}, got {self.q}")
        if self.kind == "trunc":
            d, e, N = self.d, self.e, self.N
            if not (isinstance(d, int) and 1 <= d <= 3):
                raise InvalidInput("d must satisfy 1 <= d <= 3")
            if not (isinstance(e, int) and 1 <= e <= 4):
                raise InvalidInput("e must satisfy 1 <= e <= 4")
            if not (isinstance(N, int) and N >= 3 * e):
                raise InvalidInput(f"truncation order N={N} is below 3e={3 * e}")

    def __str__(self) -> str:
        if self.kind == "poly-fq":
            return f"poly-fq:{self.q}"
        if self.kind == "trunc":
            return f"trunc:{self.q}:{self.d}:{self.e}:{self.N}"
        return self.kind

    @classmethod
    def parse(cls, text: str) -> RingDescriptor:
        parts = text.strip().split(":")
        try:
            if parts == ["z"] or parts == ["gauss"]:
                return cls(parts[0])
            if parts[0] == "poly-fq" and len(parts) == 2:
                return cls("poly-fq", int(parts[1]))
            if parts[0] == "trunc" and len(parts) == 5:
                q, d, e, N = map(int, parts[1:])
                return cls("trunc", q, d, e, N)
        except ValueError as exc:
            raise InvalidInput(f"bad ring descriptor {text!r}") from exc
        raise InvalidInput(f"bad ring descriptor {text!r}")

    @cached_property
    def impl(self):
        if self.kind == "z":
            return IntegerRing()
        if self.kind == "gauss":
            return GaussianRing()
        if self.kind == "poly-fq":
            return PolyRing(self.q)
        return TruncatedRing(self.q, self.d, self.e, self.N)

    def __call__(self, payload: Any) -> RingElement:
        return RingElement(self, self.impl.normalize(payload))

    def parse_element(self, text: str) -> RingElement:
        return RingElement(self, self.impl.parse(text))

    @property
    def zero(self) -> RingElement:
        return RingElement(self, self.impl.zero)

    @property
    def one(self) -> RingElement:
        return RingElement(self, self.impl.one)

    def with_N(self, N: int) -> RingDescriptor:
        return RingDescriptor(self.kind, self.q, self.d, self.e, N)


Z = RingDescriptor("z")
GAUSS = RingDescriptor("gauss")


def poly_fq(q: int) -> RingDescriptor:
    return RingDescriptor("poly-fq", q)


def trunc(q: int, d: int, e: int, N: int | None = None) -> RingDescriptor:
    return RingDescriptor("trunc", q, d, e, 3 * e if N is None else N)


@dataclass(frozen=True)
class RingElement:
    ring: RingDescriptor
    payload: Any

    def _coerce(self, other) -> Any:
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise InvalidInput(f"ring mismatch: {self.ring} vs {other.ring}")
            return other.payload
        if isinstance(other, int):
            return self.ring.impl.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RingElement(self.ring, self.ring.impl.add(self.payload, o))

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, self.ring.impl.neg(self.payload))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        impl = self.ring.impl
        return RingElement(self.ring, impl.add(self.payload, impl.neg(o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RingElement(self.ring, self.ring.impl.mul(self.payload, o))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return self.payload != self.ring.impl.zero

    def __str__(self) -> str:
        return self.ring.impl.format(self.payload)

    def __repr__(self) -> str:
        return f"<{self.ring} {self}>"

    @property
    def sort_key(self) -> tuple:
        return self.ring.impl.key(self.payload)

    def to_json(self) -> dict:
        return {"ring": str(self.ring), "payload": self.ring.impl.to_json(self.payload)}

    @classmethod
    def from_json(cls, obj: dict) -> RingElement:
        try:
            ring = RingDescriptor.parse(obj["ring"])
            return RingElement(ring, ring.impl.from_json(obj["payload"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed element {obj!r}") from exc


# ---------------------------------------------------------------------------
# Integers and Gaussian integers


class IntegerRing:
    zero = 0
    one = 1

    def normalize(self, x) -> int:
        if isinstance(x, bool) or not isinstance(x, int):
            raise InvalidInput(f"integer payload expected, got {x!r}")
        return x

    def from_int(self, n: int) -> int:
        return n

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_unit(self, a) -> bool:
        return abs(a) == 1

    def inverse(self, a):
        return a

    def canonical_associate(self, a):
        return (-1, -a) if a < 0 else (1, a)

    def key(self, a):
        return (abs(a), a < 0)

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str) -> int:
        try:
            return int(text.strip())
        except ValueError as exc:
            raise InvalidInput(f"bad integer {text!r}") from exc

    def to_json(self, a):
        return str(a)

    def from_json(self, obj):
        return int(obj)


class GaussianRing:
    zero = (0, 0)
    one = (1, 0)

    def normalize(self, x):
        if isinstance(x, int):
            return (x, 0)
        try:
            re_, im = x
        except (TypeError, ValueError) as exc:
            raise InvalidInput(f"Gaussian payload must be (re, im), got {x!r}") from exc
        if not (isinstance(re_, int) and isinstance(im, int)):
            raise InvalidInput(f"Gaussian payload must hold integers, got {x!r}")
        return (re_, im)

    def from_int(self, n):
        return (n, 0)

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def neg(self, a):
        return (-a[0], -a[1])

    def mul(self, a, b):
        return gs.gmul(a, b)

    def is_unit(self, a) -> bool:
        return gs.is_unit(a)

    def inverse(self, a):
        return gs.gconj(a)

    def canonical_associate(self, a):
        return gs.canonical(a)

    def key(self, a):
        return gs.key(a)

    def format(self, a) -> str:
        re_, im = a
        if im == 0:
            return str(re_)
        imag = {1: "i", -1: "-i"}.get(im, f"{im}i")
        if re_ == 0:
            return imag
        return f"{re_}{'' if imag.startswith('-') else '+'}{imag}"

    def parse(self, text: str):
        s = text.replace(" ", "").replace("*", "")
        try:
            if not s.endswith("i"):
                return (int(s), 0)
            cut = max(s.rfind("+", 1), s.rfind("-", 1))
            real, imag = (s[:cut], s[cut:-1]) if cut > 0 else ("0", s[:-1])
            im = {"": 1, "+": 1, "-": -1}.get(imag)
            return (int(real), int(imag) if im is None else im)
        except ValueError as exc:
            raise InvalidInput(f"bad Gaussian integer {text!r}") from exc

    def to_json(self, a):
        return [str(a[0]), str(a[1])]

    def from_json(self, obj):
        return (int(obj[0]), int(obj[1]))


# ---------------------------------------------------------------------------
# Polynomials and truncated power series


def _parse_terms(text: str, var: str = "t") -> dict[int, int]:
    """Parse ``"2t^3 + t^4 - 1"`` into ``{exponent: signed integer coefficient}``."""
    s = text.replace(" ", "").replace("**", "^").replace("*", "")
    if not s:
        raise InvalidInput("empty polynomial literal")
    if s[0] not in "+-":
        s = "+" + s
    terms: dict[int, int] = {}
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        m = re.fullmatch(rf"(\d*)(?:({var})(?:\^(\d+))?)?", body)
        if not m or (not m.group(1) and not m.group(2)):
            raise InvalidInput(f"bad term {body!r} in {text!r}")
        coef = int(m.group(1)) if m.group(1) else 1
        exp = (int(m.group(3)) if m.group(3) else 1) if m.group(2) else 0
        terms[exp] = terms.get(exp, 0) + (coef if sign == "+" else -coef)
    return terms


def _format_terms(coeffs, var: str = "t") -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}{mono}")
    return " + ".join(parts) if parts else "0"


class _FieldCoefficients:
    F: Any

    def _coef(self, c: int) -> int:
        # literal integers are read as field codes, signs through field negation
        if c < 0:
            return self.F.negs[self._coef(-c)]
        if c >= self.F.order:
            raise InvalidInput(f"coefficient {c} is not a code of {self.F!r}")
        return c

    def _codes_from_text(self, text: str) -> list[int]:
        s = text.strip()
        if s.startswith("["):
            import json

            try:
                raw = json.loads(s)
            except ValueError as exc:
                raise InvalidInput(f"bad coefficient list {text!r}") from exc
            return [self._coef(int(c)) for c in raw]
        terms = _parse_terms(s)
        out = [0] * (max(terms) + 1)
        for k, c in terms.items():
            out[k] = self.F.A[out[k]][self._coef(c)]
        return out


class PolyRing(_FieldCoefficients):
    """F_q[t]."""

    def __init__(self, q: int):
        self.q = q
        self.F = field(*prime_power(q))
        self.zero = ()
        self.one = (1,)

    def normalize(self, x):
        if isinstance(x, int):
            return self.from_int(x)
        codes = [int(c) for c in x]
        if any(c < 0 or c >= self.q for c in codes):
            raise InvalidInput(f"coefficients must be F_{self.q} codes, got {codes}")
        return pf.strip(codes)

    def from_int(self, n):
        return pf.strip([self.F.from_int(n)])

    def add(self, a, b):
        return pf.p_add(self.F, a, b)

    def neg(self, a):
        return pf.p_neg(self.F, a)

    def mul(self, a, b):
        return pf.p_mul(self.F, a, b)

    def is_unit(self, a) -> bool:
        return len(a) == 1

    def inverse(self, a):
        return (self.F.inv(a[0]),)

    def canonical_associate(self, a):
        lead = a[-1]
        return (lead,), pf.p_monic(self.F, a)

    def key(self, a):
        return pf.poly_key(a)

    def format(self, a) -> str:
        return _format_terms(a)

    def parse(self, text: str):
        return pf.strip(self._codes_from_text(text))

    def to_json(self, a):
        return list(a)

    def from_json(self, obj):
        return self.normalize(obj)


class TruncatedRing(_FieldCoefficients):
    """F_q + t^e F_{q^d}[[t]] modulo t^N."""

    def __init__(self, q: int, d: int, e: int, N: int):
        p, k = prime_power(q)
        self.q, self.d, self.e, self.N = q, d, e, N
        self.F = field(p, k * d)
        self.small = self.F.subfield(q)
        self.small_set = frozenset(self.small)
        self.zero = (0,) * N
        self.one = (1,) + (0,) * (N - 1)

    @property
    def size(self) -> int:
        return self.q * self.F.order ** (self.N - self.e)

    def valid(self, x) -> bool:
        return (
            len(x) == self.N
            and x[0] in self.small_set
            and not any(x[1 : self.e])
            and all(0 <= c < self.F.order for c in x)
        )

    def normalize(self, x):
        if isinstance(x, int):
            return self.from_int(x)
        codes = tuple(int(c) for c in x)
        if len(codes) < self.N:
            codes = codes + (0,) * (self.N - len(codes))
        if not self.valid(codes):
            raise InvalidInput(f"{list(codes)} violates the coefficient constraints of {self.descriptor}")
        return codes

    @property
    def descriptor(self) -> RingDescriptor:
        return RingDescriptor("trunc", self.q, self.d, self.e, self.N)

    def from_int(self, n):
        return (self.F.from_int(n),) + (0,) * (self.N - 1)

    def add(self, a, b):
        A = self.F.A
        return tuple(A[x][y] for x, y in zip(a, b))

    def neg(self, a):
        negs = self.F.negs
        return tuple(negs[x] for x in a)

    def mul(self, a, b):
        A, M = self.F.A, self.F.M
        N = self.N
        out = [0] * N
        for i, x in enumerate(a):
            if x:
                row = M[x]
                for j in range(N - i):
                    y = b[j]
                    if y:
                        out[i + j] = A[out[i + j]][row[y]]
        return tuple(out)

    def is_unit(self, a) -> bool:
        return a[0] != 0

    def inverse(self, a):
        F = self.F
        A, M, negs = F.A, F.M, F.negs
        inv0 = F.inv(a[0])
        out = [inv0] + [0] * (self.N - 1)
        for n in range(1, self.N):
            acc = 0
            for k in range(1, n + 1):
                if a[k] and out[n - k]:
                    acc = A[acc][M[a[k]][out[n - k]]]
            out[n] = M[negs[acc]][inv0]
        return tuple(out)

    def valuation(self, a) -> int:
        for i, c in enumerate(a):
            if c:
                return i
        raise ZeroElement("valuation of 0 is undefined")

    def t_power(self, k: int, coef: int = 1):
        out = [0] * self.N
        out[k] = coef
        return tuple(out)

    def scale(self, a, c: int):
        row = self.F.M[c]
        return tuple(row[x] for x in a)

    def leading_transversal(self, lead: int) -> tuple[int, int]:
        """``(c, c*lead)`` with ``c`` in F_q^x making ``c*lead`` least in its F_q^x-orbit."""
        M = self.F.M
        return min(((c, M[c][lead]) for c in self.small if c), key=lambda t: t[1])

    def canonical_associate(self, a):
        """Scale the leading coefficient into the transversal and clear slots >= v+e.

        Units ``c + sum_{k>=e} u_k t^k`` act on ``a`` (valuation v) by scaling
        slots v..v+e-1 with c and shifting every higher slot freely, so the
        result is the unique representative of the associate class.
        """
        v = self.valuation(a)
        c, _ = self.leading_transversal(a[v])
        scaled = self.scale(a, c)
        canon = tuple(x if i < v + self.e else 0 for i, x in enumerate(scaled))
        unit = self.divide_unit(a, canon)
        return unit, canon

    def divide_unit(self, a, b):
        """The unit ``u`` with ``a = u*b`` for associates ``a`` and ``b``."""
        F = self.F
        v = self.valuation(b)
        q = self._series_quotient(a[v:], b[v:], self.N - v)
        u = tuple(q) + (0,) * v
        assert self.mul(u, b) == tuple(a) and self.valid(u) and self.is_unit(u)
        return u

    def _series_quotient(self, num, den, length: int) -> list[int]:
        F = self.F
        A, M, negs = F.A, F.M, F.negs
        inv0 = F.inv(den[0])
        out = [0] * length
        for n in range(length):
            acc = num[n] if n < len(num) else 0
            for k in range(1, n + 1):
                if k < len(den) and den[k] and out[n - k]:
                    acc = A[acc][negs[M[den[k]][out[n - k]]]]
            out[n] = M[acc][inv0]
        return out

    def key(self, a):
        return tuple(reversed(a))

    def format(self, a) -> str:
        return _format_terms(a)

    def parse(self, text: str):
        return self.normalize(self._codes_from_text(text))

    def to_json(self, a):
        return list(a)

    def from_json(self, obj):
        return self.normalize(obj)

    # -- enumeration and divisibility --------------------------------------------
    def check_budget(self, N: int | None = None) -> None:
        N = self.N if N is None else N
        size = self.q * self.F.order ** (N - self.e)
        if size > enumeration_budget():
            raise BudgetExceeded(f"{size} elements exceed the enumeration budget {enumeration_budget()}")

    def elements(self, kind: str = "all") -> Iterator[tuple]:
        self.check_budget()
        if kind not in ("all", "units", "nonunits-nonzero"):
            raise InvalidInput(f"unknown element filter {kind!r}")
        consts = self.small
        if kind == "units":
            consts = [c for c in self.small if c]
        elif kind == "nonunits-nonzero":
            consts = [0]
        mid = (0,) * (self.e - 1)
        for high in product(range(self.F.order), repeat=self.N - self.e):
            tail = tuple(reversed(high))
            for c0 in consts:
                x = (c0,) + mid + tail
                if kind == "nonunits-nonzero" and not any(x):
                    continue
                yield x

    def divides(self, b, a):
        """Witness ``c`` with ``b*c == a`` or ``None`` (valuation window enforced)."""
        if not any(a) or not any(b):
            raise ZeroElement("divisibility is only decided for nonzero elements")
        va, vb = self.valuation(a), self.valuation(b)
        if va > self.N - self.e:
            raise OutsideSoundnessWindow(
                f"v(a)={va} exceeds N-e={self.N - self.e}; truncation cannot decide b | a"
            )
        w = va - vb
        if w < 0 or 0 < w < self.e:
            return None
        quo = self._series_quotient(a[va:], b[vb:], self.N - va)
        c = [0] * self.N
        for i, x in enumerate(quo):
            if w + i < self.N:
                c[w + i] = x
        c = tuple(c)
        if not self.valid(c):
            return None
        assert self.mul(b, c) == tuple(a)
        return c
