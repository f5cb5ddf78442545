"""Finite models of groups of divisibility built as direct sums of totally ordered groups.

Components are ``Z``, ``Q`` (a dense stand-in for a real component) and
``Lex(eta)``: ``Z^eta`` ordered lexicographically, most significant coordinate
first.  The sum carries the pointwise partial order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Union

from .errors import InvalidInput, InvalidParameters, NotPositive

Value = Union[int, Fraction, tuple]

NOT_CHECKABLE = "not-checkable-at-desk-scale"


@dataclass(frozen=True)
class Component:
    kind: str  # "Z", "Q" or "Lex"
    eta: int = 1

    def __post_init__(self) -> None:
        if self.kind not in ("Z", "Q", "Lex"):
            raise InvalidInput(f"unknown component kind {self.kind!r}")
        if self.kind == "Lex" and self.eta < 1:
            raise InvalidInput("Lex(eta) needs eta >= 1")
        if self.kind != "Lex" and self.eta != 1:
            raise InvalidInput("only Lex components take eta")

    def __str__(self) -> str:
        return f"Lex({self.eta})" if self.kind == "Lex" else self.kind

    @classmethod
    def parse(cls, text: str) -> Component:
        text = text.strip()
        if text in ("Z", "Q"):
            return cls(text)
        if text.startswith("Lex(") and text.endswith(")"):
            return cls("Lex", int(text[4:-1]))
        raise InvalidInput(f"cannot parse component {text!r}")

    @property
    def zero(self) -> Value:
        if self.kind == "Lex":
            return (0,) * self.eta
        return Fraction(0) if self.kind == "Q" else 0

    def coerce(self, value) -> Value:
        if self.kind == "Z":
            if not isinstance(value, int):
                raise InvalidInput(f"{value!r} is not an integer")
            return value
        if self.kind == "Q":
            return Fraction(value)
        value = tuple(value)
        if len(value) != self.eta or not all(isinstance(c, int) for c in value):
            raise InvalidInput(f"{value!r} is not a vector in Z^{self.eta}")
        return value

    def sign(self, value: Value) -> int:
        if self.kind == "Lex":
            for c in value:
                if c:
                    return 1 if c > 0 else -1
            return 0
        return (value > 0) - (value < 0)

    def sub(self, a: Value, b: Value) -> Value:
        if self.kind == "Lex":
            return tuple(x - y for x, y in zip(a, b))
        return a - b

    def is_iso_to_z(self) -> bool:
        return self.kind == "Z" or (self.kind == "Lex" and self.eta == 1)


Z_ = Component("Z")
Q_ = Component("Q")


def Lex(eta: int) -> Component:
    return Component("Lex", eta)


@dataclass(frozen=True)
class GroupSpec:
    components: tuple[Component, ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise InvalidInput("need at least one component")

    def __str__(self) -> str:
        return "[" + ", ".join(map(str, self.components)) + "]"


@dataclass(frozen=True)
class OrderedGroupElement:
    """Finite-support element; ``entries`` holds only the nonzero coordinates."""

    spec: GroupSpec
    entries: tuple[tuple[int, Value], ...]

    @classmethod
    def of(cls, spec: GroupSpec, values: dict) -> OrderedGroupElement:
        entries = []
        for i in sorted(values):
            if not 0 <= i < len(spec.components):
                raise InvalidInput(f"component index {i} out of range")
            comp = spec.components[i]
            v = comp.coerce(values[i])
            if comp.sign(v) != 0:
                entries.append((i, v))
        return cls(spec, tuple(entries))

    def value(self, i: int) -> Value:
        return dict(self.entries).get(i, self.spec.components[i].zero)

    def is_nonnegative(self) -> bool:
        return all(self.spec.components[i].sign(v) >= 0 for i, v in self.entries)

    def is_positive(self) -> bool:
        return bool(self.entries) and self.is_nonnegative()

    def __sub__(self, other: OrderedGroupElement) -> OrderedGroupElement:
        comps = self.spec.components
        idx = {i for i, _ in self.entries} | {i for i, _ in other.entries}
        return OrderedGroupElement.of(
            self.spec, {i: comps[i].sub(self.value(i), other.value(i)) for i in idx}
        )

    def __le__(self, other: OrderedGroupElement) -> bool:
        return (other - self).is_nonnegative()

    def __lt__(self, other: OrderedGroupElement) -> bool:
        return self <= other and self != other


def component_atom(comp: Component) -> Value | None:
    """Least positive element, if any."""
    if comp.kind == "Z":
        return 1
    if comp.kind == "Lex":
        return (0,) * (comp.eta - 1) + (1,)
    return None


def atoms_of(spec: GroupSpec) -> list[tuple[int, Value]]:
    return [(i, a) for i, c in enumerate(spec.components) if (a := component_atom(c)) is not None]


def atom_element(spec: GroupSpec, i: int) -> OrderedGroupElement:
    a = component_atom(spec.components[i])
    if a is None:
        raise InvalidInput(f"component {i} has no atom")
    return OrderedGroupElement.of(spec, {i: a})


def is_sum_of_atoms(g: OrderedGroupElement, spec: GroupSpec | None = None) -> bool:
    spec = spec or g.spec
    if not g.is_positive():
        raise NotPositive("only positive elements can be sums of atoms")
    for i, v in g.entries:
        comp = spec.components[i]
        if comp.kind == "Q":
            return False
        if comp.kind == "Lex" and any(v[:-1]):
            return False
    return True


def proper_convex_subgroup_count(comp: Component) -> int:
    """Lex(eta) has the chain H_1 > ... > H_eta = 0; Z and Q only have 0."""
    return comp.eta if comp.kind == "Lex" else 1


# ---------------------------------------------------------------------------
# finite test boxes


def component_values(comp: Component, bound: int, denominators: int = 3):
    """Values with entries in ``[-bound, bound]`` (rationals with small denominators for Q)."""
    if comp.kind == "Z":
        yield from range(-bound, bound + 1)
    elif comp.kind == "Q":
        seen = set()
        for den in range(1, denominators + 1):
            for num in range(-bound * den, bound * den + 1):
                f = Fraction(num, den)
                if f not in seen:
                    seen.add(f)
                    yield f
    else:
        yield from product(range(-bound, bound + 1), repeat=comp.eta)


def box(spec: GroupSpec, bound: int, denominators: int = 3):
    ranges = [list(component_values(c, bound, denominators)) for c in spec.components]
    for vals in product(*ranges):
        yield OrderedGroupElement.of(spec, dict(enumerate(vals)))


# ---------------------------------------------------------------------------
# census over parameter triples


@dataclass(frozen=True)
class CensusReport:
    alpha: int
    beta: int
    gamma: int
    eta: int
    spec: GroupSpec
    atoms: int
    maximal_ideals: int
    nonzero_primes: int
    atomic: bool
    furstenberg: bool
    claims: dict

    @property
    def ok(self) -> bool:
        return all(v is True for k, v in self.claims.items() if v != NOT_CHECKABLE)

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
            "eta": self.eta,
            "spec": str(self.spec),
            "atoms": self.atoms,
            "maximal_ideals": self.maximal_ideals,
            "nonzero_primes": self.nonzero_primes,
            "atomic": self.atomic,
            "furstenberg": self.furstenberg,
            "claims": dict(self.claims),
        }


def census_spec(alpha: int, beta: int, gamma: int) -> tuple[int, GroupSpec]:
    """``(eta, spec)`` for the three parameter cases."""
    for name, v in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise InvalidParameters(f"{name} must be a positive integer, got {v!r}")
    if not alpha <= beta <= gamma:
        raise InvalidParameters(f"need alpha <= beta <= gamma, got {alpha}, {beta}, {gamma}")
    eta = gamma - beta + 1
    if alpha == beta == gamma:
        comps = (Z_,) * beta
    elif alpha == beta:
        comps = (Lex(eta),) + (Z_,) * (beta - 1)
    else:
        comps = (Lex(eta),) + (Z_,) * (alpha - 1) + (Q_,) * (beta - alpha)
    return eta, GroupSpec(comps)


def _atom_generates_maximal(spec: GroupSpec, i: int, bound: int = 2) -> bool:
    """Every nonnegative component value that is positive dominates the atom."""
    comp = spec.components[i]
    a = component_atom(comp)
    return all(
        comp.sign(comp.sub(v, a)) >= 0 for v in component_values(comp, bound) if comp.sign(v) > 0
    )


def theorem419_census(alpha: int, beta: int, gamma: int) -> CensusReport:
    eta, spec = census_spec(alpha, beta, gamma)
    atoms = atoms_of(spec)
    maximals = len(spec.components)
    primes = sum(proper_convex_subgroup_count(c) for c in spec.components)
    atomic = all(c.is_iso_to_z() for c in spec.components)
    furstenberg = all(component_atom(c) is not None for c in spec.components)
    claims = {
        "i": NOT_CHECKABLE,
        "ii": len(atoms) == alpha and all(_atom_generates_maximal(spec, i) for i, _ in atoms),
        "iii": maximals == beta,
        "iv": primes == gamma,
        "v": atomic == (alpha == beta == gamma),
        "vi": furstenberg == (alpha == beta),
        "vii": NOT_CHECKABLE,
    }
    return CensusReport(
        alpha, beta, gamma, eta, spec, len(atoms), maximals, primes, atomic, furstenberg, claims
    )


def census_grid(limit: int) -> list[CensusReport]:
    return [
        theorem419_census(a, b, c)
        for a in range(1, limit + 1)
        for b in range(a, limit + 1)
        for c in range(b, limit + 1)
    ]


__all__ = [
    "NOT_CHECKABLE",
    "CensusReport",
    "Component",
    "GroupSpec",
    "Lex",
    "OrderedGroupElement",
    "Q_",
    "Z_",
    "atom_element",
    "atoms_of",
    "box",
    "census_grid",
    "census_spec",
    "component_values",
    "is_sum_of_atoms",
    "proper_convex_subgroup_count",
    "theorem419_census",
]
