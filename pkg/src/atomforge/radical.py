"""Jacobson radical and Condition (E) diagnostics.

``x`` lies in ``J(R)`` iff ``y*x + 1`` is a unit for every ``y``.  Truncated
rings are finite, so the test is exhaustive there; the infinite rings only get
panel reports, because they cannot be exhausted.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import ConditionEWitness, condition_e_witness, is_unit
from .errors import UnsupportedRing, ZeroElement
from .rings import RingDescriptor, RingElement

HOLDS_ON_PANEL = "holds-on-panel"
FAILS_WITH_WITNESS = "fails-with-witness"
EXHAUSTIVELY_HOLDS = "exhaustively-holds"
TRUNCATED_LABEL = "truncated model of a local domain"


def radical_counterexample(x: RingElement) -> RingElement | None:
    """Least ``y`` with ``y*x + 1`` a nonunit, or ``None`` if ``x`` is in the radical."""
    ring = x.ring
    if not x:
        return None
    if ring.kind == "trunc":
        impl = ring.impl
        one = impl.one
        for y in impl.elements("all"):
            if not impl.is_unit(impl.add(impl.mul(y, x.payload), one)):
                return RingElement(ring, y)
        return None
    # Condition (E) supplies the counterexample directly in the other rings
    return condition_e_witness(x).y


def in_jacobson_radical(x: RingElement) -> bool:
    return radical_counterexample(x) is None


@dataclass(frozen=True)
class RadicalReport:
    ring: RingDescriptor
    condition_e_holds: str
    radical_members: tuple[RingElement, ...] | None = None
    witness: RingElement | None = None
    equals_nonunits: bool | None = None
    one_plus_radical_in_units: bool | None = None
    panel: tuple[ConditionEWitness, ...] = field(default=())
    label: str | None = None

    @property
    def radical_size(self) -> int | None:
        return None if self.radical_members is None else len(self.radical_members)

    def to_json(self) -> dict:
        out: dict = {"ring": str(self.ring), "condition_e": self.condition_e_holds}
        if self.label:
            out["label"] = self.label
        if self.radical_members is not None:
            out["radical_size"] = len(self.radical_members)
            out["radical_members"] = [m.to_json() for m in self.radical_members]
            out["equals_nonunits"] = self.equals_nonunits
            out["one_plus_radical_in_units"] = self.one_plus_radical_in_units
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.panel:
            out["panel"] = [
                {"x": w.x.to_json(), "y": w.y.to_json(), "value": w.value.to_json()} for w in self.panel
            ]
        return out


def jacobson_radical(ring: RingDescriptor) -> RadicalReport:
    """Exhaustive ``J(R)`` for a truncated ring, cross-checked against the nonunits."""
    if ring.kind != "trunc":
        raise UnsupportedRing(f"exhaustive radical needs a finite ring, got {ring}")
    impl = ring.impl
    elements = list(impl.elements("all"))
    units = [u for u in elements if impl.is_unit(u)]
    one = impl.one
    members = []
    for x in elements:
        if all(impl.is_unit(impl.add(impl.mul(y, x), one)) for y in elements):
            members.append(x)
    nonunits = [x for x in elements if not impl.is_unit(x)]
    unit_set = set(units)
    shifted_ok = all(impl.add(one, x) in unit_set for x in members)
    nonzero = [x for x in members if any(x)]
    witness = RingElement(ring, nonzero[0]) if nonzero else None
    return RadicalReport(
        ring,
        FAILS_WITH_WITNESS if nonzero else EXHAUSTIVELY_HOLDS,
        tuple(RingElement(ring, x) for x in members),
        witness,
        members == nonunits,
        shifted_ok,
        label=TRUNCATED_LABEL,
    )


def condition_e_panel(ring: RingDescriptor, panel) -> RadicalReport:
    """Witness Condition (E) for each panel element of an infinite ring."""
    if ring.kind == "trunc":
        raise UnsupportedRing("truncated rings are finite; use jacobson_radical")
    witnesses = []
    for x in panel:
        if not isinstance(x, RingElement):
            x = ring(x)
        if not x:
            raise ZeroElement("panel elements must be nonzero")
        w = condition_e_witness(x)
        assert not is_unit(w.value)
        witnesses.append(w)
    return RadicalReport(ring, HOLDS_ON_PANEL, panel=tuple(witnesses))


__all__ = [
    "EXHAUSTIVELY_HOLDS",
    "FAILS_WITH_WITNESS",
    "HOLDS_ON_PANEL",
    "RadicalReport",
    "condition_e_panel",
    "in_jacobson_radical",
    "jacobson_radical",
    "radical_counterexample",
]
