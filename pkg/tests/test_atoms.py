from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from atomforge.atoms import (
    association_canonical_form,
    atom_census,
    brute_force_irreducible,
    ck_applicable,
    ck_min_atoms_check,
    is_irreducible_truncated,
    predicted_atoms,
    prime_element_check,
    reducible_products,
)
from atomforge.core import canonical_associate
from atomforge.errors import InvalidInput, IsUnit, WrongRingShape, ZeroElement
from atomforge.rings import RingElement, trunc

GRID = [(2, 1, 2), (3, 1, 2), (2, 2, 1), (2, 1, 3), (2, 2, 2)]


def test_irreducibility_examples():
    R = trunc(2, 1, 2, 6)
    assert is_irreducible_truncated(R.parse_element("t^2+t^3"))
    assert not is_irreducible_truncated(R.parse_element("t^4"))
    assert is_irreducible_truncated(trunc(2, 2, 2, 6).parse_element("t^3"))
    with pytest.raises(IsUnit):
        is_irreducible_truncated(R.one)
    with pytest.raises(ZeroElement):
        is_irreducible_truncated(R.zero)


@pytest.mark.parametrize("desc", [(2, 1, 2, 8), (2, 2, 2, 6), (3, 1, 2, 7), (2, 1, 3, 9)])
def test_valuation_rule_matches_brute_force(desc):
    R = trunc(*desc)
    impl = R.impl
    products = reducible_products(R)
    window = [x for x in impl.elements("nonunits-nonzero") if impl.valuation(x) <= R.N - R.e - 1]
    assert window
    for x in window:
        el = RingElement(R, x)
        assert is_irreducible_truncated(el) == brute_force_irreducible(el, products)


@pytest.mark.parametrize("q,d,e", GRID + [(4, 1, 2), (3, 2, 1), (2, 3, 1)])
def test_census_equals_closed_form(q, d, e):
    c = atom_census(trunc(q, d, e))
    assert c.observed == c.predicted == predicted_atoms(q, d, e)
    assert c.truncation_stable is True
    assert sum(s for _, s in c.orbits) == c.irreducibles_total


def test_census_examples():
    assert atom_census(trunc(2, 1, 2, 6)).observed == 4
    assert atom_census(trunc(3, 1, 2, 6)).observed == 6
    assert atom_census(trunc(2, 2, 2, 6)).observed == 24


def test_orbit_representatives_are_non_associate():
    R = trunc(3, 1, 2, 6)
    c = atom_census(R)
    impl = R.impl
    units = list(impl.elements("units"))
    reps = [r.payload for r, _ in c.orbits]
    for i, a in enumerate(reps):
        for b in reps[i + 1 :]:
            assert all(impl.mul(u, a) != b for u in units)


def test_census_is_independent_of_worker_count():
    R = trunc(2, 2, 2, 6)
    assert atom_census(R, workers=1) == atom_census(R, workers=3)


@pytest.mark.parametrize(
    "desc,text,expected",
    [
        ((2, 1, 2, 6), "t^2+t^4", "t^2"),
        ((2, 1, 2, 6), "t^2+t^3", "t^2+t^3"),
        ((3, 1, 2, 6), "2t^3+t^4", "t^3+2t^4"),
    ],
)
def test_canonical_form_examples(desc, text, expected):
    R = trunc(*desc)
    assert association_canonical_form(R.parse_element(text)) == R.parse_element(expected)


def test_canonical_form_shape_errors():
    with pytest.raises(WrongRingShape):
        association_canonical_form(trunc(2, 2, 2).parse_element("t^2"))
    with pytest.raises(InvalidInput):
        association_canonical_form(trunc(2, 1, 2).parse_element("t^4"))


@pytest.mark.parametrize("q", [2, 3, 4])
def test_canonical_form_partition_matches_orbits(q):
    R = trunc(q, 1, 2, 6)
    impl = R.impl
    units = list(impl.elements("units"))
    irreducibles = [RingElement(R, x) for x in impl.elements("nonunits-nonzero") if impl.valuation(x) in (2, 3)]
    by_form: dict = {}
    for x in irreducibles:
        by_form.setdefault(association_canonical_form(x), set()).add(x.payload)
    orbits = {frozenset(impl.mul(u, x.payload) for u in units) for x in irreducibles}
    assert {frozenset(s) for s in by_form.values()} == orbits
    assert len(orbits) == 2 * q


@given(st.sampled_from([2, 3, 4, 5]), st.data())
def test_associates_share_canonical_form(q, data):
    R = trunc(q, 1, 2, 6)
    impl = R.impl
    x = data.draw(st.sampled_from([x for x in impl.elements("nonunits-nonzero") if impl.valuation(x) in (2, 3)]))
    u = data.draw(st.sampled_from(list(impl.elements("units"))))
    a, b = RingElement(R, x), RingElement(R, impl.mul(u, x))
    assert association_canonical_form(a) == association_canonical_form(b)
    assert canonical_associate(a)[1] == canonical_associate(b)[1]


def test_prime_element_examples():
    R = trunc(2, 1, 2, 8)
    ok, (a, b) = prime_element_check(R.parse_element("t^2"))
    assert not ok and (a, b) == (R.parse_element("t^3"), R.parse_element("t^3"))
    ok, (a, b) = prime_element_check(R.parse_element("t^3"))
    assert not ok and (a, b) == (R.parse_element("t^2"), R.parse_element("t^4"))
    ok, witness = prime_element_check(trunc(2, 1, 1, 6).parse_element("t"))
    assert ok and witness is None


@pytest.mark.parametrize("q,d,e", [(2, 1, 2), (3, 1, 2), (2, 2, 1), (2, 1, 3)])
def test_no_atom_is_prime_unless_d_and_e_are_one(q, d, e):
    R = trunc(q, d, e, 3 * e + 2)
    c = atom_census(R, stability=False)
    for rep, _ in c.orbits:
        ok, pair = prime_element_check(rep)
        assert not ok
        a, b = pair
        impl = R.impl
        assert impl.divides(rep.payload, (a * b).payload) is not None
        assert impl.divides(rep.payload, a.payload) is None
        assert impl.divides(rep.payload, b.payload) is None


def test_ck_examples():
    c = atom_census(trunc(2, 1, 2, 6))
    assert ck_applicable(c) and ck_min_atoms_check(c)
    c = atom_census(trunc(2, 2, 1, 3))
    assert c.observed == 3 and ck_applicable(c) and ck_min_atoms_check(c)
    c = atom_census(trunc(2, 1, 1, 6))
    assert c.observed == 1 and not ck_applicable(c) and ck_min_atoms_check(c)
