from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from atomforge.divgroup import (
    NOT_CHECKABLE,
    Component,
    GroupSpec,
    Lex,
    OrderedGroupElement,
    Q_,
    Z_,
    atom_element,
    atoms_of,
    box,
    census_grid,
    is_sum_of_atoms,
    proper_convex_subgroup_count,
    theorem419_census,
)
from atomforge.errors import InvalidInput, InvalidParameters, NotPositive


def test_atoms_examples():
    assert len(atoms_of(GroupSpec((Z_, Z_, Z_)))) == 3
    assert atoms_of(GroupSpec((Lex(3), Z_, Q_))) == [(0, (0, 0, 1)), (1, 1)]
    assert atoms_of(GroupSpec((Q_,))) == []


def test_sum_of_atoms_examples():
    spec = GroupSpec((Lex(2),))
    assert is_sum_of_atoms(OrderedGroupElement.of(spec, {0: (0, 5)}))
    assert not is_sum_of_atoms(OrderedGroupElement.of(spec, {0: (1, 0)}))
    q = GroupSpec((Q_,))
    assert not is_sum_of_atoms(OrderedGroupElement.of(q, {0: Fraction(1, 2)}))
    with pytest.raises(NotPositive):
        is_sum_of_atoms(OrderedGroupElement.of(spec, {0: (0, -1)}))


def test_convex_subgroup_counts():
    assert proper_convex_subgroup_count(Lex(3)) == 3
    assert proper_convex_subgroup_count(Z_) == 1
    assert proper_convex_subgroup_count(Q_) == 1


@pytest.mark.parametrize("n", range(0, 50))
def test_lex_order_is_most_significant_first(n):
    spec = GroupSpec((Lex(2),))
    assert OrderedGroupElement.of(spec, {0: (1, -n)}).is_positive()
    assert OrderedGroupElement.of(spec, {0: (0, 1)}) < OrderedGroupElement.of(spec, {0: (1, -n)})


@pytest.mark.parametrize("spec", [GroupSpec((Z_, Lex(2))), GroupSpec((Lex(3),)), GroupSpec((Q_, Z_))])
def test_atoms_are_minimal_in_a_box(spec):
    elems = list(box(spec, 2))
    zero = OrderedGroupElement.of(spec, {})
    for i, _ in atoms_of(spec):
        a = atom_element(spec, i)
        assert a.is_positive()
        assert not any(zero < g < a for g in elems)


def test_q_has_no_least_positive_element_in_a_box():
    spec = GroupSpec((Q_,))
    for g in box(spec, 1, denominators=6):
        if g.is_positive():
            half = OrderedGroupElement.of(spec, {0: g.value(0) / 2})
            assert half.is_positive() and half < g


@pytest.mark.parametrize(
    "triple,expected",
    [
        ((3, 3, 3), dict(atoms=3, maximal_ideals=3, nonzero_primes=3, atomic=True, furstenberg=True)),
        ((2, 2, 4), dict(eta=3, atoms=2, maximal_ideals=2, nonzero_primes=4, atomic=False, furstenberg=True)),
        ((2, 3, 5), dict(eta=3, atoms=2, maximal_ideals=3, nonzero_primes=5, furstenberg=False)),
    ],
)
def test_census_examples(triple, expected):
    r = theorem419_census(*triple)
    for k, v in expected.items():
        assert getattr(r, k) == v
    assert r.ok


def test_census_spec_shape():
    assert str(theorem419_census(2, 3, 5).spec) == "[Lex(3), Z, Q]"
    assert str(theorem419_census(1, 1, 1).spec) == "[Z]"


def test_grid():
    grid = census_grid(6)
    assert len(grid) == 56
    assert all(r.ok for r in grid)
    for r in grid:
        assert r.claims["i"] == r.claims["vii"] == NOT_CHECKABLE


@given(st.integers(1, 8), st.integers(1, 8), st.integers(1, 8))
def test_census_claims_property(a, b, c):
    a, b, c = sorted((a, b, c))
    r = theorem419_census(a, b, c)
    assert (r.atoms, r.maximal_ideals, r.nonzero_primes) == (a, b, c)
    assert r.atomic == (a == b == c)
    assert r.furstenberg == (a == b)


@pytest.mark.parametrize("bad", [(0, 1, 1), (2, 1, 3), (1, 3, 2), (1.5, 2, 3)])
def test_bad_parameters(bad):
    with pytest.raises(InvalidParameters):
        theorem419_census(*bad)


def test_component_validation():
    with pytest.raises(InvalidInput):
        Component("R")
    with pytest.raises(InvalidInput):
        Lex(0)
    assert Component.parse("Lex(4)") == Lex(4)
    with pytest.raises(InvalidInput):
        OrderedGroupElement.of(GroupSpec((Z_,)), {0: Fraction(1, 2)})
