from __future__ import annotations

from math import gcd, prod

import pytest
import sympy
from hypothesis import given, reject, settings, strategies as st

from atomforge.core import canonical_associate, is_unit
from atomforge.errors import (
    FactorizationOverflow,
    InvalidInput,
    InvariantViolation,
    UnsupportedRing,
    ZeroLeadingCoefficient,
)
from atomforge.euclid import (
    EuclidState,
    euclid_run,
    euclid_step,
    nonunit_specialization,
    pollack_init,
    pollack_run,
    polyvalue_prime_generator,
    polyvalue_run,
    proof_certificate,
)
from atomforge.intfactor import IntegerFactorizer, trial_factor
from atomforge.rings import GAUSS, Z, poly_fq, trunc


def integer_chain_oracle(n: int) -> list[int]:
    """Same construction, factoring with plain trial division."""
    chosen = [2]
    while len(chosen) < n:
        chosen.append(min(trial_factor(prod(chosen) + 1)))
    return chosen


def test_integer_chain_prefix_matches_oracle():
    state = euclid_run(Z, 7)
    assert [f.payload for f in state.chosen] == integer_chain_oracle(7) == [2, 3, 7, 43, 13, 53, 5]


def test_integer_chain_ten_steps():
    state = euclid_run(Z, 10)
    values = [f.payload for f in state.chosen]
    assert values == [2, 3, 7, 43, 13, 53, 5, 6221671, 38709183810571, 139]
    assert all(sympy.isprime(p) for p in values)


def test_step_examples():
    s = euclid_step(EuclidState(Z))
    assert s.chosen == (Z(2),) and s.transcript == ()
    s = euclid_step(s)
    assert s.chosen[-1] == Z(3) and s.transcript[-1].x == Z(3)
    s = EuclidState(Z, tuple(map(Z, (2, 3, 7, 43))))
    s = euclid_step(s)
    assert s.transcript[-1].x == Z(1807) and s.chosen[-1] == Z(13)
    R = poly_fq(2)
    s = euclid_step(EuclidState(R, (R.parse_element("t"),)))
    step = s.transcript[-1]
    assert step.x == R.parse_element("t^2+1") and step.selected == R.parse_element("t+1")


@pytest.mark.parametrize("ring", [Z, GAUSS, poly_fq(2), poly_fq(3), poly_fq(4)])
def test_comaximality_ledger_and_replay(ring):
    n = 10 if ring in (Z, GAUSS, poly_fq(2)) else 7
    state = euclid_run(ring, n)
    assert len(state.chosen) == n
    assert len(state.certificates) == n * (n - 1) // 2
    assert all(c.verify() for c in state.certificates)
    forms = [canonical_associate(f)[1] for f in state.chosen]
    assert len(set(forms)) == n
    for k, step in enumerate(state.transcript):
        prior = state.chosen[: k + 1]
        product = ring.one
        for f in prior:
            product = product * f
        assert step.y * product + 1 == step.x
        assert step.factorization.replay() == step.x
        for i in range(len(prior)):
            alt = proof_certificate(prior, i, step.y, step.x, step.selected)
            assert alt.verify()


def test_gaussian_and_polynomial_prefixes():
    g = euclid_run(GAUSS, 5)
    assert [str(f) for f in g.chosen] == ["1+i", "3", "19", "4+9i", "630307"]
    p = euclid_run(poly_fq(2), 5)
    assert [str(f) for f in p.chosen] == ["t", "1 + t", "1 + t^2 + t^3", "1 + t + t^2", "1 + t + t^3"]


def test_truncated_rings_are_rejected():
    with pytest.raises(UnsupportedRing):
        euclid_step(EuclidState(trunc(2, 1, 2)))


def test_overflow_keeps_state():
    strict = IntegerFactorizer(extended=False)
    state = euclid_run(Z, 9, strict)
    with pytest.raises(FactorizationOverflow) as info:
        euclid_step(state, strict)
    assert info.value.state == state
    assert all(c.verify() for c in info.value.state.certificates)


@pytest.mark.parametrize("a,b,x", [(10, 7, 0), (10, 1, 1), (3, 0, 2), (-4, -1, 1), (-4, 1, -1)])
def test_nonunit_specialization_examples(a, b, x):
    assert nonunit_specialization(Z(a), Z(b)) == Z(x)


def test_nonunit_specialization_errors():
    with pytest.raises(ZeroLeadingCoefficient):
        nonunit_specialization(Z(0), Z(3))
    R = trunc(2, 1, 2)
    with pytest.raises(UnsupportedRing):
        nonunit_specialization(R.one, R.one)


@given(st.integers(-10**6, 10**6).filter(bool), st.integers(-10**6, 10**6))
def test_nonunit_specialization_integers(a, b):
    x = nonunit_specialization(Z(a), Z(b))
    v = Z(a) * x + Z(b)
    assert v and not is_unit(v)


@given(st.tuples(st.integers(-50, 50), st.integers(-50, 50)).filter(any), st.tuples(st.integers(-50, 50), st.integers(-50, 50)))
def test_nonunit_specialization_gaussian(a, b):
    x = nonunit_specialization(GAUSS(a), GAUSS(b))
    v = GAUSS(a) * x + GAUSS(b)
    assert v and not is_unit(v)


# ---------------------------------------------------------------------------


def test_pollack_initial_examples():
    s = pollack_init(5, {1, 4})
    assert (s.alpha, s.beta) == (2, 3)
    assert s.coefficients() == (10, 7)
    state = pollack_run(5, {1, 4}, 3)
    assert state.chosen == (7, 37, 1297)
    assert [st.y for st in state.transcript] == [7, 37, 1297]
    assert [st.x for st in state.transcript] == [0, 0, 0]


@pytest.mark.parametrize(
    "N,H,expected",
    [
        (5, {1, 4}, (7, 37, 1297, 17, 3, 13, 101234977, 787)),
        (8, {1}, (11, 7, 619, 3931, 331, 47093, 5, 13)),
    ],
)
def test_pollack_eight_emissions(N, H, expected):
    state = pollack_run(N, H, 8)
    assert state.chosen == expected
    assert len(state.certificates) == 28 and all(c.verify() for c in state.certificates)
    for g in state.chosen:
        assert g % N not in H and gcd(g, N) == 1 and gcd(g, state.alpha) == 1
        assert sympy.isprime(g)


@pytest.mark.parametrize("N,H", [(7, {1, 2, 4}), (12, {1, 11}), (9, {1, 8}), (16, {1, 7, 9, 15}), (11, {1})])
def test_pollack_class_property(N, H):
    state = pollack_run(N, H, 5)
    for step in state.transcript:
        sign_class = step.sign % N
        total = sign_class
        for g, m in step.factorization.factors:
            total = total * pow(g.payload, m, N) % N
        assert total == state.alpha % N
        assert step.residue not in state.subgroup


@pytest.mark.parametrize("N,H", [(2, {1}), (5, {1, 2, 3, 4}), (5, {1, 2}), (6, {1, 2}), (8, {3})])
def test_pollack_rejects_bad_subgroups(N, H):
    with pytest.raises(InvalidInput):
        pollack_init(N, H)


# ---------------------------------------------------------------------------


def test_polyvalue_examples():
    assert polyvalue_prime_generator((1, 0, 1), []).prime == 2
    r = polyvalue_prime_generator((1, 0, 1), [2])
    assert (r.prime, r.n, r.value) == (5, 2, 5)
    r = polyvalue_prime_generator((1, 0, 1), [2, 5])
    assert (r.prime, r.n, r.value) == (101, 10, 101)


def test_polyvalue_zero_constant_term():
    r = polyvalue_prime_generator((0, 1), [2, 3])
    assert r.prime == 5


def test_polyvalue_rejects_constants():
    with pytest.raises(InvalidInput):
        polyvalue_prime_generator((3,), [])


@settings(max_examples=25)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=3).filter(lambda c: c[-1] != 0), st.integers(1, 3))
def test_polyvalue_soundness(coeffs, count):
    try:
        runs = polyvalue_run(coeffs, count)
    except FactorizationOverflow:
        reject()  # documented outcome for values beyond the factoring policy
    known: list[int] = []
    for r in runs:
        assert r.value % r.prime == 0
        assert r.prime not in known
        assert sympy.isprime(r.prime)
        known.append(r.prime)
