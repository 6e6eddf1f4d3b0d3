import pytest
from hypothesis import given
from hypothesis import strategies as st

from lengthlab.perm import Permutation, comm, compose, conj, inverse, power
from strategies import permutations


def test_product_is_left_to_right():
    p = Permutation.parse("(0 1)", 3)
    q = Permutation.parse("(1 2)", 3)
    # apply p first: 0 -> 1 -> 2
    assert (p * q)[0] == 2
    assert str(p * q) == "(0 2 1)"


def test_parse_and_print_round_trip():
    p = Permutation.parse("(0 3 1)(2 4)")
    assert p.degree == 5
    assert str(p) == "(0 3 1)(2 4)"
    assert Permutation.parse(str(p)) == p


def test_identity_prints_as_empty_cycle():
    e = Permutation.identity(4)
    assert str(e) == "()"
    assert e.is_identity()
    assert Permutation.parse("()", 4) == e


def test_parse_pads_to_requested_degree():
    assert Permutation.parse("(0 1)", 5) == (1, 0, 2, 3, 4)


@pytest.mark.parametrize("bad", ["(0 1", "(0 0)", "(a b)", "0 1)"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        Permutation.parse(bad)


def test_order_and_cycles():
    p = Permutation.parse("(0 1 2)(3 4)")
    assert p.order() == 6
    assert p.cycles() == [(0, 1, 2), (3, 4)]
    assert p.support() == [0, 1, 2, 3, 4]


def test_module_helpers_agree_with_operators():
    p = Permutation.parse("(0 1 2 3)")
    q = Permutation.parse("(1 3)", 4)
    assert compose(p, q) == p * q
    assert inverse(p) == ~p
    assert power(p, 3) == p ** 3 == ~p
    assert p ** 0 == Permutation.identity(4)


@given(permutations(6), permutations(6), permutations(6))
def test_product_is_associative(p, q, r):
    assert (p * q) * r == p * (q * r)


@given(permutations(6))
def test_inverse_cancels(p):
    e = Permutation.identity(6)
    assert p * ~p == e == ~p * p
    assert p ** p.order() == e


@given(permutations(5), permutations(5), permutations(5))
def test_conjugation_is_a_homomorphism(p, q, g):
    assert (p * q) ^ g == (p ^ g) * (q ^ g)
    assert conj(p, g) == ~g * p * g


@given(permutations(5), permutations(5))
def test_commutator_definition(p, q):
    assert comm(p, q) == ~p * ~q * p * q


@given(st.integers(1, 7).flatmap(permutations))
def test_cycle_notation_round_trip(p):
    assert Permutation.parse(str(p), len(p)) == p
