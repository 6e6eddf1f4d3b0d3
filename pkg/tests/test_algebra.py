"""Closures, commutators and classes against the brute-force oracle."""

import pytest
from hypothesis import given, settings

from lengthlab.algebra import (
    center,
    centralizer,
    commutator_subgroup,
    conjugacy_class_representatives,
    conjugacy_classes,
    derived_series,
    derived_subgroup,
    intersection,
    is_abelian,
    is_nilpotent,
    is_perfect,
    is_soluble,
    lower_central_series,
    normal_closure,
    perfect_residual,
)
from lengthlab.constructions import alternating, cyclic, dihedral, direct_product, symmetric
from lengthlab.errors import InputError
from lengthlab.group import PermGroup
from lengthlab.perm import Permutation
from oracle import Oracle, closure, comm, generate
from strategies import perm_lists


def as_set(H):
    return set(H.element_list())


@given(perm_lists(min_degree=3, max_degree=6))
@settings(max_examples=30)
def test_normal_closure_matches_oracle(data):
    n, gens = data
    G = symmetric(n)
    x = gens[0]
    o = Oracle(G.generators, n)
    assert as_set(normal_closure(G, [x])) == o.normal_closure({tuple(x)})


@given(perm_lists(min_degree=3, max_degree=5, min_size=1, max_size=2),
       perm_lists(min_degree=3, max_degree=5, min_size=1, max_size=2))
@settings(max_examples=30)
def test_commutator_subgroup_matches_brute_force(a, b):
    n = max(a[0], b[0])
    H = PermGroup([g.extended(n) for g in a[1]], n)
    K = PermGroup([g.extended(n) for g in b[1]], n)
    HK = H.join(K)
    got = commutator_subgroup(H.subgroup(H.generators), K)
    brute = generate({comm(h, k) for h in as_set(H) for k in as_set(K)}, n)
    assert as_set(got) == brute
    assert HK.normalizes(got)


@given(perm_lists(min_degree=2, max_degree=6))
@settings(max_examples=30)
def test_solubility_matches_oracle(data):
    n, gens = data
    G = PermGroup(gens, n)
    o = Oracle(G.generators, n)
    assert is_soluble(G) == o.is_soluble(o.G)
    assert is_nilpotent(G) == o.is_nilpotent(o.G)


def test_derived_series_of_s4():
    rec = derived_series(symmetric(4))
    assert rec.orders() == [24, 12, 4, 1]
    assert rec.kind == "derived"
    assert perfect_residual(symmetric(4)).order() == 1


def test_perfect_groups():
    assert is_perfect(alternating(5))
    assert perfect_residual(symmetric(5)).order() == 60
    assert not is_soluble(alternating(5))


def test_lower_central_series():
    assert lower_central_series(dihedral(8)).orders() == [8, 2, 1]
    assert lower_central_series(symmetric(3)).orders() == [6, 3]
    assert is_nilpotent(dihedral(8)) and not is_nilpotent(symmetric(3))


def test_modulo_variants():
    S4 = symmetric(4)
    V = normal_closure(S4, [Permutation.parse("(0 1)(2 3)")])
    assert V.order() == 4
    # S4/V4 is S3: soluble, not nilpotent; A4/V4 is abelian
    assert is_soluble(S4, modulo=V)
    assert not is_nilpotent(S4, modulo=V)
    A4 = alternating(4)
    assert derived_subgroup(A4, modulo=V).order() == 4
    S5 = symmetric(5)
    A5 = derived_subgroup(S5)
    assert is_nilpotent(S5, modulo=A5)
    assert not is_soluble(S5, modulo=S5.subgroup([]))


def test_commutator_subgroup_rejects_mismatched_degrees():
    with pytest.raises(InputError):
        commutator_subgroup(symmetric(3), symmetric(4))


def test_normal_closure_rejects_non_members():
    with pytest.raises(InputError):
        normal_closure(alternating(4), [Permutation.parse("(0 1)", 4)])


@pytest.mark.parametrize("G", [symmetric(4), symmetric(5), dihedral(10), alternating(5),
                               direct_product(symmetric(3), cyclic(4))])
def test_conjugacy_classes_match_oracle(G):
    o = Oracle(G.generators, G.degree)
    got = {frozenset(c) for c in conjugacy_classes(G)}
    assert got == set(o.classes)
    reps = conjugacy_class_representatives(G)
    assert reps[0].is_identity()
    assert len(reps) == len(o.classes)


def test_centralizer_and_center():
    S4 = symmetric(4)
    x = Permutation.parse("(0 1)(2 3)")
    C = centralizer(S4, [x])
    assert as_set(C) == {g for g in closure(S4.generators, 4) if comm(g, x) == tuple(range(4))}
    assert center(S4).order() == 1
    assert center(dihedral(8)).order() == 2
    assert is_abelian(center(direct_product(symmetric(3), cyclic(4))))


def test_intersection():
    S4 = symmetric(4)
    A4 = alternating(4)
    D = S4.subgroup([Permutation.parse("(0 1 2 3)"), Permutation.parse("(0 2)", 4)])
    assert intersection(S4, A4, D).order() == 4
