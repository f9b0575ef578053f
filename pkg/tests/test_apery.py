import itertools
import math
import random

import pytest
import sympy

from projclosure.apery import AperyMembership, apery, apery_direct, in_apery, quasi_frobenius
from projclosure.closure import cm_affine_graded
from projclosure.errors import PreconditionError
from projclosure.semigroup import AffineSemigroup, contains, simplicial
from corpus import full_corpus, numerical_corpus, simplicial_corpus
from oracles import numerical_apery, numerical_members


def lattice_index(S):
    """[Z S : Z E] from determinants (S of full rank)."""
    d = S.dim
    E = sympy.Matrix([S.generators[i] for i in S.extremal])
    g = 0
    for rows in itertools.combinations(S.generators, d):
        g = math.gcd(g, int(sympy.Matrix(rows).det()))
    return abs(int(E.det())) // g


def pseudo_frobenius(gens):
    limit = max(gens) ** 2 + 2 * max(gens)
    ok = numerical_members(gens, limit + max(gens))
    nonzero = [x for x in range(1, limit) if ok[x]]
    return sorted(x for x in range(limit) if not ok[x] and all(ok[x + s] for s in nonzero if x + s <= limit))


def test_example_345():
    S = simplicial(AffineSemigroup.numerical([3, 4, 5]))
    ap = apery(S)
    assert ap.elements == ((0,), (4,), (5,))
    assert ap.maximal_elements == ((4,), (5,))
    assert quasi_frobenius(S, ap) == (((1,), (2,)), 2)


def test_free_semigroup():
    S = simplicial(AffineSemigroup(((2, 0), (0, 2), (1, 1))))
    assert len(apery(S)) == 2
    F = simplicial(AffineSemigroup(((1, 0), (0, 1))))
    assert apery(F).elements == ((0, 0),)


def test_requires_simplicial_marker():
    with pytest.raises(PreconditionError):
        apery(AffineSemigroup.numerical([3, 4]))


def test_matches_enumeration_on_corpus():
    for S in full_corpus():
        assert apery(S).elements == apery_direct(S)


def test_numerical_against_residue_scan():
    for S in numerical_corpus() + [simplicial(AffineSemigroup.numerical(g)) for g in ([3, 5, 7], [5, 7, 11], [6, 7, 8, 9])]:
        gens = [g[0] for g in S.generators]
        m = S.generators[S.extremal[0]][0]
        assert m == min(gens)
        assert [a[0] for a in apery(S).elements] == numerical_apery(gens, m)
        qf, t = quasi_frobenius(S)
        assert [q[0] for q in qf] == pseudo_frobenius(gens)


def test_size_equals_index_iff_cm():
    for S in simplicial_corpus():
        n = len(apery(S))
        idx = lattice_index(S)
        assert n >= idx
        assert (n == idx) == cm_affine_graded(S)


def test_in_apery():
    S = simplicial(AffineSemigroup.numerical([3, 4, 5]))
    assert in_apery(S, (5,)) and not in_apery(S, (8,)) and not in_apery(S, (2,))


def test_apery_membership_matches_search():
    rng = random.Random(3)
    for S in full_corpus()[:20]:
        oracle = AperyMembership(S)
        for _ in range(30):
            v = tuple(rng.randint(0, 25) for _ in range(S.dim))
            assert (v in oracle) == contains(S, v)
