import pytest

from projclosure.algebra import MonomialOrder, Polynomial
from projclosure.groebner import normal_form, reduced_gb
from projclosure.semigroup import AffineSemigroup, simplicial
from projclosure.toric import (
    BinomialIdeal,
    GradingError,
    exponent_identity,
    graded_order,
    ideal_contains,
    minimalize,
    ranking_with_least,
    saturate,
    toric_ideal,
)
from corpus import full_corpus
from oracles import betti_by_syzygies, brute_relations


def _gb(S):
    return reduced_gb(toric_ideal(S).generators, graded_order(S))


def test_relations_up_to_degree_six_lie_in_ideal():
    for S in full_corpus():
        I = toric_ideal(S)
        G = _gb(S)
        for f in I.generators:
            assert exponent_identity(f, S.generators)
        maxdeg = 6 if S.ngens <= 5 else 5
        for a, b in brute_relations(S.generators, maxdeg):
            assert normal_form(Polynomial.binomial(a, b), G).is_zero(), (S.generators, a, b)


def test_non_relation_not_in_ideal():
    S = AffineSemigroup.numerical([3, 4, 5])
    I = toric_ideal(S)
    assert not ideal_contains(I, Polynomial.binomial((1, 0, 0), (0, 1, 0)))
    assert ideal_contains(I, Polynomial.binomial((0, 2, 0), (1, 0, 1)))


def test_saturation_is_idempotent():
    for S in full_corpus()[:12]:
        I = toric_ideal(S)
        for var in range(S.ngens):
            again = saturate(I.generators, S, var)
            assert list(again) == list(reduced_gb(I.generators, graded_order(S, (var,))))


def test_ranking_with_least():
    assert ranking_with_least(4, (0, 3)) == (2, 1, 3, 0)
    assert ranking_with_least(3, ()) == (2, 1, 0)


@pytest.mark.parametrize("gens, mu", [
    ([3, 4, 5], 3),
    ([3, 5, 7], 3),
    ([4, 5, 6], 2),
    ([2, 3], 1),
    ([5, 6, 7, 8, 9], 10),
])
def test_mu_numerical(gens, mu):
    _, m = minimalize(toric_ideal(AffineSemigroup.numerical(gens)))
    assert m == mu
    # first syzygy count from an independent resolution
    top = 3 * max(gens) + 10
    betti = betti_by_syzygies(gens, top, max_index=1)
    assert sum(betti.get(1, {}).values()) == mu


def test_mu_t_star_and_free():
    T = AffineSemigroup(((4, 0), (3, 1), (2, 2), (1, 3), (0, 4)))
    assert minimalize(toric_ideal(T))[1] == 6
    free = AffineSemigroup(((1, 0), (0, 1)))
    assert toric_ideal(free).is_zero()
    assert minimalize(toric_ideal(free)) == ((), 0)


def test_minimal_generators_generate():
    for S in full_corpus()[:15]:
        I = toric_ideal(S)
        mg, mu = minimalize(I)
        G = reduced_gb(mg, graded_order(S)) if mg else None
        for f in I.generators:
            assert normal_form(f, G).is_zero()


def test_minimalize_rejects_inhomogeneous():
    I = BinomialIdeal(2, (Polynomial.binomial((1, 0), (0, 2)),), ((1,), (1,)))
    with pytest.raises(GradingError):
        minimalize(I)


def test_generator_order_does_not_change_ideal():
    S = simplicial(AffineSemigroup(((4, 0), (3, 1), (1, 3), (0, 4))))
    T = AffineSemigroup(tuple(reversed(S.generators)))
    perm = [S.generators.index(g) for g in T.generators]
    order = MonomialOrder.degrevlex(4)
    GS = reduced_gb(toric_ideal(S).generators, order)
    for f in toric_ideal(T).generators:
        g = Polynomial(4, {tuple(m[perm.index(i)] for i in range(4)): c for m, c in f})
        assert normal_form(g, GS).is_zero()
