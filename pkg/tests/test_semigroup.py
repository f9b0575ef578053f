import random

import pytest

from projclosure.semigroup import (
    AffineSemigroup,
    NotSimplicialError,
    SemigroupError,
    contains,
    extremal_rays,
    in_cone,
    is_simplicial,
    member,
    rank,
    redundant_generators,
    simplicial,
)
from corpus import full_corpus, simplicial_corpus
from oracles import naive_member


def test_extremal_examples():
    assert extremal_rays(AffineSemigroup(((2, 0), (1, 1), (1, 2)))) == (0, 2)
    assert extremal_rays(AffineSemigroup(((3,), (4,), (5,)))) == (0,)
    S = AffineSemigroup(((4, 0), (3, 1), (1, 3), (0, 4)))
    assert extremal_rays(S) == (0, 3)
    assert simplicial(S).extremal == (0, 3)


def test_parallel_generators_pick_one_per_ray():
    S = AffineSemigroup(((2, 0), (3, 0), (0, 1)))
    rays = extremal_rays(S)
    assert len(rays) == 2 and 2 in rays


def test_square_cone_not_simplicial():
    S = AffineSemigroup(((1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1)))
    assert rank(S) == 3
    assert len(extremal_rays(S)) == 4
    assert not is_simplicial(S)
    with pytest.raises(NotSimplicialError):
        simplicial(S)


def test_rank_deficient_plane_in_r3():
    S = AffineSemigroup(((1, 0, 1), (0, 1, 1), (1, 1, 2)))
    assert rank(S) == 2
    assert is_simplicial(S)


@pytest.mark.parametrize("bad", [(), ((1, 2), (3,)), ((1, -1),), ((0, 0), (1, 0)), ((1, 0), (1, 0))])
def test_invalid_generators(bad):
    with pytest.raises(SemigroupError):
        AffineSemigroup(bad)


def test_in_cone():
    assert in_cone((1, 1), [(1, 0), (0, 1)])
    assert not in_cone((1, -1), [(1, 0), (0, 1)])
    assert in_cone((2, 3), [(1, 2), (2, 1)])
    assert not in_cone((1, 3), [(1, 2), (2, 1)])


def test_membership_against_naive_search():
    rng = random.Random(5)
    for S in simplicial_corpus()[:10]:
        for _ in range(25):
            v = tuple(rng.randint(0, 14) for _ in range(S.dim))
            assert contains(S, v) == naive_member(S.generators, v)
            cert = member(S, v)
            if cert is not None:
                total = [0] * S.dim
                for c, g in zip(cert, S.generators):
                    for k in range(S.dim):
                        total[k] += c * g[k]
                assert tuple(total) == v


def test_membership_numerical():
    S = AffineSemigroup.numerical([3, 5, 7])
    assert [x for x in range(12) if contains(S, (x,))] == [0, 3, 5, 6, 7, 8, 9, 10, 11]


def test_membership_wrong_length():
    with pytest.raises(SemigroupError):
        contains(AffineSemigroup.numerical([2, 3]), (1, 2))


def test_permutation_invariance():
    rng = random.Random(11)
    for S in full_corpus()[:12]:
        gens = list(S.generators)
        rng.shuffle(gens)
        T = AffineSemigroup(tuple(gens))
        assert rank(T) == rank(S)
        assert {T.generators[i] for i in extremal_rays(T)} == {S.generators[i] for i in S.extremal}
        for _ in range(10):
            v = tuple(rng.randint(0, 12) for _ in range(S.dim))
            assert contains(S, v) == contains(T, v)


def test_redundant_generators():
    assert redundant_generators(AffineSemigroup.numerical([3, 4, 5, 7])) == (3,)
    assert redundant_generators(AffineSemigroup.numerical([3, 4, 5])) == ()
