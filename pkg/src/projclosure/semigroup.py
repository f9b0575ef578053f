"""Affine semigroups in N^d: cones, extremal rays, simpliciality, membership."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Sequence

from . import budget
from .errors import PreconditionError
from .lattice import matrix_rank, solve_rational


class SemigroupError(PreconditionError):
    pass


class NotSimplicialError(SemigroupError):
    pass


class RankError(SemigroupError):
    pass


@dataclass(frozen=True)
class AffineSemigroup:
    """Semigroup generated by ``generators``; ``extremal`` holds generator
    indices on the extremal rays once the semigroup is known to be simplicial."""

    generators: tuple
    extremal: tuple | None = None

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        if not gens:
            raise SemigroupError("at least one generator is required")
        d = len(gens[0])
        if d == 0:
            raise SemigroupError("generators must have positive length")
        for g in gens:
            if len(g) != d:
                raise SemigroupError(f"generator {g} does not have length {d}")
            if any(x < 0 for x in g):
                raise SemigroupError(f"generator {g} has a negative entry")
            if not any(g):
                raise SemigroupError("the zero vector is not allowed as a generator")
        if len(set(gens)) != len(gens):
            raise SemigroupError("generators must be pairwise distinct")
        object.__setattr__(self, "generators", gens)
        if self.extremal is not None:
            object.__setattr__(self, "extremal", tuple(sorted(self.extremal)))

    @classmethod
    def numerical(cls, values: Sequence[int]) -> "AffineSemigroup":
        return cls(tuple((int(v),) for v in values))

    @property
    def dim(self) -> int:
        return len(self.generators[0])

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @property
    def non_extremal(self) -> tuple:
        if self.extremal is None:
            raise NotSimplicialError("extremal rays not determined")
        return tuple(i for i in range(self.ngens) if i not in self.extremal)

    def with_extremal(self, extremal: Sequence[int]) -> "AffineSemigroup":
        return replace(self, extremal=tuple(extremal))

    def degree_of(self, exps: Sequence[int]) -> tuple:
        """The semigroup element sum_i exps[i] * generators[i]."""
        d = self.dim
        out = [0] * d
        for e, g in zip(exps, self.generators):
            if e:
                for k in range(d):
                    out[k] += e * g[k]
        return tuple(out)


def rank(S: AffineSemigroup) -> int:
    return matrix_rank(S.generators)


# ------------------------------------------------------------------ cones


def _primitive(v: Sequence[int]) -> tuple:
    g = 0
    for x in v:
        g = math.gcd(g, x)
    return tuple(x // g for x in v)


def in_cone(v: Sequence[int], rays: Sequence[Sequence[int]]) -> bool:
    """Exact test of v in the rational cone spanned by ``rays``.

    By Caratheodory it suffices to try linearly independent subsets.
    """
    if not any(v):
        return True
    rays = [tuple(r) for r in rays]
    r = matrix_rank(rays) if rays else 0
    for size in range(1, r + 1):
        for sub in itertools.combinations(rays, size):
            if matrix_rank(sub) != size:
                continue
            sol = solve_rational(sub, v)
            if sol is not None and all(x >= 0 for x in sol):
                return True
    return False


def extremal_rays(S: AffineSemigroup) -> tuple:
    """Indices of the generators spanning the extremal rays of cone(S).

    Collinear generators on one extremal ray are represented by the smallest.
    The test works inside the linear span of the generators, so lower
    dimensional cones (such as a projective closure) are handled too.
    """
    dirs: dict = {}
    for i, g in enumerate(S.generators):
        dirs.setdefault(_primitive(g), []).append(i)
    keys = sorted(dirs)
    out = []
    for k in keys:
        others = [o for o in keys if o != k]
        if not in_cone(k, others):
            out.append(min(dirs[k], key=lambda i: sum(S.generators[i])))
    return tuple(sorted(out))


def is_simplicial(S: AffineSemigroup) -> bool:
    rays = extremal_rays(S)
    return len(rays) == rank(S)


def simplicial(S: AffineSemigroup) -> AffineSemigroup:
    """Return S with its extremal indices filled in, or raise."""
    rays = extremal_rays(S)
    r = rank(S)
    if len(rays) != r:
        raise NotSimplicialError(f"cone has {len(rays)} extremal rays but dimension {r}")
    return S.with_extremal(rays)


# ------------------------------------------------------------- membership


class MembershipOracle:
    """Memoised exact membership in the semigroup generated by ``gens``."""

    def __init__(self, gens: Sequence[Sequence[int]]):
        self.gens = tuple(tuple(g) for g in gens)
        self.dim = len(self.gens[0]) if self.gens else 0
        self._memo: dict = {(0,) * self.dim: -1}

    def _witness(self, v: tuple):
        memo = self._memo
        if v in memo:
            return memo[v]
        gens = self.gens
        stack = [v]
        steps = 0
        while stack:
            steps += 1
            if steps & 0xFFF == 0:
                budget.check()
            u = stack[-1]
            if u in memo:
                stack.pop()
                continue
            found = None
            pending = None
            for gi, g in enumerate(gens):
                w = tuple(a - b for a, b in zip(u, g))
                if min(w) < 0:
                    continue
                r = memo.get(w, 0)
                if r == 0 and w not in memo:
                    if pending is None:
                        pending = w
                elif r is not None:
                    found = gi
                    break
            if found is not None:
                memo[u] = found
                stack.pop()
            elif pending is not None:
                stack.append(pending)
            else:
                memo[u] = None
                stack.pop()
        return memo[v]

    def __contains__(self, v) -> bool:
        v = tuple(v)
        if len(v) != self.dim:
            raise SemigroupError(f"vector of length {len(v)} queried in dimension {self.dim}")
        if min(v, default=0) < 0:
            return False
        return self._witness(v) is not None

    def certificate(self, v):
        v = tuple(v)
        if v not in self:
            return None
        coeffs = [0] * len(self.gens)
        while any(v):
            gi = self._witness(v)
            coeffs[gi] += 1
            v = tuple(a - b for a, b in zip(v, self.gens[gi]))
        return tuple(coeffs)


class SimplicialMembership:
    """Membership for a simplicial semigroup with known extremal generators.

    v is written in the basis of extremal generators; v lies in S iff some
    N-combination of the non-extremal generators leaves a remainder with
    coordinates in N.  Every generator has non-negative coordinates, so the
    search only ever shrinks them.  Coordinates are kept as integers over a
    common denominator.
    """

    def __init__(self, S: AffineSemigroup):
        if S.extremal is None:
            raise NotSimplicialError("semigroup is not marked simplicial")
        self.S = S
        self.dim = S.dim
        self._E = [S.generators[i] for i in S.extremal]
        self._inner = S.non_extremal
        self._steps = [tuple(solve_rational(self._E, S.generators[j])) for j in self._inner]
        self._den = math.lcm(1, *(x.denominator for s in self._steps for x in s))
        self._memo: dict = {}

    def _search(self, c: tuple, j: int, den: int, steps: list):
        """Non-extremal multiplicities (from position j on) reaching N^r, or None."""
        key = (den, c, j)
        memo = self._memo
        if key in memo:
            return memo[key]
        if j == len(steps):
            res = () if all(x % den == 0 for x in c) else None
            memo[key] = res
            return res
        budget.check()
        step = steps[j]
        res = None
        k = 0
        cur = c
        while True:
            sub = self._search(cur, j + 1, den, steps)
            if sub is not None:
                res = (k,) + sub
                break
            cur = tuple(a - b for a, b in zip(cur, step))
            if min(cur) < 0:
                break
            k += 1
        memo[key] = res
        return res

    def certificate(self, v):
        v = tuple(v)
        if len(v) != self.dim:
            raise SemigroupError(f"vector of length {len(v)} queried in dimension {self.dim}")
        if min(v) < 0:
            return None
        c = solve_rational(self._E, v)
        if c is None or min(c, default=0) < 0:
            return None
        den = math.lcm(self._den, *(x.denominator for x in c))
        steps = [tuple(int(x * den) for x in s) for s in self._steps]
        mult = self._search(tuple(int(x * den) for x in c), 0, den, steps)
        if mult is None:
            return None
        rest = list(c)
        for step, k in zip(self._steps, mult):
            rest = [a - k * b for a, b in zip(rest, step)]
        coeffs = [0] * self.S.ngens
        for i, x in zip(self.S.extremal, rest):
            coeffs[i] = int(x)
        for j, k in zip(self._inner, mult):
            coeffs[j] = k
        return tuple(coeffs)

    def __contains__(self, v) -> bool:
        return self.certificate(v) is not None


@lru_cache(maxsize=256)
def oracle_for(gens: tuple) -> MembershipOracle:
    return MembershipOracle(gens)


@lru_cache(maxsize=256)
def _oracle(S: AffineSemigroup):
    if S.extremal is not None and len(S.extremal) == rank(S):
        return SimplicialMembership(S)
    return oracle_for(S.generators)


def member(S: AffineSemigroup, v: Sequence[int]):
    """A membership certificate (coefficients per generator) or None."""
    v = tuple(v)
    if len(v) != S.dim:
        raise SemigroupError(f"vector of length {len(v)} queried in dimension {S.dim}")
    return _oracle(S).certificate(v)


def contains(S: AffineSemigroup, v: Sequence[int]) -> bool:
    v = tuple(v)
    if len(v) != S.dim:
        raise SemigroupError(f"vector of length {len(v)} queried in dimension {S.dim}")
    return v in _oracle(S)


def redundant_generators(S: AffineSemigroup) -> tuple:
    """Indices of generators that are N-combinations of the other generators."""
    out = []
    for i, g in enumerate(S.generators):
        others = tuple(h for j, h in enumerate(S.generators) if j != i)
        if g in oracle_for(others):
            out.append(i)
    return tuple(out)
