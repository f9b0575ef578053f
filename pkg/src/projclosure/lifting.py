"""k-liftings of simplicial semigroups and graded Betti numbers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import budget
from .algebra import Polynomial, mono_lcm
from .apery import AperyMembership, apery
from .closure import cm_affine_graded
from .errors import PreconditionError
from .groebner import normal_form, reduced_gb
from .lattice import matrix_rank
from .semigroup import AffineSemigroup, contains, is_simplicial, redundant_generators, simplicial
from .toric import exponent_identity, graded_order, minimalize, toric_ideal


@dataclass(frozen=True)
class LiftedSemigroup:
    base: AffineSemigroup
    k: int
    lifted: AffineSemigroup


def lift(S: AffineSemigroup, k: int) -> LiftedSemigroup:
    """Scale the non-extremal generators by k."""
    if not isinstance(k, int) or k <= 0:
        raise PreconditionError(f"k must be a positive integer, got {k!r}")
    if S.extremal is None:
        S = simplicial(S)
    gens = tuple(g if i in S.extremal else tuple(k * x for x in g)
                 for i, g in enumerate(S.generators))
    return LiftedSemigroup(S, k, AffineSemigroup(gens, S.extremal))


def lift_binomial(B: Polynomial, k: int, extremal) -> Polynomial:
    """Multiply the exponents of the extremal variables by k.

    ``extremal`` is a collection of variable indices, or an int d standing
    for the first d variables.
    """
    if not B.is_binomial():
        raise PreconditionError("lift_binomial expects a pure binomial")
    if isinstance(extremal, int):
        extremal = range(extremal)
    ext = set(extremal)
    terms = {}
    for m, c in B:
        terms[tuple(k * e if i in ext else e for i, e in enumerate(m))] = c
    return Polynomial(B.nvars, terms)


@dataclass(frozen=True)
class LiftReport:
    k: int
    base_generators: tuple
    lifted_generators: tuple
    mu_base: int
    mu_lifted: int
    lifted_binomials: tuple
    lifted_binomials_in_ideal: bool
    lifted_binomials_generate: bool
    lifted_set_minimal: bool
    cm_base: bool
    cm_lifted: bool
    apery_base: tuple | None = None
    apery_lifted: tuple | None = None
    warnings: tuple = field(default_factory=tuple)

    @property
    def mu_equal(self) -> bool:
        return self.mu_base == self.mu_lifted

    @property
    def apery_size_equal(self) -> bool | None:
        if self.apery_base is None:
            return None
        return len(self.apery_base) == len(self.apery_lifted)

    @property
    def apery_scaled(self) -> bool | None:
        if self.apery_base is None:
            return None
        scaled = {tuple(self.k * x for x in b) for b in self.apery_base}
        return scaled == set(self.apery_lifted)


def verify_lift(S: AffineSemigroup, k: int) -> LiftReport:
    L = lift(S, k)
    S, Sk = L.base, L.lifted
    notes = []
    mg, mu = minimalize(toric_ideal(S))
    Ik = toric_ideal(Sk)
    mgk, muk = minimalize(Ik)
    Gk = reduced_gb(Ik.generators, graded_order(Sk, Sk.extremal))
    lifted = tuple(lift_binomial(b, k, S.extremal) for b in mg)
    in_ideal = all(exponent_identity(b, Sk.generators) and normal_form(b, Gk).is_zero()
                   for b in lifted)
    if lifted:
        Gl = reduced_gb(lifted, graded_order(Sk, Sk.extremal))
        generate = all(normal_form(b, Gl).is_zero() for b in mgk)
    else:
        generate = not mgk
    minimal = not redundant_generators(Sk)
    if not minimal:
        notes.append("the lifted generators do not minimally generate the lifted semigroup")
    cm0 = cm_affine_graded(S)
    cm1 = cm_affine_graded(Sk)
    ap0 = ap1 = None
    if cm0:
        ap0 = apery(S).elements
        ap1 = apery(Sk).elements
    return LiftReport(k, S.generators, Sk.generators, mu, muk, lifted, in_ideal, generate,
                      minimal, cm0, cm1, ap0, ap1, tuple(notes))


# ------------------------------------------------------------------- Betti


@dataclass(frozen=True)
class BettiTable:
    entries: tuple  # ((i, degree), rank) with rank > 0, sorted
    bound: int | None

    @property
    def totals(self) -> tuple:
        top = max((i for (i, _), _ in self.entries), default=0)
        out = [0] * (top + 1)
        for (i, _), r in self.entries:
            out[i] += r
        return tuple(out)

    def get(self, i: int, degree) -> int:
        return dict(self.entries).get((i, tuple(degree)), 0)


def _faces(S: AffineSemigroup, b: tuple, oracle) -> list:
    n = S.ngens
    faces = [()]
    # grow faces by size; a face can only extend a face
    layer = [()]
    while layer:
        nxt = []
        for F in layer:
            start = F[-1] + 1 if F else 0
            for j in range(start, n):
                G = F + (j,)
                rest = list(b)
                for i in G:
                    rest = [x - y for x, y in zip(rest, S.generators[i])]
                if min(rest) >= 0 and tuple(rest) in oracle:
                    nxt.append(G)
        faces.extend(nxt)
        layer = nxt
    return faces


def _reduced_homology(faces: list) -> dict:
    """{q: dim H~_q} for the complex given by its full face list."""
    by_dim: dict = {}
    for F in faces:
        by_dim.setdefault(len(F) - 1, []).append(F)
    verts = {v for F in faces for v in F}
    faceset = set(faces)
    # a cone point makes the complex acyclic
    for v in verts:
        if all(tuple(sorted(set(F) | {v})) in faceset for F in faces):
            return {}
    top = max(by_dim)
    ranks = {}
    for q in range(0, top + 1):
        rows = {F: r for r, F in enumerate(by_dim.get(q - 1, []))}
        mat = []
        for F in by_dim.get(q, []):
            col = [0] * len(rows)
            for pos in range(len(F)):
                col[rows[F[:pos] + F[pos + 1:]]] = -1 if pos % 2 else 1
            mat.append(col)
        ranks[q] = matrix_rank(mat) if mat and rows else 0
    out = {}
    for q in range(-1, top + 1):
        dim_c = len(by_dim.get(q, []))
        h = dim_c - ranks.get(q, 0) - ranks.get(q + 1, 0)
        if h:
            out[q] = h
    return out


def _prepared(S: AffineSemigroup) -> AffineSemigroup:
    """Mark the extremal rays when S is simplicial; Betti numbers need no more."""
    if S.extremal is None and is_simplicial(S):
        return simplicial(S)
    return S


class _Contains:
    def __init__(self, S: AffineSemigroup):
        self.S = S

    def __contains__(self, v) -> bool:
        return contains(self.S, v)


def betti_degrees(S: AffineSemigroup) -> set:
    """Semigroup degrees that can carry Betti numbers.

    These are the degrees of lcms of subsets of G(in I), since the graded
    Betti numbers of the initial ideal bound those of I and the Taylor
    resolution of in(I) lives in those multidegrees.
    """
    S = _prepared(S)
    I = toric_ideal(S)
    zero = (0,) * S.dim
    if not I.generators:
        return {zero}
    lms = reduced_gb(I.generators, graded_order(S, S.extremal or ())).leading_monomials()
    lcms = set(lms)
    frontier = set(lms)
    while frontier:
        budget.check()
        nxt = set()
        for a in frontier:
            for m in lms:
                c = mono_lcm(a, m)
                if c not in lcms:
                    nxt.add(c)
        lcms |= nxt
        frontier = nxt
    return {zero} | {S.degree_of(m) for m in lcms}


def _min_summands(S: AffineSemigroup, b: tuple, memo: dict) -> int | None:
    """Fewest generators summing to b (None when b is not in S)."""
    if b in memo:
        return memo[b]
    stack = [b]
    while stack:
        v = stack[-1]
        if v in memo:
            stack.pop()
            continue
        if not any(v):
            memo[v] = 0
            stack.pop()
            continue
        best = None
        pending = None
        for g in S.generators:
            w = tuple(x - y for x, y in zip(v, g))
            if min(w) < 0:
                continue
            if w not in memo:
                pending = w
                break
            if memo[w] is not None and (best is None or memo[w] + 1 < best):
                best = memo[w] + 1
        if pending is not None:
            stack.append(pending)
        else:
            memo[v] = best
            stack.pop()
    return memo[b]


def betti_numbers(S: AffineSemigroup, degree_bound: int | None = None) -> BettiTable:
    """beta_{i,b}(K[S]) = dim H~_{i-1}(Delta_b) over the candidate degrees.

    With ``degree_bound`` only degrees that are sums of at most that many
    generators are examined; without it the table is complete.
    """
    if degree_bound is not None and degree_bound < 1:
        raise PreconditionError("degree bound must be at least 1")
    S = _prepared(S)
    entries = []
    memo: dict = {}
    if S.extremal is not None and len(S.extremal) == S.dim:
        oracle = AperyMembership(S)
    else:
        oracle = _Contains(S)
    for b in sorted(betti_degrees(S)):
        budget.check()
        if degree_bound is not None and _min_summands(S, b, memo) > degree_bound:
            continue
        for q, h in _reduced_homology(_faces(S, b, oracle)).items():
            entries.append(((q + 1, b), h))
    return BettiTable(tuple(sorted(entries)), degree_bound)
