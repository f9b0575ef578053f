"""Projective closure of a simplicial affine semigroup and the CM criteria."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import MonomialOrder, Polynomial
from .apery import AperySet, apery_from_standard, maximal_elements
from .errors import EngineConsistencyError, PreconditionError
from .groebner import GroebnerBasis, initial_ideal_min_gens, reduced_gb, standard_monomials_block
from .semigroup import AffineSemigroup, extremal_rays, simplicial
from .toric import graded_order, ranking_with_least, toric_ideal


class DominationError(PreconditionError):
    pass


@dataclass(frozen=True)
class ProjectiveClosure:
    """S^h generated by (M, 0) and (M - m_i, m_i).

    Index 0 of ``gamma_h`` is the homogenizing variable z0 and index i + 1
    corresponds to generator i of the base.  ``parameters`` are the base
    variables that, together with z0, give the extremal rays of S^h.
    """

    base: AffineSemigroup
    homogenizer: tuple
    homogenizer_index: int | None
    parameters: tuple
    gamma_h: AffineSemigroup
    extremal_as_designated: bool
    warnings: tuple = ()

    @property
    def homogenizing_variable(self) -> int:
        return 0


def parameter_indices(S: AffineSemigroup) -> tuple:
    """Base variables used as parameters next to z0.

    For d >= 2 these are the extremal generators.  For a numerical semigroup
    the closure's extremal rays are (n_max, 0) and (0, n_max), so the largest
    generator plays that role.
    """
    if S.extremal is None:
        S = simplicial(S)
    if S.dim == 1:
        return (max(range(S.ngens), key=lambda i: S.generators[i][0]),)
    return S.extremal


def _dominates(M: Sequence[int], S: AffineSemigroup) -> bool:
    return all(all(a >= b for a, b in zip(M, g)) for g in S.generators)


def resolve_homogenizer(S: AffineSemigroup, homogenizer=None):
    """Turn a homogenizer choice into (vector, generator index or None, warnings).

    ``None`` means the last generator, an int picks a generator, ``"max"``
    takes the componentwise maximum, ``"auto"`` prefers the last generator
    and falls back to the maximum.  A sequence is used as the vector itself.
    """
    notes = []
    n = S.ngens
    if homogenizer is None:
        homogenizer = n - 1
    if homogenizer == "auto":
        if _dominates(S.generators[-1], S):
            homogenizer = n - 1
        else:
            homogenizer = "max"
            notes.append("last generator does not dominate the others componentwise; "
                         "homogenizing with the componentwise maximum instead")
    if homogenizer == "max":
        M = tuple(max(g[k] for g in S.generators) for k in range(S.dim))
        idx = S.generators.index(M) if M in S.generators else None
    elif isinstance(homogenizer, int):
        if not -n <= homogenizer < n:
            raise PreconditionError(f"homogenizer index {homogenizer} out of range")
        idx = homogenizer % n
        M = S.generators[idx]
    else:
        M = tuple(int(x) for x in homogenizer)
        if len(M) != S.dim:
            raise PreconditionError("homogenizer vector has the wrong length")
        idx = S.generators.index(M) if M in S.generators else None
    if not _dominates(M, S):
        bad = [g for g in S.generators if any(a < b for a, b in zip(M, g))]
        raise DominationError(f"homogenizer {M} does not dominate {bad[0]} componentwise")
    return M, idx, tuple(notes)


def build_gamma_h(S: AffineSemigroup, homogenizer=None) -> ProjectiveClosure:
    if S.extremal is None:
        S = simplicial(S)
    M, idx, notes = resolve_homogenizer(S, homogenizer)
    params = parameter_indices(S)
    gens = [tuple(M) + (0,) * S.dim]
    for g in S.generators:
        gens.append(tuple(a - b for a, b in zip(M, g)) + tuple(g))
    designated = (0,) + tuple(p + 1 for p in params)
    gh = AffineSemigroup(tuple(gens), designated)
    actual = extremal_rays(AffineSemigroup(tuple(gens)))
    ok = tuple(sorted(designated)) == actual
    if not ok:
        notes = notes + (f"extremal rays of the closure are generators {actual}, "
                         f"not the designated {tuple(sorted(designated))}",)
    return ProjectiveClosure(S, tuple(M), idx, params, gh, ok, notes)


def homogenize(f: Polynomial, z0: int = 0) -> Polynomial:
    """f^h in one more variable, inserted at position ``z0``."""
    if f.is_zero():
        raise PreconditionError("cannot homogenize the zero polynomial")
    deg = f.total_degree()
    terms = {}
    for m, c in f:
        e = deg - sum(m)
        terms[m[:z0] + (e,) + m[z0:]] = c
    return Polynomial(f.nvars + 1, terms)


def affine_order(S: AffineSemigroup, params: Sequence[int] | None = None) -> MonomialOrder:
    """Degrevlex with the parameter variables least (first one the very least)."""
    if params is None:
        params = parameter_indices(S)
    return MonomialOrder.degrevlex(S.ngens, ranking_with_least(S.ngens, params))


def projective_order(S: AffineSemigroup, params: Sequence[int] | None = None) -> MonomialOrder:
    """The affine order on z1..zn with z0 (index 0) appended as least."""
    aff = affine_order(S, params)
    return MonomialOrder.degrevlex(S.ngens + 1, tuple(i + 1 for i in aff.ranking) + (0,))


def _first_divisible(monos: Sequence[tuple], variables: Sequence[int]):
    for m in monos:
        for v in variables:
            if m[v] > 0:
                return m, v
    return None


def ideal_of_gamma_h(P: ProjectiveClosure, affine_basis: GroebnerBasis | None = None,
                     cross_check: bool = True) -> GroebnerBasis:
    """Reduced basis of I(S^h) under the projective order.

    Route one homogenizes the affine reduced basis; route two computes the
    toric ideal of S^h from scratch.  Both must give the same basis.
    """
    S = P.base
    porder = projective_order(S, P.parameters)
    if affine_basis is None:
        affine_basis = reduced_gb(toric_ideal(S).generators, affine_order(S, P.parameters))
    Gh = reduced_gb([homogenize(g) for g in affine_basis.elements], porder)
    if cross_check:
        direct = reduced_gb(toric_ideal(P.gamma_h).generators, porder)
        if direct.elements != Gh.elements:
            raise EngineConsistencyError("homogenized basis differs from the toric ideal of the closure")
    return Gh


@dataclass(frozen=True)
class CMReport:
    cm_affine: bool | None
    cm_projective: bool
    witness: dict | None
    gin_affine: tuple
    gin_projective: tuple
    affine_basis: GroebnerBasis
    projective_basis: GroebnerBasis
    closure: ProjectiveClosure | None
    apery_gamma_h: AperySet | None = None
    cm_type: int | None = None
    cm_affine_graded: bool | None = None
    warnings: tuple = field(default_factory=tuple)


def cm_affine_graded(S: AffineSemigroup) -> bool:
    """CM test for K[S] with the S-graded revlex order, extremal variables least.

    For this order the extremal variables form a regular sequence on the
    initial ideal exactly when K[S] is Cohen-Macaulay.
    """
    if S.extremal is None:
        S = simplicial(S)
    G = reduced_gb(toric_ideal(S).generators, graded_order(S, S.extremal))
    return _first_divisible(G.leading_monomials(), S.extremal) is None


def _apery_h(P: ProjectiveClosure, affine_basis: GroebnerBasis) -> AperySet:
    S = P.base
    block = [i for i in range(S.ngens) if i not in P.parameters]
    base_elems = apery_from_standard(S, affine_basis, block)
    # a standard exponent alpha maps to sum alpha_i (M - m_i, m_i)
    std = standard_monomials_block(affine_basis, block)
    elems = tuple(sorted({P.gamma_h.degree_of((0,) + m) for m in std}))
    if len(elems) != len(base_elems):
        raise EngineConsistencyError("closure Apery set and base Apery set differ in size")
    return AperySet(elems, maximal_elements(P.gamma_h, elems))


def is_cohen_macaulay(S: AffineSemigroup, homogenizer="auto", cross_check: bool = True) -> CMReport:
    if S.extremal is None:
        S = simplicial(S)
    notes = []
    params = parameter_indices(S)
    aorder = affine_order(S, params)
    porder = projective_order(S, params)
    G_aff = reduced_gb(toric_ideal(S).generators, aorder)
    gin_aff = initial_ideal_min_gens(G_aff)
    G_proj = reduced_gb([homogenize(g) for g in G_aff.elements], porder)
    gin_proj = initial_ideal_min_gens(G_proj)
    if {(0,) + m for m in gin_aff} != set(gin_proj):
        raise EngineConsistencyError("initial generators of I(S) and I(S^h) differ")

    closure = build_gamma_h(S, homogenizer)
    notes.extend(closure.warnings)
    if cross_check:
        ideal_of_gamma_h(closure, G_aff, cross_check=True)

    proj_vars = (0,) + tuple(p + 1 for p in params)
    hit = _first_divisible(gin_proj, proj_vars)
    cm_proj = hit is None
    witness = None
    if hit is not None:
        witness = {"monomial": hit[0], "variable": hit[1]}
    if S.dim == 1:
        cm_aff = None
        graded = None
    else:
        hit_a = _first_divisible(gin_aff, params)
        cm_aff = hit_a is None
        if cm_aff != cm_proj:
            raise EngineConsistencyError("affine and projective criteria disagree")
        graded = cm_affine_graded(S)
    ap = cm_type = None
    if cm_proj:
        ap = _apery_h(closure, G_aff)
        cm_type = len(ap.maximal_elements)
    return CMReport(cm_aff, cm_proj, witness, gin_aff, gin_proj, G_aff, G_proj, closure,
                    ap, cm_type, graded, tuple(notes))


def apery_gamma_h(P: ProjectiveClosure) -> AperySet:
    S = P.base
    G_aff = reduced_gb(toric_ideal(S).generators, affine_order(S, P.parameters))
    lms = G_aff.leading_monomials()
    # the affine criterion with z0 added is equivalent to CM of the closure
    if _first_divisible(lms, P.parameters) is not None:
        raise PreconditionError("the projective closure is not Cohen-Macaulay")
    return _apery_h(P, G_aff)


def cm_type_projective(P: ProjectiveClosure) -> int:
    return len(apery_gamma_h(P).maximal_elements)

