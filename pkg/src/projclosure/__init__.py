"""Toric ideals, projective closures and Cohen-Macaulay tests for simplicial
affine semigroups, with exact arithmetic throughout."""

from .algebra import MonomialOrder, Polynomial
from .apery import AperyMembership, AperySet, apery, apery_direct, quasi_frobenius
from .buchsbaum import CurveData, TStar, is_buchsbaum, member_T, t_star
from .closure import (
    CMReport,
    DominationError,
    ProjectiveClosure,
    apery_gamma_h,
    build_gamma_h,
    cm_type_projective,
    homogenize,
    ideal_of_gamma_h,
    is_cohen_macaulay,
)
from .errors import EngineConsistencyError, ParseError, PreconditionError
from .groebner import GroebnerBasis, initial_ideal_min_gens, normal_form, reduced_gb, standard_monomials_block
from .kernels import BACKEND
from .lattice import lattice_kernel
from .lifting import BettiTable, LiftedSemigroup, betti_numbers, lift, lift_binomial, verify_lift
from .semigroup import AffineSemigroup, NotSimplicialError, extremal_rays, is_simplicial, member, simplicial
from .toric import BinomialIdeal, minimalize, toric_ideal

__version__ = "0.1.0"
