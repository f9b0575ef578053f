"""Buchsbaum test for projective monomial curves via the semigroup T*."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from . import budget
from .algebra import MonomialOrder
from .closure import is_cohen_macaulay
from .errors import PreconditionError
from .groebner import GroebnerBasis, reduced_gb
from .semigroup import AffineSemigroup, MembershipOracle, redundant_generators
from .toric import toric_ideal

E_NOTE = ("translates are e_i = (n_r - n_i, n_i), the generators of T; "
          "T* is the intersection over all i = 0..r")


class BoundError(RuntimeError):
    pass


@dataclass(frozen=True)
class CurveData:
    exponents: tuple

    def __post_init__(self):
        ex = tuple(int(x) for x in self.exponents)
        if not ex:
            raise PreconditionError("at least one exponent is required")
        if ex[0] <= 0 or any(a >= b for a, b in zip(ex, ex[1:])):
            raise PreconditionError("exponents must be strictly increasing positive integers")
        object.__setattr__(self, "exponents", ex)

    @property
    def n_r(self) -> int:
        return self.exponents[-1]

    @property
    def t_generators(self) -> tuple:
        n = self.n_r
        return tuple((n - x, x) for x in (0,) + self.exponents)

    @cached_property
    def _parts(self) -> list:
        return [0]

    def min_parts(self, b: int):
        """Fewest summands from the exponents adding up to b (None if impossible)."""
        table = self._parts
        inf = None
        while len(table) <= b:
            t = len(table)
            best = inf
            for x in self.exponents:
                if x <= t and table[t - x] is not None:
                    c = table[t - x] + 1
                    if best is None or c < best:
                        best = c
            table.append(best)
        return table[b]


def member_T(C: CurveData, p: Sequence[int]) -> bool:
    a, b = int(p[0]), int(p[1])
    if a < 0 or b < 0:
        return False
    if (a + b) % C.n_r:
        return False
    parts = C.min_parts(b)
    return parts is not None and parts <= (a + b) // C.n_r


def in_t_star(C: CurveData, p: Sequence[int]) -> bool:
    a, b = p
    return all(member_T(C, (a + e0, b + e1)) for e0, e1 in C.t_generators)


@dataclass(frozen=True)
class TStar:
    generators: tuple  # (n_r, 0), interior by decreasing first coordinate, (0, n_r)
    box: int

    @property
    def s(self) -> int:
        return len(self.generators) - 2

    def semigroup(self) -> AffineSemigroup:
        return AffineSemigroup(self.generators, (0, len(self.generators) - 1))


def _enumerate(C: CurveData, B: int) -> list:
    n = C.n_r
    out = []
    for total in range(0, 2 * B + 1, n):
        budget.check()
        for a in range(max(0, total - B), min(total, B) + 1):
            p = (a, total - a)
            if in_t_star(C, p):
                out.append(p)
    return out


def _minimal(elements: list) -> list:
    present = set(elements)
    nonzero = [p for p in elements if p != (0, 0)]
    out = []
    for p in nonzero:
        decomposable = False
        for q in nonzero:
            if q[0] <= p[0] and q[1] <= p[1] and q != p:
                r = (p[0] - q[0], p[1] - q[1])
                if r in present and r != (0, 0):
                    decomposable = True
                    break
        if not decomposable:
            out.append(p)
    return out


def t_star(C: CurveData, max_doublings: int = 3) -> TStar:
    """Minimal generators of T* = {x : x + e_i in T for all i}.

    Candidates are the indecomposable elements in the box [0, B]^2; they are
    accepted once they generate every T* element of the box [0, 2B]^2.
    """
    n = C.n_r
    B = n * n + 2 * n
    for _ in range(max_doublings + 1):
        cands = _minimal(_enumerate(C, B))
        oracle = MembershipOracle(cands)
        if all(p in oracle for p in _enumerate(C, 2 * B)):
            interior = sorted((p for p in cands if p[0] and p[1]), key=lambda p: -p[0])
            gens = ((n, 0),) + tuple(interior) + ((0, n),)
            if set(gens) != set(cands):
                raise BoundError("axis generators of T* are not (n_r, 0) and (0, n_r)")
            return TStar(gens, B)
        B *= 2
    raise BoundError(f"generators of T* not verified within box {B}")


@dataclass(frozen=True)
class BuchsbaumReport:
    exponents: tuple
    cm: bool
    buchsbaum: bool | None
    t_star: TStar | None
    basis: GroebnerBasis | None
    leading_monomials: tuple
    witness: dict | None
    notes: tuple = field(default_factory=tuple)
    warnings: tuple = field(default_factory=tuple)


def t_star_order(T: TStar) -> MonomialOrder:
    """Revlex with x1 > ... > xs > x_{s+1} > x0 (x0 = index 0), graded by T*.

    A generator (a, b) has degree (a + b) / n_r.  When every generator lies
    on a + b = n_r this is plain degrevlex; otherwise the grading keeps the
    regular-sequence test on x0, x_{s+1} valid.
    """
    n = len(T.generators)
    n_r = T.generators[0][0]
    weights = tuple(sum(g) // n_r for g in T.generators)
    ranking = tuple(range(1, n)) + (0,)
    if all(w == 1 for w in weights):
        return MonomialOrder.degrevlex(n, ranking)
    return MonomialOrder(ranking, weights)


def is_buchsbaum(C: CurveData) -> BuchsbaumReport:
    if not isinstance(C, CurveData):
        C = CurveData(tuple(C))
    S = AffineSemigroup.numerical(C.exponents)
    warns = []
    red = redundant_generators(S)
    if red:
        warns.append("exponents do not minimally generate the numerical semigroup: "
                     + ", ".join(str(C.exponents[i]) for i in red) + " redundant")
    cm = is_cohen_macaulay(S).cm_projective
    if cm:
        return BuchsbaumReport(C.exponents, True, None, None, None, (), None,
                               ("closure is Cohen-Macaulay; the T* criterion does not apply",),
                               tuple(warns))
    T = t_star(C)
    order = t_star_order(T)
    G = reduced_gb(toric_ideal(T.semigroup()).generators, order)
    lms = G.leading_monomials()
    last = len(T.generators) - 1
    witness = None
    for m in lms:
        for v in (0, last):
            if m[v]:
                witness = {"monomial": m, "variable": v}
                break
        if witness:
            break
    return BuchsbaumReport(C.exponents, False, witness is None, T, G, lms, witness,
                           (E_NOTE,), tuple(warns))
