"""Apery sets with respect to the extremal rays, quasi-Frobenius elements, type."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import EngineConsistencyError
from .groebner import INFINITE, reduced_gb, standard_monomials_block
from .semigroup import AffineSemigroup, NotSimplicialError, contains, oracle_for


@dataclass(frozen=True)
class AperySet:
    elements: tuple
    maximal_elements: tuple

    def __len__(self) -> int:
        return len(self.elements)


def _require_simplicial(S: AffineSemigroup) -> None:
    if S.extremal is None:
        raise NotSimplicialError("semigroup is not marked simplicial")


def maximal_elements(S: AffineSemigroup, elements: Sequence[tuple]) -> tuple:
    """Elements b with no other c in ``elements`` such that c - b lies in S."""
    oracle = oracle_for(S.generators)
    out = []
    for b in elements:
        dominated = False
        for c in elements:
            if c == b:
                continue
            diff = tuple(x - y for x, y in zip(c, b))
            if min(diff) >= 0 and diff in oracle:
                dominated = True
                break
        if not dominated:
            out.append(b)
    return tuple(sorted(out))


def apery_from_standard(S: AffineSemigroup, G, block: Sequence[int]) -> tuple:
    """Map standard monomials in ``block`` to semigroup elements."""
    std = standard_monomials_block(G, block)
    if std == INFINITE:
        raise EngineConsistencyError("standard monomial block is infinite for a simplicial semigroup")
    elems = {S.degree_of(m) for m in std}
    if len(elems) != len(std):
        raise EngineConsistencyError("standard monomials do not map injectively into the Apery set")
    return tuple(sorted(elems))


def apery(S: AffineSemigroup) -> AperySet:
    """Ap(S, E) for the extremal set E, via standard monomials of I(S).

    Uses the S-graded revlex order with the extremal variables least, for
    which the non-extremal standard monomials are in bijection with Ap(S, E).
    """
    _require_simplicial(S)
    elems = _apery_elements(S)
    return AperySet(elems, maximal_elements(S, elems))


def in_apery(S: AffineSemigroup, v: Sequence[int]) -> bool:
    _require_simplicial(S)
    if not contains(S, v):
        return False
    for i in S.extremal:
        w = tuple(x - y for x, y in zip(v, S.generators[i]))
        if min(w) >= 0 and contains(S, w):
            return False
    return True


def apery_direct(S: AffineSemigroup) -> tuple:
    """Ap(S, E) by enumeration: grow sums of non-extremal generators while
    they stay in the Apery set (a sum outside it has no extension inside)."""
    _require_simplicial(S)
    zero = (0,) * S.dim
    seen = {zero}
    frontier = [zero]
    gens = [S.generators[i] for i in S.non_extremal]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple(a + b for a, b in zip(v, g))
                if w in seen:
                    continue
                if in_apery(S, w):
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return tuple(sorted(seen))


def quasi_frobenius(S: AffineSemigroup, ap: AperySet | None = None):
    """(QF(S), type(S)): maximal Apery elements shifted by -sum of extremal rays."""
    if ap is None:
        ap = apery(S)
    shift = [0] * S.dim
    for i in S.extremal:
        for k, x in enumerate(S.generators[i]):
            shift[k] += x
    qf = tuple(sorted(tuple(x - s for x, s in zip(b, shift)) for b in ap.maximal_elements))
    return qf, len(qf)


class AperyMembership:
    """Membership in a simplicial semigroup through its Apery set.

    v lies in S iff v - w is an N-combination of the extremal generators for
    some w in Ap(S, E) with v - w in Z E.  Apery elements are bucketed by
    their class modulo Z E, so a query only tries its own class.  Arithmetic
    is integral: adj = D * E^-1 with D = |det E|.
    """

    def __init__(self, S: AffineSemigroup, elements: Sequence[tuple] | None = None):
        _require_simplicial(S)
        self.S = S
        self.elements = tuple(elements) if elements is not None else _apery_elements(S)
        E = [S.generators[i] for i in S.extremal]
        d = S.dim
        if len(E) != d:
            raise NotSimplicialError("Apery membership needs a full-dimensional simplicial cone")
        # invert the matrix whose columns are the extremal generators
        A = [[Fraction(E[j][i]) for j in range(d)] + [Fraction(int(i == k)) for k in range(d)]
             for i in range(d)]
        det = Fraction(1)
        for c in range(d):
            p = next(r for r in range(c, d) if A[r][c] != 0)
            if p != c:
                A[c], A[p] = A[p], A[c]
                det = -det
            det *= A[c][c]
            inv = 1 / A[c][c]
            A[c] = [x * inv for x in A[c]]
            for r in range(d):
                if r != c and A[r][c] != 0:
                    f = A[r][c]
                    A[r] = [x - f * y for x, y in zip(A[r], A[c])]
        self._den = abs(int(det))
        self._adj = [[int(x * self._den) for x in row[d:]] for row in A]
        self._classes: dict = {}
        for w in self.elements:
            self._classes.setdefault(self._class_of(w), []).append(w)

    def _apply(self, v) -> list:
        return [sum(a * x for a, x in zip(row, v)) for row in self._adj]

    def _class_of(self, v) -> tuple:
        return tuple(x % self._den for x in self._apply(v))

    def coefficients(self, v):
        """(w, lambda) with v = w + sum lambda_i e_i, or None."""
        v = tuple(v)
        if min(v) < 0:
            return None
        for w in self._classes.get(self._class_of(v), ()):
            u = [a - b for a, b in zip(v, w)]
            if min(u) < 0:
                continue
            lam = self._apply(u)
            if min(lam) >= 0:
                return w, tuple(x // self._den for x in lam)
        return None

    def __contains__(self, v) -> bool:
        return self.coefficients(v) is not None


def _apery_elements(S: AffineSemigroup) -> tuple:
    from .toric import graded_order, toric_ideal

    if not S.non_extremal:
        return ((0,) * S.dim,)
    G = reduced_gb(toric_ideal(S).generators, graded_order(S, S.extremal))
    return apery_from_standard(S, G, S.non_extremal)
