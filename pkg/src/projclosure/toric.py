"""Toric ideals I(S) = ker(z_i -> s^{m_i}) and their minimal generators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import MonomialOrder, Polynomial
from .errors import PreconditionError
from .groebner import GroebnerBasis, normal_form, reduced_gb
from .lattice import lattice_kernel
from .semigroup import AffineSemigroup


class GradingError(PreconditionError):
    pass


@dataclass(frozen=True)
class BinomialIdeal:
    nvars: int
    generators: tuple
    degrees: tuple  # degree of variable i is degrees[i]

    def degree(self, m: Sequence[int]) -> tuple:
        d = len(self.degrees[0]) if self.degrees else 0
        out = [0] * d
        for e, g in zip(m, self.degrees):
            for k in range(d):
                out[k] += e * g[k]
        return tuple(out)

    def is_homogeneous(self, f: Polynomial) -> bool:
        degs = {self.degree(m) for m, _ in f}
        return len(degs) <= 1

    def is_zero(self) -> bool:
        return not self.generators


def graded_order(S: AffineSemigroup, least: Sequence[int] = ()) -> MonomialOrder:
    """Weighted degrevlex for the S-grading: weight of z_i is |m_i|.

    The variables in ``least`` are ranked below all others, the first of
    them being the very least.
    """
    return MonomialOrder(ranking_with_least(S.ngens, least),
                         tuple(sum(g) for g in S.generators))


def ranking_with_least(n: int, least: Sequence[int]) -> tuple:
    least = list(least)
    rest = [i for i in reversed(range(n)) if i not in least]
    return tuple(rest + list(reversed(least)))


def _divide_out(f: Polynomial, var: int) -> Polynomial:
    lo = min(m[var] for m, _ in f)
    if lo == 0:
        return f
    return Polynomial(f.nvars, {m[:var] + (m[var] - lo,) + m[var + 1:]: c for m, c in f})


def saturate(gens: Sequence[Polynomial], S: AffineSemigroup, var: int) -> GroebnerBasis:
    """Generators of (gens) : z_var^infinity, returned as a reduced basis.

    In a reduced basis for a graded revlex order with z_var least, z_var
    divides an element iff it divides its leading monomial, so dividing out
    yields a basis of the saturation.
    """
    order = graded_order(S, (var,))
    G = reduced_gb(gens, order)
    return reduced_gb([_divide_out(g, var) for g in G.elements], order)


def toric_ideal(S: AffineSemigroup) -> BinomialIdeal:
    n = S.ngens
    M = [[g[k] for g in S.generators] for k in range(S.dim)]
    gens = []
    for v in lattice_kernel(M, n):
        plus = tuple(max(x, 0) for x in v)
        minus = tuple(max(-x, 0) for x in v)
        gens.append(Polynomial.binomial(plus, minus))
    # saturating by one variable keeps earlier saturations, so one pass suffices
    for var in range(n):
        if not gens:
            break
        gens = list(saturate(gens, S, var).elements)
    return BinomialIdeal(n, tuple(gens), S.generators)


def exponent_identity(f: Polynomial, degrees: Sequence[Sequence[int]]) -> bool:
    """Both monomials of a binomial map to the same semigroup element."""
    I = BinomialIdeal(f.nvars, (), tuple(tuple(g) for g in degrees))
    return I.is_homogeneous(f)


def minimalize(I: BinomialIdeal, order: MonomialOrder | None = None):
    """A minimal generating set and its size mu.

    Generators are visited by increasing standard degree (ties by degrevlex
    leading monomial) and dropped when they lie in the ideal of the others.
    For a positively graded ideal an irredundant homogeneous generating set
    is minimal, so mu does not depend on the choices.
    """
    for f in I.generators:
        if not I.is_homogeneous(f):
            raise GradingError(f"generator {f} is not homogeneous")
    if any(not any(g) for g in I.degrees):
        raise GradingError("a variable has degree zero")
    if not I.generators:
        return (), 0
    dl = MonomialOrder.degrevlex(I.nvars)
    gorder = order or MonomialOrder(tuple(range(I.nvars)), tuple(sum(g) for g in I.degrees))
    current = sorted(I.generators, key=lambda f: (f.total_degree(), dl.key(f.leading_monomial(dl))))
    # drop duplicates up to sign first
    seen = set()
    uniq = []
    for f in current:
        key = frozenset(f.terms.keys())
        if key not in seen:
            seen.add(key)
            uniq.append(f)
    current = uniq
    i = 0
    while i < len(current):
        others = current[:i] + current[i + 1:]
        if others and normal_form(current[i], reduced_gb(others, gorder)).is_zero():
            current = others
        else:
            i += 1
    return tuple(current), len(current)


def ideal_contains(I: BinomialIdeal, f: Polynomial, G: GroebnerBasis | None = None) -> bool:
    if G is None:
        G = reduced_gb(I.generators, MonomialOrder.degrevlex(I.nvars))
    return normal_form(f, G).is_zero()
