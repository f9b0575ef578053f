"""Buchberger's algorithm with a fast path for pure binomial ideals.

Pairs are chosen by the normal strategy (smallest lcm first) and pruned
with the coprime criterion and, by default, the Gebauer-Moeller chain
criterion.  Both paths return the unique reduced basis sorted ascending by
leading monomial.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import budget, kernels
from .algebra import (
    ExpVec,
    MonomialOrder,
    Polynomial,
    divides,
    is_coprime,
    mono_div,
    mono_lcm,
)

INFINITE = "infinite"


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    elements: tuple

    @property
    def nvars(self) -> int:
        return self.order.nvars

    def leading_monomials(self) -> tuple:
        return tuple(g.leading_monomial(self.order) for g in self.elements)

    def is_zero_ideal(self) -> bool:
        return not self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


class _PairQueue:
    """Critical pairs keyed by (order key of lcm, i, j) with lazy deletion."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.live: dict = {}
        self.heap: list = []

    def add(self, i: int, j: int, lcm: ExpVec) -> None:
        self.live[(i, j)] = lcm
        heapq.heappush(self.heap, (self.order.key(lcm), i, j))

    def discard(self, pair) -> None:
        self.live.pop(pair, None)

    def pop(self):
        while self.heap:
            _, i, j = heapq.heappop(self.heap)
            if (i, j) in self.live:
                del self.live[(i, j)]
                return i, j
        return None

    def __bool__(self) -> bool:
        return bool(self.live)


def _update(pairs: _PairQueue, lms: list, k: int, order: MonomialOrder, gm: bool) -> None:
    """Register basis element k and prune the pair set."""
    lmk = lms[k]
    if not gm:
        for i in range(k):
            if not is_coprime(lms[i], lmk):
                pairs.add(i, k, mono_lcm(lms[i], lmk))
        return
    # drop old pairs made redundant by the new leading monomial
    for (i, j), L in list(pairs.live.items()):
        if divides(lmk, L) and L != mono_lcm(lms[i], lmk) and L != mono_lcm(lms[j], lmk):
            pairs.discard((i, j))
    groups: dict = {}
    for i in range(k):
        groups.setdefault(mono_lcm(lms[i], lmk), []).append(i)
    kept: list = []
    for L in sorted(groups, key=order.key):
        if any(divides(K, L) for K in kept):
            continue
        kept.append(L)
    for L in kept:
        idx = groups[L]
        if any(is_coprime(lms[i], lmk) for i in idx):
            continue
        pairs.add(min(idx), k, L)


# ---------------------------------------------------------------- binomials


def _binomial_run(pairs_in: Sequence[tuple], order: MonomialOrder, gm: bool, basis_cls):
    n = order.nvars
    B = basis_cls(n, order.ranking, order.weights)
    lms: list = []
    queue = _PairQueue(order)

    def insert(a, b):
        r = B.reduce(a, b)
        if r is None:
            return
        B.append(r[0], r[1])
        lms.append(r[0])
        _update(queue, lms, len(lms) - 1, order, gm)

    for a, b in pairs_in:
        insert(a, b)
    while queue:
        budget.check()
        i, j = queue.pop()
        s = B.spoly(i, j)
        insert(s[0], s[1])

    # minimalize, then tail-reduce against the surviving elements
    m = len(lms)
    alive = [True] * m
    for i in range(m):
        for j in range(m):
            if i == j or not alive[j]:
                continue
            if divides(lms[j], lms[i]) and (lms[j] != lms[i] or j < i):
                alive[i] = False
                break
    out = []
    for i in range(m):
        if not alive[i]:
            continue
        r = B.reduce(B.lead(i), B.trail(i), skip=i, alive=alive)
        assert r is not None and r[0] == lms[i], "interreduction changed a leading monomial"
        out.append(r)
    out.sort(key=lambda p: order.key(p[0]))
    return [Polynomial.binomial(a, b) for a, b in out]


def _binomial_gb(polys: Sequence[Polynomial], order: MonomialOrder, gm: bool, basis_cls=None):
    pairs_in = [p.binomial_parts(order) for p in polys]
    if basis_cls is not None:
        return _binomial_run(pairs_in, order, gm, basis_cls)
    try:
        return _binomial_run(pairs_in, order, gm, kernels.BinomialBasis)
    except OverflowError:
        return _binomial_run(pairs_in, order, gm, kernels.PyBinomialBasis)


# ------------------------------------------------------------------ generic


def _lead(p: dict, order: MonomialOrder):
    m = max(p, key=order.key)
    return m, p[m]


def _reduce_dict(f: dict, basis: list, leads: list, order: MonomialOrder) -> dict:
    """Complete division remainder of f by basis (list of monic dicts)."""
    f = dict(f)
    rem: dict = {}
    while f:
        m, c = _lead(f, order)
        for g, lg in zip(basis, leads):
            if divides(lg, m):
                q = mono_div(m, lg)
                for gm_, gc in g.items():
                    t = tuple(x + y for x, y in zip(gm_, q))
                    v = f.get(t, 0) - c * gc
                    if v:
                        f[t] = v
                    else:
                        f.pop(t, None)
                break
        else:
            rem[m] = c
            del f[m]
    return rem


def _monic(p: dict, order: MonomialOrder) -> dict:
    _, c = _lead(p, order)
    return {m: v / c for m, v in p.items()}


def _generic_gb(polys: Sequence[Polynomial], order: MonomialOrder, gm: bool) -> list:
    basis: list = []
    lms: list = []
    queue = _PairQueue(order)

    def insert(p: dict):
        r = _reduce_dict(p, basis, lms, order)
        if not r:
            return
        r = _monic(r, order)
        basis.append(r)
        lms.append(_lead(r, order)[0])
        _update(queue, lms, len(lms) - 1, order, gm)

    for p in polys:
        insert({m: Fraction(c) for m, c in p})
    while queue:
        budget.check()
        i, j = queue.pop()
        L = mono_lcm(lms[i], lms[j])
        qi, qj = mono_div(L, lms[i]), mono_div(L, lms[j])
        s: dict = {}
        for m, c in basis[i].items():
            t = tuple(x + y for x, y in zip(m, qi))
            s[t] = s.get(t, 0) + c
        for m, c in basis[j].items():
            t = tuple(x + y for x, y in zip(m, qj))
            s[t] = s.get(t, 0) - c
        insert({m: c for m, c in s.items() if c})

    m = len(basis)
    alive = [True] * m
    for i in range(m):
        for j in range(m):
            if i != j and alive[j] and divides(lms[j], lms[i]) and (lms[j] != lms[i] or j < i):
                alive[i] = False
                break
    keep = [i for i in range(m) if alive[i]]
    out = []
    for i in keep:
        others = [basis[j] for j in keep if j != i]
        olms = [lms[j] for j in keep if j != i]
        tail = dict(basis[i])
        del tail[lms[i]]
        r = _reduce_dict(tail, others, olms, order)
        r[lms[i]] = Fraction(1)
        out.append((lms[i], r))
    out.sort(key=lambda t: order.key(t[0]))
    return [Polynomial(order.nvars, r) for _, r in out]


# ------------------------------------------------------------------- public


def reduced_gb(gens: Iterable[Polynomial], order: MonomialOrder, *, gm: bool = True,
               path: str = "auto") -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    ``path`` is ``"auto"`` (binomial fast path whenever every generator is a
    pure binomial), ``"binomial"`` or ``"generic"``.
    """
    polys = [g for g in gens if not g.is_zero()]
    for g in polys:
        if g.nvars != order.nvars:
            raise ValueError(f"polynomial in {g.nvars} variables, order has {order.nvars}")
    if not polys:
        return GroebnerBasis(order, ())
    all_binomial = all(g.is_binomial() for g in polys)
    if path == "binomial" or (path == "auto" and all_binomial):
        if not all_binomial:
            raise ValueError("binomial path requires pure binomial generators")
        elems = _binomial_gb(polys, order, gm)
    elif path in ("generic", "auto"):
        elems = _generic_gb(polys, order, gm)
    else:
        raise ValueError(f"unknown path {path!r}")
    return GroebnerBasis(order, tuple(elems))


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    if f.nvars != G.nvars:
        raise ValueError("polynomial and basis live in different rings")
    basis = [dict(g.terms) for g in G.elements]
    leads = list(G.leading_monomials())
    return Polynomial(f.nvars, _reduce_dict(dict(f.terms), basis, leads, G.order))


def initial_ideal_min_gens(G: GroebnerBasis) -> tuple:
    """G(in(I)): for a reduced basis, exactly its leading monomials."""
    lms = G.leading_monomials()
    for i, a in enumerate(lms):
        for j, b in enumerate(lms):
            if i != j and divides(a, b):
                raise AssertionError(f"leading monomials {a} and {b} are not an antichain")
    return lms


def standard_monomials_block(G: GroebnerBasis, block: Sequence[int]):
    """Monomials supported on ``block`` outside in(I), or INFINITE."""
    n = G.nvars
    block = sorted(set(block))
    lms = [m for m in G.leading_monomials()
           if all(m[i] == 0 for i in range(n) if i not in block)]
    for v in block:
        if not any(m[v] > 0 and all(m[i] == 0 for i in range(n) if i != v) for m in lms):
            return INFINITE
    start = (0,) * n
    if any(divides(m, start) for m in lms):
        return frozenset()
    seen = {start}
    frontier = [start]
    while frontier:
        budget.check()
        nxt = []
        for s in frontier:
            for v in block:
                t = s[:v] + (s[v] + 1,) + s[v + 1:]
                if t in seen or any(divides(m, t) for m in lms):
                    continue
                seen.add(t)
                nxt.append(t)
        frontier = nxt
    return frozenset(seen)


def is_groebner(G: GroebnerBasis) -> bool:
    """All S-polynomials reduce to zero (independent closure check)."""
    order = G.order
    elems = list(G.elements)
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            li = elems[i].leading_monomial(order)
            lj = elems[j].leading_monomial(order)
            L = mono_lcm(li, lj)
            s = (elems[i].mul_monomial(mono_div(L, li), 1 / elems[i].leading_coefficient(order))
                 - elems[j].mul_monomial(mono_div(L, lj), 1 / elems[j].leading_coefficient(order)))
            if not normal_form(s, G).is_zero():
                return False
    return True
