"""Exact monomials, sparse polynomials over Q, and graded reverse-lex orders.

Monomials are plain tuples of non-negative Python ints (arbitrary precision).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

ExpVec = tuple  # tuple[int, ...]


class DimensionError(ValueError):
    """Exponent vectors of different lengths were combined."""


class Cmp(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _check_len(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} != {len(b)}")


def mono_mul(a: ExpVec, b: ExpVec) -> ExpVec:
    _check_len(a, b)
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: ExpVec, b: ExpVec) -> ExpVec:
    """a / b, assuming b divides a."""
    _check_len(a, b)
    return tuple(x - y for x, y in zip(a, b))


def divides(b: ExpVec, a: ExpVec) -> bool:
    """True iff x^b divides x^a."""
    return all(y <= x for x, y in zip(a, b))


def mono_lcm(a: ExpVec, b: ExpVec) -> ExpVec:
    _check_len(a, b)
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_gcd(a: ExpVec, b: ExpVec) -> ExpVec:
    _check_len(a, b)
    return tuple(x if x < y else y for x, y in zip(a, b))


def is_coprime(a: ExpVec, b: ExpVec) -> bool:
    return not any(x and y for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """Graded reverse lexicographic order.

    ``ranking`` lists variable indices from greatest to least.  ``weights``
    gives the grading used before the reverse-lex tie break; ``None`` means
    the standard total degree.
    """

    ranking: tuple
    weights: tuple | None = None

    def __post_init__(self):
        n = len(self.ranking)
        if sorted(self.ranking) != list(range(n)):
            raise ValueError(f"ranking {self.ranking} is not a permutation of 0..{n - 1}")
        if self.weights is not None:
            if len(self.weights) != n:
                raise DimensionError("weights and ranking differ in length")
            if any(w <= 0 for w in self.weights):
                raise ValueError("weights must be positive")

    @classmethod
    def degrevlex(cls, nvars: int, ranking: Sequence[int] | None = None) -> "MonomialOrder":
        if ranking is None:
            ranking = range(nvars)
        return cls(tuple(ranking))

    @property
    def nvars(self) -> int:
        return len(self.ranking)

    @property
    def kind(self) -> str:
        return "degrevlex" if self.weights is None else "wdegrevlex"

    def degree(self, m: ExpVec) -> int:
        if self.weights is None:
            return sum(m)
        return sum(w * e for w, e in zip(self.weights, m))

    def key(self, m: ExpVec) -> tuple:
        """Sort key; a larger key is a larger monomial."""
        if len(m) != len(self.ranking):
            raise DimensionError(f"monomial has {len(m)} variables, order has {len(self.ranking)}")
        return (self.degree(m),) + tuple(-m[i] for i in reversed(self.ranking))

    def compare(self, a: ExpVec, b: ExpVec) -> Cmp:
        ka, kb = self.key(a), self.key(b)
        if ka == kb:
            return Cmp.EQUAL
        return Cmp.GREATER if ka > kb else Cmp.LESS

    def with_least(self, var: int) -> "MonomialOrder":
        """Same weights, ``var`` moved to the bottom of the ranking."""
        rest = tuple(i for i in self.ranking if i != var)
        return MonomialOrder(rest + (var,), self.weights)


def compare(order: MonomialOrder, a: ExpVec, b: ExpVec) -> Cmp:
    _check_len(a, b)
    return order.compare(a, b)


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Polynomial:
    """Sparse polynomial with exact rational coefficients.

    Immutable; the term map never stores zero coefficients.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[ExpVec, object] | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for m, c in items:
            m = tuple(m)
            if len(m) != nvars:
                raise DimensionError(f"monomial {m} has wrong length for {nvars} variables")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            acc[m] = acc.get(m, 0) + _frac(c)
        self._terms = {m: c for m, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def monomial(cls, m: ExpVec, coeff=1) -> "Polynomial":
        return cls(len(m), {tuple(m): coeff})

    @classmethod
    def binomial(cls, a: ExpVec, b: ExpVec) -> "Polynomial":
        """x^a - x^b."""
        return cls(len(a), [(a, 1), (b, -1)])

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @property
    def terms(self) -> Mapping[ExpVec, Fraction]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple]:
        return iter(self._terms.items())

    def coeff(self, m: ExpVec) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(m) for m in self._terms)

    def sorted_terms(self, order: MonomialOrder) -> list:
        """Terms in strictly descending order."""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder) -> ExpVec:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self._terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        lc = self.leading_coefficient(order)
        return self.scale(1 / lc)

    def scale(self, c) -> "Polynomial":
        c = _frac(c)
        return Polynomial(self.nvars, {m: c * v for m, v in self._terms.items()})

    def mul_monomial(self, m: ExpVec, c=1) -> "Polynomial":
        c = _frac(c)
        return Polynomial(self.nvars, {mono_mul(k, m): c * v for k, v in self._terms.items()})

    def is_binomial(self) -> bool:
        """True for a pure difference x^a - x^b (up to sign)."""
        if len(self._terms) != 2:
            return False
        cs = sorted(self._terms.values())
        return cs == [-1, 1]

    def binomial_parts(self, order: MonomialOrder) -> tuple:
        """(lead, trail) exponents of a monic pure binomial."""
        if not self.is_binomial():
            raise ValueError(f"{self} is not a pure binomial")
        a, b = sorted(self._terms, key=order.key, reverse=True)
        return a, b

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self.nvars != other.nvars:
            raise DimensionError("polynomials over different rings")
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return Polynomial(self.nvars, acc)

    def __neg__(self) -> "Polynomial":
        return self.scale(-1)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        if self.nvars != other.nvars:
            raise DimensionError("polynomials over different rings")
        acc: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(self.nvars, acc)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def to_text(self, order: MonomialOrder | None = None, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        if names is None:
            names = [f"x{i}" for i in range(self.nvars)]
        if order is None:
            order = MonomialOrder.degrevlex(self.nvars)
        out = []
        for i, (m, c) in enumerate(self.sorted_terms(order)):
            body = monomial_text(m, names)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if body == "1":
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = f"{mag}*{body}"
            if i == 0:
                out.append(piece if sign == "+" else "-" + piece)
            else:
                out.append(f" {sign} {piece}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()})"


def monomial_text(m: ExpVec, names: Sequence[str]) -> str:
    parts = []
    for e, name in zip(m, names):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"
