"""Input parsing and report assembly for the command line tool.

Reports are plain dicts.  Every integer is stored as a decimal string so
that consumers never lose precision; booleans and nulls stay native.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .algebra import monomial_text
from .apery import apery, quasi_frobenius
from .buchsbaum import CurveData, is_buchsbaum, t_star_order
from .closure import affine_order, is_cohen_macaulay
from .errors import ParseError, PreconditionError
from .groebner import reduced_gb
from .lifting import betti_numbers, verify_lift
from .semigroup import AffineSemigroup, extremal_rays, is_simplicial, rank, redundant_generators, simplicial
from .toric import minimalize, toric_ideal

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class InputSpec:
    dim: int
    generators: tuple
    extremal: tuple | None = None
    k: int | None = None

    def semigroup(self) -> AffineSemigroup:
        S = AffineSemigroup(self.generators)
        if self.extremal is not None:
            return S.with_extremal(self.extremal)
        return S

    def to_dict(self) -> dict:
        out = {"dim": self.dim, "generators": [list(g) for g in self.generators]}
        if self.extremal is not None:
            out["extremal"] = list(self.extremal)
        if self.k is not None:
            out["k"] = self.k
        return out


# ------------------------------------------------------------------ parsing


def _int_entry(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"expected an integer at {where}, got {x!r}")
    try:
        v = int(x)
    except ValueError:
        raise ParseError(f"expected an integer at {where}, got {x!r}") from None
    if v < 0:
        raise ParseError(f"negative entry {v} at {where}")
    return v


def _from_object(obj) -> InputSpec:
    if isinstance(obj, list):
        obj = {"generators": obj}
    if not isinstance(obj, dict):
        raise ParseError("top-level value must be an object or a list")
    unknown = set(obj) - {"dim", "generators", "extremal", "k"}
    if unknown:
        raise ParseError(f"unknown field(s): {', '.join(sorted(unknown))}")
    if "generators" not in obj:
        raise ParseError("missing field 'generators'")
    raw = obj["generators"]
    if not isinstance(raw, list) or not raw:
        raise ParseError("'generators' must be a nonempty list")
    gens = []
    for i, g in enumerate(raw):
        if isinstance(g, list):
            gens.append(tuple(_int_entry(x, f"generators[{i}][{j}]") for j, x in enumerate(g)))
        else:
            gens.append((_int_entry(g, f"generators[{i}]"),))
    dim = obj.get("dim", len(gens[0]))
    dim = _int_entry(dim, "dim")
    for i, g in enumerate(gens):
        if len(g) != dim:
            raise ParseError(f"generator {i} has length {len(g)}, expected {dim}")
    ext = obj.get("extremal")
    if ext is not None:
        if not isinstance(ext, list):
            raise ParseError("'extremal' must be a list of generator indices")
        ext = tuple(_int_entry(x, f"extremal[{j}]") for j, x in enumerate(ext))
    k = obj.get("k")
    if k is not None:
        k = _int_entry(k, "k")
    return InputSpec(dim, tuple(gens), ext, k)


_TOKEN = re.compile(r"[^\s,]+")


def _from_lists(text: str) -> InputSpec:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0]
        row = []
        for m in _TOKEN.finditer(body):
            tok = m.group(0)
            col = m.start() + 1
            if not re.fullmatch(r"[+-]?\d+", tok):
                raise ParseError(f"not an integer: {tok!r}", lineno, col)
            v = int(tok)
            if v < 0:
                raise ParseError(f"negative entry {v}", lineno, col)
            row.append(v)
        if row:
            rows.append((lineno, row))
    if not rows:
        raise ParseError("no generators given")
    if len(rows) == 1:
        return InputSpec(1, tuple((v,) for v in rows[0][1]))
    dim = len(rows[0][1])
    for lineno, row in rows:
        if len(row) != dim:
            raise ParseError(f"row has {len(row)} entries, expected {dim}", lineno, 1)
    return InputSpec(dim, tuple(tuple(r) for _, r in rows))


def parse_input(text: str) -> InputSpec:
    """Parse a JSON object / list or whitespace-separated integer rows."""
    stripped = text.lstrip()
    if stripped.startswith(("{", "[")):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
        spec = _from_object(obj)
    else:
        spec = _from_lists(text)
    if spec.dim < 1:
        raise ParseError("dimension must be positive")
    return spec


# -------------------------------------------------------------- formatting


def s(x):
    """Integers (also inside tuples/lists) to decimal strings."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, (tuple, list)):
        return [s(v) for v in x]
    if isinstance(x, dict):
        return {k: s(v) for k, v in x.items()}
    return x


def znames(n: int, start: int = 1, letter: str = "z") -> list:
    return [f"{letter}{i}" for i in range(start, start + n)]


def _semigroup_section(S: AffineSemigroup) -> dict:
    simp = is_simplicial(S)
    sec = {"rank": s(rank(S)), "simplicial": simp,
           "extremal_rays": s([list(S.generators[i]) for i in extremal_rays(S)])}
    return sec


def _warnings_for(S: AffineSemigroup) -> list:
    red = redundant_generators(S)
    if red:
        return ["generators " + ", ".join(str(list(S.generators[i])) for i in red)
                + " are combinations of the others; the generating set is not minimal"]
    return []


def ideal_section(S: AffineSemigroup, ranking=None) -> dict:
    names = znames(S.ngens)
    I = toric_ideal(S)
    mg, mu = minimalize(I)
    order = affine_order(S)
    if ranking is not None:
        order = type(order).degrevlex(S.ngens, ranking)
    G = reduced_gb(I.generators, order)
    return {
        "mu": s(mu),
        "minimal_generators": [f.monic(order).to_text(order, names) for f in mg],
        "order": " > ".join(names[i] for i in order.ranking),
        "groebner_basis": [g.to_text(order, names) for g in G],
        "leading_monomials": [monomial_text(m, names) for m in G.leading_monomials()],
    }


def cm_section(S: AffineSemigroup, homogenizer="auto"):
    r = is_cohen_macaulay(S, homogenizer)
    names = znames(S.ngens)
    hnames = ["z0"] + names
    P = r.closure
    sec = {
        "homogenizer": s(list(P.homogenizer)),
        "closure_generators": s([list(g) for g in P.gamma_h.generators]),
        "closure_extremal_as_designated": P.extremal_as_designated,
        "parameter_variables": [names[i] for i in P.parameters],
        "gin_affine": [monomial_text(m, names) for m in r.gin_affine],
        "gin_projective": [monomial_text(m, hnames) for m in r.gin_projective],
        "cm_affine": r.cm_affine,
        "cm_projective": r.cm_projective,
        "cm_affine_graded": r.cm_affine_graded,
        "witness": None,
    }
    if r.witness:
        sec["witness"] = {"monomial": monomial_text(r.witness["monomial"], hnames),
                          "variable": hnames[r.witness["variable"]]}
    if r.apery_gamma_h is not None:
        sec["apery_closure"] = s([list(a) for a in r.apery_gamma_h.elements])
        sec["apery_closure_maximal"] = s([list(a) for a in r.apery_gamma_h.maximal_elements])
        sec["cm_type"] = s(r.cm_type)
    return sec, list(r.warnings)


def apery_section(S: AffineSemigroup) -> dict:
    S = simplicial(S) if S.extremal is None else S
    ap = apery(S)
    qf, typ = quasi_frobenius(S, ap)
    return {
        "extremal": s([list(S.generators[i]) for i in S.extremal]),
        "apery": s([list(a) for a in ap.elements]),
        "maximal": s([list(a) for a in ap.maximal_elements]),
        "quasi_frobenius": s([list(q) for q in qf]),
        "type": s(typ),
    }


def buchsbaum_section(S: AffineSemigroup):
    if S.dim != 1:
        raise PreconditionError("the Buchsbaum test applies to numerical semigroups (dim 1) only")
    ex = sorted(g[0] for g in S.generators)
    r = is_buchsbaum(CurveData(tuple(ex)))
    sec = {"exponents": s(list(r.exponents)), "cm": r.cm, "buchsbaum": r.buchsbaum}
    if r.t_star is not None:
        n = len(r.t_star.generators)
        names = znames(n, 0, "x")
        order = t_star_order(r.t_star)
        sec["t_star_generators"] = s([list(g) for g in r.t_star.generators])
        sec["order"] = " > ".join(names[i] for i in order.ranking)
        sec["groebner_basis"] = [g.to_text(order, names) for g in r.basis]
        sec["leading_monomials"] = [monomial_text(m, names) for m in r.leading_monomials]
        sec["witness"] = None
        if r.witness:
            sec["witness"] = {"monomial": monomial_text(r.witness["monomial"], names),
                              "variable": names[r.witness["variable"]]}
    sec["notes"] = list(r.notes)
    return sec, list(r.warnings)


def lift_section(S: AffineSemigroup, k: int) -> dict:
    r = verify_lift(S, k)
    names = znames(S.ngens)
    order = affine_order(simplicial(S) if S.extremal is None else S)
    sec = {
        "k": s(k),
        "lifted_generators": s([list(g) for g in r.lifted_generators]),
        "mu_base": s(r.mu_base),
        "mu_lifted": s(r.mu_lifted),
        "mu_equal": r.mu_equal,
        "lifted_binomials": [b.monic(order).to_text(order, names) for b in r.lifted_binomials],
        "lifted_binomials_in_ideal": r.lifted_binomials_in_ideal,
        "lifted_binomials_generate": r.lifted_binomials_generate,
        "lifted_set_minimal": r.lifted_set_minimal,
        "cm_base": r.cm_base,
        "cm_lifted": r.cm_lifted,
        "apery_size_equal": r.apery_size_equal,
        "apery_scaled": r.apery_scaled,
    }
    if r.apery_base is not None:
        sec["apery_base"] = s([list(a) for a in r.apery_base])
        sec["apery_lifted"] = s([list(a) for a in r.apery_lifted])
    sec["warnings"] = list(r.warnings)
    return sec


def betti_section(S: AffineSemigroup, bound=None) -> dict:
    B = betti_numbers(S, bound)
    return {
        "bound": s(bound) if bound is not None else None,
        "complete": bound is None,
        "totals": s(list(B.totals)),
        "graded": [{"i": str(i), "degree": s(list(b)), "rank": str(r)} for (i, b), r in B.entries],
    }
