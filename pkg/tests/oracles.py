"""Independent reference computations used only by the tests.

None of these touch the Groebner engine or the membership oracle of the
package; they are deliberately naive.
"""

import itertools
from fractions import Fraction


def monomials_up_to(n, maxdeg):
    for deg in range(maxdeg + 1):
        for combo in itertools.combinations_with_replacement(range(n), deg):
            m = [0] * n
            for i in combo:
                m[i] += 1
            yield tuple(m)


def semigroup_degree(gens, m):
    d = len(gens[0])
    return tuple(sum(e * g[k] for e, g in zip(m, gens)) for k in range(d))


def brute_relations(gens, maxdeg):
    """All pairs (a, b) of coprime monomials of total degree <= maxdeg with equal image."""
    groups = {}
    for m in monomials_up_to(len(gens), maxdeg):
        groups.setdefault(semigroup_degree(gens, m), []).append(m)
    out = []
    for ms in groups.values():
        for a, b in itertools.combinations(ms, 2):
            if all(x == 0 or y == 0 for x, y in zip(a, b)):
                out.append((a, b))
    return out


def naive_member(gens, v):
    """Exhaustive search over coefficient vectors bounded by v."""
    v = tuple(v)
    if any(x < 0 for x in v):
        return False
    bounds = []
    for g in gens:
        caps = [v[k] // g[k] for k in range(len(v)) if g[k] > 0]
        bounds.append(min(caps) if caps else 0)
    for coeffs in itertools.product(*(range(b + 1) for b in bounds)):
        if semigroup_degree(gens, coeffs) == v:
            return True
    return False


def numerical_members(gens, limit):
    """Boolean sieve of a numerical semigroup on 0..limit."""
    ok = [False] * (limit + 1)
    ok[0] = True
    for x in range(1, limit + 1):
        ok[x] = any(x >= g and ok[x - g] for g in gens)
    return ok


def numerical_apery(gens, m):
    """Ap(S, m) by scanning each residue class for its least element."""
    limit = m * max(gens) * 2 + max(gens) ** 2
    ok = numerical_members(gens, limit)
    out = []
    for r in range(m):
        x = r
        while not ok[x]:
            x += m
        out.append(x)
    return sorted(out)


def closure_cm_numerical(gens):
    """CM of the projective closure of a numerical semigroup.

    With p(b) the least number of generators summing to b and n the largest
    generator, the closure is CM iff p(b - n) = p(b) - 1 for every b in S
    with b - n in S.  A violating b has a minimal representation avoiding n
    with fewer than n parts, so b < n * max(other generators) + n suffices.
    """
    gens = sorted(gens)
    n = gens[-1]
    below = gens[-2] if len(gens) > 1 else n
    limit = n * below + n
    INF = float("inf")
    parts = [0] + [INF] * limit
    for x in range(1, limit + 1):
        parts[x] = min((parts[x - g] + 1 for g in gens if g <= x), default=INF)
    for b in range(n, limit + 1):
        if parts[b] == INF or parts[b - n] == INF:
            continue
        if parts[b - n] != parts[b] - 1:
            return False
    return True


def t_star_box(exponents, box):
    """Elements of T* in [0, box]^2 from the defining condition, by brute force."""
    n = exponents[-1]
    T = [(n - x, x) for x in (0,) + tuple(exponents)]

    def in_T(p):
        a, b = p
        if (a + b) % n:
            return False
        m = (a + b) // n
        # b as a sum of exactly m values from {0, n_1, ..., n_r}
        vals = (0,) + tuple(exponents)
        reach = {0}
        for _ in range(m):
            reach = {r + v for r in reach for v in vals if r + v <= b}
        return b in reach

    out = []
    for a in range(box + 1):
        for b in range(box + 1):
            if all(in_T((a + e0, b + e1)) for e0, e1 in T):
                out.append((a, b))
    return out, in_T


# --------------------------------------------------------------- resolution


def _rref_nullspace(rows, ncols):
    """Basis of {x : M x = 0} for M given by rows (lists of Fractions)."""
    A = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -A[i][f]
        basis.append(v)
    return basis


def _rank_rows(rows):
    A = [list(r) for r in rows]
    if not A:
        return 0
    ncols = len(A[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        for i in range(r + 1, len(A)):
            if A[i][c] != 0:
                f = A[i][c] / A[r][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
    return r


def betti_by_syzygies(weights, max_degree, max_index=6):
    """Graded Betti numbers of K[S] for a numerical semigroup by iterated syzygies.

    Works degree by degree in A = K[z_1..z_n] with deg z_i = weights[i]: the
    kernel of each map is computed by linear algebra and its minimal
    generators are those not in the span of variable multiples of lower
    kernel pieces.  Returns {i: {degree: count}} for degrees <= max_degree.
    """
    n = len(weights)
    mons = {}
    for m in monomials_up_to(n, max_degree):
        deg = sum(e * w for e, w in zip(m, weights))
        if deg <= max_degree:
            mons.setdefault(deg, []).append(m)

    # F_0 -> K[S]: every monomial of degree b maps to the single basis vector t^b
    gens = [(0, None)]  # (degree, image) for generators of the current free module
    prev_gens = None
    result = {0: {0: 1}}

    def basis(gen_list, b):
        out = []
        for j, (deg, _) in enumerate(gen_list):
            for m in mons.get(b - deg, []):
                out.append((j, m))
        return out

    def image(prev_list, j_img, m):
        # m times the image of generator j, as dict over basis of previous module
        out = {}
        for (k, mm), c in j_img.items():
            key = (k, tuple(a + b for a, b in zip(mm, m)))
            out[key] = out.get(key, 0) + c
        return out

    def target_basis(b):
        if prev_gens is None:
            return [("t", b)]
        return basis(prev_gens, b)

    for i in range(1, max_index + 1):
        kernels = {}
        new_gens = []
        for b in range(0, max_degree + 1):
            src = basis(gens, b)
            if not src:
                kernels[b] = []
                continue
            tgt = target_basis(b)
            tindex = {t: r for r, t in enumerate(tgt)}
            cols = []
            for j, m in src:
                col = [Fraction(0)] * len(tgt)
                if prev_gens is None:
                    col[0] = Fraction(1)
                else:
                    for key, c in image(prev_gens, gens[j][1], m).items():
                        col[tindex[key]] += c
                cols.append(col)
            rows = [[cols[c][r] for c in range(len(src))] for r in range(len(tgt))]
            ker = _rref_nullspace(rows, len(src))
            kernels[b] = ker
            # span of variable multiples of lower kernel pieces
            sindex = {s_: c for c, s_ in enumerate(src)}
            spanned = []
            for v_idx, w in enumerate(weights):
                if b - w < 0:
                    continue
                lower_src = basis(gens, b - w)
                for vec in kernels.get(b - w, []):
                    shifted = [Fraction(0)] * len(src)
                    for c, coeff in enumerate(vec):
                        if coeff:
                            j, m = lower_src[c]
                            mm = list(m)
                            mm[v_idx] += 1
                            shifted[sindex[(j, tuple(mm))]] += coeff
                    spanned.append(shifted)
            base_rank = _rank_rows(spanned)
            current = list(spanned)
            for vec in ker:
                trial = current + [vec]
                if _rank_rows(trial) > base_rank:
                    current = trial
                    base_rank += 1
                    img = {src[c]: coeff for c, coeff in enumerate(vec) if coeff}
                    new_gens.append((b, img))
        if not new_gens:
            break
        counts = {}
        for deg, _ in new_gens:
            counts[deg] = counts.get(deg, 0) + 1
        result[i] = counts
        prev_gens = gens
        gens = new_gens
    return result
