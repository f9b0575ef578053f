"""Pure-Python binomial reduction kernel.

Reference implementation of the hot loop in the Groebner engine; the
compiled ``_kernels`` extension exposes the same class and must agree with
it bit for bit.  A pure binomial is stored as its pair of exponent tuples
(lead, trail), meaning x^lead - x^trail with lead > trail.
"""

BACKEND = "python"


class BinomialBasis:
    def __init__(self, nvars, ranking, weights=None):
        self.nvars = nvars
        self._least_first = tuple(reversed(tuple(ranking)))
        self._weights = tuple(weights) if weights is not None else (1,) * nvars
        self.leads = []
        self.trails = []

    def __len__(self):
        return len(self.leads)

    def key(self, m):
        w = self._weights
        deg = 0
        for i in range(self.nvars):
            deg += w[i] * m[i]
        return (deg,) + tuple(-m[i] for i in self._least_first)

    def compare(self, a, b):
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def orient(self, a, b):
        """Return (greater, smaller), or None when a == b."""
        c = self.compare(a, b)
        if c == 0:
            return None
        return (a, b) if c > 0 else (b, a)

    def append(self, lead, trail):
        self.leads.append(tuple(lead))
        self.trails.append(tuple(trail))
        return len(self.leads) - 1

    def lead(self, i):
        return self.leads[i]

    def trail(self, i):
        return self.trails[i]

    def _find_divisor(self, m, skip, alive):
        for j, l in enumerate(self.leads):
            if j == skip or (alive is not None and not alive[j]):
                continue
            for x, y in zip(m, l):
                if y > x:
                    break
            else:
                return j
        return -1

    def reduce(self, a, b, skip=-1, alive=None):
        """Fully reduce x^a - x^b; returns the oriented (lead, trail) or None for zero.

        ``skip`` excludes one basis index; ``alive`` (list of bools) masks
        deleted entries.
        """
        a = tuple(a)
        b = tuple(b)
        ab = self.orient(a, b)
        if ab is None:
            return None
        a, b = ab
        while True:
            j = self._find_divisor(a, skip, alive)
            if j >= 0:
                l, t = self.leads[j], self.trails[j]
                a = tuple(x - y + z for x, y, z in zip(a, l, t))
                ab = self.orient(a, b)
                if ab is None:
                    return None
                a, b = ab
                continue
            j = self._find_divisor(b, skip, alive)
            if j >= 0:
                l, t = self.leads[j], self.trails[j]
                b = tuple(x - y + z for x, y, z in zip(b, l, t))
                ab = self.orient(a, b)
                if ab is None:
                    return None
                a, b = ab
                continue
            return a, b

    def spoly(self, i, j):
        """S-polynomial of entries i and j as an unoriented exponent pair."""
        li, lj = self.leads[i], self.leads[j]
        ti, tj = self.trails[i], self.trails[j]
        # lcm/li * ti  -  lcm/lj * tj
        left = tuple((x if x > y else y) - x + t for x, y, t in zip(li, lj, ti))
        right = tuple((x if x > y else y) - y + t for x, y, t in zip(li, lj, tj))
        return left, right
