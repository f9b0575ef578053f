# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled binomial reduction kernel (same API as ``_kernels_py``).

Exponents live in int64 buffers.  Any exponent or weight at or above
``LIMIT`` raises OverflowError; the engine then reruns the computation on
the pure-Python kernel, which has no size limit.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.stdint cimport int64_t

BACKEND = "cython"

DEF LIMIT = 16777216  # 2**24; keeps weighted degrees far below 2**63


cdef class BinomialBasis:
    cdef public int nvars
    cdef int64_t* _leads
    cdef int64_t* _trails
    cdef int64_t* _weights
    cdef int* _least_first
    cdef Py_ssize_t _len
    cdef Py_ssize_t _cap
    cdef int64_t* _a
    cdef int64_t* _b
    cdef int64_t* _tmp

    def __cinit__(self, int nvars, ranking, weights=None):
        self.nvars = nvars
        self._len = 0
        self._cap = 16
        self._leads = <int64_t*> malloc(self._cap * max(nvars, 1) * sizeof(int64_t))
        self._trails = <int64_t*> malloc(self._cap * max(nvars, 1) * sizeof(int64_t))
        self._weights = <int64_t*> malloc(max(nvars, 1) * sizeof(int64_t))
        self._least_first = <int*> malloc(max(nvars, 1) * sizeof(int))
        self._a = <int64_t*> malloc(max(nvars, 1) * sizeof(int64_t))
        self._b = <int64_t*> malloc(max(nvars, 1) * sizeof(int64_t))
        self._tmp = <int64_t*> malloc(max(nvars, 1) * sizeof(int64_t))
        if (self._leads == NULL or self._trails == NULL or self._weights == NULL
                or self._least_first == NULL or self._a == NULL or self._b == NULL
                or self._tmp == NULL):
            raise MemoryError()
        ranking = tuple(ranking)
        if len(ranking) != nvars:
            raise ValueError("ranking length differs from nvars")
        cdef int i
        for i in range(nvars):
            self._least_first[i] = ranking[nvars - 1 - i]
        if weights is None:
            for i in range(nvars):
                self._weights[i] = 1
        else:
            weights = tuple(weights)
            for i in range(nvars):
                w = weights[i]
                if w >= LIMIT:
                    raise OverflowError("weight exceeds compiled kernel limit")
                self._weights[i] = w

    def __dealloc__(self):
        free(self._leads)
        free(self._trails)
        free(self._weights)
        free(self._least_first)
        free(self._a)
        free(self._b)
        free(self._tmp)

    def __len__(self):
        return self._len

    cdef int _load(self, object m, int64_t* dst) except -1:
        cdef int i
        if len(m) != self.nvars:
            raise ValueError("monomial length differs from nvars")
        for i in range(self.nvars):
            v = m[i]
            if v >= LIMIT:
                raise OverflowError("exponent exceeds compiled kernel limit")
            dst[i] = v
        return 0

    cdef tuple _tuple(self, int64_t* src):
        cdef int i
        return tuple([src[i] for i in range(self.nvars)])

    cdef int _cmp(self, int64_t* a, int64_t* b) nogil:
        cdef int64_t da = 0, db = 0
        cdef int i, v
        for i in range(self.nvars):
            da += self._weights[i] * a[i]
            db += self._weights[i] * b[i]
        if da != db:
            return 1 if da > db else -1
        for i in range(self.nvars):
            v = self._least_first[i]
            if a[v] != b[v]:
                # smaller exponent in the least variable wins
                return 1 if a[v] < b[v] else -1
        return 0

    def key(self, m):
        w = [self._weights[i] for i in range(self.nvars)]
        deg = sum(w[i] * m[i] for i in range(self.nvars))
        return (deg,) + tuple(-m[self._least_first[i]] for i in range(self.nvars))

    def compare(self, a, b):
        self._load(a, self._a)
        self._load(b, self._b)
        return self._cmp(self._a, self._b)

    def orient(self, a, b):
        c = self.compare(a, b)
        if c == 0:
            return None
        return (tuple(a), tuple(b)) if c > 0 else (tuple(b), tuple(a))

    def append(self, lead, trail):
        cdef Py_ssize_t n = self.nvars
        cdef int64_t* p
        if self._len == self._cap:
            self._cap *= 2
            p = <int64_t*> realloc(self._leads, self._cap * max(n, 1) * sizeof(int64_t))
            if p == NULL:
                raise MemoryError()
            self._leads = p
            p = <int64_t*> realloc(self._trails, self._cap * max(n, 1) * sizeof(int64_t))
            if p == NULL:
                raise MemoryError()
            self._trails = p
        self._load(lead, self._leads + self._len * n)
        self._load(trail, self._trails + self._len * n)
        self._len += 1
        return self._len - 1

    def lead(self, Py_ssize_t i):
        return self._tuple(self._leads + i * self.nvars)

    def trail(self, Py_ssize_t i):
        return self._tuple(self._trails + i * self.nvars)

    @property
    def leads(self):
        return [self.lead(i) for i in range(self._len)]

    @property
    def trails(self):
        return [self.trail(i) for i in range(self._len)]

    cdef Py_ssize_t _find_divisor(self, int64_t* m, Py_ssize_t skip, char* alive) nogil:
        cdef Py_ssize_t j
        cdef int i
        cdef int64_t* l
        cdef bint ok
        for j in range(self._len):
            if j == skip:
                continue
            if alive != NULL and not alive[j]:
                continue
            l = self._leads + j * self.nvars
            ok = True
            for i in range(self.nvars):
                if l[i] > m[i]:
                    ok = False
                    break
            if ok:
                return j
        return -1

    cdef int _step(self, int64_t* m, Py_ssize_t j) except -1:
        cdef int i
        cdef int64_t* l = self._leads + j * self.nvars
        cdef int64_t* t = self._trails + j * self.nvars
        for i in range(self.nvars):
            m[i] = m[i] - l[i] + t[i]
            if m[i] >= LIMIT:
                raise OverflowError("exponent exceeds compiled kernel limit")
        return 0

    cdef void _swap(self):
        cdef int64_t* p = self._a
        self._a = self._b
        self._b = p

    def reduce(self, a, b, Py_ssize_t skip=-1, alive=None):
        cdef bytes mask
        cdef char* cmask = NULL
        cdef Py_ssize_t j
        cdef int c
        if alive is not None:
            mask = bytes([1 if x else 0 for x in alive])
            cmask = mask
        self._load(a, self._a)
        self._load(b, self._b)
        c = self._cmp(self._a, self._b)
        if c == 0:
            return None
        if c < 0:
            self._swap()
        while True:
            j = self._find_divisor(self._a, skip, cmask)
            if j >= 0:
                self._step(self._a, j)
                c = self._cmp(self._a, self._b)
                if c == 0:
                    return None
                if c < 0:
                    self._swap()
                continue
            j = self._find_divisor(self._b, skip, cmask)
            if j >= 0:
                self._step(self._b, j)
                c = self._cmp(self._a, self._b)
                if c == 0:
                    return None
                if c < 0:
                    self._swap()
                continue
            return self._tuple(self._a), self._tuple(self._b)

    def spoly(self, Py_ssize_t i, Py_ssize_t j):
        cdef int k
        cdef int64_t* li = self._leads + i * self.nvars
        cdef int64_t* lj = self._leads + j * self.nvars
        cdef int64_t* ti = self._trails + i * self.nvars
        cdef int64_t* tj = self._trails + j * self.nvars
        cdef int64_t L
        left = []
        right = []
        for k in range(self.nvars):
            L = li[k] if li[k] > lj[k] else lj[k]
            left.append(L - li[k] + ti[k])
            right.append(L - lj[k] + tj[k])
        return tuple(left), tuple(right)
