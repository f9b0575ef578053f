import os
import subprocess
import sys

import pytest

from projclosure import _kernels_py, kernels
from projclosure.groebner import _binomial_gb
from projclosure.semigroup import simplicial
from projclosure.toric import graded_order, toric_ideal
from corpus import full_corpus

try:
    from projclosure import _kernels as _cy
except ImportError:  # pragma: no cover - extension not built
    _cy = None

needs_ext = pytest.mark.skipif(_cy is None, reason="compiled kernels not built")


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")
    if _cy is not None and os.environ.get("PROJCLOSURE_PURE_PYTHON", "") in ("", "0"):
        assert kernels.BACKEND == "cython"


def test_env_var_forces_fallback():
    env = dict(os.environ, PROJCLOSURE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import projclosure; print(projclosure.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@needs_ext
def test_parity_on_corpus():
    for S in full_corpus():
        S = simplicial(S)
        I = toric_ideal(S)
        order = graded_order(S, S.extremal)
        a = _binomial_gb(I.generators, order, True, _kernels_py.BinomialBasis)
        b = _binomial_gb(I.generators, order, True, _cy.BinomialBasis)
        assert a == b


@needs_ext
def test_overflow_falls_back():
    from projclosure.algebra import MonomialOrder, Polynomial
    from projclosure.groebner import reduced_gb
    big = 2 ** 40
    gens = [Polynomial.binomial((big, 0, 0), (0, 1, 1)), Polynomial.binomial((0, 2, 0), (1, 0, 1))]
    order = MonomialOrder.degrevlex(3)
    with pytest.raises(OverflowError):
        _binomial_gb(gens, order, True, _cy.BinomialBasis)
    ref = _binomial_gb(gens, order, True, _kernels_py.BinomialBasis)
    assert list(reduced_gb(gens, order)) == ref


@needs_ext
def test_kernel_primitives_agree():
    args = (4, (0, 1, 2, 3), (1, 2, 3, 4))
    p, c = _kernels_py.BinomialBasis(*args), _cy.BinomialBasis(*args)
    for a, b in [((2, 0, 0, 0), (0, 1, 0, 0)), ((0, 0, 1, 1), (1, 0, 0, 1)), ((3, 0, 0, 0), (0, 0, 1, 0))]:
        assert p.compare(a, b) == c.compare(a, b)
        assert p.orient(a, b) == c.orient(a, b)
        ra, rc = p.reduce(*p.orient(a, b)), c.reduce(*c.orient(a, b))
        assert ra == rc
        if ra is not None:
            p.append(*ra)
            c.append(*rc)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            assert p.spoly(i, j) == c.spoly(i, j)
