"""The compiled and pure-Python kernels must agree exactly."""

import random

import pytest
from hypothesis import given, strategies as st

from extshift import _kernels_py, kernels
from oracle import fraction_pivots, leibniz_det

P = 2147483647

try:
    from extshift import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

needs_ext = pytest.mark.skipif(_kernels_c is None, reason="compiled extension not built")


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


def test_masks_and_rank():
    masks = _kernels_py.masks_of_size(5, 2)
    assert len(masks) == 10
    assert masks == sorted(masks)
    assert [_kernels_py.colex_rank(m) for m in masks] == list(range(10))


@given(st.integers(0, 2**32), st.integers(1, 8), st.integers(1, 8))
def test_python_pivots_match_fractions_for_small_entries(seed, r, c):
    # entries in {0, 1}; rank over F_p equals rank over Q for such tiny minors
    rng = random.Random(seed)
    rows = [[rng.randint(0, 1) for _ in range(c)] for _ in range(r)]
    if r <= 3:
        assert _kernels_py.echelon_pivots(rows, c, P) == fraction_pivots(rows, c)


@given(st.integers(0, 2**32), st.integers(1, 5))
def test_python_compound_matches_leibniz(seed, n):
    rng = random.Random(seed)
    phi = [[rng.randrange(P) for _ in range(n)] for _ in range(n)]
    levels = _kernels_py.compound_levels(phi, n, P)
    for k in range(1, n + 1):
        masks = _kernels_py.masks_of_size(n, k)
        for i, rm in enumerate(masks):
            for j, cm in enumerate(masks):
                rs = [b for b in range(n) if rm >> b & 1]
                cs = [b for b in range(n) if cm >> b & 1]
                assert levels[k][i][j] == leibniz_det([[phi[a][b] for b in cs] for a in rs]) % P


@needs_ext
@given(st.integers(0, 2**32), st.integers(0, 9), st.integers(0, 9), st.sampled_from([P, 65537, 1_000_000_007]))
def test_pivots_backends_agree(seed, r, c, p):
    rng = random.Random(seed)
    rows = [[rng.choice([0, 0, rng.randrange(p)]) for _ in range(c)] for _ in range(r)]
    assert _kernels_c.echelon_pivots(rows, c, p) == _kernels_py.echelon_pivots(rows, c, p)


@needs_ext
@given(st.integers(0, 2**32), st.integers(1, 7), st.sampled_from([P, 65537]))
def test_compound_backends_agree(seed, n, p):
    rng = random.Random(seed)
    phi = [[rng.choice([0, rng.randrange(p)]) for _ in range(n)] for _ in range(n)]
    dmax = rng.randint(0, n)
    assert _kernels_c.compound_levels(phi, dmax, p) == _kernels_py.compound_levels(phi, dmax, p)
