import random

import pytest

from extshift.complexes import (
    ComplexError,
    SimplicialComplex,
    all_complexes,
    all_shifted_complexes,
    block_embed,
    cone,
    join,
    random_complex,
    suspension,
    two_points,
)
from extshift.exterior import face, vertices
from extshift.field import DimensionError, FieldMatrix, determinant, random_invertible_matrix
from oracle import leibniz_det

P = 2147483647
TWO_EDGES = SimplicialComplex.from_facets(4, [[1, 2], [3, 4]])


def downward_closed(c):
    return all(f & ~(1 << v) in c.faces for f in c.faces for v in vertices(f))


def test_from_facets_two_edges():
    expected = {0, face(1), face(2), face(3), face(4), face(1, 2), face(3, 4)}
    assert TWO_EDGES.faces == expected
    assert len(TWO_EDGES) == 7


def test_from_facets_edge_cases():
    assert SimplicialComplex.from_facets(3, []).faces == {0}
    assert len(SimplicialComplex.from_facets(3, [[1, 2, 3]])) == 8
    with pytest.raises(ComplexError):
        SimplicialComplex.from_facets(3, [[1, 4]])


def test_constructor_rejects_non_closed():
    with pytest.raises(ComplexError):
        SimplicialComplex(3, [0, face(1, 2)])
    with pytest.raises(ComplexError):
        SimplicialComplex(3, [face(1)])


def test_random_complexes_closed():
    rng = random.Random(1)
    for _ in range(50):
        assert downward_closed(random_complex(rng.randint(1, 8), rng))


def test_suspension_of_two_edges():
    s = suspension(TWO_EDGES)
    assert s.n == 6
    assert len(s) == 21
    assert s.dim == TWO_EDGES.dim + 1
    assert set(s.facets()) == {face(1, 2, 5), face(1, 2, 6), face(3, 4, 5), face(3, 4, 6)}
    assert s == join(TWO_EDGES, two_points())


def test_suspension_of_empty_is_two_points():
    assert suspension(SimplicialComplex.empty(0)) == two_points()


def test_cone():
    c = cone(TWO_EDGES)
    assert set(c.facets()) == {face(1, 2, 5), face(3, 4, 5)}


def test_join_identity_and_associativity():
    rng = random.Random(2)
    for _ in range(20):
        a, b, c = (random_complex(rng.randint(1, 3), rng) for _ in range(3))
        assert join(a, SimplicialComplex.empty(0)) == a
        assert join(SimplicialComplex.empty(0), a) == a
        assert join(join(a, b), c) == join(a, join(b, c))
        assert len(join(a, b)) == len(a) * len(b)


def convolve(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] += x * y
    return tuple(out)


def test_f_vector_of_join_is_convolution():
    rng = random.Random(3)
    for _ in range(30):
        a, b = random_complex(rng.randint(1, 4), rng), random_complex(rng.randint(1, 4), rng)
        assert join(a, b).f_vector() == convolve(a.f_vector(), b.f_vector())


def test_f_vector_examples():
    assert TWO_EDGES.f_vector() == (1, 4, 2)
    assert SimplicialComplex.simplex(3).f_vector() == (1, 3, 3, 1)
    assert SimplicialComplex.empty(3).f_vector() == (1,)


def test_nonfaces():
    assert TWO_EDGES.nonfaces_of_degree(2) == [face(1, 3), face(1, 4), face(2, 3), face(2, 4)]
    assert TWO_EDGES.nonfaces_of_degree(1) == []
    full = SimplicialComplex.simplex(4)
    assert all(full.nonfaces_of_degree(d) == [] for d in range(5))


def test_block_embed():
    assert block_embed(FieldMatrix.identity(2), 5, 1) == FieldMatrix.identity(5)
    phi = random_invertible_matrix(3, 7)
    big = block_embed(phi, 5, 2)
    for i in range(5):
        for j in range(5):
            inside = i >= 2 and j >= 2
            assert big[i, j] == (phi[i - 2, j - 2] if inside else int(i == j))
    with pytest.raises(DimensionError):
        block_embed(phi, 4, 2)


@pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (3, 5), (4, 5)])
def test_block_embed_determinant(k, n):
    phi = random_invertible_matrix(k, k * 10 + n)
    assert leibniz_det(block_embed(phi, n, 0).tolist()) % P == determinant(phi)


def test_enumeration_counts():
    # number of simplicial complexes (with the empty face) on 1..3 labelled vertices
    assert [len(all_complexes(n)) for n in range(4)] == [1, 2, 5, 19]
    assert len(all_complexes(4)) == 167
    assert all(c.is_shifted() for c in all_shifted_complexes(4))


def test_shifted_predicate():
    assert SimplicialComplex.from_facets(4, [[1, 2], [1, 3], [4]]).is_shifted()
    assert not TWO_EDGES.is_shifted()
