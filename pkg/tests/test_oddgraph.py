from fractions import Fraction
from math import comb

import pytest

from sl2bi.errors import BadVertex, TooLarge
from sl2bi.exactlinalg import Matrix, rank
from sl2bi.oddgraph import (
    BITriple,
    adjacency_spectrum_matches,
    base_independence,
    build_odd_graph,
    decompose_standard_module,
    dual_adjacency,
    match_with_v1,
    terwilliger_images,
    verify_homomorphism,
)
from sl2bi.sl2modules import IrrLabel


def test_d1_is_triangle():
    g = build_odd_graph(1)
    assert g.A == Matrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_sizes_and_valency(d):
    g = build_odd_graph(d)
    assert g.size == comb(2 * d + 1, d)
    assert all(sum(row) == d + 1 for row in g.A.tolist())
    assert g.A == g.A.T


def test_a_squared_counts_common_neighbours():
    g = build_odd_graph(3)
    sq = g.A @ g.A
    for i, x in enumerate(g.vertices):
        for j, y in enumerate(g.vertices):
            # vertices disjoint from both x and y: d-subsets of the complement of x | y
            assert sq[i, j] == comb(7 - bin(x | y).count("1"), 3)


def test_vertex_validation():
    with pytest.raises(ValueError):
        build_odd_graph(0)
    with pytest.raises(TooLarge):
        build_odd_graph(6)
    g = build_odd_graph(2)
    with pytest.raises(BadVertex):
        dual_adjacency(g, [0, 1, 2])
    with pytest.raises(BadVertex):
        dual_adjacency(g, [0, 7])


def test_dual_adjacency_values():
    g = build_odd_graph(2)
    a_star = dual_adjacency(g, [0, 1])
    assert a_star[g.index([0, 1]), g.index([0, 1])] == 4
    assert a_star[g.index([0, 2]), g.index([0, 2])] == Fraction(2, 3)
    assert set(a_star.diagonal()) == {4, Fraction(2, 3), Fraction(-8, 3)}


def test_petersen_spectrum_against_trace_oracle():
    g = build_odd_graph(2)
    a = g.A
    ident = Matrix.identity(10)
    # minimal polynomial (t-3)(t-1)(t+2); then trace(A^0), trace(A), trace(A^2)
    # determine the multiplicities (m3, m1, m-2) uniquely
    assert ((a - ident * 3) @ (a - ident) @ (a + ident * 2)).is_zero()
    assert (a.trace(), (a @ a).trace()) == (0, 30)
    m3, m1, m_2 = 1, 5, 4
    assert m3 + m1 + m_2 == 10 and 3 * m3 + m1 - 2 * m_2 == 0 and 9 * m3 + m1 + 4 * m_2 == 30
    assert adjacency_spectrum_matches(g, {3: 1, 1: 5, -2: 4})
    assert not adjacency_spectrum_matches(g, {3: 1, 1: 4, -2: 5})


@pytest.mark.parametrize("d", [1, 2, 3])
def test_homomorphism(d):
    g = build_odd_graph(d)
    assert all(verify_homomorphism(terwilliger_images(g, (1 << d) - 1)).values())


def test_homomorphism_negative_control():
    g = build_odd_graph(2)
    t = terwilliger_images(g, 3)
    bumped = t.Y + Matrix.diag([1] + [0] * 9)
    report = verify_homomorphism(BITriple(t.X, bumped, t.Z))
    assert not report["{X,Y}-Z=0"]


@pytest.mark.parametrize("d,x0", [(1, None), (2, None), (2, [1, 3]), (3, [0, 4, 6])])
def test_match_with_v1(d, x0):
    assert all(match_with_v1(d, x0).values())


def test_base_independence():
    assert base_independence(2, [0, 1], [2, 4])
    assert base_independence(2, [0, 1], [3, 4])


def test_d2_decomposition():
    rep = decompose_standard_module(2)
    left, right = rep.factor_decompositions
    assert dict(left) == {IrrLabel(3, 1): 1, IrrLabel(1, -1): 2}
    assert dict(right) == {IrrLabel(2, 1): 1, IrrLabel(0, -1): 1}
    dims = sorted(s.dim for s in rep.summands for _ in range(s.multiplicity))
    assert dims == [1, 1, 1, 2, 2, 3]
    assert rep.total_dim == 10 and rep.all_leonard
    assert rep.x_spectrum() == {-2: 4, 1: 5, 3: 1}
    (big,) = [s for s in rep.summands if s.dim == 3]
    assert sorted(big.spectra["X"]) == [-2, 1, 3]


@pytest.mark.parametrize("d", [1, 3])
def test_decomposition_fills_space(d):
    rep = decompose_standard_module(d)
    g = build_odd_graph(d)
    assert rep.total_dim == g.size
    assert rep.all_leonard
    assert adjacency_spectrum_matches(g, rep.x_spectrum())
    assert rank(Matrix.hstack([e for s in rep.summands for e in s.embeddings])) == g.size


def test_decomposition_json_shape():
    data = decompose_standard_module(1).to_json()
    assert data["d"] == 1 and data["base"] == [0] and data["dim"] == 3
    keys = set(data["summands"][0])
    assert {"dims", "multiplicity", "params", "spectraX", "spectraY", "spectraZ", "leonard"} <= keys


def test_large_d_is_gated():
    with pytest.raises(TooLarge):
        decompose_standard_module(5)
