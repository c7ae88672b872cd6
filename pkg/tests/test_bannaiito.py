from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sl2bi.bannaiito import (
    EVEN,
    ODD,
    SIGN_TWISTS,
    BIModuleParams,
    BITriple,
    algebra_dimension,
    bi_casimir,
    build_bi_module,
    central_elements,
    cubic_identities,
    identify_irreducible,
    is_irreducible_matrix,
    is_irreducible_params,
    leonard_check,
    leonard_predict,
    spectrum,
    twist,
)
from sl2bi.errors import DimMismatch, IrrationalSpectrum, NotIrreducible, ParityMismatch
from sl2bi.exactlinalg import Matrix, charpoly

half = st.fractions(min_value=-3, max_value=3, max_denominator=2)


def params(parity=st.sampled_from([ODD, EVEN]), n_max=4):
    def build(args):
        par, k, a, b, c, tw = args
        n = 2 * k if par == ODD else 2 * k + 1
        return BIModuleParams(par, n, a, b, c, tw)

    return st.tuples(parity, st.integers(0, n_max // 2), half, half, half, st.sampled_from(SIGN_TWISTS)).map(build)


O2 = BIModuleParams(ODD, 2, Fraction(2), Fraction(-3, 2), Fraction(-2))


def test_one_dimensional_odd():
    t = build_bi_module(BIModuleParams(ODD, 0, 3, Fraction(1, 2), -1))
    assert (t.X, t.Y, t.Z) == (Matrix([[3]]), Matrix([[Fraction(1, 2)]]), Matrix([[-1]]))


def test_odd_two_diagonal_and_subdiagonal():
    t = build_bi_module(O2)
    assert t.X.diagonal() == [1, -2, 3]
    assert [t.X[i + 1, i] for i in range(2)] == [1, 1]


def test_even_twisted_traces():
    t = build_bi_module(BIModuleParams(EVEN, 1, Fraction(3, 2), 1, Fraction(3, 2), (-1, 1)))
    assert t.dim == 2
    assert t.X.trace() == 1 and t.Y.trace() == -1


def test_parity_mismatch_rejected():
    with pytest.raises(ParityMismatch):
        BIModuleParams(ODD, 1, 1, 1, 1)
    with pytest.raises(ParityMismatch):
        BIModuleParams(EVEN, 2, 1, 1, 1)


def test_triple_shape_check():
    with pytest.raises(DimMismatch):
        BITriple(Matrix.zeros(2), Matrix.zeros(2), Matrix.zeros(3))


def test_zero_triple():
    z = BITriple(Matrix.zeros(2), Matrix.zeros(2), Matrix.zeros(2))
    assert all(m.is_zero() for m in central_elements(z))
    assert bi_casimir(z).is_zero()


def test_twists():
    t = build_bi_module(O2)
    assert twist(t, (1, 1)) == t
    m = twist(t, (-1, -1))
    assert (m.X, m.Y, m.Z) == (-t.X, -t.Y, t.Z)
    assert twist(twist(t, (1, -1)), (1, -1)) == t
    c = twist(t, 1)
    assert (c.X, c.Y, c.Z) == (t.Y, t.Z, t.X)
    assert twist(twist(twist(t, 1), 1), 1) == t
    n = twist(t, (-1, 1))
    assert (n.X, n.Y, n.Z) == (-t.X, t.Y, -t.Z)


@given(params())
def test_central_elements_are_scalars(p):
    t = build_bi_module(p)
    for m in central_elements(t):
        assert m.scalar_value() is not None
    assert all(cubic_identities(t).values())


@given(params(), st.sampled_from([0, 1, 2]))
def test_cubic_identities_survive_twists(p, k):
    assert all(cubic_identities(twist(build_bi_module(p), k)).values())


# -- irreducibility -------------------------------------------------------


def test_irreducibility_examples():
    assert is_irreducible_params(O2)
    assert is_irreducible_params(BIModuleParams(ODD, 0, 1, 1, 1))
    assert is_irreducible_params(BIModuleParams(EVEN, 1, Fraction(3, 2), 1, Fraction(3, 2)))
    assert is_irreducible_matrix(build_bi_module(O2))
    assert algebra_dimension(list(build_bi_module(O2).operators().values())) == 9
    one = BITriple(Matrix([[1]]), Matrix([[2]]), Matrix([[3]]))
    assert is_irreducible_matrix(one)


def test_direct_sum_is_reducible():
    a = build_bi_module(BIModuleParams(ODD, 0, 1, 2, 3))
    b = build_bi_module(BIModuleParams(ODD, 0, -1, 0, 5))

    def block(x, y):
        return Matrix([[x[0, 0], 0], [0, y[0, 0]]])

    t = BITriple(block(a.X, b.X), block(a.Y, b.Y), block(a.Z, b.Z))
    assert algebra_dimension(list(t.operators().values())) <= 2
    assert not is_irreducible_matrix(t)


@given(params(n_max=3))
def test_parameter_criterion_agrees_with_burnside(p):
    assert is_irreducible_params(p) == is_irreducible_matrix(build_bi_module(p))


# -- identification -----------------------------------------------------------


def test_identify_examples():
    ident = identify_irreducible(build_bi_module(O2))
    assert ident.values == (2, Fraction(-3, 2), -2)
    assert ident.matches(O2)
    ev = identify_irreducible(build_bi_module(BIModuleParams(EVEN, 1, Fraction(3, 2), 1, Fraction(3, 2), (-1, 1))))
    assert ev.twist == (-1, 1)
    assert ev.squares == (Fraction(9, 4), 1, Fraction(9, 4))
    one = identify_irreducible(BITriple(Matrix([[1]]), Matrix([[2]]), Matrix([[3]])))
    assert one.values == (1, 2, 3)


@given(params())
def test_build_identify_round_trip(p):
    if is_irreducible_params(p):
        assert identify_irreducible(build_bi_module(p)).matches(p)


@given(params(parity=st.just(ODD)))
def test_odd_traces(p):
    t = build_bi_module(p.normalized())
    q = p.normalized()
    assert (t.X.trace(), t.Y.trace(), t.Z.trace()) == q.abc


@given(params(parity=st.just(EVEN)))
def test_even_traces_before_twist(p):
    t = build_bi_module(BIModuleParams(EVEN, p.n, p.a, p.b, p.c))
    target = Fraction(-(p.n + 1), 2)
    assert (t.X.trace(), t.Y.trace(), t.Z.trace()) == (target, target, target)


# -- Leonard triples ------------------------------------------------------------


def test_leonard_examples():
    assert leonard_predict(O2)
    assert not leonard_predict(BIModuleParams(ODD, 2, Fraction(1, 2), Fraction(-3, 2), -2))
    assert leonard_predict(BIModuleParams(ODD, 0, 5, 5, 5))
    assert leonard_check(build_bi_module(O2)).is_leonard
    bad = leonard_check(build_bi_module(BIModuleParams(ODD, 2, Fraction(1, 2), Fraction(-3, 2), -2)))
    assert not bad.is_leonard
    assert not bad.per_operator[0].diagonalizable
    assert leonard_check(BITriple(Matrix([[1]]), Matrix([[2]]), Matrix([[3]]))).is_leonard


def test_leonard_predict_needs_irreducible():
    reducible = BIModuleParams(ODD, 2, Fraction(1, 2), 0, 0)
    assert not is_irreducible_params(reducible)
    with pytest.raises(NotIrreducible):
        leonard_predict(reducible)


@given(params(n_max=4))
def test_leonard_prediction_matches_check(p):
    if is_irreducible_params(p):
        assert leonard_predict(p) == leonard_check(build_bi_module(p)).is_leonard


def test_leonard_json_shape():
    data = leonard_check(build_bi_module(O2)).to_json()
    assert data["schema"] == 1 and data["is_leonard"] is True
    assert data["operators"][0]["eigenvalues"] == {"-2": 1, "1": 1, "3": 1}


def test_spectrum_rejects_irrational_roots():
    rotation = Matrix([[0, -1], [1, 0]])
    assert charpoly(rotation) == [1, 0, 1]
    with pytest.raises(IrrationalSpectrum):
        spectrum(rotation)


def test_degenerate_and_irrational_spectra_are_not_leonard():
    rotation = Matrix([[0, -1], [1, 0]])
    v = leonard_check(BITriple(rotation, rotation, rotation))
    assert not v.is_leonard
    assert v.per_operator[0].diagnostic.startswith("not diagonalizable over the rationals")
    flat = Matrix.identity(2)
    v = leonard_check(BITriple(flat, Matrix([[0, 1], [1, 0]]), flat))
    assert not v.is_leonard
    assert v.per_operator[0].diagnostic == "repeated eigenvalue 1"
