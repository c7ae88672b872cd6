from fractions import Fraction
from itertools import product

import pytest

from sl2bi.bannaiito import (
    EVEN,
    ODD,
    BIModuleParams,
    bi_casimir,
    central_elements,
    is_irreducible_matrix,
    leonard_check,
    spectrum,
)
from sl2bi.errors import BadParity
from sl2bi.exactlinalg import Matrix
from sl2bi.sl2modules import build_irreducible, tensor_rep
from sl2bi.v1functor import (
    D4_DICTIONARY,
    check_explicit_basis,
    expected_casimir,
    expected_mu,
    explicit_w_basis,
    identify_tensor,
    identify_v1,
    v1_of,
    weight_subspace,
)

SIGNS = list(product((1, -1), repeat=2))


def _tensor(m, n, d=1, e=1):
    return tensor_rep(build_irreducible((m, d)), build_irreducible((n, e)))


def test_weight_subspace_examples():
    assert weight_subspace(_tensor(0, 0)).dim == 0
    ws = weight_subspace(_tensor(2, 3))
    assert ws.dim == 3
    # basis vectors are v_i (x) v_j with 2(i+j) = 4
    support = sorted(r for c in range(3) for r, x in enumerate(ws.basis.column_values(c)) if x)
    assert support == sorted(i * 4 + (2 - i) for i in range(3))
    assert weight_subspace(_tensor(1, 2)).dim == 2


@pytest.mark.parametrize("theta", [-3, -1, 1, 3])
def test_ladder_inclusions(theta):
    ws = weight_subspace(_tensor(2, 3, -1, 1), theta)
    assert all(ws.ladder.values())


def test_relations_on_two_three():
    mod = v1_of((2, 1), (3, 1))
    assert mod.dim == 3
    assert all(mod.relations.values())


def test_explicit_basis_examples():
    _, _, y = explicit_w_basis(2, 3)
    assert sorted(y.diagonal()) == [Fraction(-5, 2), Fraction(-1, 2), Fraction(3, 2)]
    w, x, _ = explicit_w_basis(0, 1)
    assert x == Matrix([[1]]) and w.cols == 1
    _, x, _ = explicit_w_basis(1, 2)
    assert x.trace() == 1
    with pytest.raises(BadParity):
        explicit_w_basis(2, 4)
    with pytest.raises(BadParity):
        explicit_w_basis(3, 2)


@pytest.mark.parametrize("m,n", [(m, n) for n in range(6) for m in range(n + 1) if (m + n) % 2])
def test_explicit_basis_matches_restriction(m, n):
    assert check_explicit_basis(m, n) == {"X": True, "Y": True}


def test_identify_examples():
    assert identify_v1(2, 3) == BIModuleParams(ODD, 2, 2, Fraction(-3, 2), -2)
    assert identify_v1(1, 2) == BIModuleParams(EVEN, 1, Fraction(3, 2), 1, Fraction(3, 2), (-1, 1))
    swapped = identify_v1(2, 3, swapped=True)
    mod = v1_of((3, 1), (2, 1))
    assert mod.identification.matches(swapped)
    assert spectrum(mod.triple.Y) == {Fraction(-3, 2): 1, Fraction(1, 2): 1, Fraction(5, 2): 1}


def test_d4_dictionary_covers_every_case():
    assert set(D4_DICTIONARY) == {(s, sg) for s in (False, True) for sg in SIGNS}


CASES = [(m, n, sg) for n in range(6) for m in range(n + 1) for sg in SIGNS]


@pytest.mark.parametrize("m,n,signs", CASES)
def test_v1_sweep(m, n, signs):
    for left, right in (((m, signs[0]), (n, signs[1])), ((n, signs[1]), (m, signs[0]))):
        mod = v1_of(left, right)
        if (m + n) % 2 == 0:
            assert mod.dim == 0
            continue
        assert mod.dim == min(m, n) + 1
        assert all(mod.relations.values())
        kappa, lam, mu = central_elements(mod.triple)
        assert kappa.is_zero() and lam.is_zero()
        assert mu == Matrix.scalar(mod.dim, expected_mu(left[0], right[0]))
        assert bi_casimir(mod.triple) == Matrix.scalar(mod.dim, expected_casimir(left[0], right[0]))
        assert is_irreducible_matrix(mod.triple)
        assert leonard_check(mod.triple).is_leonard
        assert mod.identification.matches(identify_tensor(left, right))
