from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sl2bi.skewring import (
    E,
    F,
    H,
    ONE,
    RHO_ELT,
    PBWMonomial,
    RingElement,
    TensorElement,
    antipode,
    casimir,
    comultiply,
    counit,
    format_element,
    multiply,
    normal_form,
    parse_element,
    rewrite_step,
    tensor,
    termination_measure,
)
from sl2bi.sl2modules import act, build_irreducible

words = st.text(alphabet="EFHR", max_size=6)
short_words = st.text(alphabet="EFHR", max_size=4)


def el(text):
    return parse_element(text)


# -- worked examples ---------------------------------------------------------------


def test_single_commutator():
    assert normal_form("FE") == el("E F - H")


def test_rho_conjugates_e_to_f():
    assert normal_form(["rho", "E", "rho"]) == F


def test_f_times_e_squared():
    assert normal_form("FEE") == el("E^2 F - 2 E H - 2 E")


def test_casimir_normal_form():
    assert casimir() == 2 * E * F + Fraction(1, 2) * H * H - H
    assert format_element(casimir()) == "-H + 1/2 H^2 + 2 E F"
    assert RHO_ELT * casimir() == casimir() * RHO_ELT
    assert counit(casimir()) == 0


def test_casimir_is_central():
    c = casimir()
    for g in (E, F, H, RHO_ELT):
        assert g * c == c * g


def test_coproduct_examples():
    assert comultiply(H) == tensor(H, ONE) + tensor(ONE, H)
    assert comultiply(ONE) == tensor(ONE, ONE)
    er = E * RHO_ELT
    assert comultiply(er) == tensor(er, RHO_ELT) + tensor(RHO_ELT, er)


def test_counit_examples():
    assert counit(E) == 0
    assert counit(RHO_ELT) == 1
    assert counit(3 + 2 * H * RHO_ELT) == 3


def test_antipode_examples():
    assert antipode(E) == -E
    assert antipode(RHO_ELT) == RHO_ELT
    assert antipode(E * RHO_ELT) == -F * RHO_ELT


def test_unknown_letter_rejected():
    with pytest.raises(ValueError):
        normal_form("EX")


# -- rewriting system ---------------------------------------------------------


@given(st.text(alphabet="EFHR", max_size=8))
def test_every_rewrite_step_lowers_the_measure(word):
    step = rewrite_step(word)
    if step is None:
        return
    before = termination_measure(word)
    for _, w in step:
        assert termination_measure(w) < before


def test_measure_needs_rho_pairs_before_inversions():
    # FEFF -> EFFF - HFF: the lower-order term has more inversions than the
    # source word but one fewer Lie letter.
    assert termination_measure("HFF")[0] < termination_measure("FEFF")[0]
    assert termination_measure("HFF")[2] > termination_measure("FEFF")[2]


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 1))
def test_pbw_monomials_are_fixed_points(i, j, k, h):
    word = "E" * i + "F" * j + "H" * k + "R" * h
    assert normal_form(word) == RingElement({PBWMonomial(i, j, k, h): 1})


@given(short_words, short_words, short_words)
def test_associativity(a, b, c):
    x, y, z = normal_form(a), normal_form(b), normal_form(c)
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


def _word_matrix(rep, word):
    m = rep.power("E", 0)
    names = {"E": "E", "F": "F", "H": "H", "R": "rho"}
    for letter in word:
        m = m @ rep.generator(names[letter])
    return m


@given(words, st.integers(0, 4), st.sampled_from([1, -1]))
def test_normal_form_agrees_with_matrices(word, n, sign):
    rep = build_irreducible((n, sign))
    assert act(rep, normal_form(word)) == _word_matrix(rep, word)


# -- Hopf structure ------------------------------------------------------------


@given(short_words, short_words)
def test_coproduct_is_multiplicative(a, b):
    x, y = normal_form(a), normal_form(b)
    assert comultiply(x * y) == comultiply(x) * comultiply(y)


@given(words)
def test_counit_and_antipode_laws(word):
    x = normal_form(word)
    d = comultiply(x)
    eps = lambda r: TensorElement.scalar(counit(r))  # noqa: E731
    assert d.factor(1, eps).contract() == x
    assert d.factor(0, eps).contract() == x
    s = lambda r: TensorElement.from_ring(antipode(r))  # noqa: E731
    assert d.factor(1, s).contract() == counit(x) * ONE
    assert d.factor(0, s).contract() == counit(x) * ONE


@pytest.mark.parametrize("g", [E, F, H, RHO_ELT], ids=["E", "F", "H", "rho"])
def test_coassociativity_on_generators(g):
    d = comultiply(g)
    assert d.factor(0, comultiply) == d.factor(1, comultiply)


# -- text form -------------------------------------------------------------


def test_parser_grammar():
    assert el("rho*E*rho") == F
    assert el("(E + F)^2") == E * E + E * F + F * E + F * F
    assert el("-3/2 H rho") == Fraction(-3, 2) * H * RHO_ELT
    assert el("0") == RingElement()
    with pytest.raises(ValueError):
        el("E +")


@given(words, st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_print_parse_round_trip(word, c):
    x = c * normal_form(word) + normal_form(word[::-1])
    assert parse_element(format_element(x)) == x
