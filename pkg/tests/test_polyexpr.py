from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from horochow.errors import PolySyntaxError, UnknownIdentifier
from horochow.polyexpr import BinOp, Neg, Num, Pow, Var, parse_poly

GENS = ("h", "s", "q")


def test_precedence():
    e = parse_poly("-h^2*s + 3/2")
    assert e.root == BinOp("+", BinOp("*", Neg(Pow(Var("h"), 2)), Var("s")), Num(Fraction(3, 2)))


def test_identifiers_with_primes_and_digits():
    assert parse_poly("t'2*s3 - s'4").identifiers() == {"t'2", "s3", "s'4"}


def test_canonical_form():
    assert str(parse_poly("( h ^ 2 ) *  s+ -q")) == "h^2*s + -q"
    assert str(parse_poly("h - (s - q)")) == "h - (s - q)"
    assert str(parse_poly("(h*s)*q")) == "h*s*q"


def test_pretty_labels_and_glue():
    e = parse_poly("2*s'4 + t4 + 1/2*h^3")
    assert e.pretty({"s'4": "σ'4", "t4": "τ4"}) == "2σ'4 + τ4 + 1/2·h³"


@pytest.mark.parametrize(
    "text, offset",
    [("h^", 2), ("h +", 3), ("(h", 2), ("1/", 2), ("1/0", 2), ("", 0), ("h $ s", 2)],
)
def test_syntax_error_offsets(text, offset):
    with pytest.raises(PolySyntaxError) as info:
        parse_poly(text)
    assert info.value.position == offset


def test_unknown_identifier():
    with pytest.raises(UnknownIdentifier):
        parse_poly("h*x", names=GENS)
    with pytest.raises(UnknownIdentifier):
        parse_poly("h*x").to_poly(GENS)


def test_to_poly_matches_sympy_example():
    text = "28*h^4*s - 9*h^6 + 8*q*(h^2 + 3*s)"
    p = parse_poly(text).to_poly(GENS)
    symbols = sympy.symbols(GENS)
    oracle = sympy.Poly(sympy.sympify(text.replace("^", "**")), *symbols)
    assert p.terms == {m: Fraction(int(c.p), int(c.q)) for m, c in oracle.terms()}


# --- random expressions -----------------------------------------------------

atoms = st.one_of(
    st.sampled_from(GENS),
    st.builds(lambda a, b: f"{a}/{b}", st.integers(0, 9), st.integers(1, 5)),
    st.integers(0, 20).map(str),
)


def _combine(children):
    return st.one_of(
        st.tuples(children, st.sampled_from(["+", "-", "*"]), children).map(lambda t: f"({t[0]} {t[1]} {t[2]})"),
        children.map(lambda c: f"-{c}"),
        st.tuples(children, st.integers(0, 3)).map(lambda t: f"({t[0]})^{t[1]}"),
    )


exprs = st.recursive(atoms, _combine, max_leaves=8)


@given(exprs)
def test_canonical_round_trip(text):
    e = parse_poly(text)
    again = parse_poly(str(e))
    assert again == e
    assert str(again) == str(e)


@given(exprs)
def test_expansion_matches_sympy(text):
    p = parse_poly(text).to_poly(GENS)
    symbols = sympy.symbols(GENS)
    oracle = sympy.Poly(sympy.sympify(text.replace("^", "**"), rational=True), *symbols)
    want = {m: Fraction(int(c.p), int(c.q)) for m, c in oracle.terms() if c != 0}
    assert {m: c for m, c in p.terms.items() if c} == want
