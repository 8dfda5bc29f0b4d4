from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from logdelta.exact import ALL_VALUES, NO_SOLUTION, AffineForm, af_eval, af_solve_zero, fmt_rat, parse_form, rat

b = AffineForm.param()
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=60)


def test_eval_examples():
    assert af_eval(3 - 3 * b, F(6, 7)) == F(3, 7)
    assert af_eval(b, F(5, 9)) == F(5, 9)
    # (104 - 105) / 8 by cross-multiplication
    assert af_eval(13 - 15 * b, F(7, 8)) == F(-1, 8)


def test_solve_zero_examples():
    assert af_solve_zero(AffineForm(F(-21, 4), 6)) == F(7, 8)
    assert af_solve_zero(AffineForm()) is ALL_VALUES
    assert af_solve_zero(AffineForm(5, 0)) is NO_SOLUTION


def test_rat_rejects_decimals():
    assert rat("6/7") == F(6, 7)
    assert rat("4/2") == 2
    with pytest.raises(ValueError):
        rat("0.5")
    with pytest.raises(TypeError):
        rat(True)


def test_text_forms():
    assert fmt_rat(F(4, 2)) == "2"
    assert fmt_rat(F(-3, 6)) == "-1/2"
    assert (3 - 3 * b).to_text() == "3 + -3*t"
    assert AffineForm.const(F(1, 2)).to_text() == "1/2"
    assert (13 - 15 * b).pretty() == "13-15b"
    assert (2 * b).pretty() == "2b"


@pytest.mark.parametrize(
    "text, form",
    [
        ("7/3-2b", AffineForm(F(7, 3), -2)),
        ("13 - 15*b", AffineForm(13, -15)),
        ("6(1-b)", AffineForm(6, -6)),
        ("3 + -3*t", AffineForm(3, -3)),
        ("t", AffineForm(0, 1)),
        ("1/2", AffineForm(F(1, 2), 0)),
    ],
)
def test_parse(text, form):
    assert parse_form(text) == form


@pytest.mark.parametrize("bad", ["", "2x", "1/2 +", "(1-b)"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_form(bad)


def test_product_of_two_parameters_is_rejected():
    with pytest.raises(TypeError):
        b * b


@given(rationals, rationals, rationals, rationals, rationals, rationals)
def test_linearity(c1, s1, c2, s2, k, p):
    f, g = AffineForm(c1, s1), AffineForm(c2, s2)
    assert af_eval(f + g, p) == af_eval(f, p) + af_eval(g, p)
    assert af_eval(f * k, p) == k * af_eval(f, p)


@given(rationals, rationals)
def test_root_back_substitutes(c, s):
    root = af_solve_zero(AffineForm(c, s))
    if isinstance(root, F):
        assert af_eval(AffineForm(c, s), root) == 0


@given(rationals, rationals)
def test_text_round_trip(c, s):
    f = AffineForm(c, s)
    assert parse_form(f.to_text()) == f


@given(st.integers(-1000, 1000), st.integers(1, 1000))
def test_reduction(a, d):
    assert rat(f"{2 * a}/{2 * d}") == rat(f"{a}/{d}")
