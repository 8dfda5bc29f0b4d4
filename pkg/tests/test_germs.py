from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logdelta.cyclic import SMOOTH, CyclicQuot, LatticeValuation, enumerate_deep_valuations
from logdelta.exact import AffineForm, parse_form
from logdelta.germs import (
    Axis,
    BlowupWeights,
    Branch,
    Germ,
    Newton,
    Tangent,
    classify_germ,
    count_deep_divisors,
    deep_valuations,
    is_log_canonical,
    min_discrepancy_germ,
    path_log_discrepancy_form,
    solve_blowup_weights,
)

b = AffineForm.param()
STANDARD = [F(1, 2), F(2, 3), F(3, 4), F(4, 5), F(5, 6)]


def germ(quot, *branches):
    return Germ(quot, tuple(Branch(AffineForm.coerce(c), shape, f"B{i}") for i, (c, shape) in enumerate(branches)))


def brute_tangent_min(c, c1, m, box=200):
    """Oracle: monomial weights up to ``box`` plus one recursion at the kink (m, 1)."""
    best = None
    for al in range(1, box + 1):
        for be in range(1, box + 1):
            ell = al + be - c * al - c1 * min(al, m * be)
            best = ell if best is None else min(best, ell)
    exc = 1 - (m + 1 - c * m - c1 * m)
    for al in range(1, box + 1):
        for be in range(1, box + 1):
            best = min(best, al * (1 - exc) + be * (1 - c1))
    return best - 1


def test_shape_validation():
    with pytest.raises(ValueError):
        Axis(3)
    with pytest.raises(ValueError):
        Tangent(1, 1)
    with pytest.raises(ValueError):
        Newton(1, 3)
    with pytest.raises(ValueError, match="one branch per coordinate axis"):
        germ(SMOOTH, (F(1, 2), Axis(1)), (F(1, 2), Axis(1)))
    with pytest.raises(ValueError, match="not invariant"):
        germ(CyclicQuot(3, 1), (F(1, 2), Tangent(1, 2)))
    germ(CyclicQuot(3, 2), (F(1, 2), Tangent(1, 2)))
    germ(CyclicQuot(5, 2), (F(1, 2), Newton(3, 1 + 5)))


def test_monomial_values():
    assert Tangent(1, 3).value(5, 1) == 3
    assert Tangent(2, 3).value(1, 5) == 3
    assert Newton(2, 3).value(3, 2) == 6
    assert Newton(2, 3).swapped() == Newton(3, 2)


def test_classify_examples():
    c1 = classify_germ(germ(SMOOTH, (F(6, 7), Axis(1)), (F(1, 2), Tangent(1, 2))), 0)
    assert (c1.case, c1.valid) == (1, True)
    c3 = classify_germ(germ(CyclicQuot(2, 1), (F(6, 7), Axis(1))), 0)
    assert (c3.case, c3.valid) == (3, True)
    c3b = classify_germ(germ(CyclicQuot(2, 1), (F(6, 7), Axis(1)), (F(1, 2), Axis(2))), 0)
    assert (c3b.case, c3b.valid) == (3, True)
    bad = classify_germ(germ(CyclicQuot(7, 1), (F(6, 7), Axis(1)), (F(1, 2), Axis(2))), 0)
    assert (bad.case, bad.valid) == (3, False)
    assert "7/2" in bad.reason
    edge = classify_germ(germ(SMOOTH, (F(13, 14), Axis(1)), (F(1, 2), Tangent(1, 2))), 0)
    assert (edge.case, edge.valid) == (1, False)
    two = classify_germ(germ(SMOOTH, (F(6, 7), Axis(1)), (F(1, 2), Axis(2))), 0)
    assert (two.case, two.valid) == (2, True)
    with pytest.raises(ValueError, match="k > 1"):
        classify_germ(germ(SMOOTH, (F(6, 7), Axis(1)), (F(6, 7), Axis(2))), 0)


def test_classify_agrees_with_deep_count_on_grid():
    """Invalid exactly when a deep divisor exists, for axis germs on the standard grid."""
    checked = 0
    for n in range(2, 13):
        for q in range(1, n):
            if gcd(n, q) != 1:
                continue
            for b1 in [F(0)] + STANDARD:
                for den in (14, 21, 28, 42):
                    for num in range(den * 6 // 7, den):
                        t = F(num, den)
                        if t < F(6, 7):
                            continue
                        g = germ(CyclicQuot(n, q), (t, Axis(1)), (b1, Axis(2)))
                        verdict = classify_germ(g, 0)
                        deep, _ = count_deep_divisors(g, 0)
                        assert verdict.valid == (deep == 0), (n, q, b1, t)
                        checked += 1
    assert checked > 1000


def test_min_discrepancy_examples():
    val, wit = min_discrepancy_germ(germ(CyclicQuot(2, 1), (F(6, 7), Axis(1))), 0)
    assert val == F(-3, 7) and wit.path == (LatticeValuation(F(1, 2), F(1, 2)),)
    assert min_discrepancy_germ(germ(SMOOTH), 0)[0] == 1
    val, _ = min_discrepancy_germ(germ(SMOOTH, (F(6, 7), Axis(1)), (F(1, 2), Tangent(1, 2))), 0)
    assert val == F(-5, 7) and val > F(-6, 7)


@pytest.mark.parametrize("c", [F(6, 7), F(9, 10), F(11, 12), F(13, 14)])
@pytest.mark.parametrize("c1,m", [(F(1, 2), 2), (F(1, 2), 3), (F(2, 3), 2)])
def test_min_discrepancy_tangent_matches_brute_force(c, c1, m):
    g = germ(SMOOTH, (c, Axis(1)), (c1, Tangent(1, m)))
    try:
        val, _ = min_discrepancy_germ(g, 0)
    except ValueError:
        assert brute_tangent_min(c, c1, m, box=40) <= -1
        return
    assert val == brute_tangent_min(c, c1, m, box=60)


def test_count_deep_examples():
    assert count_deep_divisors(germ(CyclicQuot(2, 1), (F(6, 7), Axis(1))), 0)[0] == 0
    assert count_deep_divisors(germ(SMOOTH), 0)[0] == 0
    # transverse smooth crossing of 19/21 and 2/3 is shallow; the deep divisor
    # of 13-1 sits over the 1/3(1,1) point
    assert count_deep_divisors(germ(SMOOTH, (F(19, 21), Axis(1)), (F(2, 3), Axis(2))), 0)[0] == 0
    n, found = count_deep_divisors(germ(CyclicQuot(3, 1), (F(19, 21), Axis(1)), (F(2, 3), Axis(2))), 0)
    assert n == 1 and found[0].discrepancy == F(-6, 7)


@settings(max_examples=150, deadline=None)
@given(
    st.integers(2, 20).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))),
    st.sampled_from([F(0)] + STANDARD),
    st.fractions(F(6, 7), F(41, 42), max_denominator=42),
)
def test_axis_germs_agree_with_toric_enumeration(nq, b1, t):
    n, q = nq
    if gcd(n, q) != 1:
        return
    g = germ(CyclicQuot(n, q), (t, Axis(1)), (b1, Axis(2)))
    via_germ = [(d.path[0], d.log_discrepancy) for d in deep_valuations(g, 0)]
    via_toric = enumerate_deep_valuations(CyclicQuot(n, q), t, b1, 0)
    assert sorted(via_germ) == sorted(via_toric)


def test_non_primitive_newton_counts_conjugate_points():
    from logdelta.germs import _points_on_kink

    # x^2 + y^2 = (x + iy)(x - iy): the 1/2(1,1) action keeps both lines,
    # the 1/4(3,1) action exchanges them
    assert _points_on_kink(SMOOTH, Newton(2, 2)) == 2
    assert _points_on_kink(CyclicQuot(2, 1), Newton(2, 2)) == 2
    assert _points_on_kink(CyclicQuot(4, 3), Newton(2, 2)) == 1
    assert _points_on_kink(SMOOTH, Newton(2, 3)) == 1
    assert _points_on_kink(SMOOTH, Tangent(1, 2)) == 1


def test_path_form_is_affine_in_parameter():
    g = germ(CyclicQuot(3, 1), (b, Axis(1)), (F(2, 3), Axis(2)))
    (d,) = deep_valuations(g, F(19, 21))
    form = path_log_discrepancy_form(g, d.path)
    assert form(F(19, 21)) == F(1, 7)
    assert form == AffineForm(F(4, 9), F(-1, 3))
    assert (F(1, 7) - form.constant) / form.slope == F(19, 21)


def test_is_log_canonical():
    assert is_log_canonical(germ(SMOOTH, (1, Axis(1)), (1, Axis(2))), [1, 1])
    assert not is_log_canonical(germ(SMOOTH, (1, Axis(1)), (1, Tangent(1, 2))), [1, 1])
    assert is_log_canonical(germ(SMOOTH, (1, Axis(1)), (F(1, 2), Tangent(1, 2))), [1, F(1, 2)])


def test_weight_equation_single_solution():
    sols = solve_blowup_weights(parse_form("7/3-2b"), parse_form("5/6"), F(6, 7), 1, alpha_ge_beta_plus_1=True, theta_max=6)
    assert sols == [(BlowupWeights(2, 1, 1), F(7, 8))]


def test_weight_system_of_the_11th_configuration():
    sols = solve_blowup_weights(parse_form("5/2-2b"), parse_form("7/2-3b"), F(37, 42), 1)
    assert [(w.alpha, w.beta, w.theta) for w, _ in sols] == [
        (1, 2, 1), (1, 3, 1), (1, 4, 1), (1, 5, 1), (2, 1, 1), (2, 3, 1), (3, 1, 1), (1, 1, 2)]
    assert [x for _, x in sols] == [F(15, 16), F(10, 11), F(25, 28), F(15, 17), F(13, 14), F(23, 26), F(8, 9), F(9, 10)]


def test_weight_solver_errors():
    assert solve_blowup_weights(AffineForm(), AffineForm(), F(6, 7), 1) == []
    with pytest.raises(ValueError, match="no klt solutions"):
        solve_blowup_weights(AffineForm.const(1), AffineForm.const(F(3, 2)), F(6, 7), 1)
    with pytest.raises(ValueError, match="empty"):
        solve_blowup_weights(AffineForm(), AffineForm(), 1, 1)
    with pytest.raises(ValueError):
        BlowupWeights(2, 4, 1)


forms = st.builds(
    AffineForm,
    st.fractions(0, 3, max_denominator=12),
    st.fractions(-3, 0, max_denominator=12),
)


@settings(max_examples=150, deadline=None)
@given(forms, forms)
def test_weight_solver_swap_and_back_substitution(m1, m2):
    lo, hi = F(6, 7), F(1)
    try:
        a = solve_blowup_weights(m1, m2, lo, hi)
    except ValueError:
        with pytest.raises(ValueError):
            solve_blowup_weights(m2, m1, lo, hi)
        return
    c = solve_blowup_weights(m2, m1, lo, hi)
    assert sorted((w.beta, w.alpha, w.theta, x) for w, x in a) == sorted((w.alpha, w.beta, w.theta, x) for w, x in c)
    for w, x in a:
        assert w.alpha * (1 - m1(x)) + w.beta * (1 - m2(x)) == F(1, w.theta)
        assert lo <= x < hi
