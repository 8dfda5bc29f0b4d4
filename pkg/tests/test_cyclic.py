from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logdelta.cyclic import (
    SMOOTH,
    CyclicQuot,
    LatticeValuation,
    chain_discrepancies,
    chain_matrix,
    enumerate_deep_valuations,
    hj_expand,
    hj_reconstruct,
    resolution_valuations,
    toric_log_discrepancy,
)
from logdelta.exact import AffineForm
from logdelta.linalg import is_negative_definite

b = AffineForm.param()


def cf_value(chain):
    """Independent oracle: evaluate c1 - 1/(c2 - 1/...) with signs flipped."""
    v = F(-chain[-1])
    for c in reversed(chain[:-1]):
        v = -c - 1 / v
    return v


def brute_deep(n, q, e1, e2, bound):
    """Independent oracle: scan i/n, j/n directly, test membership and primitivity."""
    out = []
    top = int(bound / min(e1, e2) * n) + 1
    for i in range(0, top + 1):
        for j in range(0, top + 1):
            if i == 0 or j == 0:
                continue
            if (i - j * q) % n:
                continue
            if any((i % k == 0 and j % k == 0 and ((i // k - (j // k) * q) % n == 0)) for k in range(2, max(i, j) + 1)):
                continue
            ell = F(i, n) * e1 + F(j, n) * e2
            if ell <= bound:
                out.append(((F(i, n), F(j, n)), ell))
    return sorted(out, key=lambda t: (t[1], t[0]))


def test_type_invariants():
    with pytest.raises(ValueError, match="gcd"):
        CyclicQuot(4, 2)
    with pytest.raises(ValueError):
        CyclicQuot(3, 3)
    assert CyclicQuot(1, 1) == SMOOTH
    assert CyclicQuot(7, 4).dual == CyclicQuot(7, 2)
    assert str(CyclicQuot(3, 2)) == "1/3(2,1)"


@pytest.mark.parametrize("n,q,chain", [(2, 1, [-2]), (7, 4, [-2, -4]), (8, 3, [-3, -3]), (5, 4, [-2] * 4), (5, 1, [-5])])
def test_hj_examples(n, q, chain):
    assert hj_expand(CyclicQuot(n, q)) == chain
    assert hj_reconstruct(chain) == CyclicQuot(n, q)
    assert cf_value(chain) == F(n, q)


def test_hj_errors():
    with pytest.raises(ValueError, match="nothing to resolve"):
        hj_expand(SMOOTH)
    with pytest.raises(ValueError, match="not a minimal chain"):
        hj_reconstruct([-2, -1])


def test_hj_roundtrip_exhaustive():
    count = 0
    for n in range(2, 501):
        for q in range(1, n):
            if gcd(n, q) != 1:
                continue
            s = CyclicQuot(n, q)
            chain = hj_expand(s)
            assert all(c <= -2 for c in chain)
            assert hj_reconstruct(chain) == s
            count += 1
    assert count == sum(1 for n in range(2, 501) for q in range(1, n) if gcd(n, q) == 1)


@given(st.integers(2, 60).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))))
def test_chain_negative_definite(nq):
    n, q = nq
    if gcd(n, q) != 1:
        return
    assert is_negative_definite(chain_matrix(hj_expand(CyclicQuot(n, q))))


def test_chain_discrepancy_examples():
    assert chain_discrepancies([-2], 6 - 6 * b) == [3 - 3 * b]
    assert chain_discrepancies([-2, -2]) == [AffineForm(), AffineForm()]
    # the [-2,-2] tail next to a multiplicity 6-6b branch carries 4-4b, 2-2b
    assert chain_discrepancies([-2, -2], 6 - 6 * b) == [4 - 4 * b, 2 - 2 * b]


def test_du_val_iff_crepant():
    for n in range(2, 31):
        for q in range(1, n):
            if gcd(n, q) != 1:
                continue
            chain = hj_expand(CyclicQuot(n, q))
            zero = all(a == AffineForm() for a in chain_discrepancies(chain))
            assert zero == all(c == -2 for c in chain)


def test_toric_log_discrepancy_examples():
    s = CyclicQuot(2, 1)
    ell = toric_log_discrepancy(s, b, 0, LatticeValuation(F(1, 2), F(1, 2)))
    assert ell(F(6, 7)) == F(4, 7)
    assert toric_log_discrepancy(SMOOTH, 0, 0, LatticeValuation(1, 1)) == AffineForm.const(2)
    assert toric_log_discrepancy(s, 6 - 6 * b, 0, LatticeValuation(F(5, 2), F(1, 2))) == 15 * b - 12
    with pytest.raises(ValueError):
        toric_log_discrepancy(s, 0, 0, LatticeValuation(F(1, 2), 0))


def test_enumerate_examples():
    assert enumerate_deep_valuations(CyclicQuot(2, 1), 6 - 6 * b, 0, F(8, 9)) == []
    assert enumerate_deep_valuations(SMOOTH, F(6, 7), F(1, 2), 0) == []
    # the 13-1 germ at t = 19/21: 1/3(1,1) with C on one axis and 2/3 B1 on the other
    found = enumerate_deep_valuations(CyclicQuot(3, 1), F(19, 21), F(2, 3), 0)
    assert found == [(LatticeValuation(F(1, 3), F(1, 3)), F(1, 7))]
    with pytest.raises(ValueError, match="not klt"):
        enumerate_deep_valuations(SMOOTH, 1, 0, 0)


@settings(max_examples=200, deadline=None)
@given(
    st.integers(2, 20).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))),
    st.fractions(0, F(41, 42), max_denominator=42),
    st.fractions(0, F(41, 42), max_denominator=42),
)
def test_enumeration_matches_brute_force(nq, d1, d2):
    n, q = nq
    if gcd(n, q) != 1:
        return
    got = enumerate_deep_valuations(CyclicQuot(n, q), d1, d2, 0)
    want = brute_deep(n, q, 1 - d1, 1 - d2, F(1, 7))
    assert [((v.x, v.y), ell) for v, ell in got] == want


@settings(max_examples=200, deadline=None)
@given(
    st.integers(2, 25).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))),
    st.fractions(0, F(41, 42), max_denominator=42),
    st.fractions(0, F(41, 42), max_denominator=42),
)
def test_enumeration_swap_symmetry(nq, d1, d2):
    n, q = nq
    if gcd(n, q) != 1:
        return
    s = CyclicQuot(n, q)
    a = enumerate_deep_valuations(s, d1, d2, 0)
    c = enumerate_deep_valuations(s.dual, d2, d1, 0)
    assert sorted((v.swapped(), ell) for v, ell in a) == sorted(c)


def test_chain_matches_toric_route_all_n_le_30():
    """Linear-system coefficients equal 1 - l(v) at every chain node."""
    mults = [(AffineForm(), AffineForm()), (6 - 6 * b, AffineForm()), (b, AffineForm.const(F(1, 2))), (AffineForm.const(F(2, 3)), b)]
    for n in range(2, 31):
        for q in range(1, n):
            if gcd(n, q) != 1:
                continue
            s = CyclicQuot(n, q)
            chain = hj_expand(s)
            for left, right in mults:
                coeffs = chain_discrepancies(chain, left, right)
                for a, v in zip(coeffs, resolution_valuations(s)):
                    assert a == 1 - toric_log_discrepancy(s, left, right, v)


@given(
    st.integers(2, 30).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))),
    st.integers(0, 30), st.integers(0, 30), st.integers(0, 30), st.integers(0, 30),
)
def test_log_discrepancy_additive(nq, i1, j1, i2, j2):
    n, q = nq
    if gcd(n, q) != 1:
        return
    s = CyclicQuot(n, q)
    v = LatticeValuation(F(i1 * q % n, n) + i2, F(i1, n) + j1)
    w = LatticeValuation(F(j2 * q % n, n), F(j2, n))
    f = toric_log_discrepancy
    assert f(s, b, F(1, 2), v + w) == f(s, b, F(1, 2), v) + f(s, b, F(1, 2), w)
