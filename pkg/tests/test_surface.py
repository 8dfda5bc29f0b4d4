from fractions import Fraction as F
from math import floor

import pytest

from logdelta.cyclic import SMOOTH, CyclicQuot
from logdelta.exact import NO_SOLUTION, AffineForm
from logdelta.germs import Axis, Branch, Germ
from logdelta.surface import (
    WPS,
    BoundaryEntry,
    GraphSurface,
    Handle,
    LogSurface,
    adjunction,
    complement_index,
    graph_intersect,
    solve_b,
    t_max,
    wps_intersect,
)

t = AffineForm.param()


def wps_pair(weights, c_deg, others):
    boundary = [BoundaryEntry("C", t, c_deg)] + [BoundaryEntry(f"B{i + 1}", c, d) for i, (c, d) in enumerate(others)]
    return LogSurface(WPS(weights), boundary)


def test_wps_intersect_examples():
    assert wps_intersect(WPS((1, 1, 1)), 1, 1) == 1
    assert wps_intersect(WPS((1, 1, 2)), 4, 1) == 2
    assert wps_intersect(WPS((2, 3, 5)), 8, 5) == F(4, 3)
    with pytest.raises(ValueError):
        wps_intersect(WPS((1, 1, 1)), -1, 1)


def test_wps_vertices():
    w = WPS((1, 3, 4))
    assert w.vertex_quot(0) == SMOOTH
    assert w.vertex_quot(1) == CyclicQuot(3, 1)
    assert w.vertex_quot(2) == CyclicQuot(4, 3)
    assert w.effective_degree(5) and not WPS((2, 3, 5)).effective_degree(1)


@pytest.mark.parametrize(
    "weights, c, others, expected",
    [
        ((1, 1, 2), 4, [(F(1, 2), 1)], F(7, 8)),
        ((1, 1, 1), 2, [(F(1, 2), 1), (F(2, 3), 1)], F(11, 12)),
        ((1, 2, 3), 6, [(F(1, 2), 1)], F(11, 12)),
    ],
)
def test_solve_b_examples(weights, c, others, expected):
    s = wps_pair(weights, c, others)
    assert solve_b(s) == expected == t_max(s)


def test_solve_b_without_c_degree():
    s = LogSurface(WPS((1, 1, 1)), [BoundaryEntry("C", AffineForm.const(F(1, 2)), 1)])
    assert solve_b(s) is NO_SOLUTION


def test_adjunction_examples():
    s = wps_pair((1, 1, 2), 4, [(F(1, 2), 1)])
    adj = adjunction(s, F(7, 8), 1)
    assert adj.c2 == 8 == adj.c2_intersection == wps_intersect(WPS((1, 1, 2)), 4, 4)
    assert adj.pa_intersection == 1
    with pytest.raises(ValueError):
        adjunction(s, 1, 1)


def test_adjunction_through_a1_point(by_id):
    # 2-2: C = X_3 on P(1,1,2) passes through the A_1 point
    r = by_id["2-2"]
    adj = adjunction(r.surface, r.high, 0)
    assert r.high == F(8, 9)
    assert adj.deg_diff == F(1, 2)
    assert adj.c2 == F(9, 2) == adj.c2_intersection
    assert adj.c2_tilde == 4 == r.marker


def a1_graph():
    return GraphSurface([("E", -2)], [], [Handle("H1", 0, 0, [("E", 1)]), Handle("H2", 0, 0, [("E", 1)])])


def test_graph_intersect_a1():
    g = a1_graph()
    assert graph_intersect(g, "H1", "H2") == F(1, 2)
    assert g.intersect("H1", "H1") == F(1, 2)
    assert g.correction("H1") == [F(1, 2)]


def test_graph_rejects_bad_input():
    with pytest.raises(ValueError, match="negative definite"):
        GraphSurface([("a", -2), ("b", -1), ("c", -2)], [("a", "b"), ("b", "c")], [])
    with pytest.raises(ValueError, match="unknown"):
        GraphSurface([("a", -2)], [("a", "z")], [])
    with pytest.raises(ValueError, match="unknown curve"):
        GraphSurface([("a", -2)], [], [Handle("H", 0, 0, [("q", 1)])])


def p11n_graph(n):
    """Hirzebruch surface F_n with the negative section contracted."""
    return GraphSurface(
        [("E", -n)], [],
        [Handle("X1", 0, 0, [("E", 1)]), Handle(f"X{n}", n, 0, [("X1", 1)])],
    )


def p123_graph():
    """Toric resolution of P(1,2,3): rays (1,0),(0,1),(-1,-1),(-2,-3),(-1,-2),(0,-1)."""
    return GraphSurface(
        [("a", -2), ("e1", -2), ("e2", -2)],
        [("e1", "e2")],
        [
            Handle("X1", -1, 0, [("a", 1), ("e2", 1)]),
            Handle("X2", 0, 0, [("e1", 1), ("X3", 1)]),
            Handle("X3", 1, 0, [("a", 1)]),
        ],
    )


@pytest.mark.parametrize(
    "weights, graph, degrees",
    [
        ((1, 1, 2), p11n_graph(2), {"X1": 1, "X2": 2}),
        ((1, 1, 3), p11n_graph(3), {"X1": 1, "X3": 3}),
        ((1, 2, 3), p123_graph(), {"X1": 1, "X2": 2, "X3": 3}),
    ],
)
def test_dual_encoding(weights, graph, degrees):
    w = WPS(weights)
    for h1, d1 in degrees.items():
        for h2, d2 in degrees.items():
            assert graph.intersect(h1, h2) == w.intersect(d1, d2)
        assert graph.canonical_dot(h1) == w.canonical_dot(d1)


def test_dual_encoding_of_boundary_pairs():
    w, g = WPS((1, 2, 3)), p123_graph()
    ws = LogSurface(w, [BoundaryEntry("C", t, 3), BoundaryEntry("B1", F(1, 2), 2), BoundaryEntry("B2", F(2, 3), 1)])
    gs = LogSurface(g, [BoundaryEntry("C", t, "X3"), BoundaryEntry("B1", F(1, 2), "X2"), BoundaryEntry("B2", F(2, 3), "X1")])
    for a in ("C", "B1", "B2"):
        for c in ("C", "B1", "B2"):
            assert ws.dot(a, c) == gs.dot(a, c)
    assert solve_b(ws) == solve_b(gs)


def test_graph_51_1_self_intersection(by_id):
    r = by_id["51-1[k=2]"]
    s = r.surface
    assert s.dot("C", "C") == 5
    adj = adjunction(s, solve_b(s), 1)
    assert adj.c2 == adj.c2_intersection == 5
    assert adj.pa_intersection == 1


def complement_oracle(degrees, coeffs, k_degree, max_n=100):
    """Degree-feasibility scan written from the definition, on a WPS with a weight-1 coordinate."""
    for n in range(1, max_n + 1):
        plus = [max(c, F(floor((n + 1) * c), n)) for c in coeffs]
        if any(p > 1 or (p * n).denominator != 1 for p in plus):
            continue
        rest = k_degree - sum(p * d for p, d in zip(plus, degrees))
        if rest >= 0 and (rest * n).denominator == 1:
            return n
    return None


def test_complement_index_plane():
    coeffs = [F(1, 2), F(2, 3), F(10, 11), F(12, 13)]
    names = [f"L{i}" for i in range(4)]
    germs = [
        Germ(SMOOTH, (Branch(coeffs[i], Axis(1), names[i]), Branch(coeffs[j], Axis(2), names[j])), f"{i}{j}")
        for i in range(4) for j in range(i + 1, 4)
    ]
    s = LogSurface(WPS((1, 1, 1)), [BoundaryEntry(n, c, 1) for n, c in zip(names, coeffs)], germs, c_name="L3")
    assert complement_index(s, 0) == 66 == complement_oracle([1] * 4, coeffs, 3)


def test_complement_index_2_1(by_id):
    s = by_id["2-1"].surface
    assert complement_index(s, F(7, 8)) == 8 == complement_oracle([4, 1], [F(7, 8), F(1, 2)], 4)


def test_complement_index_trivial_and_errors(by_id):
    s = LogSurface(WPS((1, 1, 1)), [BoundaryEntry("C", AffineForm.const(0), 1)])
    assert complement_index(s, 0) == 1
    with pytest.raises(ValueError, match="search bound"):
        complement_index(by_id["2-1"].surface, F(7, 8), max_n=7)
    with pytest.raises(ValueError, match="weighted projective plane"):
        complement_index(by_id["51-3"].surface, F(6, 7))


def test_degree_nonnegative_on_interval(records):
    for r in records:
        s = r.surface
        form = s.degree_form()
        for x in (r.low, (r.low + r.high) / 2):
            assert -form(x) >= 0, r.id
        if not r.high_open:
            assert form(r.high) == 0, r.id


def test_elliptic_curves_have_large_self_intersection(records):
    from logdelta.catalog import marker_data

    for r in records:
        if r.marker == "ell":
            _pa, c2t, _ = marker_data(r)
            assert c2t >= 3, r.id
