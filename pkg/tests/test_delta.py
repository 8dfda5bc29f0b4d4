import copy
from dataclasses import replace
from fractions import Fraction as F

import pytest

from logdelta.catalog import load_records
from logdelta.delta import default_samples, delta, delta_sweep, resolution_coefficients
from logdelta.exact import AffineForm
from logdelta.germs import count_deep_divisors, path_log_discrepancy
from logdelta.surface import WPS, LogSurface


def test_examples(by_id):
    rep = delta(by_id["2-1"].surface, F(6, 7))
    assert rep.delta == 1 and rep.witnesses[0].source == "C" and rep.witnesses[0].discrepancy == F(-6, 7)
    rep = delta(by_id["13-1"].surface, F(19, 21))
    assert rep.delta == 2
    assert [w.discrepancy for w in rep.witnesses] == [F(-19, 21), F(-6, 7)]
    assert delta(LogSurface(WPS((1, 1, 1)), []), 0).delta == 0


def test_not_klt(by_id):
    with pytest.raises(ValueError, match="not klt"):
        delta(by_id["2-1"].surface, 1)


def test_report_json_is_stable(by_id):
    rep = delta(by_id["13-1"].surface, "19/21")
    assert rep.to_json() == {
        "t": "19/21",
        "delta": 2,
        "witnesses": [{"source": "C", "discrepancy": "-19/21"}, {"source": "P2@(1/3,1/3)", "discrepancy": "-6/7"}],
    }


def test_default_samples():
    assert default_samples(F(6, 7), F(11, 12), False) == [F(6, 7), F(149, 168), F(11, 12)]
    assert default_samples(F(6, 7), F(19, 21), True)[-1] == F(19, 21) - F(1, 1000)


def test_sweep_6_1(by_id):
    r = by_id["6-1[k=2]"]
    out = delta_sweep(r.surface, default_samples(r.low, r.high, r.high_open))
    assert [x for x, _ in out] == [F(6, 7), F(149, 168), F(11, 12)]
    assert [rep.delta for _, rep in out] == [1, 1, 1]


def test_open_endpoint_11_1_k3(by_id):
    # the open end 19/21 of 11-1 (k=3) is not a delta jump in this model:
    # delta stays 1 there and first reaches 2 at 13/14
    s = by_id["11-1[k=3]"].surface
    assert delta(s, F(19, 21)).delta == 1
    assert delta(s, F(13, 14)).delta == 2


def test_closed_endpoint_32_reaches_two(by_id):
    # the printed closed interval of 32 ends at 21/22 although a second deep
    # divisor over the 1/4(1,1) point appears from 13/14 on
    r = by_id["32"]
    assert r.high == F(21, 22) and not r.high_open
    assert delta(r.surface, F(13, 14) - F(1, 1000)).delta == 1
    assert delta(r.surface, F(13, 14)).delta == 2
    assert delta(r.surface, r.high).delta == 2


def test_removing_c_leaves_nothing_deep(records):
    for r in records:
        s = r.surface
        zero = AffineForm()
        boundary = tuple(replace(b, coefficient=zero) if b.name == "C" else b for b in s.boundary)
        germs = tuple(
            replace(g, branches=tuple(replace(br, coefficient=zero) if br.curve == "C" else br for br in g.branches))
            for g in s.germs
        )
        assert delta(LogSurface(s.surface, boundary, germs), r.low).delta == 0, r.id


def test_witnesses_back_substitute(records):
    for r in records:
        s = r.surface
        for x in (r.low, (r.low + r.high) / 2):
            for g in s.germs:
                _n, found = count_deep_divisors(g, x)
                for d in found:
                    assert path_log_discrepancy(g, d.path, x) - 1 == d.discrepancy <= F(-6, 7)


def test_toric_records_agree_with_resolution_route(records):
    toric = [r for r in records if 43 <= r.family <= 50]
    assert len(toric) == 9
    for r in toric:
        bare = load_records({"schema_version": 1, "records": [dict(copy.deepcopy(r.to_json()), germs=[])]})[0]
        for x in (r.low, (r.low + r.high) / 2, r.high):
            try:
                want = delta(r.surface, x).delta
            except ValueError:
                with pytest.raises(ValueError):
                    delta(bare.surface, x)
                continue
            assert delta(bare.surface, x).delta == want, (r.id, x)


def test_resolution_coefficients_of_graph_records(by_id):
    # solved by hand: the [-3,-2,-2] chain away from C is (3/7, 2/7, 1/7),
    # the A_2 chain met by C at its first curve is (4/7, 2/7) at t = 6/7
    coeffs = resolution_coefficients(by_id["52-2"].surface)
    at = {v: f(F(6, 7)) for v, f in coeffs.items()}
    assert [at["a1"], at["a2"], at["a3"]] == [F(3, 7), F(2, 7), F(1, 7)]
    assert [at["d1"], at["d2"]] == [F(4, 7), F(2, 7)]
    assert at["e1"] == 0
