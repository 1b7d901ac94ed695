from fractions import Fraction

import pytest

import hodgechase as hc


def test_hodge_types_and_poset():
    t = hc.HodgeType(0, 1)
    assert str(t) == "⟨0,1⟩"
    assert t <= hc.HodgeType(1, 0)
    assert not hc.polarized_leq(hc.HodgeType(0, 2), hc.HodgeType(1, 0))
    with pytest.raises(hc.ChaseError):
        hc.HodgeType(2, 1)

    poset = hc.build_poset()
    assert len(poset.elements) == 6
    assert len(poset.covers) == 6
    bottom = hc.HodgeType(0, 0)
    assert all(poset.leq(bottom, t) for t in poset.elements)
    assert 'digraph hodge_poset' in hc.poset_dot()


def test_bigraded_dims_and_type_extraction():
    d = hc.BigradedDims({(2, 0): 1, (0, 2): 1, (1, 0): 1, (0, 1): 1})
    assert d.total() == 4
    assert hc.hodge_type_of(d) == hc.HodgeType(0, 1)
    assert d.entries()[(2, 0)] == 1
    assert (d + hc.BigradedDims.weight_zero(2)).at(0, 0) == 2
    with pytest.raises(hc.ChaseError):
        hc.hodge_type_of(hc.BigradedDims({(1, 0): 1}))


def test_curves():
    c = hc.CurveData([("A", 1), ("B", 0)], [("A", "B"), ("A", "B")])
    h1 = hc.curve_h1(c)
    assert h1.at(1, 0) == 1 and h1.at(0, 0) == 1
    assert hc.curve_h1(hc.CurveData.cycle_of_rationals(5)) == hc.BigradedDims.weight_zero(1)

    assert hc.riemann_hurwitz_double(0, 6).genera == [2]
    split = hc.riemann_hurwitz_double(2, 0, hc.CoverTopology.Split)
    assert str(split) == "2+2" and split.chi() == -2
    with pytest.raises(hc.ChaseError):
        hc.riemann_hurwitz_double(2, 0)


def test_weighted_plane_numerics():
    assert hc.o1_square() == Fraction(1, 2)
    assert hc.wps_curve_genus(5) == 2
    assert hc.intersection_count(5, 1) == Fraction(5, 2)
    assert all(hc.log_canonical_square(10 - 2 * d, d) == 1 for d in range(1, 6))
    assert hc.chi_condition(2, -2, -1)


def test_branch_classification():
    quad = hc.classify(hc.IsolatedBranchPoint(hc.IsolatedBranchPoint.Kind.OrdinaryQuadruple))
    assert quad.name == hc.SingularityClass.Name.EllipticGorenstein
    assert quad.degree == 2
    assert quad.effect == hc.SingularityClass.EffectKind.ExceptionalCurve

    pinch = hc.classify(
        hc.NonReducedBranchPoint(
            hc.NonReducedBranchPoint.DPoint.SmoothPoint,
            hc.B0Contact(hc.B0Contact.Kind.Transverse),
        )
    )
    assert pinch.name == hc.SingularityClass.Name.PinchPoint
    assert pinch.effect == hc.SingularityClass.EffectKind.NoEffect


def test_catalog_and_scenarios():
    cat = hc.builtin_catalog()
    assert len(cat) == 46
    assert len(cat.chain_ids) == 13

    ev = hc.evaluate(cat.at("planes-two-cusps"))
    assert ev.type == hc.HodgeType(2, 0)
    assert ev.h2_edge.at(0, 0) == 2

    cover = hc.build_nonnormal_cover(5)
    assert not cover.normal
    assert hc.evaluate(cover).type == hc.HodgeType(0, 2)
    assert "scenario: cover-d5" in hc.run_report(cover)

    chain = cat.verify_chain("chain-planes-full")
    assert chain.monotone
    assert [s.type for s in chain.steps][-1] == hc.HodgeType(2, 0)


def test_verification_suite():
    cat = hc.builtin_catalog()
    summary = hc.verify_all(cat)
    assert (summary.passed, summary.failed) == (62, 0)
    assert summary.failures == []

    for normal_only in (False, True):
        report = hc.realization_report(cat, normal_only)
        assert report.passed()
        assert len(report.realized) == 6
        assert len(report.covered_edges) == 6

    assert "⟨0,1⟩ | 1 | 8 | K3 | 1 | 0" in hc.table2()
    assert '"(1,1)" -> "(2,0)"' in hc.chains_dot(cat)
