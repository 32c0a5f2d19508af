from fractions import Fraction

import pytest

from chaincurv import catalog
from chaincurv.algebra import bracket, inner, make_E, make_iFjj
from chaincurv.chains import FamilySpec, Subalgebra, build_chain, instantiate_chain
from chaincurv.criteria import (
    FAILS_WITNESS, HOLDS_CERTIFICATE, HOLDS_SYMMETRIC, UNDETERMINED,
    DeformedMetric, Inapplicable, ParamPoint, RankCertificate, WitnessRejected,
    check_mm_m_zero, check_symmetric_subalgebra, metric_gt,
    rank_separation_certificate, transfer_witness, vanishing_points,
    verify_witness,
)
from chaincurv.scalars import ONE, SQRT2, SQRT3, ZERO, Scalar, free_symbol, trig_pair


# -- positive checks ---------------------------------------------------------

def test_symmetric_block_so3_inside_so4():
    chain = catalog.get_chain("so5/so4/so3")
    assert check_symmetric_subalgebra(chain)
    assert check_mm_m_zero(chain)


def test_su2_inside_so4_not_symmetric():
    chain = catalog.get_chain("so5/so4/su2")
    assert not check_symmetric_subalgebra(chain)
    assert not check_mm_m_zero(chain)


def test_degenerate_chain_vacuously_symmetric():
    g = catalog.make_algebra("so5")
    chain = build_chain(g, g, g)
    assert check_symmetric_subalgebra(chain)


def test_one_dimensional_complement_has_zero_bracket():
    chain = catalog.get_chain("su3/su21/su2")
    assert chain.dim_m == 1
    assert check_mm_m_zero(chain)


def test_vertical_factor_bracket_full():
    chain = catalog.get_chain("so6/u2u1/u1so2")
    assert chain.dim_m == 3
    assert not check_mm_m_zero(chain)


def test_abelian_intermediate_gives_zero_bracket():
    chain = catalog.get_chain("su2/so2/id")
    assert check_mm_m_zero(chain)


# -- witness verification ------------------------------------------------------

def test_unitary_family_witness_matches_expected_bracket():
    data = catalog.chain_data("su3/su21/delta_pq")
    chain = catalog.get_chain("su3/su21/delta_pq")
    wd = data.witnesses[0]
    pair = verify_witness(chain, wd.x, wd.y)
    assert bracket(pair.xm, pair.ym) == wd.expected_mm
    assert pair.excluded == (ParamPoint.pq(1, -1),)


def test_exceptional_witness_in_dimension_fourteen():
    data = catalog.chain_data("g2/su3/su2")
    chain = catalog.get_chain("g2/su3/su2")
    wd = data.witnesses[0]
    pair = verify_witness(chain, wd.x, wd.y)
    assert bracket(pair.xm, pair.ym) == wd.expected_mm  # Z1 + 3 Z2
    assert pair.excluded == ()


def test_equal_pair_is_rejected():
    chain = catalog.get_chain("so5/so4/delta_theta",
                              {"cos:theta": Fraction(3, 5), "sin:theta": Fraction(4, 5)})
    data = catalog.chain_data("so5/so4/delta_theta")
    x = data.witnesses[0].x
    with pytest.raises(WitnessRejected):
        verify_witness(chain, x, x)


def test_pair_with_h_component_is_rejected():
    chain = catalog.get_chain("so5/so4/so3")
    h_vec = chain.h_part.frame()[0]
    with pytest.raises(WitnessRejected):
        verify_witness(chain, h_vec, chain.m_part.frame()[0])


def test_noncommuting_pair_rejected_with_entries():
    chain = catalog.get_chain("so5/so4/su2")
    m = chain.m_part.frame()
    with pytest.raises(WitnessRejected) as exc:
        verify_witness(chain, m[0], m[1])
    assert exc.value.detail  # the nonzero entries are reported


# -- rank separation -------------------------------------------------------------

def test_certificate_on_the_quaternionic_chain():
    cert = rank_separation_certificate(catalog.get_chain("so5/so4/su2"))
    assert isinstance(cert, RankCertificate)
    assert (cert.r_m, cert.r_s) == (4, 2)
    assert cert.route == "square-identity"


def test_certificate_inapplicable_on_circle_family_members():
    chain = catalog.get_chain("so5/so4/delta_theta",
                              {"cos:theta": Fraction(3, 5), "sin:theta": Fraction(4, 5)})
    out = rank_separation_certificate(chain)
    assert isinstance(out, Inapplicable)


def test_certificate_inapplicable_on_the_exceptional_middle_chain():
    out = rank_separation_certificate(catalog.get_chain("g2/so4/su2"))
    assert isinstance(out, Inapplicable)
    assert "rank 6" in out.reason


def test_certificate_requires_instantiation():
    with pytest.raises(ValueError):
        rank_separation_certificate(catalog.get_chain("so5/so4/delta_theta"))


# -- transfer ----------------------------------------------------------------------

def test_transfer_to_smaller_subgroups():
    src_data = catalog.chain_data("so6/so5/u2")
    src = catalog.get_chain("so6/so5/u2")
    wd = src_data.witnesses[0]
    pair = verify_witness(src, wd.x, wd.y)
    for target_id in ("so6/so5/su2", "so6/so5/t2"):
        target = catalog.get_chain(target_id)
        moved = transfer_witness(pair, src, target)
        assert bracket(moved.x, moved.y).is_zero()


def test_transfer_identity_is_witness_itself():
    src = catalog.get_chain("g2/su3/su2")
    wd = catalog.chain_data("g2/su3/su2").witnesses[0]
    pair = verify_witness(src, wd.x, wd.y)
    again = transfer_witness(pair, src, src)
    assert again.x == pair.x and again.y == pair.y


def test_transfer_requires_containment():
    src = catalog.get_chain("g2/su3/su2")
    wd = catalog.chain_data("g2/su3/su2").witnesses[0]
    pair = verify_witness(src, wd.x, wd.y)
    bigger_h = catalog.get_chain("g2/su3/u2")
    with pytest.raises(ValueError):
        transfer_witness(pair, src, bigger_h)


# -- vanishing loci -----------------------------------------------------------------

def test_circle_locus_simple_sine():
    _, s = trig_pair("theta")
    pts = vanishing_points([s * 2])
    assert pts == (ParamPoint.circle("theta", 1, 0),)


def test_circle_locus_slope():
    c, s = trig_pair("theta")
    pts = vanishing_points([s - c * SQRT3])
    assert pts == (ParamPoint.circle("theta", Fraction(1, 2), SQRT3 * Fraction(1, 2)),)


def test_pq_locus():
    p, q = free_symbol("p"), free_symbol("q")
    pts = vanishing_points([(p + q) * (p - q * 2) + (p + q) * q * 3,
                            (p + q) * p])
    assert ParamPoint.pq(1, -1) in pts


def test_param_point_canonicalization():
    a = ParamPoint.circle("theta", Fraction(-3, 5), Fraction(-4, 5))
    b = ParamPoint.circle("theta", Fraction(3, 5), Fraction(4, 5))
    assert a == b
    assert ParamPoint.pq(2, -2) == ParamPoint.pq(-1, 1)


# -- deformed metric -----------------------------------------------------------------

def _metric_fixture():
    chain = catalog.get_chain("so5/so4/su2")
    m0 = chain.m_part.frame()[0]
    s0 = chain.s_part.frame()[0]
    return chain, m0, s0


def test_metric_at_zero_matches_base_inner_product():
    chain, m0, s0 = _metric_fixture()
    g = DeformedMetric(Fraction(0), chain)
    x = m0 + s0
    assert metric_gt(g, x, x) == inner(x, x)


def test_metric_vertical_scaling():
    chain, m0, _ = _metric_fixture()
    g = DeformedMetric(Fraction(1, 2), chain)
    assert metric_gt(g, m0, m0) == inner(m0, m0) * 2


def test_metric_cross_terms_vanish():
    chain, m0, s0 = _metric_fixture()
    g = DeformedMetric(Fraction(1, 4), chain)
    assert metric_gt(g, m0, s0) == ZERO


def test_metric_rejects_large_t():
    chain, _, _ = _metric_fixture()
    with pytest.raises(ValueError):
        DeformedMetric(Fraction(1), chain)


def test_metric_bilinear_symmetric_positive():
    chain, m0, s0 = _metric_fixture()
    x = m0 + s0
    y = m0 - s0.scale(Scalar(2))
    for t in (Fraction(-1), Fraction(0), Fraction(1, 4), Fraction(1, 2)):
        g = DeformedMetric(t, chain)
        assert metric_gt(g, x, y) == metric_gt(g, y, x)
        assert metric_gt(g, x + y, m0) == metric_gt(g, x, m0) + metric_gt(g, y, m0)
        assert metric_gt(g, x, x).sign() > 0


# -- classification basics -------------------------------------------------------------

def test_classifier_tags_are_exclusive_on_catalog():
    # no chain may carry both a positive certificate and a verified witness
    for cd in catalog.catalog_chains():
        v = catalog.classify(cd.chain_id)
        if v.tag in (HOLDS_SYMMETRIC, HOLDS_CERTIFICATE):
            assert v.witness is None
        if v.tag == FAILS_WITNESS:
            assert v.witness is not None
            assert v.certificate is None


def test_undetermined_without_evidence():
    chain = catalog.get_chain("g2/su3/su2")
    from chaincurv.criteria import classify_chain
    v = classify_chain(chain)  # no stored evidence offered
    assert v.tag == UNDETERMINED
