import itertools
from fractions import Fraction

import numpy as np
import pytest

from chaincurv import catalog
from chaincurv.algebra import (
    bracket, combine, in_span, independent, inner, make_iFjj, solve_in_span,
    span_equal,
)
from chaincurv.chains import FamilySpec
from chaincurv.criteria import (
    FAILS_WITNESS, HOLDS_CERTIFICATE, HOLDS_SYMMETRIC, verify_witness,
)
from chaincurv.scalars import ONE, ZERO, Scalar
import chaincurv.groups.g2 as G2
import chaincurv.groups.so6 as SO6


# -- named constructors -------------------------------------------------------

def test_make_algebra_dimensions():
    assert catalog.make_algebra("g2").dim == 14
    assert catalog.make_algebra("so5").dim == 10
    assert catalog.make_algebra("su3").dim == 8
    assert catalog.make_algebra("so6").dim == 15
    with pytest.raises(KeyError):
        catalog.make_algebra("e8")


def test_exceptional_basis_closed_and_independent():
    g2 = catalog.make_algebra("g2")
    basis = list(g2.fixed_basis)
    assert len(basis) == 14
    assert independent(basis)
    for i, a in enumerate(basis):
        for b in basis[i + 1:]:
            assert in_span(basis, bracket(a, b))


def test_make_subalgebra_examples():
    su2 = catalog.make_subalgebra("g2", "su2")
    assert span_equal(list(su2.fixed_basis), [G2.X1, G2.X2, G2.Z2])
    pq = catalog.make_subalgebra("su3", "delta_pq",
                                 FamilySpec("Delta_pq_U1", pq=(1, -1)))
    expected = make_iFjj(1, 3) - make_iFjj(2, 3)
    assert span_equal(pq.spanning(), [expected])
    princ = catalog.make_subalgebra("so6", "so3princ")
    assert princ.dim == 3
    with pytest.raises(KeyError):
        catalog.make_subalgebra("so5", "f4")


def test_fixed_coordinate_of_unitary_subalgebra():
    # the 8-dimensional subalgebra annihilates the third coordinate
    su3 = catalog.make_subalgebra("g2", "su3")
    for v in su3.fixed_basis:
        for t in range(7):
            assert v.entry(2, t).is_zero() and v.entry(t, 2).is_zero()
    # while the full algebra acts on every coordinate
    g2 = catalog.make_algebra("g2")
    for t in range(7):
        assert any(not v.entry(t, j).is_zero() for v in g2.fixed_basis
                   for j in range(7))


def test_symbolic_family_instantiation_matches_direct_construction():
    sym = catalog.make_subalgebra("su3", "delta_pq")
    for pq in ((1, 2), (0, 1), (3, -2)):
        inst = sym.instantiate({"p": pq[0], "q": pq[1]})
        direct = catalog.make_subalgebra("su3", "delta_pq",
                                         FamilySpec("Delta_pq_U1", pq=pq))
        assert span_equal(inst.spanning(), direct.spanning())


# -- chain-level verification of stored witness data ---------------------------

def _all_witness_rows():
    rows = []
    for cd in catalog.catalog_chains():
        for wd in cd.witnesses:
            rows.append((cd, wd, None))
        for pd in cd.exceptional:
            for wd in pd.witnesses:
                rows.append((cd, wd, pd.point))
    return rows


@pytest.mark.parametrize("cd,wd,point", _all_witness_rows(),
                         ids=lambda v: getattr(v, "chain_id", None) or "")
def test_witness_suite(cd, wd, point):
    values = point.mapping() if point is not None else None
    chain = catalog.get_chain(cd.chain_id, values)
    pair = verify_witness(chain, wd.x, wd.y)
    # declared parts are the actual projections
    assert pair.xm == wd.xm and pair.ym == wd.ym
    assert (wd.x - wd.xm) == wd.xs and (wd.y - wd.ym) == wd.ys
    # quoted bracket values reproduce exactly
    if wd.expected_mm is not None:
        assert bracket(wd.xm, wd.ym) == wd.expected_mm
    if wd.expected_mm_vertical is not None:
        assert chain.project(bracket(wd.xm, wd.ym), "m") == wd.expected_mm_vertical
    # computed exclusion locus matches the stored exceptional set exactly
    assert tuple(pair.excluded) == tuple(wd.expected_excluded)


def test_witness_count_matches_catalog_scale():
    per_group = {}
    for cd in catalog.catalog_chains():
        n = len(cd.witnesses) + len(cd.transfers)
        n += sum(len(pd.witnesses) + len(pd.transfers) for pd in cd.exceptional)
        per_group[cd.gid] = per_group.get(cd.gid, 0) + n
    assert per_group["su3"] == 1
    assert per_group["so5"] == 4
    assert per_group["g2"] >= 7
    assert per_group["so6"] >= 21


def test_witnesses_recheck_through_independent_float_path():
    # soundness: recompute every stored bracket from raw numeric matrices
    for cd in catalog.catalog_chains():
        for wd in cd.witnesses:
            if cd.is_family:
                vals = ({"p": 2, "q": 1} if "pq" in cd.hid else None)
                if vals is None:
                    base = "theta" if "theta" in cd.hid else "phi"
                    vals = {f"cos:{base}": Fraction(3, 5), f"sin:{base}": Fraction(4, 5)}
                    if cd.kid == "su2dphiso2":
                        vals.update({"cos:phi": Fraction(3, 5), "sin:phi": Fraction(4, 5)})
                    if cd.hid == "su2_delta_phi":
                        vals = {"cos:phi": Fraction(3, 5), "sin:phi": Fraction(4, 5)}
                x = wd.x.instantiate(vals).to_numpy()
                y = wd.y.instantiate(vals).to_numpy()
            else:
                x, y = wd.x.to_numpy(), wd.y.to_numpy()
            assert np.allclose(x @ y - y @ x, 0.0, atol=1e-12)


# -- the full classification sweep ----------------------------------------------

def test_every_catalog_chain_matches_expected_verdict():
    for cd in catalog.catalog_chains():
        v = catalog.classify(cd.chain_id)
        assert v.tag == cd.expected, f"{cd.chain_id}: {v.tag} != {cd.expected}"
        got = {(e.point, e.tag) for e in v.exceptional}
        want = {(pd.point, pd.expected) for pd in cd.exceptional}
        assert got == want, f"{cd.chain_id}: exceptional {got} != {want}"


def test_certificate_rows_are_exactly_two():
    certs = [cd.chain_id for cd in catalog.catalog_chains()
             if catalog.classify(cd.chain_id).tag == HOLDS_CERTIFICATE]
    assert sorted(certs) == ["g2/so4/su2", "so5/so4/su2"]


def test_family_instantiation_agrees_with_generic_exceptional():
    # classify a family member directly at its exceptional point
    v = catalog.classify("su3/su21/delta_pq", {"p": 1, "q": -1})
    assert v.tag == HOLDS_SYMMETRIC
    v2 = catalog.classify("su3/su21/delta_pq", {"p": 1, "q": 2})
    assert v2.tag == FAILS_WITNESS


# -- lattices -----------------------------------------------------------------------

@pytest.mark.parametrize("group,edges", [("so5", 7), ("g2", 10), ("so6", 26)])
def test_inclusion_lattices(group, edges):
    report = catalog.verify_inclusion_lattice(group)
    assert report.ok
    assert len(report.verified) == edges


def test_tilde_classes_are_distinct_subspaces():
    assert not span_equal(list(G2.SU2.fixed_basis), list(G2.SU2T.fixed_basis))


def test_lattice_rejects_unknown_group():
    with pytest.raises(KeyError):
        catalog.verify_inclusion_lattice("su3")


# -- invariance properties ------------------------------------------------------------

def test_verdicts_invariant_under_metric_rescaling():
    from chaincurv.algebra import InnerProductForm
    from chaincurv.chains import build_chain
    from chaincurv.criteria import classify_chain
    from chaincurv.catalog import _evidence_for
    sample = ["so5/so4/su2", "so5/so4/so3", "g2/so4/su2~", "so6/u2u1/u1so2"]
    for cid in sample:
        cd = catalog.chain_data(cid)
        tags = set()
        for scale in (1, 2, Fraction(7, 3)):
            chain = build_chain(catalog.make_algebra(cd.gid), cd.k, cd.h,
                                form=InnerProductForm(scale))
            tags.add(classify_chain(chain, _evidence_for(cd)).tag)
        assert len(tags) == 1


def test_verdict_invariant_under_basis_permutation():
    import random
    from chaincurv.chains import Subalgebra, build_chain
    from chaincurv.criteria import classify_chain
    from chaincurv.catalog import _evidence_for
    rng = random.Random(4)
    cd = catalog.chain_data("g2/so4/su2~")
    k_perm = list(cd.k.fixed_basis)
    h_perm = list(cd.h.fixed_basis)
    rng.shuffle(k_perm)
    rng.shuffle(h_perm)
    chain = build_chain(catalog.make_algebra("g2"),
                        Subalgebra(cd.k.name, cd.k.n, tuple(k_perm)),
                        Subalgebra(cd.h.name, cd.h.n, tuple(h_perm)))
    assert classify_chain(chain, _evidence_for(cd)).tag == FAILS_WITNESS
