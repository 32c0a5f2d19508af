import random
from fractions import Fraction

import pytest

from chaincurv.algebra import (
    InnerProductForm, bracket, combine, inner, make_E, make_iF, make_iFjj,
)
from chaincurv.chains import (
    Chain, ChainError, FamilySpec, ParamLine, Subalgebra, build_chain,
    instantiate_chain, normalize_pq, project,
)
from chaincurv.scalars import ONE, ZERO, CScalar, Scalar, trig_pair


def E(i, j, n=5):
    return make_E(i, j, n)


def so_alg(n, name=None):
    basis = tuple(make_E(i, j, n) for i in range(1, n + 1) for j in range(i + 1, n + 1))
    return Subalgebra(name or f"so{n}", n, basis)


def so4_in_so5():
    basis = tuple(make_E(i, j, 5) for i in range(2, 6) for j in range(i + 1, 6))
    return Subalgebra("so4", 5, basis)


def su2_in_so4():
    anti = (E(2, 3) - E(4, 5), E(2, 4) + E(3, 5), E(2, 5) - E(3, 4))
    return Subalgebra("su2", 5, anti)


def su3_alg():
    b = (make_iFjj(1, 3) - make_iFjj(2, 3), make_iFjj(2, 3) - make_iFjj(3, 3),
         make_E(1, 2, 3), make_E(1, 3, 3), make_E(2, 3, 3),
         make_iF(1, 2, 3), make_iF(1, 3, 3), make_iF(2, 3, 3))
    return Subalgebra("su3", 3, b)


def su21_in_su3():
    b = (make_E(1, 2, 3), make_iF(1, 2, 3), make_iFjj(1, 3) - make_iFjj(2, 3),
         make_iFjj(1, 3) + make_iFjj(2, 3) - make_iFjj(3, 3).scale(2))
    return Subalgebra("su21", 3, b)


def su2_in_su3():
    b = (make_E(1, 2, 3), make_iF(1, 2, 3), make_iFjj(1, 3) - make_iFjj(2, 3))
    return Subalgebra("su2", 3, b)


def rand_in(rng, basis):
    return combine(basis, [Scalar(Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
                           for _ in basis])


# -- dimensions ------------------------------------------------------------

def test_su2_so4_so5_dimensions():
    chain = build_chain(so_alg(5), so4_in_so5(), su2_in_so4())
    assert chain.dim_m == 3 and chain.dim_s == 4


def test_degenerate_chain():
    g = so_alg(5)
    chain = build_chain(g, g, g)
    assert chain.dim_m == 0 and chain.dim_s == 0


def test_su3_chain_one_dimensional_complement():
    chain = build_chain(su3_alg(), su21_in_su3(), su2_in_su3())
    assert chain.dim_m == 1


def test_containment_failure_raises():
    with pytest.raises(ChainError):
        build_chain(so_alg(5), su2_in_so4(), so4_in_so5())


# -- projections ---------------------------------------------------------------

def test_projection_identities():
    chain = build_chain(so_alg(5), so4_in_so5(), su2_in_so4())
    rng = random.Random(17)
    g_basis = list(chain.g.fixed_basis)
    for _ in range(30):
        x = rand_in(rng, g_basis)
        xh = project(chain, x, "h")
        xm = project(chain, x, "m")
        xs = project(chain, x, "s")
        assert xh + xm + xs == x
        assert project(chain, xm, "m") == xm
        assert project(chain, xm, "s").is_zero()
        # Pythagoras
        total = inner(x, x)
        parts = inner(xh, xh) + inner(xm, xm) + inner(xs, xs)
        assert total == parts


def test_projection_invariant_under_rescaling():
    rng = random.Random(23)
    x = rand_in(rng, list(so_alg(5).fixed_basis))
    results = []
    for scale in (1, 2, Fraction(7, 3)):
        form = InnerProductForm(scale)
        chain = build_chain(so_alg(5), so4_in_so5(), su2_in_so4(), form=form)
        results.append(project(chain, x, "m"))
    assert results[0] == results[1] == results[2]


def test_project_outside_ambient_raises():
    chain = build_chain(su3_alg(), su21_in_su3(), su2_in_su3())
    with pytest.raises(ChainError):
        project(chain, make_iFjj(1, 3), "m")  # not traceless


# -- parametric chains -------------------------------------------------------------

def theta_chain():
    c, s = trig_pair("theta")
    h = Subalgebra("delta_theta", 5, (),
                   ParamLine((E(2, 3), E(4, 5)), (c, s)),
                   FamilySpec("Delta_theta_SO2", symbol="theta", symbolic=True))
    return build_chain(so_alg(5), so4_in_so5(), h)


def test_parametric_chain_builds_and_projects():
    chain = theta_chain()
    c, s = trig_pair("theta")
    assert chain.is_parametric
    assert chain.dim_m == 5 and chain.dim_s == 4
    # basis vectors of the torus complement stay in m for every angle
    assert chain.h_part.component_is_zero(E(3, 4))
    assert chain.h_part.component_is_zero(E(2, 4))
    # h-projection of E23 is cos * (cos E23 + sin E45): the Gram factor is
    # constant because the plane directions have equal norms
    proj = project(chain, E(2, 3), "h")
    expected = E(2, 3).scale(CScalar(c * c)) + E(4, 5).scale(CScalar(c * s))
    assert proj == expected


def test_parametric_reconstruction_identity():
    chain = theta_chain()
    x = E(2, 3) + E(2, 4).scale(Scalar(3)) + E(1, 5)
    total = project(chain, x, "h") + project(chain, x, "m") + project(chain, x, "s")
    assert total == x


def test_instantiate_parametric_chain():
    chain = theta_chain()
    vals = {"cos:theta": Fraction(3, 5), "sin:theta": Fraction(4, 5)}
    inst = instantiate_chain(chain, vals)
    assert not inst.is_parametric
    assert inst.dim_m == 5 and inst.dim_s == 4
    # the instantiated h-line is (3 E23 + 4 E45)/5 up to scale
    hvec = inst.h_part.frame()[0]
    expected = E(2, 3).scale(Scalar(Fraction(3, 5))) + E(4, 5).scale(Scalar(Fraction(4, 5)))
    assert hvec == expected


def test_moving_line_must_commute_with_fixed_part():
    c, s = trig_pair("theta")
    with pytest.raises(Exception):
        Subalgebra("bad", 5, (E(2, 4),), ParamLine((E(2, 3), E(4, 5)), (c, s)))


def test_normalize_pq():
    assert normalize_pq(2, -2) == (1, -1)
    assert normalize_pq(-1, 1) == (1, -1)
    assert normalize_pq(0, -3) == (0, 1)
    assert normalize_pq(4, 6) == (2, 3)
    with pytest.raises(ValueError):
        normalize_pq(0, 0)


def test_family_spec_validation():
    fs = FamilySpec("Delta_pq_U1", pq=(-1, 1))
    assert fs.pq == (1, -1)
    FamilySpec("Delta_theta_SO2", point=(Fraction(3, 5), Fraction(4, 5)))
    with pytest.raises(ValueError):
        FamilySpec("Delta_theta_SO2", point=(Fraction(1, 2), Fraction(1, 2)))
    with pytest.raises(ValueError):
        FamilySpec("nope")
