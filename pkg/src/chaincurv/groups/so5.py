"""Chains inside the 10-dimensional rotation algebra on R^5.

The block conventions: the 6-dimensional so(4) sits on coordinates 2..5,
the so(3)+so(2) pair splits 1..3 / 4..5, and the unitary subalgebra of the
so(4) block pairs the planes (2,4) and (3,5).  One chain carries the rank
separation certificate; the two circle families fail with explicit
witnesses whose exclusion loci cover complementary parameter regions.
"""

from fractions import Fraction

from ..algebra import make_E
from ..chains import FamilySpec, ParamLine, Subalgebra
from ..criteria import (
    FAILS_WITNESS, HOLDS_CERTIFICATE, HOLDS_SYMMETRIC, ParamPoint,
)
from ..scalars import HALF, SQRT3, Scalar, free_symbol, trig_pair
from .common import ChainData, GroupData, LatticeEdge, PointData, WitnessData

N = 5


def E(i, j):
    return make_E(i, j, N)


ALGEBRA = Subalgebra("so5", N, tuple(E(i, j) for i in range(1, 6) for j in range(i + 1, 6)))
BASIS_NAMES = tuple(f"E{i}{j}" for i in range(1, 6) for j in range(i + 1, 6))

SO4 = Subalgebra("so4", N, tuple(E(i, j) for i in range(2, 6) for j in range(i + 1, 6)))
SU2 = Subalgebra("su2", N, (E(2, 3) - E(4, 5), E(2, 4) + E(3, 5), E(2, 5) - E(3, 4)))
SU2_PLUS = Subalgebra("su2", N, (E(2, 3) + E(4, 5), E(2, 5) + E(3, 4), E(2, 4) - E(3, 5)))
SO3_IN_SO4 = Subalgebra("so3", N, (E(2, 3), E(2, 4), E(3, 4)))
T2_SO4 = Subalgebra("t2", N, (E(2, 3), E(4, 5)))
U2 = Subalgebra("u2", N, (E(2, 3) + E(4, 5), E(2, 5) + E(3, 4),
                          E(2, 4) - E(3, 5), E(2, 4) + E(3, 5)))
T2_U2 = Subalgebra("t2", N, (E(2, 4), E(3, 5)))

SO3SO2 = Subalgebra("so3so2", N, (E(1, 2), E(1, 3), E(2, 3), E(4, 5)))
SO3_BLOCK = Subalgebra("so3", N, (E(1, 2), E(1, 3), E(2, 3)))
SO2SO2 = Subalgebra("so2so2", N, (E(1, 2), E(4, 5)))
SO2_ID = Subalgebra("so2", N, (E(1, 2),))

SO3_PRINC = Subalgebra(
    "so3princ", N,
    (E(1, 4).scale(SQRT3) - E(2, 4) + E(3, 5),
     E(1, 5).scale(SQRT3) + E(2, 5) + E(3, 4),
     E(2, 3).scale(Scalar(2)) - E(4, 5)))

SO2_IN_SU2 = Subalgebra("so2", N, (E(2, 3) - E(4, 5),))
SO2_IN_SO3PRINC = Subalgebra("so2", N, (E(2, 3).scale(Scalar(2)) - E(4, 5),))


def delta_theta_so4(family: FamilySpec) -> Subalgebra:
    """Circle family through the torus span{E23, E45} of the so(4) block."""
    if family.point is not None:
        c, s = family.point
    else:
        c, s = trig_pair("theta")
    return Subalgebra("delta_theta", N, (), ParamLine((E(2, 3), E(4, 5)), (c, s)), family)


def delta_theta_so3so2(family: FamilySpec) -> Subalgebra:
    """Circle family mixing the rotation plane (1,2) with the plane (4,5)."""
    if family.point is not None:
        c, s = family.point
    else:
        c, s = trig_pair("theta")
    return Subalgebra("delta_theta", N, (), ParamLine((E(1, 2), E(4, 5)), (c, s)), family)


def delta_pq_u2(family: FamilySpec) -> Subalgebra:
    """Integer-slope circle in the unitary torus span{E24, E35}."""
    if family.pq is not None:
        p, q = (Scalar(v) for v in family.pq)
    else:
        p, q = free_symbol("p"), free_symbol("q")
    return Subalgebra("delta_pq", N, (), ParamLine((E(2, 4), E(3, 5)), (p, q)), family)


DELTA_THETA_SO4 = delta_theta_so4(FamilySpec("Delta_theta_SO2", symbol="theta", symbolic=True))
DELTA_THETA_SO3SO2 = delta_theta_so3so2(FamilySpec("Delta_theta_SO2", symbol="theta", symbolic=True))
DELTA_PQ_U2 = delta_pq_u2(FamilySpec("Delta_pq_U1", symbolic=True))

CHAINS = (
    ChainData("so5", "so4", "su2", k=SO4, h=SU2, expected=HOLDS_CERTIFICATE,
              note="vertical brackets have rank 4, horizontal at most 2"),
    ChainData("so5", "so4", "so3", k=SO4, h=SO3_IN_SO4, expected=HOLDS_SYMMETRIC),
    ChainData("so5", "so4", "u2", k=SO4, h=U2, expected=HOLDS_SYMMETRIC),
    ChainData("so5", "so4", "t2", k=SO4, h=T2_SO4, expected=HOLDS_SYMMETRIC),
    ChainData("so5", "so4", "delta_theta", k=SO4, h=DELTA_THETA_SO4,
              expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=E(3, 4), xs=E(1, 3), ym=E(2, 4), ys=-E(1, 2),
                              expected_mm=E(2, 3),
                              expected_excluded=(ParamPoint.circle("theta", 1, 0),),
                              note="witness away from sin=0"),
                  WitnessData(xm=E(2, 5), xs=E(1, 4), ym=E(2, 4), ys=E(1, 5),
                              expected_mm=E(4, 5),
                              expected_excluded=(ParamPoint.circle("theta", 0, 1),),
                              note="witness away from cos=0"),
              ),
              note="the two witnesses cover the whole circle"),
    ChainData("so5", "so3so2", "so3", k=SO3SO2, h=SO3_BLOCK, expected=HOLDS_SYMMETRIC),
    ChainData("so5", "so3so2", "so2so2", k=SO3SO2, h=SO2SO2, expected=HOLDS_SYMMETRIC),
    ChainData("so5", "so3so2", "so2", k=SO3SO2, h=SO2_ID, expected=HOLDS_SYMMETRIC),
    ChainData("so5", "so3so2", "delta_theta", k=SO3SO2, h=DELTA_THETA_SO3SO2,
              expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=E(1, 3), xs=-E(1, 4), ym=E(2, 3), ys=E(2, 4),
                              expected_mm=-E(1, 2),
                              expected_excluded=(ParamPoint.circle("theta", 1, 0),),
                              note="witness away from sin=0"),
              ),
              exceptional=(PointData(ParamPoint.circle("theta", 1, 0), HOLDS_SYMMETRIC),)),
    ChainData("so5", "u2", "su2", k=U2, h=SU2_PLUS, expected=HOLDS_SYMMETRIC),
    ChainData("so5", "u2", "t2", k=U2, h=T2_U2, expected=HOLDS_SYMMETRIC),
    ChainData("so5", "u2", "delta_pq", k=U2, h=DELTA_PQ_U2,
              expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=(E(2, 5) + E(3, 4)).scale(HALF),
                              xs=E(1, 4) + (E(2, 3) - E(4, 5)).scale(HALF),
                              ym=(E(2, 3) + E(4, 5)).scale(HALF),
                              ys=E(1, 2) + (E(2, 5) - E(3, 4)).scale(HALF),
                              expected_mm=(E(2, 4) - E(3, 5)).scale(-HALF),
                              expected_excluded=(ParamPoint.pq(1, -1),),
                              note="torus-family witness"),
              ),
              exceptional=(PointData(ParamPoint.pq(1, -1), HOLDS_SYMMETRIC),)),
    ChainData("so5", "su2", "so2", k=SU2, h=SO2_IN_SU2, expected=HOLDS_SYMMETRIC,
              note="rank-one base: circles are symmetric"),
    ChainData("so5", "so3", "so2", k=SO3_BLOCK, h=SO2_ID, expected=HOLDS_SYMMETRIC,
              note="rank-one base: circles are symmetric"),
    ChainData("so5", "so3princ", "so2", k=SO3_PRINC, h=SO2_IN_SO3PRINC,
              expected=HOLDS_SYMMETRIC,
              note="rank-one base: circles are symmetric"),
)

LATTICE = (
    LatticeEdge("so4", "so5", SO4, ALGEBRA),
    LatticeEdge("so3so2", "so5", SO3SO2, ALGEBRA),
    LatticeEdge("so3princ", "so5", SO3_PRINC, ALGEBRA),
    LatticeEdge("u2", "so4", U2, SO4),
    LatticeEdge("su2", "u2", SU2_PLUS, U2),
    LatticeEdge("so3", "so3so2", SO3_BLOCK, SO3SO2),
    LatticeEdge("so3", "so4", SO3_IN_SO4, SO4),
)

GROUP = GroupData("so5", N, ALGEBRA, BASIS_NAMES, CHAINS, LATTICE, subalgebras={
    "so4": lambda fam=None: SO4,
    "su2": lambda fam=None: SU2,
    "so3": lambda fam=None: SO3_BLOCK,
    "so3so2": lambda fam=None: SO3SO2,
    "so3princ": lambda fam=None: SO3_PRINC,
    "u2": lambda fam=None: U2,
    "t2": lambda fam=None: T2_SO4,
    "delta_theta_so4": lambda fam=None: delta_theta_so4(
        fam or FamilySpec("Delta_theta_SO2", symbol="theta", symbolic=True)),
    "delta_theta_so3so2": lambda fam=None: delta_theta_so3so2(
        fam or FamilySpec("Delta_theta_SO2", symbol="theta", symbolic=True)),
    "delta_pq": lambda fam=None: delta_pq_u2(
        fam or FamilySpec("Delta_pq_U1", symbolic=True)),
})
