"""Chains inside the 14-dimensional exceptional algebra acting on R^7.

The basis below realizes the algebra inside so(7); the eight-dimensional
special unitary subalgebra is spanned by the X/Z vectors (everything that
annihilates the third coordinate), and the six-dimensional so(4) splits
into two three-dimensional factors of different scale (their squared norms
are 4 and 12), which is what makes this catalog section delicate:

* the diagonal so(3) inside that so(4) is NOT symmetric with respect to
  the bi-invariant metric (the factor scales differ), and an exact witness
  shows the bracket bound genuinely fails for that chain;
* the non-diagonal su(2) chain below so(4) satisfies the bound by an
  external wedge-inequality argument; the mechanical rank certificate
  reports itself inapplicable there (both bracket cones reach rank 6).
"""

from fractions import Fraction

from ..algebra import make_E
from ..chains import FamilySpec, ParamLine, Subalgebra
from ..criteria import (
    FAILS_WITNESS, HOLDS_CERTIFICATE, HOLDS_SYMMETRIC, ParamPoint,
)
from ..scalars import SQRT2, SQRT3, Scalar
from ..scalars import trig_pair
from .common import ChainData, GroupData, LatticeEdge, PointData, TransferData, WitnessData

N = 7


def E(i, j):
    return make_E(i, j, N)


def _s(x):
    return Scalar(x)


X1 = E(4, 6) - E(5, 7)
Y1 = E(1, 3).scale(_s(2)) + E(4, 6) + E(5, 7)
X2 = E(4, 5) + E(6, 7)
Y2 = E(2, 3).scale(_s(2)) - E(4, 5) + E(6, 7)
X4 = E(1, 6) + E(2, 5)
Y4 = E(3, 4).scale(_s(2)) - E(2, 5) + E(1, 6)
X5 = E(1, 7) - E(2, 4)
Y5 = E(3, 5).scale(_s(2)) + E(2, 4) + E(1, 7)
X6 = E(1, 4) + E(2, 7)
Y6 = E(3, 6).scale(_s(2)) + E(2, 7) - E(1, 4)
X7 = E(1, 5) - E(2, 6)
Y7 = E(3, 7).scale(_s(2)) - E(2, 6) - E(1, 5)
Z1 = E(1, 2).scale(_s(2)) - E(4, 7) + E(5, 6)
Z2 = E(4, 7) + E(5, 6)

BASIS = (X1, X2, X4, X5, X6, X7, Y1, Y2, Y4, Y5, Y6, Y7, Z1, Z2)
BASIS_NAMES = ("X1", "X2", "X4", "X5", "X6", "X7",
               "Y1", "Y2", "Y4", "Y5", "Y6", "Y7", "Z1", "Z2")

ALGEBRA = Subalgebra("g2", N, BASIS)

SU3 = Subalgebra("su3", N, (Z1, Z2, X1, X2, X4, X5, X6, X7))
SO4 = Subalgebra("so4", N, (X1, X2, Z2, Y1, Y2, Z1))
U2 = Subalgebra("u2", N, (X1, X2, Z2, Z1))
U2T = Subalgebra("u2~", N, (Y1, Y2, Z1, Z2))
SU2 = Subalgebra("su2", N, (X1, X2, Z2))
SU2T = Subalgebra("su2~", N, (Y1, Y2, Z1))
T2 = Subalgebra("t2", N, (Z1, Z2))
SO3_SU3 = Subalgebra("so3", N, (X2, X6, X7))
SO3_SO4 = Subalgebra("so3", N, (X1 - Y1, X2 + Y2, Z1 + Z2))

_A_PRINC = Z1 + Z2.scale(_s(2))
_B_PRINC = X6.scale(_s(2)) + X5 + Y4.scale(SQRT3)
_C_PRINC = X5.scale(_s(2)) - X6 - Y7.scale(SQRT3)
SO3_PRINC = Subalgebra("so3princ", N, (_A_PRINC, _B_PRINC, _C_PRINC))

SO2_SU2 = Subalgebra("so2", N, (Z2,))
SO2_SU2T = Subalgebra("so2", N, (Z1,))
SO2_SO3 = Subalgebra("so2", N, (X2,))
SO2_PRINC = Subalgebra("so2", N, (_A_PRINC,))

# the torus circle family: equal-norm plane directions (both squared norms 4)
_ZHAT1 = Z1.scale(SQRT3 * Fraction(1, 3))


def delta_theta_torus(family: FamilySpec, name: str) -> Subalgebra:
    if family.point is not None:
        c, s = family.point
    else:
        c, s = trig_pair("theta")
    return Subalgebra(name, N, (), ParamLine((_ZHAT1, Z2), (c, s)), family)


DELTA_THETA_SO4 = delta_theta_torus(
    FamilySpec("Delta_theta_SO2", symbol="theta", symbolic=True), "delta_theta")
DELTA_THETA_U2 = delta_theta_torus(
    FamilySpec("Delta_theta_U1", symbol="theta", symbolic=True), "delta_theta")
DELTA_THETA_U2T = delta_theta_torus(
    FamilySpec("Delta_theta_U1", symbol="theta", symbolic=True), "delta_theta")

_HALF_SQRT2 = SQRT2 * Fraction(1, 2)

CHAINS = (
    # upper route: through the special unitary subalgebra
    ChainData("g2", "su3", "u2", k=SU3, h=U2, expected=HOLDS_SYMMETRIC),
    ChainData("g2", "su3", "su2", k=SU3, h=SU2, expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=X4.scale(SQRT2) + X5, xs=-Y6,
                              ym=X7.scale(SQRT2) + X6, ys=Y5,
                              expected_mm=Z1 + Z2.scale(_s(3))),
              )),
    ChainData("g2", "su3", "t2", k=SU3, h=T2, expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=X4.scale(SQRT2 - Scalar(3)) + X6,
                              xs=Y5.scale(Scalar(1) - SQRT2) + Y7,
                              ym=X5.scale(SQRT2 * 2 - Scalar(1)) + X7.scale(SQRT2 - Scalar(1)),
                              ys=Y6.scale(Scalar(1) - SQRT2) + Y4,
                              expected_mm_vertical=X2.scale((SQRT2 - Scalar(1)) * 6),
                              note="vertical bracket component along X2"),
              )),
    ChainData("g2", "su3", "so3", k=SU3, h=SO3_SU3, expected=HOLDS_SYMMETRIC),
    ChainData("g2", "su3", "so2", k=SU3, h=SO2_SU2, expected=FAILS_WITNESS,
              transfers=(TransferData("g2/su3/su2"),)),
    # middle route: through the norm-asymmetric so(4)
    ChainData("g2", "so4", "so3", k=SO4, h=SO3_SO4, expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(
                      xm=X1.scale(_s(3)) + Y1,
                      xs=X5.scale(SQRT3 * 2) + X6.scale(_s(5))
                         + Y5.scale(SQRT3 * Fraction(2, 3)) + Y6.scale(_s(5)),
                      ym=X2.scale(_s(-3)) + Y2,
                      ys=X5 + X6.scale(SQRT3 * Fraction(4, 3)) + Y5,
                      expected_mm=Z1.scale(_s(-2)) + Z2.scale(_s(-18)),
                      note="diagonal so(3): the factor scales differ, so the "
                           "orthogonal complement is not the reflection "
                           "eigenspace and the bound fails"),
              ),
              note="not symmetric for the bi-invariant metric: factor norms 4 vs 12"),
    ChainData("g2", "so4", "su2", k=SO4, h=SU2, expected=HOLDS_CERTIFICATE,
              cited_positive="bound holds by the external wedge-inequality proof "
                             "for this configuration; the mechanical rank route is "
                             "inapplicable (both bracket cones reach rank 6)"),
    ChainData("g2", "so4", "su2~", k=SO4, h=SU2T, expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=X2, xs=X4 + X5, ym=X1, ys=X6 + X7,
                              expected_mm=Z2.scale(_s(-2))),
              )),
    ChainData("g2", "so4", "t2", k=SO4, h=T2, expected=HOLDS_SYMMETRIC),
    ChainData("g2", "so4", "u2", k=SO4, h=U2, expected=HOLDS_SYMMETRIC),
    ChainData("g2", "so4", "u2~", k=SO4, h=U2T, expected=HOLDS_SYMMETRIC),
    ChainData("g2", "so4", "delta_theta", k=SO4, h=DELTA_THETA_SO4,
              expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=X2 + Y2, xs=X4 + Y4,
                              ym=X1.scale(_s(-3)) + Y1, ys=X7.scale(_s(-3)) + Y7,
                              expected_mm=(Z1 + Z2.scale(_s(3))).scale(_s(2)),
                              expected_excluded=(
                                  ParamPoint.circle("theta", Fraction(1, 2), SQRT3 * Fraction(1, 2)),),
                              note="witness away from slope sqrt3"),
                  WitnessData(xm=(X1 + Y1).scale(_HALF_SQRT2), xs=X4,
                              ym=(Y2 - X2).scale(_HALF_SQRT2), ys=X7,
                              expected_mm=-Z1 - Z2,
                              expected_excluded=(
                                  ParamPoint.circle("theta", SQRT3 * Fraction(1, 2), Fraction(1, 2)),),
                              note="witness away from slope 1/sqrt3"),
              ),
              note="the two witnesses cover the whole circle"),
    # the two unitary routes
    ChainData("g2", "u2", "t2", k=U2, h=T2, expected=HOLDS_SYMMETRIC),
    ChainData("g2", "u2", "su2", k=U2, h=SU2, expected=HOLDS_SYMMETRIC),
    ChainData("g2", "u2", "delta_theta", k=U2, h=DELTA_THETA_U2,
              expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=X2, xs=(Y7 - X7).scale(_HALF_SQRT2),
                              ym=X1, ys=(X4 + Y4).scale(_HALF_SQRT2),
                              expected_mm=Z2.scale(_s(-2)),
                              expected_excluded=(ParamPoint.circle("theta", 0, 1),)),
              ),
              exceptional=(PointData(ParamPoint.circle("theta", 0, 1), HOLDS_SYMMETRIC),)),
    ChainData("g2", "u2~", "t2", k=U2T, h=T2, expected=HOLDS_SYMMETRIC),
    ChainData("g2", "u2~", "su2~", k=U2T, h=SU2T, expected=HOLDS_SYMMETRIC),
    ChainData("g2", "u2~", "delta_theta", k=U2T, h=DELTA_THETA_U2T,
              expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=-Y2, xs=X1 + X6.scale(SQRT2),
                              ym=Y1, ys=X2 + X5.scale(SQRT2),
                              expected_mm=Z1.scale(_s(-2)),
                              expected_excluded=(ParamPoint.circle("theta", 1, 0),)),
              ),
              exceptional=(PointData(ParamPoint.circle("theta", 1, 0), HOLDS_SYMMETRIC),)),
    # rank-one intermediates
    ChainData("g2", "su2", "so2", k=SU2, h=SO2_SU2, expected=HOLDS_SYMMETRIC,
              note="rank-one base: circles are symmetric"),
    ChainData("g2", "su2~", "so2", k=SU2T, h=SO2_SU2T, expected=HOLDS_SYMMETRIC,
              note="rank-one base: circles are symmetric"),
    ChainData("g2", "so3", "so2", k=SO3_SU3, h=SO2_SO3, expected=HOLDS_SYMMETRIC,
              note="rank-one base: circles are symmetric"),
    ChainData("g2", "so3princ", "so2", k=SO3_PRINC, h=SO2_PRINC,
              expected=HOLDS_SYMMETRIC,
              note="rank-one base: circles are symmetric"),
)

LATTICE = (
    LatticeEdge("su3", "g2", SU3, ALGEBRA),
    LatticeEdge("so4", "g2", SO4, ALGEBRA),
    LatticeEdge("so3princ", "g2", SO3_PRINC, ALGEBRA),
    LatticeEdge("u2", "su3", U2, SU3),
    LatticeEdge("u2", "so4", U2, SO4),
    LatticeEdge("u2~", "so4", U2T, SO4),
    LatticeEdge("so3", "su3", SO3_SU3, SU3),
    LatticeEdge("so3", "so4", SO3_SO4, SO4),
    LatticeEdge("su2", "u2", SU2, U2),
    LatticeEdge("su2~", "u2~", SU2T, U2T),
)

GROUP = GroupData("g2", N, ALGEBRA, BASIS_NAMES, CHAINS, LATTICE, subalgebras={
    "su3": lambda fam=None: SU3,
    "so4": lambda fam=None: SO4,
    "u2": lambda fam=None: U2,
    "u2~": lambda fam=None: U2T,
    "su2": lambda fam=None: SU2,
    "su2~": lambda fam=None: SU2T,
    "t2": lambda fam=None: T2,
    "so3": lambda fam=None: SO3_SU3,
    "so3_so4": lambda fam=None: SO3_SO4,
    "so3princ": lambda fam=None: SO3_PRINC,
    "delta_theta": lambda fam=None: delta_theta_torus(
        fam or FamilySpec("Delta_theta_SO2", symbol="theta", symbolic=True), "delta_theta"),
})
