"""Chains inside the 15-dimensional rotation algebra on R^6.

Coordinate conventions, fixed once for the whole section:

* the unitary subalgebra u(3) pairs the planes (1,4), (2,5), (3,6); its
  torus is span{E14, E25, E36} and its real part is the diagonal so(3)
  span{E12+E45, E13+E46, E23+E56};
* the 5-dimensional rotation block sits on coordinates 1..5, the 4+2 block
  splits 1..4 / 5..6, and the 3+3 block splits 1..3 / 4..6;
* inside the 1..4 block, the unitary subalgebra uses the complex structure
  E13+E24, with su(2)-halves span{E12+E34, E14+E23, E13-E24} (plus) and
  span{E12-E34, E14-E23, E13+E24} (minus).
"""

from fractions import Fraction

from ..algebra import make_E
from ..chains import FamilySpec, ParamLine, Subalgebra
from ..criteria import (
    FAILS_WITNESS, HOLDS_SYMMETRIC, ParamPoint,
)
from ..scalars import HALF, SQRT2, SQRT3, SQRT6, Scalar, trig_pair
from .common import ChainData, GroupData, LatticeEdge, PointData, TransferData, WitnessData

N = 6


def E(i, j):
    return make_E(i, j, N)


def _s(x):
    return Scalar(x)


ALGEBRA = Subalgebra("so6", N, tuple(E(i, j) for i in range(1, 7) for j in range(i + 1, 7)))
BASIS_NAMES = tuple(f"E{i}{j}" for i in range(1, 7) for j in range(i + 1, 7))

# -- unitary side -----------------------------------------------------------

DSO3_1 = E(1, 2) + E(4, 5)
DSO3_2 = E(1, 3) + E(4, 6)
DSO3_3 = E(2, 3) + E(5, 6)
SYM_12 = E(1, 5) + E(2, 4)
SYM_13 = E(1, 6) + E(3, 4)
SYM_23 = E(2, 6) + E(3, 5)
T14, T25, T36 = E(1, 4), E(2, 5), E(3, 6)

U3 = Subalgebra("u3", N, (DSO3_1, DSO3_2, DSO3_3, SYM_12, SYM_13, SYM_23, T14, T25, T36))
SU3 = Subalgebra("su3", N, (DSO3_1, DSO3_2, DSO3_3, SYM_12, SYM_13, SYM_23,
                            T14 - T25, T25 - T36))
CENTER_U3 = T14 + T25 + T36
DELTA_SO3 = Subalgebra("delta_so3", N, (DSO3_1, DSO3_2, DSO3_3))
SO3U1 = Subalgebra("so3u1", N, (DSO3_1, DSO3_2, DSO3_3, CENTER_U3))

SU2P_PLANES = (DSO3_1, SYM_12, T14 - T25)      # block unitary su(2) on planes (1,4),(2,5)
SU2_PLANES = Subalgebra("su2", N, SU2P_PLANES)
U2_PLANES = Subalgebra("u2", N, SU2P_PLANES + (T14 + T25,))
U2U1_PLANES = Subalgebra("u2u1", N, SU2P_PLANES + (T14 + T25, T36))
SU21_PLANES = Subalgebra("su21", N, SU2P_PLANES + (T14 + T25 - T36.scale(_s(2)),))
T3 = Subalgebra("t3", N, (T14, T25, T36))
T2_IN_T3 = Subalgebra("t2", N, (T14, T25))
T2_SU3 = Subalgebra("t2", N, (T14 - T25, T25 - T36))
T2_SU21 = Subalgebra("t2", N, (T14 - T25, T14 + T25 - T36.scale(_s(2))))
T2_U2PLANES = Subalgebra("t2", N, (T14 - T25, T14 + T25))
SO2_SU2PLANES = Subalgebra("so2", N, (T14 - T25,))
SO2_DSO3 = Subalgebra("so2", N, (DSO3_1,))
SO2U1 = Subalgebra("so2u1", N, (DSO3_1, CENTER_U3))


def su2_delta_phi_u3(family: FamilySpec) -> Subalgebra:
    """Block su(2) plus a circle mixing the block phase with the last plane."""
    if family.point is not None:
        c, s = family.point
    else:
        c, s = trig_pair("phi")
    plane = ((T14 + T25).scale(SQRT2 * Fraction(1, 2)), T36)
    return Subalgebra("su2_delta_phi", N, SU2P_PLANES, ParamLine(plane, (c, s)), family)


SU2_DPHI_U3 = su2_delta_phi_u3(FamilySpec("SU2_Delta_phi", symbol="phi", symbolic=True))

# -- 5-block side -------------------------------------------------------------

SO5 = Subalgebra("so5", N, tuple(E(i, j) for i in range(1, 6) for j in range(i + 1, 6)))
SO4_IN_SO5 = Subalgebra("so4", N, tuple(E(i, j) for i in range(1, 5) for j in range(i + 1, 5)))
SO3SO2_IN_SO5 = Subalgebra("so3so2", N, (E(1, 2), E(1, 3), E(2, 3), E(4, 5)))
SO3_BLOCK123 = Subalgebra("so3", N, (E(1, 2), E(1, 3), E(2, 3)))

SU2P_BLOCK = (E(1, 2) + E(3, 4), E(1, 4) + E(2, 3), E(1, 3) - E(2, 4))
SU2M_BLOCK = (E(1, 2) - E(3, 4), E(1, 4) - E(2, 3), E(1, 3) + E(2, 4))
SU2_BLOCK = Subalgebra("su2", N, SU2P_BLOCK)
U2_BLOCK = Subalgebra("u2", N, SU2P_BLOCK + (E(1, 3) + E(2, 4),))
T2_U2BLOCK = Subalgebra("t2", N, (E(1, 3) - E(2, 4), E(1, 3) + E(2, 4)))

SO3_PRINC5 = Subalgebra(
    "so3princ", N,
    (E(1, 4).scale(SQRT3) - E(2, 4) + E(3, 5),
     E(1, 5).scale(SQRT3) + E(2, 5) + E(3, 4),
     E(2, 3).scale(_s(2)) - E(4, 5)))
SO2_PRINC5 = Subalgebra("so2", N, (E(2, 3).scale(_s(2)) - E(4, 5),))

# -- 4+2 and 3+3 sides -----------------------------------------------------------

SO4SO2 = Subalgebra("so4so2", N, tuple(E(i, j) for i in range(1, 5) for j in range(i + 1, 5)) + (E(5, 6),))
SO4_BLOCK = Subalgebra("so4", N, tuple(E(i, j) for i in range(1, 5) for j in range(i + 1, 5)))
SO3SO2_56 = Subalgebra("so3so2", N, (E(1, 2), E(1, 3), E(2, 3), E(5, 6)))
U2U1_BLOCK = Subalgebra("u2u1", N, SU2P_BLOCK + (E(1, 3) + E(2, 4), E(5, 6)))
U2_BLOCK_H = Subalgebra("u2", N, SU2P_BLOCK + (E(1, 3) + E(2, 4),))
T3_BLOCK = Subalgebra("t3", N, (E(1, 2), E(3, 4), E(5, 6)))
T2_BLOCK = Subalgebra("t2", N, (E(1, 2), E(3, 4)))
SU2SO2 = Subalgebra("su2so2", N, SU2P_BLOCK + (E(5, 6),))
SU2_ID_BLOCK = Subalgebra("su2", N, SU2P_BLOCK)
SO2SO2_MIX = Subalgebra("so2so2", N, (E(1, 3) - E(2, 4), E(5, 6)))
U1_CENTER = Subalgebra("u1", N, (E(1, 3) + E(2, 4),))
SO2_56 = Subalgebra("so2", N, (E(5, 6),))
U1SO2 = Subalgebra("u1so2", N, (E(1, 3) + E(2, 4), E(5, 6)))

SO3SO3 = Subalgebra("so3so3", N, (E(1, 2), E(1, 3), E(2, 3), E(4, 5), E(4, 6), E(5, 6)))
SO3_ID = Subalgebra("so3", N, (E(1, 2), E(1, 3), E(2, 3)))
SO3SO2_IN_33 = Subalgebra("so3so2", N, (E(1, 2), E(1, 3), E(2, 3), E(4, 5)))
SO2SO2_33 = Subalgebra("so2so2", N, (E(1, 2), E(4, 5)))
SO2_12 = Subalgebra("so2", N, (E(1, 2),))


def delta_theta_plane(family: FamilySpec, a, b, name="delta_theta",
                      fixed=()) -> Subalgebra:
    if family.point is not None:
        c, s = family.point
    else:
        c, s = trig_pair(family.symbol or "theta")
    return Subalgebra(name, N, tuple(fixed), ParamLine((a, b), (c, s)), family)


def _fam(symbol="theta", kind="Delta_theta_SO2"):
    return FamilySpec(kind, symbol=symbol, symbolic=True)


# families, one per intermediate subgroup
DTHETA_SO4SO2 = delta_theta_plane(
    _fam(), (E(1, 2) + E(3, 4)).scale(HALF), (E(1, 3) + E(2, 4)).scale(HALF),
    fixed=(E(5, 6),))
SU2_DPHI_BLOCK = delta_theta_plane(
    FamilySpec("SU2_Delta_phi", symbol="phi", symbolic=True),
    (E(1, 3) + E(2, 4)).scale(SQRT2 * Fraction(1, 2)), E(5, 6),
    name="su2_delta_phi", fixed=SU2P_BLOCK)
DTHETA_SO3SO3 = delta_theta_plane(_fam(), E(1, 2), E(4, 5))
SU2_DPHI_U2U1 = delta_theta_plane(
    FamilySpec("SU2_Delta_phi", symbol="phi", symbolic=True),
    (E(1, 3) + E(2, 4)).scale(SQRT2 * Fraction(1, 2)), E(5, 6),
    name="su2_delta_phi", fixed=SU2P_BLOCK)
DTHETA_SO3U1 = delta_theta_plane(
    _fam(), (E(2, 3) + E(5, 6)).scale(HALF), CENTER_U3.scale(SQRT6 * Fraction(1, 6)))
DTHETA_SO4BLOCK = delta_theta_plane(_fam(), E(1, 2), E(3, 4))
DTHETA_SO3SO2 = delta_theta_plane(_fam(), E(2, 3), E(4, 5))
DTHETA_SU21 = delta_theta_plane(
    _fam(), (T14 - T25).scale(HALF), (T14 + T25 - T36.scale(_s(2))).scale(SQRT3 * Fraction(1, 6)))
DTHETA_U2PLANES = delta_theta_plane(
    _fam(), (T14 - T25).scale(HALF), (T14 + T25).scale(HALF))

# the moving K and its moving circle
K_SU2DPHI_SO2 = SU2_DPHI_BLOCK  # same structure: su2-plus plus the phi circle


def dtheta_inside_moving_k(family: FamilySpec) -> Subalgebra:
    if family.point is not None:
        c, s = family.point
    else:
        c, s = trig_pair("theta")
    cphi, sphi = trig_pair("phi")
    bphi = (E(1, 3) + E(2, 4)).scale(SQRT2 * Fraction(1, 2) * cphi) + E(5, 6).scale(sphi)
    a = (E(1, 3) - E(2, 4)).scale(SQRT2 * Fraction(1, 2))
    return Subalgebra("delta_theta", N, (), ParamLine((a, bphi), (c, s)), family)


DTHETA_IN_MOVING = dtheta_inside_moving_k(_fam())
SO2_DPHI_SO2 = Subalgebra(
    "so2_delta_phi_so2", N, ((E(1, 3) - E(2, 4)),),
    ParamLine(((E(1, 3) + E(2, 4)).scale(SQRT2 * Fraction(1, 2)), E(5, 6)),
              (trig_pair("phi")[0], trig_pair("phi")[1])),
    FamilySpec("SU2_Delta_phi", symbol="phi", symbolic=True))

_R2 = SQRT2

CHAINS = (
    # ---- K = the unitary u(3) -------------------------------------------
    ChainData("so6", "u3", "u2u1", k=U3, h=U2U1_PLANES, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "u3", "su3", k=U3, h=SU3, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "u3", "so3u1", k=U3, h=SO3U1, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "u3", "su21", k=U3, h=SU21_PLANES, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "u3", "delta_so3", k=U3, h=DELTA_SO3, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "u3", "t3", k=U3, h=T3, expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=DSO3_1, xs=E(1, 2) - E(4, 5),
                              ym=DSO3_3, ys=-E(2, 3) + E(5, 6),
                              expected_mm=DSO3_2),
              )),
    ChainData("so6", "u3", "t2", k=U3, h=T2_IN_T3, expected=FAILS_WITNESS,
              transfers=(TransferData("so6/u3/t3"),),
              note="abelian subgroups of the torus inherit its witness"),
    ChainData("so6", "u3", "u2", k=U3, h=U2_PLANES, expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=DSO3_2, xs=E(2, 6) - E(3, 5),
                              ym=T36, ys=E(1, 2) - E(4, 5),
                              expected_mm=SYM_13),
              )),
    ChainData("so6", "u3", "su2", k=U3, h=SU2_PLANES, expected=FAILS_WITNESS,
              transfers=(TransferData("so6/u3/u2"),)),
    ChainData("so6", "u3", "su2_delta_phi", k=U3, h=SU2_DPHI_U3,
              expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=DSO3_3, xs=E(1, 2) + E(1, 3) - E(4, 5) - E(4, 6),
                              ym=SYM_23, ys=E(1, 5) - E(1, 6) - E(2, 4) + E(3, 4),
                              expected_mm=(T25 - T36).scale(_s(2)),
                              expected_excluded=(
                                  ParamPoint.circle("phi", SQRT3 * Fraction(1, 3),
                                                    -(SQRT6 * Fraction(1, 3))),)),
              ),
              exceptional=(
                  PointData(ParamPoint.circle("phi", SQRT3 * Fraction(1, 3),
                                              -(SQRT6 * Fraction(1, 3))),
                            HOLDS_SYMMETRIC),
              ),
              note="symmetric exactly at slope -sqrt2, where the circle closes the block"),
    # ---- K = the 5-block ------------------------------------------------
    ChainData("so6", "so5", "so3so2", k=SO5, h=SO3SO2_IN_SO5, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "so5", "so4", k=SO5, h=SO4_IN_SO5, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "so5", "u2", k=SO5, h=U2_BLOCK, expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=E(2, 5) + E(3, 5), xs=E(2, 6) + E(3, 6),
                              ym=E(1, 5) + E(4, 5), ys=-E(1, 6) - E(4, 6),
                              expected_mm=E(1, 2) + E(1, 3) - E(2, 4) - E(3, 4)),
              )),
    ChainData("so6", "so5", "su2", k=SO5, h=SU2_BLOCK, expected=FAILS_WITNESS,
              transfers=(TransferData("so6/so5/u2"),)),
    ChainData("so6", "so5", "t2", k=SO5, h=T2_U2BLOCK, expected=FAILS_WITNESS,
              transfers=(TransferData("so6/so5/u2"),)),
    ChainData("so6", "so5", "so3", k=SO5, h=SO3_BLOCK123, expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=E(1, 5), xs=E(4, 6), ym=E(1, 4), ys=E(5, 6),
                              expected_mm=E(4, 5)),
              )),
    ChainData("so6", "so5", "so3princ", k=SO5, h=SO3_PRINC5, expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=E(1, 2), xs=E(2, 6), ym=E(1, 3), ys=-E(3, 6),
                              expected_mm=-E(2, 3)),
              )),
    # ---- K = the 4+2 block ----------------------------------------------
    ChainData("so6", "so4so2", "so4", k=SO4SO2, h=SO4_BLOCK, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "so4so2", "so3so2", k=SO4SO2, h=SO3SO2_56, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "so4so2", "so3", k=SO4SO2, h=SO3_BLOCK123, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "so4so2", "u2u1", k=SO4SO2, h=U2U1_BLOCK, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "so4so2", "u2", k=SO4SO2, h=U2_BLOCK_H, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "so4so2", "t3", k=SO4SO2, h=T3_BLOCK, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "so4so2", "t2", k=SO4SO2, h=T2_BLOCK, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "so4so2", "su2so2", k=SO4SO2, h=SU2SO2, expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=E(1, 2) - E(3, 4), xs=(E(3, 6) + E(4, 5)).scale(_R2),
                              ym=E(1, 4) - E(2, 3), ys=(E(1, 6) + E(2, 5)).scale(_R2),
                              expected_mm=(E(1, 3) + E(2, 4)).scale(_s(-2))),
              )),
    ChainData("so6", "so4so2", "su2_delta_phi", k=SO4SO2, h=SU2_DPHI_BLOCK,
              expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=E(1, 2) - E(3, 4), xs=(E(3, 6) + E(4, 5)).scale(_R2),
                              ym=E(1, 4) - E(2, 3), ys=(E(1, 6) + E(2, 5)).scale(_R2),
                              expected_mm=(E(1, 3) + E(2, 4)).scale(_s(-2)),
                              expected_excluded=(ParamPoint.circle("phi", 1, 0),)),
              ),
              exceptional=(PointData(ParamPoint.circle("phi", 1, 0), HOLDS_SYMMETRIC),),
              note="at sin = 0 the circle closes the unitary subalgebra"),
    ChainData("so6", "so4so2", "delta_theta", k=SO4SO2, h=DTHETA_SO4SO2,
              expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=E(1, 3) - E(2, 4), xs=(E(2, 5) + E(3, 6)).scale(_R2),
                              ym=E(2, 3) + E(1, 4), ys=(E(1, 5) - E(4, 6)).scale(_R2),
                              expected_mm=(E(1, 2) + E(3, 4)).scale(_s(-2)),
                              expected_excluded=(ParamPoint.circle("theta", 1, 0),)),
              ),
              exceptional=(
                  PointData(ParamPoint.circle("theta", 1, 0), FAILS_WITNESS,
                            transfers=(TransferData("so6/so4so2/su2so2"),)),
              )),
    # ---- K = the 3+3 block ----------------------------------------------
    ChainData("so6", "so3so3", "so3so2", k=SO3SO3, h=SO3SO2_IN_33, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "so3so3", "delta_so3", k=SO3SO3, h=DELTA_SO3, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "so3so3", "so2so2", k=SO3SO3, h=SO2SO2_33, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "so3so3", "so3", k=SO3SO3, h=SO3_ID, expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=E(4, 5), xs=E(2, 5), ym=E(4, 6), ys=-E(2, 6),
                              expected_mm=-E(5, 6)),
              )),
    ChainData("so6", "so3so3", "delta_theta", k=SO3SO3, h=DTHETA_SO3SO3,
              expected=FAILS_WITNESS,
              witnesses=(
                  # horizontal parts repaired to the commuting cross pattern
                  WitnessData(xm=E(1, 3), xs=-E(1, 4), ym=E(2, 3), ys=E(2, 4),
                              expected_mm=-E(1, 2),
                              expected_excluded=(ParamPoint.circle("theta", 1, 0),)),
              ),
              exceptional=(
                  PointData(ParamPoint.circle("theta", 1, 0), FAILS_WITNESS,
                            transfers=(TransferData("so6/so3so3/so3"),)),
              )),
    # ---- K = the unitary 2+1 block --------------------------------------
    ChainData("so6", "u2u1", "u2", k=U2U1_BLOCK, h=U2_BLOCK_H, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "u2u1", "t2so2", k=U2U1_BLOCK, h=Subalgebra(
        "t2so2", N, (E(1, 3) - E(2, 4), E(1, 3) + E(2, 4), E(5, 6))),
        expected=HOLDS_SYMMETRIC),
    ChainData("so6", "u2u1", "su2_delta_phi", k=U2U1_BLOCK, h=SU2_DPHI_U2U1,
              expected=HOLDS_SYMMETRIC,
              note="one-dimensional moving complement: [m,m] = 0 for every angle"),
    ChainData("so6", "u2u1", "su2so2", k=U2U1_BLOCK, h=SU2SO2, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "u2u1", "su2", k=U2U1_BLOCK, h=SU2_ID_BLOCK, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "u2u1", "so2so2", k=U2U1_BLOCK, h=SO2SO2_MIX, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "u2u1", "u1so2", k=U2U1_BLOCK, h=U1SO2, expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=E(1, 2) + E(3, 4), xs=(E(1, 5) + E(2, 6)).scale(_R2),
                              ym=E(1, 4) + E(2, 3), ys=(E(3, 5) - E(4, 6)).scale(_R2),
                              expected_mm=(E(1, 3) - E(2, 4)).scale(_s(2))),
              )),
    ChainData("so6", "u2u1", "u1", k=U2U1_BLOCK, h=U1_CENTER, expected=FAILS_WITNESS,
              transfers=(TransferData("so6/u2u1/u1so2"),)),
    ChainData("so6", "u2u1", "so2", k=U2U1_BLOCK, h=SO2_56, expected=FAILS_WITNESS,
              transfers=(TransferData("so6/u2u1/u1so2"),)),
    # ---- K = the special unitary block -----------------------------------
    ChainData("so6", "su3", "su21", k=SU3, h=SU21_PLANES, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "su3", "delta_so3", k=SU3, h=DELTA_SO3, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "su3", "t2", k=SU3, h=T2_SU3, expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=DSO3_1, xs=DSO3_2 - E(4, 6).scale(_s(2)),
                              ym=DSO3_2, ys=DSO3_1 - E(4, 5).scale(_s(2)),
                              expected_mm=-DSO3_3),
              )),
    ChainData("so6", "su3", "su2", k=SU3, h=SU2_PLANES, expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=DSO3_3, xs=E(1, 2) + E(1, 3) - E(4, 5) - E(4, 6),
                              ym=SYM_23, ys=E(1, 5) - E(1, 6) - E(2, 4) + E(3, 4),
                              expected_mm=(T25 - T36).scale(_s(2))),
              )),
    # ---- K = the diagonal so(3) plus phase --------------------------------
    ChainData("so6", "so3u1", "so2u1", k=SO3U1, h=SO2U1, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "so3u1", "delta_so3", k=SO3U1, h=DELTA_SO3, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "so3u1", "delta_theta", k=SO3U1, h=DTHETA_SO3U1,
              expected=FAILS_WITNESS,
              witnesses=(
                  # horizontal parts cross-paired, as in the special-unitary case
                  WitnessData(xm=DSO3_1, xs=E(1, 3) - E(4, 6),
                              ym=DSO3_2, ys=E(1, 2) - E(4, 5),
                              expected_mm=-DSO3_3,
                              expected_excluded=(ParamPoint.circle("theta", 1, 0),)),
              ),
              exceptional=(PointData(ParamPoint.circle("theta", 1, 0), HOLDS_SYMMETRIC),)),
    # ---- K = the plain 4-block -------------------------------------------
    ChainData("so6", "so4", "so2so2", k=SO4_BLOCK, h=Subalgebra(
        "so2so2", N, (E(1, 2), E(3, 4))), expected=HOLDS_SYMMETRIC),
    ChainData("so6", "so4", "so3", k=SO4_BLOCK, h=SO3_BLOCK123, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "so4", "su2", k=SO4_BLOCK, h=SU2_ID_BLOCK, expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=E(1, 2) - E(3, 4), xs=(E(3, 5) + E(1, 6)).scale(_R2),
                              ym=E(1, 3) + E(2, 4), ys=(E(2, 5) + E(4, 6)).scale(_R2),
                              expected_mm=(E(1, 4) - E(2, 3)).scale(_s(2))),
              )),
    ChainData("so6", "so4", "delta_theta", k=SO4_BLOCK, h=DTHETA_SO4BLOCK,
              expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=E(2, 3), xs=E(2, 5), ym=E(1, 3), ys=-E(1, 5),
                              expected_mm=E(1, 2),
                              expected_excluded=(ParamPoint.circle("theta", 1, 0),),
                              note="witness away from sin=0"),
                  WitnessData(xm=E(1, 4), xs=E(4, 5), ym=E(1, 3), ys=-E(3, 5),
                              expected_mm=E(3, 4),
                              expected_excluded=(ParamPoint.circle("theta", 0, 1),),
                              note="witness away from cos=0"),
              )),
    # ---- K = the 3+2 block -------------------------------------------------
    ChainData("so6", "so3so2", "so2so2", k=SO3SO2_IN_33, h=SO2SO2_33,
              expected=HOLDS_SYMMETRIC),
    ChainData("so6", "so3so2", "so3", k=SO3SO2_IN_33, h=SO3_ID, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "so3so2", "delta_theta", k=SO3SO2_IN_33, h=DTHETA_SO3SO2,
              expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=E(1, 2), xs=E(2, 4), ym=E(1, 3), ys=-E(3, 4),
                              expected_mm=-E(2, 3),
                              expected_excluded=(ParamPoint.circle("theta", 1, 0),)),
              ),
              exceptional=(PointData(ParamPoint.circle("theta", 1, 0), HOLDS_SYMMETRIC),)),
    # ---- K = the moving unitary circle group --------------------------------
    ChainData("so6", "su2dphiso2", "su2", k=K_SU2DPHI_SO2, h=SU2_ID_BLOCK,
              expected=HOLDS_SYMMETRIC),
    ChainData("so6", "su2dphiso2", "so2dphiso2", k=K_SU2DPHI_SO2, h=SO2_DPHI_SO2,
              expected=HOLDS_SYMMETRIC),
    ChainData("so6", "su2dphiso2", "delta_theta", k=K_SU2DPHI_SO2, h=DTHETA_IN_MOVING,
              expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=E(1, 2) + E(3, 4), xs=(E(1, 5) + E(2, 6)).scale(_R2),
                              ym=E(1, 4) + E(2, 3), ys=(E(3, 5) - E(4, 6)).scale(_R2),
                              expected_mm=(E(1, 3) - E(2, 4)).scale(_s(2)),
                              expected_excluded=(ParamPoint.circle("theta", 1, 0),)),
              ),
              exceptional=(PointData(ParamPoint.circle("theta", 1, 0), HOLDS_SYMMETRIC),)),
    # ---- K = the block 2+1 special unitary ----------------------------------
    ChainData("so6", "su21", "t2", k=SU21_PLANES, h=T2_SU21, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "su21", "su2", k=SU21_PLANES, h=SU2_PLANES, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "su21", "delta_theta", k=SU21_PLANES, h=DTHETA_SU21,
              expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=DSO3_1, xs=(E(1, 6) + E(3, 5)).scale(_R2),
                              ym=SYM_12, ys=(E(4, 6) - E(2, 3)).scale(_R2),
                              expected_mm=(T14 - T25).scale(_s(2)),
                              expected_excluded=(ParamPoint.circle("theta", 1, 0),)),
              ),
              exceptional=(PointData(ParamPoint.circle("theta", 1, 0), HOLDS_SYMMETRIC),)),
    # ---- K = the plain block unitary ------------------------------------------
    ChainData("so6", "u2", "t2", k=U2_PLANES, h=T2_U2PLANES, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "u2", "su2", k=U2_PLANES, h=SU2_PLANES, expected=HOLDS_SYMMETRIC),
    ChainData("so6", "u2", "delta_theta", k=U2_PLANES, h=DTHETA_U2PLANES,
              expected=FAILS_WITNESS,
              witnesses=(
                  WitnessData(xm=DSO3_1, xs=(E(1, 6) + E(3, 5)).scale(_R2),
                              ym=SYM_12, ys=(E(4, 6) - E(2, 3)).scale(_R2),
                              expected_mm=(T14 - T25).scale(_s(2)),
                              expected_excluded=(ParamPoint.circle("theta", 1, 0),)),
              ),
              exceptional=(PointData(ParamPoint.circle("theta", 1, 0), HOLDS_SYMMETRIC),)),
    # ---- rank-one intermediates -------------------------------------------------
    ChainData("so6", "su2", "so2", k=SU2_PLANES, h=SO2_SU2PLANES,
              expected=HOLDS_SYMMETRIC, note="rank-one base: circles are symmetric"),
    ChainData("so6", "delta_so3", "so2", k=DELTA_SO3, h=SO2_DSO3,
              expected=HOLDS_SYMMETRIC, note="rank-one base: circles are symmetric"),
    ChainData("so6", "so3", "so2", k=SO3_ID, h=SO2_12,
              expected=HOLDS_SYMMETRIC, note="rank-one base: circles are symmetric"),
    ChainData("so6", "so3princ", "so2", k=SO3_PRINC5, h=SO2_PRINC5,
              expected=HOLDS_SYMMETRIC, note="rank-one base: circles are symmetric"),
)

LATTICE = (
    LatticeEdge("u3", "so6", U3, ALGEBRA),
    LatticeEdge("so5", "so6", SO5, ALGEBRA),
    LatticeEdge("so4so2", "so6", SO4SO2, ALGEBRA),
    LatticeEdge("so3so3", "so6", SO3SO3, ALGEBRA),
    LatticeEdge("u2u1", "u3", U2U1_PLANES, U3),
    LatticeEdge("u2u1", "so4so2", U2U1_BLOCK, SO4SO2),
    LatticeEdge("su3", "u3", SU3, U3),
    LatticeEdge("so3u1", "u3", SO3U1, U3),
    LatticeEdge("so4", "so5", SO4_IN_SO5, SO5),
    LatticeEdge("so4", "so4so2", SO4_BLOCK, SO4SO2),
    LatticeEdge("so3so2", "so5", SO3SO2_IN_SO5, SO5),
    LatticeEdge("so3so2", "so4so2", SO3SO2_56, SO4SO2),
    LatticeEdge("so3so2", "so3so3", SO3SO2_IN_33, SO3SO3),
    LatticeEdge("su2_delta_phi", "u2u1", SU2_DPHI_U2U1, U2U1_BLOCK),
    LatticeEdge("su21", "su3", SU21_PLANES, SU3),
    LatticeEdge("u2", "u2u1", U2_BLOCK_H, U2U1_BLOCK),
    LatticeEdge("u2", "so4", U2_BLOCK, SO4_IN_SO5),
    LatticeEdge("su2", "su21", SU2_PLANES, SU21_PLANES),
    LatticeEdge("su2", "u2", SU2_PLANES, U2_PLANES),
    LatticeEdge("delta_so3", "so3u1", DELTA_SO3, SO3U1),
    LatticeEdge("delta_so3", "so3so3", DELTA_SO3, SO3SO3),
    LatticeEdge("delta_so3", "su3", DELTA_SO3, SU3),
    LatticeEdge("so3", "so3so3", SO3_ID, SO3SO3),
    LatticeEdge("so3", "so3so2", SO3_ID, SO3SO2_IN_33),
    LatticeEdge("so3", "so4", SO3_BLOCK123, SO4_IN_SO5),
    LatticeEdge("so3princ", "so5", SO3_PRINC5, SO5),
)

GROUP = GroupData("so6", N, ALGEBRA, BASIS_NAMES, CHAINS, LATTICE, subalgebras={
    "u3": lambda fam=None: U3,
    "su3": lambda fam=None: SU3,
    "so5": lambda fam=None: SO5,
    "so4so2": lambda fam=None: SO4SO2,
    "so3so3": lambda fam=None: SO3SO3,
    "u2u1": lambda fam=None: U2U1_BLOCK,
    "so3u1": lambda fam=None: SO3U1,
    "so4": lambda fam=None: SO4_BLOCK,
    "so3so2": lambda fam=None: SO3SO2_IN_33,
    "su21": lambda fam=None: SU21_PLANES,
    "u2": lambda fam=None: U2_PLANES,
    "su2": lambda fam=None: SU2_PLANES,
    "delta_so3": lambda fam=None: DELTA_SO3,
    "so3": lambda fam=None: SO3_ID,
    "so3princ": lambda fam=None: SO3_PRINC5,
    "su2_delta_phi": lambda fam=None: su2_delta_phi_u3(
        fam or FamilySpec("SU2_Delta_phi", symbol="phi", symbolic=True)),
    "su2dphiso2": lambda fam=None: delta_theta_plane(
        fam or FamilySpec("SU2_Delta_phi", symbol="phi", symbolic=True),
        (E(1, 3) + E(2, 4)).scale(SQRT2 * Fraction(1, 2)), E(5, 6),
        name="su2_delta_phi", fixed=SU2P_BLOCK),
})
