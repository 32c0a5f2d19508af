"""Chains inside the 8-dimensional special unitary algebra on C^3.

The interesting case is the circle family through the diagonal torus of the
block unitary subalgebra: it is symmetric exactly at the balanced slope
(1, -1) and fails everywhere else, with one explicit witness pair.
"""

from fractions import Fraction

from ..algebra import make_E, make_iF, make_iFjj
from ..chains import FamilySpec, ParamLine, Subalgebra
from ..criteria import FAILS_WITNESS, HOLDS_SYMMETRIC, ParamPoint
from ..scalars import Scalar, free_symbol
from .common import ChainData, GroupData, PointData, WitnessData

N = 3

E12, E13, E23 = (make_E(i, j, N) for i, j in ((1, 2), (1, 3), (2, 3)))
IF12, IF13, IF23 = (make_iF(i, j, N) for i, j in ((1, 2), (1, 3), (2, 3)))


def _idiag(*entries):
    acc = None
    for j, e in enumerate(entries, start=1):
        term = make_iFjj(j, N).scale(Scalar(e))
        acc = term if acc is None else acc + term
    return acc


T1 = _idiag(1, -1, 0)      # i (F11 - F22)
T2 = _idiag(1, 1, -2)      # i (F11 + F22 - 2 F33)

ALGEBRA = Subalgebra("su3", N, (T1, T2, E12, E13, E23, IF12, IF13, IF23))
BASIS_NAMES = ("i(F11-F22)", "i(F11+F22-2F33)", "E12", "E13", "E23",
               "iF12", "iF13", "iF23")

SU21 = Subalgebra("su21", N, (E12, IF12, T1, T2))         # block 2x2 plus phase
SU2 = Subalgebra("su2", N, (E12, IF12, T1))               # top-left block
SO3 = Subalgebra("so3", N, (E12, E13, E23))               # real rotations
SO2 = Subalgebra("so2", N, (E12,))                        # real circle
U1_DIAG = Subalgebra("so2", N, (T1,))                     # complex circle


def delta_pq_subalgebra(family: FamilySpec) -> Subalgebra:
    """span{i(p F11 + q F22 - (p+q) F33)} as a line in the diagonal torus."""
    if family.pq is not None:
        p, q = family.pq
        alpha = Scalar(Fraction(p - q, 2))
        beta = Scalar(Fraction(p + q, 2))
    else:
        p, q = free_symbol("p"), free_symbol("q")
        alpha = (p - q) * Fraction(1, 2)
        beta = (p + q) * Fraction(1, 2)
    return Subalgebra("delta_pq", N, (), ParamLine((T1, T2), (alpha, beta)), family)


DELTA_PQ = delta_pq_subalgebra(FamilySpec("Delta_pq_U1", symbolic=True))

_PQ_WITNESS = WitnessData(
    xm=E12, xs=E13 + E23,
    ym=IF12, ys=IF23 - IF13,
    expected_mm=T1.scale(Scalar(2)),   # 2 i (F11 - F22)
    expected_excluded=(ParamPoint.pq(1, -1),),
    note="torus-family witness",
)

CHAINS = (
    ChainData("su3", "su21", "su2", k=SU21, h=SU2, expected=HOLDS_SYMMETRIC,
              note="one-dimensional complement, [m,m] = 0"),
    ChainData("su3", "su21", "so2", k=SU21, h=SO2, expected=HOLDS_SYMMETRIC,
              note="real circle inside the block"),
    ChainData("su3", "su21", "delta_pq", k=SU21, h=DELTA_PQ,
              expected=FAILS_WITNESS,
              witnesses=(_PQ_WITNESS,),
              exceptional=(PointData(ParamPoint.pq(1, -1), HOLDS_SYMMETRIC),),
              note="symmetric exactly at slope (1,-1)"),
    ChainData("su3", "su2", "so2", k=SU2, h=U1_DIAG, expected=HOLDS_SYMMETRIC,
              note="rank-one base: circles are symmetric"),
    ChainData("su3", "so3", "so2", k=SO3, h=SO2, expected=HOLDS_SYMMETRIC,
              note="rank-one base: circles are symmetric"),
)

GROUP = GroupData("su3", N, ALGEBRA, BASIS_NAMES, CHAINS, subalgebras={
    "su21": lambda fam=None: SU21,
    "su2": lambda fam=None: SU2,
    "so3": lambda fam=None: SO3,
    "so2": lambda fam=None: SO2,
    "delta_pq": lambda fam=None: delta_pq_subalgebra(fam or FamilySpec("Delta_pq_U1", symbolic=True)),
})
