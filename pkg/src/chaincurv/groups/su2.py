"""The 3-dimensional ambient algebra: one chain, through its circle."""

from ..algebra import make_E, make_iF, make_iFjj
from ..chains import Subalgebra
from ..criteria import HOLDS_SYMMETRIC
from .common import ChainData, GroupData

N = 2

E12 = make_E(1, 2, N)
IF12 = make_iF(1, 2, N)
IH = make_iFjj(1, N) - make_iFjj(2, N)

ALGEBRA = Subalgebra("su2", N, (IH, E12, IF12))
BASIS_NAMES = ("i(F11-F22)", "E12", "iF12")

SO2 = Subalgebra("so2", N, (E12,))
TRIVIAL = Subalgebra("id", N, ())

CHAINS = (
    ChainData("su2", "so2", "id", k=SO2, h=TRIVIAL, expected=HOLDS_SYMMETRIC,
              note="abelian fiber direction: [m,m] = 0"),
)

GROUP = GroupData("su2", N, ALGEBRA, BASIS_NAMES, CHAINS,
                  subalgebras={"so2": lambda fam=None: SO2, "id": lambda fam=None: TRIVIAL})
