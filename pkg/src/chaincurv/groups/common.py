"""Shared data shapes for the chain catalog.

Each group module declares its ambient algebra, named subalgebras, the
chains the classification walks through, candidate witness pairs, and the
inclusion-lattice edges.  Everything here is data plus light plumbing; all
mathematical claims are re-verified by the machinery in criteria/chains.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from ..algebra import AlgebraElement
from ..chains import FamilySpec, Subalgebra
from ..criteria import ParamPoint


@dataclass(frozen=True)
class WitnessData:
    """A candidate witness with its declared vertical/horizontal split."""

    xm: AlgebraElement
    xs: AlgebraElement
    ym: AlgebraElement
    ys: AlgebraElement
    expected_mm: Optional[AlgebraElement] = None            # expected [x^m, y^m]
    expected_mm_vertical: Optional[AlgebraElement] = None   # expected ([x^m, y^m])^m
    expected_excluded: tuple[ParamPoint, ...] = ()
    note: str = ""

    @property
    def x(self) -> AlgebraElement:
        return self.xm + self.xs

    @property
    def y(self) -> AlgebraElement:
        return self.ym + self.ys


@dataclass(frozen=True)
class TransferData:
    """Reference to another catalog chain whose witness transfers here."""

    source_id: str
    note: str = ""


@dataclass(frozen=True)
class PointData:
    """Expected verdict (and optional evidence) at one parameter point."""

    point: ParamPoint
    expected: str
    witnesses: tuple[WitnessData, ...] = ()
    transfers: tuple[TransferData, ...] = ()


@dataclass(frozen=True)
class ChainData:
    gid: str
    kid: str
    hid: str
    k: Subalgebra
    h: Subalgebra
    expected: str
    witnesses: tuple[WitnessData, ...] = ()
    transfers: tuple[TransferData, ...] = ()
    exceptional: tuple[PointData, ...] = ()
    declared_m: Optional[tuple[AlgebraElement, ...]] = None
    cited_positive: str = ""
    note: str = ""

    @property
    def chain_id(self) -> str:
        return f"{self.gid}/{self.kid}/{self.hid}"

    @property
    def is_family(self) -> bool:
        return self.h.is_parametric or self.k.is_parametric


@dataclass(frozen=True)
class LatticeEdge:
    """child <= parent, witnessed by explicit representative bases.

    Conjugacy is never computed: a class may use different conjugate
    representatives on different edges, as the printed tables do.
    """

    child: str
    parent: str
    child_rep: Subalgebra
    parent_rep: Subalgebra


@dataclass(frozen=True)
class GroupData:
    name: str
    n: int
    algebra: Subalgebra
    basis_names: tuple[str, ...]
    chains: tuple[ChainData, ...]
    lattice: tuple[LatticeEdge, ...] = ()
    # named constructors for make_subalgebra(ambient, name, family)
    subalgebras: dict = field(default_factory=dict)

    def chain_map(self) -> dict[str, ChainData]:
        return {c.chain_id: c for c in self.chains}
