"""The chain catalog: named algebras, subalgebras, chains, and the lattice.

Every chain the classifier reports on is listed here with explicit bases in
fixed coordinates.  Families carry their parameter symbolically by default
and can be instantiated at exact parameter values.  The inclusion lattices
of the three larger groups are stored as explicit edges and re-verified by
containment of representative bases.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .algebra import AlgebraElement, in_span
from .chains import Chain, FamilySpec, Subalgebra, build_chain, instantiate_chain
from .criteria import (
    ChainVerdict, ParamPoint, StoredEvidence, StoredTransfer, StoredWitness,
    classify_chain,
)
from .groups import all_groups
from .groups.common import ChainData, GroupData, PointData

_GROUPS: dict[str, GroupData] = {g.name: g for g in all_groups()}
_CHAIN_CACHE: dict = {}
_VERDICT_CACHE: dict = {}


class UnknownCatalogEntry(KeyError):
    pass


def group_names() -> list[str]:
    return sorted(_GROUPS)


def make_algebra(name: str) -> Subalgebra:
    """The full ambient algebra with the catalog's basis conventions."""
    if name not in _GROUPS:
        raise UnknownCatalogEntry(f"unknown algebra {name!r}; "
                                  f"choose from {sorted(_GROUPS)}")
    return _GROUPS[name].algebra


def basis_names(name: str) -> tuple[str, ...]:
    return _GROUPS[name].basis_names


def make_subalgebra(ambient: str | Subalgebra, name: str,
                    family: Optional[FamilySpec] = None) -> Subalgebra:
    """A named subalgebra of a catalog algebra, optionally at a family value."""
    gname = ambient if isinstance(ambient, str) else ambient.name
    if gname not in _GROUPS:
        raise UnknownCatalogEntry(f"unknown ambient algebra {gname!r}")
    ctors = _GROUPS[gname].subalgebras
    if name not in ctors:
        raise UnknownCatalogEntry(
            f"unknown subalgebra {name!r} of {gname}; choose from {sorted(ctors)}")
    return ctors[name](family)


def catalog_chains(group: Optional[str] = None) -> list[ChainData]:
    if group is not None:
        return list(_GROUPS[group].chains)
    out: list[ChainData] = []
    for name in sorted(_GROUPS):
        out.extend(_GROUPS[name].chains)
    return out


def chain_data(chain_id: str) -> ChainData:
    gid = chain_id.split("/", 1)[0]
    if gid not in _GROUPS:
        raise UnknownCatalogEntry(f"unknown group in chain id {chain_id!r}")
    cm = _GROUPS[gid].chain_map()
    if chain_id not in cm:
        raise UnknownCatalogEntry(
            f"unknown chain {chain_id!r}; known ids for {gid}: {sorted(cm)}")
    return cm[chain_id]


def _family_values(data: ChainData, family: Optional[FamilySpec]) -> Optional[dict]:
    if family is None:
        return None
    sub = data.h if data.h.is_parametric else data.k
    symbol = sub.family.symbol or ("pq" if family.pq is not None else "theta")
    if family.pq is not None:
        p, q = family.pq
        return {"p": p, "q": q}
    if family.point is not None:
        c, s = family.point
        base = sub.family.symbol or "theta"
        return {f"cos:{base}": c, f"sin:{base}": s}
    return None


def get_chain(chain_id: str, values: Optional[dict] = None) -> Chain:
    """Build (and cache) the decomposed chain; values instantiate a family."""
    key = (chain_id, tuple(sorted(values.items())) if values else None)
    if key in _CHAIN_CACHE:
        return _CHAIN_CACHE[key]
    data = chain_data(chain_id)
    g = _GROUPS[data.gid].algebra
    chain = build_chain(g, data.k, data.h, declared_m=data.declared_m)
    if values:
        chain = instantiate_chain(chain, values)
    _CHAIN_CACHE[key] = chain
    return chain


def _evidence_for(data: ChainData) -> StoredEvidence:
    witnesses = tuple(StoredWitness(w.x, w.y, note=w.note or "stored witness")
                      for w in data.witnesses)
    transfers = []
    for t in data.transfers:
        src_data = chain_data(t.source_id)
        if not src_data.witnesses:
            raise ValueError(f"transfer source {t.source_id} has no stored witness")
        src_chain = get_chain(t.source_id)
        w = src_data.witnesses[0]
        transfers.append(StoredTransfer(
            StoredWitness(w.x, w.y), src_chain,
            note=t.note or f"transfer from {t.source_id}"))
    exceptional = []
    for pd in data.exceptional:
        sub_ev = StoredEvidence(
            witnesses=tuple(StoredWitness(w.x, w.y, note=w.note) for w in pd.witnesses),
            transfers=tuple(
                StoredTransfer(
                    StoredWitness(chain_data(t.source_id).witnesses[0].x,
                                  chain_data(t.source_id).witnesses[0].y),
                    get_chain(t.source_id),
                    note=t.note or f"transfer from {t.source_id}")
                for t in pd.transfers),
        )
        exceptional.append((pd.point, sub_ev))
    return StoredEvidence(witnesses=witnesses, transfers=tuple(transfers),
                          cited_positive=data.cited_positive,
                          exceptional=tuple(exceptional))


def classify(chain_id: str, values: Optional[dict] = None) -> ChainVerdict:
    """Classify one catalog chain (family symbolically unless instantiated).

    Results are cached: classification is a pure function of the chain and
    its stored evidence.
    """
    key = (chain_id, tuple(sorted(values.items())) if values else None)
    if key in _VERDICT_CACHE:
        return _VERDICT_CACHE[key]
    data = chain_data(chain_id)
    chain = get_chain(chain_id, values)
    verdict = classify_chain(chain, _evidence_for(data))
    _VERDICT_CACHE[key] = verdict
    return verdict


# ---------------------------------------------------------------------------
# Inclusion lattices
# ---------------------------------------------------------------------------

class LatticeReport:
    def __init__(self, group: str):
        self.group = group
        self.verified: list[tuple[str, str]] = []
        self.failed: list[tuple[str, str, str]] = []

    @property
    def ok(self) -> bool:
        return not self.failed

    def __str__(self):
        lines = [f"inclusion lattice for {self.group}: "
                 f"{len(self.verified)} edges verified, {len(self.failed)} failed"]
        for child, parent in self.verified:
            lines.append(f"  ok   {child} <= {parent}")
        for child, parent, why in self.failed:
            lines.append(f"  FAIL {child} <= {parent}: {why}")
        return "\n".join(lines)


def verify_inclusion_lattice(group: str) -> LatticeReport:
    """Exact containment check for every stored lattice edge."""
    if group not in _GROUPS:
        raise UnknownCatalogEntry(f"unknown group {group!r}")
    gd = _GROUPS[group]
    if not gd.lattice:
        raise UnknownCatalogEntry(f"no stored lattice for {group!r}")
    report = LatticeReport(group)
    for edge in gd.lattice:
        parent_span = edge.parent_rep.spanning()
        ok = True
        why = ""
        if any(u.is_parametric() for u in parent_span):
            ok, why = False, "parametric parent representative"
        else:
            # a moving child is contained for every parameter value iff its
            # fixed part and the whole moving plane sit inside the parent
            vectors = list(edge.child_rep.fixed_basis)
            if edge.child_rep.line is not None:
                vectors.extend(edge.child_rep.line.plane)
            for v in vectors:
                if v.is_parametric() or not in_span(parent_span, v):
                    ok, why = False, "basis vector escapes the parent span"
                    break
        if ok:
            report.verified.append((edge.child, edge.parent))
        else:
            report.failed.append((edge.child, edge.parent, why))
    return report
