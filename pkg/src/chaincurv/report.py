"""Chain spec documents, the classification report, and the golden table.

The golden expected-verdict table is a frozen data file: it was written
once from the exactly verified catalog and is the acceptance oracle for
``verify``; nothing in the code path regenerates it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Optional

from . import catalog
from .chains import FamilySpec, normalize_pq
from .criteria import ChainVerdict, ParamPoint

SCHEMA_REPORT = "chaincurv.report.v1"
SCHEMA_GOLDEN = "chaincurv.golden.v1"


class SpecError(ValueError):
    """A chain spec document failed to parse or validate."""


@dataclass(frozen=True)
class ChainSpec:
    """A textual chain selector: catalog id plus optional family parameters.

    Canonical text forms (round-trip byte-identically through parse/render):

        so5/so4/su2
        su3/su21/delta_pq@pq=1,-1
        so5/so4/delta_theta@theta=3/5,4/5
        so6/u3/su2_delta_phi@phi=3/5,-4/5
        so6/so4so2/delta_theta@symbolic
    """

    chain_id: str
    kind: str = "default"            # default | symbolic | pq | point
    pq: Optional[tuple[int, int]] = None
    base: Optional[str] = None
    point: Optional[tuple[Fraction, Fraction]] = None

    def render(self) -> str:
        if self.kind == "default":
            return self.chain_id
        if self.kind == "symbolic":
            return f"{self.chain_id}@symbolic"
        if self.kind == "pq":
            return f"{self.chain_id}@pq={self.pq[0]},{self.pq[1]}"
        return f"{self.chain_id}@{self.base}={self.point[0]},{self.point[1]}"

    def values(self) -> Optional[dict]:
        if self.kind == "pq":
            return {"p": self.pq[0], "q": self.pq[1]}
        if self.kind == "point":
            c, s = self.point
            return {f"cos:{self.base}": c, f"sin:{self.base}": s}
        return None

    def param_point(self) -> Optional[ParamPoint]:
        if self.kind == "pq":
            return ParamPoint.pq(*self.pq)
        if self.kind == "point":
            return ParamPoint.circle(self.base, *self.point)
        return None


def parse_spec(text: str) -> ChainSpec:
    text = text.strip()
    if not text:
        raise SpecError("empty chain spec")
    if "@" in text:
        cid, param = text.split("@", 1)
    else:
        cid, param = text, None
    cid = cid.strip()
    try:
        data = catalog.chain_data(cid)
    except KeyError as exc:
        raise SpecError(str(exc)) from exc
    if param is None:
        return ChainSpec(cid)
    param = param.strip()
    if param == "symbolic":
        if not data.is_family:
            raise SpecError(f"{cid} is not a one-parameter family")
        return ChainSpec(cid, "symbolic")
    if "=" not in param:
        raise SpecError(f"malformed parameter clause {param!r}")
    key, val = param.split("=", 1)
    key = key.strip()
    parts = [p.strip() for p in val.split(",")]
    if len(parts) != 2:
        raise SpecError(f"parameter {key!r} needs two comma-separated values")
    if not data.is_family:
        raise SpecError(f"{cid} is not a one-parameter family")
    if key == "pq":
        try:
            p, q = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise SpecError("pq parameters must be integers") from exc
        p, q = normalize_pq(p, q)
        return ChainSpec(cid, "pq", pq=(p, q))
    try:
        c, s = Fraction(parts[0]), Fraction(parts[1])
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecError("circle parameters must be exact rationals") from exc
    if c * c + s * s != 1:
        raise SpecError(f"({c}, {s}) is not an exact point on the unit circle")
    sub = data.h if data.h.is_parametric else data.k
    base = sub.family.symbol or "theta"
    if key != base:
        raise SpecError(f"{cid} is parametrized by {base!r}, not {key!r}")
    return ChainSpec(cid, "point", base=base, point=(c, s))


# ---------------------------------------------------------------------------
# Golden table
# ---------------------------------------------------------------------------

def load_golden() -> dict:
    data = resources.files("chaincurv").joinpath("data/expected_verdicts.json")
    doc = json.loads(data.read_text())
    if doc.get("schema") != SCHEMA_GOLDEN:
        raise ValueError("unexpected golden-table schema")
    return {row["id"]: row for row in doc["rows"]}


def verdict_summary(v: ChainVerdict) -> dict:
    return {
        "verdict": v.tag,
        "exceptional": [[str(e.point), e.tag] for e in v.exceptional],
    }


def verdict_matches_golden(v: ChainVerdict, row: dict) -> bool:
    if v.tag != row["verdict"]:
        return False
    got = sorted([str(e.point), e.tag] for e in v.exceptional)
    want = sorted(list(x) for x in row.get("exceptional", []))
    return got == want


def expected_for_spec(spec: ChainSpec, row: dict) -> str:
    """The golden verdict for a (possibly instantiated) chain spec."""
    point = spec.param_point()
    if point is None:
        return row["verdict"]
    for pt_str, tag in row.get("exceptional", []):
        if pt_str == str(point):
            return tag
    return row["verdict"]


# ---------------------------------------------------------------------------
# Report rendering
# ---------------------------------------------------------------------------

def _verdict_text(cd, v: ChainVerdict) -> str:
    if not cd.is_family:
        return v.tag
    sub = cd.h if cd.h.is_parametric else cd.k
    sym = sub.family.symbol or ("(p,q)" if sub.family.kind == "Delta_pq_U1" else "parameter")
    if not v.exceptional:
        return f"{v.tag} for all {sym}"
    exc = "; ".join(f"{e.tag} at {e.point}" for e in v.exceptional)
    return f"{v.tag} generically in {sym}; {exc}"


def _witness_cell(v: ChainVerdict, cd) -> str:
    if v.witness is not None:
        names = catalog.basis_names(cd.gid)
        from .algebra import solve_in_span
        g = catalog.make_algebra(cd.gid)
        parts = []
        for label, vec in (("X", v.witness.x), ("Y", v.witness.y)):
            if vec.is_parametric():
                parts.append(f"{label}: parametric")
                continue
            sol = solve_in_span(list(g.fixed_basis), vec)
            terms = [f"{c!r}·{n}" for c, n in zip(sol, names) if not c.is_zero()]
            parts.append(f"{label} = " + " + ".join(terms))
        return "; ".join(parts)
    if v.certificate is not None:
        return f"ranks {v.certificate.r_m} > {v.certificate.r_s} ({v.certificate.route})"
    return v.evidence


def report_rows(group: Optional[str] = None) -> list[dict]:
    rows = []
    for cd in sorted(catalog.catalog_chains(group),
                     key=lambda c: (c.gid, c.kid, c.hid)):
        v = catalog.classify(cd.chain_id)
        rows.append({
            "schema": SCHEMA_REPORT,
            "id": cd.chain_id,
            "family": cd.is_family,
            "verdict": v.tag,
            "verdict_text": _verdict_text(cd, v),
            "exceptional": [[str(e.point), e.tag] for e in v.exceptional],
            "evidence": _witness_cell(v, cd),
            "note": cd.note,
        })
    return rows


def render_table(rows: list[dict]) -> str:
    id_w = max(len(r["id"]) for r in rows)
    v_w = max(len(r["verdict_text"]) for r in rows)
    lines = [f"{'chain':<{id_w}}  {'verdict':<{v_w}}  evidence",
             "-" * (id_w + v_w + 30)]
    for r in rows:
        lines.append(f"{r['id']:<{id_w}}  {r['verdict_text']:<{v_w}}  {r['evidence']}")
    return "\n".join(lines) + "\n"


def render_machine(rows: list[dict]) -> str:
    return "".join(json.dumps(r, sort_keys=True, ensure_ascii=False) + "\n"
                   for r in rows)
