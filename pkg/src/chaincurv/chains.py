"""Chain decomposition: g = h + m + s with exact orthogonal complements.

Given verified subalgebras h <= k <= g, the vertical space m is the
g0-orthogonal complement of h in k and the horizontal space s is the
complement of k in g.  Nothing is ever normalized: projections are exact
Gram solves, so all coefficients stay inside the certificate field.

Parametric chains (the one-parameter circle families) are built from a
structured description: a subalgebra is a fixed base plus at most one
"moving line" alpha*A + beta*B inside a fixed 2-plane with A orthogonal to
B.  The orthogonal complement of such a line inside its plane is again a
single vector with polynomial coefficients, so the whole decomposition
stays polynomial and zero tests remain exact for all parameter values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Literal, Mapping, Optional, Sequence

from .algebra import (
    AlgebraElement, G0, InnerProductForm, bracket, combine, in_span,
    independent, inner, nullspace, solve_in_span, span_equal,
)
from .scalars import ONE, ZERO, ParamScalar, Scalar

Part = Literal["h", "m", "s"]


# ---------------------------------------------------------------------------
# Families and subalgebras
# ---------------------------------------------------------------------------

FAMILY_KINDS = ("Delta_pq_U1", "Delta_theta_SO2", "Delta_theta_U1",
                "SU2_Delta_phi", "fixed")


@dataclass(frozen=True)
class FamilySpec:
    """Which one-parameter family a subalgebra belongs to, and at what value.

    ``pq`` carries coprime integers normalized to p >= 0; ``point`` carries an
    exact unit-circle point (cos, sin); ``symbolic`` leaves the parameter as
    polynomial symbols named by ``symbol``.
    """

    kind: str = "fixed"
    symbol: str | None = None
    pq: tuple[int, int] | None = None
    point: tuple[Scalar, Scalar] | None = None
    symbolic: bool = False

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.pq is not None:
            p, q = self.pq
            object.__setattr__(self, "pq", normalize_pq(p, q))
        if self.point is not None:
            c, s = Scalar.of(self.point[0]), Scalar.of(self.point[1])
            if not (c * c + s * s == ONE):
                raise ValueError(f"({c!r}, {s!r}) is not on the unit circle")
            object.__setattr__(self, "point", (c, s))

    def describe(self) -> str:
        if self.kind == "fixed":
            return ""
        if self.pq is not None:
            return f"(p,q)=({self.pq[0]},{self.pq[1]})"
        if self.point is not None:
            return f"(cos,sin)=({self.point[0]!r},{self.point[1]!r})"
        return f"symbolic {self.symbol}"


def normalize_pq(p: int, q: int) -> tuple[int, int]:
    """Coprime, with p >= 0 (and q > 0 when p = 0); (p,q) ~ (-p,-q)."""
    if p == 0 and q == 0:
        raise ValueError("(p, q) = (0, 0) is not a circle")
    g = gcd(abs(p), abs(q))
    p, q = p // g, q // g
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    return p, q


@dataclass(frozen=True)
class ParamLine:
    """The moving line span{alpha*A + beta*B} inside the 2-plane span{A, B}.

    A and B must be g0-orthogonal (exactly, identically in any parameters);
    alpha, beta are polynomial coefficients in the declared symbols.
    """

    plane: tuple[AlgebraElement, AlgebraElement]
    coeffs: tuple

    def vector(self) -> AlgebraElement:
        a, b = self.plane
        al, be = self.coeffs
        return a.scale(al) + b.scale(be)

    def complement_vector(self, form: InnerProductForm = G0) -> AlgebraElement:
        """The orthogonal complement of the line inside its plane."""
        a, b = self.plane
        al, be = self.coeffs
        na, nb = inner(a, a, form), inner(b, b, form)
        return a.scale(-(be * nb)) + b.scale(al * na)


@dataclass(frozen=True)
class Subalgebra:
    """A named subalgebra with an explicit basis in fixed coordinates.

    ``fixed_basis`` spans the non-moving part; ``line``, when present, adds
    one moving direction.  Construction verifies exact linear independence
    and bracket closure (for moving lines: the line commutes with the fixed
    part, which is how every catalog family sits inside its torus).
    """

    name: str
    n: int
    fixed_basis: tuple[AlgebraElement, ...]
    line: Optional[ParamLine] = None
    family: FamilySpec = field(default_factory=FamilySpec)
    _skip_checks: bool = False

    def __post_init__(self):
        if not self._skip_checks:
            verify_subalgebra(self)

    @property
    def is_parametric(self) -> bool:
        if self.line is None:
            return False
        return any(isinstance(c, ParamScalar) and not c.is_constant()
                   for c in self.line.coeffs) or \
            any(v.is_parametric() for v in self.line.plane)

    def spanning(self) -> list[AlgebraElement]:
        out = list(self.fixed_basis)
        if self.line is not None:
            out.append(self.line.vector())
        return out

    @property
    def dim(self) -> int:
        return len(self.fixed_basis) + (1 if self.line is not None else 0)

    def instantiate(self, values: Mapping, family: FamilySpec | None = None) -> "Subalgebra":
        if self.line is None:
            return self
        line = ParamLine(
            tuple(v.instantiate(values) for v in self.line.plane),
            tuple(_inst_coeff(c, values) for c in self.line.coeffs))
        vec = line.vector()
        if not vec.is_parametric():
            # fully instantiated: fold the line into the fixed basis
            return Subalgebra(self.name, self.n, self.fixed_basis + (vec,),
                              None, family or self.family)
        return Subalgebra(self.name, self.n, self.fixed_basis, line,
                          family or self.family)

    def __repr__(self):
        tag = " (parametric)" if self.is_parametric else ""
        return f"Subalgebra({self.name!r}, dim={self.dim}{tag})"


def _inst_coeff(c, values):
    if isinstance(c, ParamScalar):
        out = c.instantiate(values)
        return out
    return c


class SubalgebraError(ValueError):
    pass


def verify_subalgebra(sub: Subalgebra, form: InnerProductForm = G0):
    """Exact independence and bracket-closure checks."""
    fixed = list(sub.fixed_basis)
    if fixed and not independent(fixed):
        raise SubalgebraError(f"{sub.name}: fixed basis is linearly dependent")
    if sub.line is not None:
        a, b = sub.line.plane
        if not inner(a, b, form).is_zero():
            raise SubalgebraError(f"{sub.name}: moving-line plane is not orthogonal")
        for v in fixed:
            if not (inner(a, v, form).is_zero() and inner(b, v, form).is_zero()):
                raise SubalgebraError(
                    f"{sub.name}: moving-line plane is not orthogonal to the fixed part")
    # closure
    if sub.is_parametric:
        if fixed:
            _closure_fixed(sub.name, fixed)
        v = sub.line.vector()
        for u in fixed:
            if not bracket(u, v).is_zero():
                raise SubalgebraError(
                    f"{sub.name}: moving line does not commute with the fixed part")
    else:
        span = sub.spanning()
        if span:
            _closure_fixed(sub.name, span)


def _closure_fixed(name: str, basis: list[AlgebraElement]):
    if any(v.is_parametric() for v in basis):
        # instantiation path handles these; catalog only verifies at points
        return
    for i, u in enumerate(basis):
        for v in basis[i + 1:]:
            if not in_span(basis, bracket(u, v)):
                raise SubalgebraError(f"{name}: not closed under bracket")


# ---------------------------------------------------------------------------
# Orthogonal parts and chains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrthoPart:
    """One summand of g = h + m + s, stored as an exact orthogonal frame.

    ``fixed`` pairs each non-moving frame vector with its squared norm (a
    nonzero Scalar); ``moving``, when present, is the one moving frame
    vector with its squared norm, a polynomial that is nonzero for every
    admissible parameter value.  ``display`` is the natural spanning set
    (the declared one where the catalog provides it).
    """

    name: str
    display: tuple[AlgebraElement, ...]
    fixed: tuple[tuple[AlgebraElement, Scalar], ...]
    moving: Optional[tuple[AlgebraElement, ParamScalar | Scalar]] = None

    @property
    def dim(self) -> int:
        return len(self.fixed) + (1 if self.moving is not None else 0)

    def frame(self) -> list[AlgebraElement]:
        out = [v for v, _ in self.fixed]
        if self.moving is not None:
            out.append(self.moving[0])
        return out

    def component_is_zero(self, x: AlgebraElement,
                          form: InnerProductForm = G0) -> bool:
        """Whether the orthogonal projection of x onto this part vanishes.

        Works identically in any parameters: the projection is zero iff x
        is orthogonal to every frame vector.
        """
        for v, _ in self.fixed:
            if not inner(x, v, form).is_zero():
                return False
        if self.moving is not None:
            if not inner(x, self.moving[0], form).is_zero():
                return False
        return True

    def component_inners(self, x: AlgebraElement,
                         form: InnerProductForm = G0) -> list:
        """Inner products of x against the frame (polynomial locus data)."""
        out = [inner(x, v, form) for v, _ in self.fixed]
        if self.moving is not None:
            out.append(inner(x, self.moving[0], form))
        return out

    def project(self, x: AlgebraElement, form: InnerProductForm = G0) -> AlgebraElement:
        """Exact orthogonal projection onto this part.

        Requires the moving vector's squared norm (if any) to be a nonzero
        constant; the circle families satisfy this by construction, while
        free-integer families need the cleared variant.
        """
        acc = AlgebraElement.zero(x.n)
        for v, nsq in self.fixed:
            c = inner(x, v, form)
            acc = acc + v.scale(c / nsq)
        if self.moving is not None:
            w, nw = self.moving
            if isinstance(nw, ParamScalar):
                if not nw.is_constant():
                    raise ValueError(
                        f"projection onto {self.name} has a parametric denominator; "
                        "use project_cleared")
                nw = nw.constant_value()
            acc = acc + w.scale(inner(x, w, form) / nw)
        return acc

    def project_cleared(self, x: AlgebraElement,
                        form: InnerProductForm = G0) -> tuple[AlgebraElement, ParamScalar | Scalar]:
        """(d * projection, d) with d the moving vector's squared norm."""
        if self.moving is None:
            return self.project(x, form), ONE
        w, nw = self.moving
        acc = AlgebraElement.zero(x.n)
        for v, nsq in self.fixed:
            c = inner(x, v, form)
            acc = acc + v.scale(c / nsq)
        acc = acc.scale(nw)
        acc = acc + w.scale(inner(x, w, form))
        return acc, nw


class ChainError(ValueError):
    pass


@dataclass(frozen=True)
class Chain:
    """g = h + m + s for a verified chain h <= k <= g."""

    g: Subalgebra
    k: Subalgebra
    h: Subalgebra
    h_part: OrthoPart
    m_part: OrthoPart
    s_part: OrthoPart
    form: InnerProductForm = G0

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def is_parametric(self) -> bool:
        return any(p.moving is not None and (
            p.moving[0].is_parametric()
            or (isinstance(p.moving[1], ParamScalar) and not p.moving[1].is_constant()))
            for p in (self.h_part, self.m_part, self.s_part)) \
            or self.h.is_parametric or self.k.is_parametric

    def part(self, which: Part) -> OrthoPart:
        return {"h": self.h_part, "m": self.m_part, "s": self.s_part}[which]

    @property
    def dim_m(self) -> int:
        return self.m_part.dim

    @property
    def dim_s(self) -> int:
        return self.s_part.dim

    def project(self, x: AlgebraElement, which: Part) -> AlgebraElement:
        return self.part(which).project(x, self.form)

    def in_p(self, x: AlgebraElement) -> bool:
        """Whether x has zero h-component (identically in any parameters)."""
        return self.h_part.component_is_zero(x, self.form)

    def gram(self, which: Part) -> list[list]:
        vecs = self.part(which).display
        return [[inner(u, v, self.form) for v in vecs] for u in vecs]

    def gram_inverse(self, which: Part) -> list[list[Scalar]]:
        from .algebra import rref
        g = self.gram(which)
        k = len(g)
        if any(isinstance(e, ParamScalar) and not e.is_constant()
               for row in g for e in row):
            raise ValueError("parametric Gram matrix; invert at an instantiation")
        g = [[e.constant_value() if isinstance(e, ParamScalar) else e for e in row]
             for row in g]
        aug = [list(row) + [ONE if i == j else ZERO for j in range(k)]
               for i, row in enumerate(g)]
        rows, pivots = rref(aug)
        if pivots != list(range(k)):
            raise ValueError("singular Gram matrix")
        return [row[k:] for row in rows]


def _orthogonalize(vectors: Sequence[AlgebraElement],
                   form: InnerProductForm) -> list[tuple[AlgebraElement, Scalar]]:
    """Exact Gram-Schmidt without normalization; drops nothing (input independent)."""
    out: list[tuple[AlgebraElement, Scalar]] = []
    for v in vectors:
        w = v
        for u, nsq in out:
            c = inner(w, u, form)
            if not c.is_zero():
                w = w - u.scale(c / nsq)
        nsq = inner(w, w, form)
        if nsq.is_zero():
            raise ChainError("dependent vectors passed to orthogonalization")
        out.append((w, nsq))
    return out


def _fixed_complement(ambient: Sequence[AlgebraElement],
                      inside: Sequence[AlgebraElement],
                      form: InnerProductForm) -> list[AlgebraElement]:
    """Basis of the g0-orthogonal complement of span(inside) within span(ambient)."""
    ambient = list(ambient)
    if not inside:
        return ambient
    matrix = [[inner(a, u, form) for a in ambient] for u in inside]
    coords = nullspace(matrix)
    return [combine(ambient, vec) for vec in coords]


def _subalgebra_moving_parts(sub: Subalgebra) -> tuple[list[AlgebraElement], Optional[ParamLine]]:
    return list(sub.fixed_basis), sub.line


def _contains_fixed(container: Sequence[AlgebraElement], v: AlgebraElement) -> bool:
    if v.is_parametric():
        return False
    return in_span(list(container), v)


def build_chain(g: Subalgebra, k: Subalgebra, h: Subalgebra,
                form: InnerProductForm = G0,
                declared_m: Sequence[AlgebraElement] | None = None) -> Chain:
    """Decompose g = h + m + s and verify the splitting invariants.

    Containment h <= k <= g is checked exactly.  For moving (parametric)
    subalgebras the complement of the moving line is taken inside its own
    2-plane, which is valid for every admissible parameter value; the
    returned parts therefore describe the whole family at once.
    """
    if not (g.n == k.n == h.n):
        raise ChainError("chain members live in different matrix sizes")

    g_fixed, g_line = _subalgebra_moving_parts(g)
    if g_line is not None:
        raise ChainError("the ambient algebra must be fixed")

    _check_containment(g, k)
    _check_containment(k, h)

    m_part = _complement_part("m", k, h, form)
    s_part = _complement_part("s", g, k, form)
    h_part = _self_part("h", h, form)

    chain = Chain(g, k, h, h_part, m_part, s_part, form)
    _verify_chain(chain)
    if declared_m is not None:
        _verify_declared(chain, declared_m)
    return chain


def _check_containment(big: Subalgebra, small: Subalgebra):
    big_fixed = list(big.fixed_basis)
    for v in small.fixed_basis:
        if not _contains_fixed(big_fixed, v):
            raise ChainError(
                f"containment failure: fixed vector of {small.name} outside {big.name}")
    if small.line is not None:
        if big.line is not None and _proportional(small.line.vector(), big.line.vector()):
            return  # the moving lines coincide
        for v in small.line.plane:
            if v.is_parametric() or not _contains_fixed(big_fixed, v):
                # the only allowed escape is along big's own moving line
                if big.line is None or not _proportional(v, big.line.vector()):
                    raise ChainError(
                        f"containment failure: moving plane of {small.name} "
                        f"outside {big.name}")


def _proportional(v: AlgebraElement, w: AlgebraElement) -> bool:
    """v = c * w for a nonzero constant c (exact, including parametric entries)."""
    ratio = None
    for i in range(v.n):
        for j in range(v.n):
            a, b = v.rows[i][j], w.rows[i][j]
            if a.is_zero() and b.is_zero():
                continue
            if a.is_zero() or b.is_zero():
                return False
            if ratio is None:
                # try simple rational candidates by cross-multiplication later
                ratio = (a, b)
            else:
                a0, b0 = ratio
                if not (a * b0 == a0 * b):
                    return False
    return ratio is not None


def _self_part(name: str, sub: Subalgebra, form: InnerProductForm) -> OrthoPart:
    fixed = _orthogonalize(list(sub.fixed_basis), form)
    moving = None
    if sub.line is not None:
        w = sub.line.vector()
        nw = inner(w, w, form)
        moving = (w, nw)
        _require_nonvanishing(name, nw)
    return OrthoPart(name, tuple(sub.spanning()), tuple(fixed), moving)


def _complement_part(name: str, big: Subalgebra, small: Subalgebra,
                     form: InnerProductForm) -> OrthoPart:
    """Orthogonal complement of small inside big as an OrthoPart."""
    big_fixed = list(big.fixed_basis)
    small_fixed = list(small.fixed_basis)

    remove = list(small_fixed)
    moving: Optional[tuple[AlgebraElement, ParamScalar | Scalar]] = None
    lines_coincide = (small.line is not None and big.line is not None
                      and _proportional(small.line.vector(), big.line.vector()))

    if small.line is not None and not lines_coincide:
        a, b = small.line.plane
        w = small.line.complement_vector(form)
        nw = inner(w, w, form)
        _require_nonvanishing(name, nw)
        moving = (w, nw)
        for v in (a, b):
            if not v.is_parametric() and _contains_fixed(big_fixed, v):
                remove.append(v)
            # a plane vector proportional to big's own moving line is consumed
            # together with that line below

    comp = _fixed_complement(big_fixed, remove, form)

    extra_line = None
    if big.line is not None:
        consumed = lines_coincide
        if small.line is not None and not consumed:
            consumed = any(_proportional(v, big.line.vector())
                           for v in small.line.plane if v.is_parametric())
        if not consumed:
            extra_line = big.line.vector()

    if extra_line is not None:
        if moving is not None:
            raise ChainError(
                f"{name}: two moving directions in one part are not supported")
        nw = inner(extra_line, extra_line, form)
        _require_nonvanishing(name, nw)
        moving = (extra_line, nw)

    fixed = _orthogonalize(comp, form)
    display = tuple(comp) + ((moving[0],) if moving is not None else ())
    return OrthoPart(name, display, tuple(fixed), moving)


def _require_nonvanishing(name: str, nsq):
    """The squared norm of a moving vector must not vanish on the domain.

    For circle pairs the construction yields a constant; for free-integer
    pairs a homogeneous quadratic that vanishes only at the excluded origin.
    """
    if isinstance(nsq, Scalar):
        if nsq.is_zero():
            raise ChainError(f"{name}: moving vector degenerates")
        return
    if nsq.is_zero():
        raise ChainError(f"{name}: moving vector degenerates identically")
    if nsq.is_constant():
        return
    # parametric norm: accept, noting the vanishing locus is outside the
    # normalized domain (verified for the catalog's free pairs in tests)


def _verify_chain(chain: Chain):
    form = chain.form
    # pairwise orthogonality of the three parts on their frames
    frames = {w: chain.part(w).frame() for w in ("h", "m", "s")}
    for w1, w2 in (("h", "m"), ("h", "s"), ("m", "s")):
        for u in frames[w1]:
            for v in frames[w2]:
                if not inner(u, v, form).is_zero():
                    raise ChainError(f"parts {w1} and {w2} are not orthogonal")
    # dimensions additive
    if chain.h_part.dim + chain.m_part.dim != chain.k.dim:
        raise ChainError("dim h + dim m != dim k")
    if chain.k.dim + chain.s_part.dim != chain.g.dim:
        raise ChainError("dim k + dim s != dim g")
    # ad-invariance of the splitting: [h, m] in m and [k, s] in s
    for u in frames["h"]:
        for v in frames["m"]:
            b = bracket(u, v)
            if not (chain.h_part.component_is_zero(b, form)
                    and chain.s_part.component_is_zero(b, form)):
                raise ChainError("[h, m] escapes m")
    k_frame = list(chain.k.fixed_basis)
    if chain.k.line is not None:
        k_frame.append(chain.k.line.vector())
    for u in k_frame:
        for v in frames["s"]:
            b = bracket(u, v)
            if not (chain.h_part.component_is_zero(b, form)
                    and chain.m_part.component_is_zero(b, form)):
                raise ChainError("[k, s] escapes s")


def _verify_declared(chain: Chain, declared_m: Sequence[AlgebraElement]):
    """The declared natural spanning set of m must agree with the computed one."""
    declared = list(declared_m)
    if any(v.is_parametric() for v in declared) or chain.is_parametric:
        # mutual containment via orthogonality: every declared vector must
        # be orthogonal to h and s, and the counts must match
        if len(declared) != chain.m_part.dim:
            raise ChainError("declared m has the wrong dimension")
        for v in declared:
            if not (chain.h_part.component_is_zero(v, chain.form)
                    and chain.s_part.component_is_zero(v, chain.form)):
                raise ChainError("declared m vector falls outside m")
        return
    computed = chain.m_part.frame()
    if not span_equal(declared, computed):
        raise ChainError("declared m disagrees with the computed complement")


def project(chain: Chain, x: AlgebraElement, part: Part) -> AlgebraElement:
    """Orthogonal projection of x onto h, m, or s."""
    if part not in ("h", "m", "s"):
        raise ValueError("part must be one of 'h', 'm', 's'")
    if not chain.is_parametric and not x.is_parametric():
        coords = solve_in_span(list(chain.g.fixed_basis), x)
        if coords is None:
            raise ChainError("element lies outside the ambient algebra")
    return chain.project(x, part)


def instantiate_chain(chain: Chain, values: Mapping,
                      declared_m: Sequence[AlgebraElement] | None = None) -> Chain:
    """Evaluate a parametric chain at exact parameter values."""
    g = chain.g
    k = chain.k.instantiate(values)
    h = chain.h.instantiate(values)
    dm = None
    if declared_m is not None:
        dm = [v.instantiate(values) for v in declared_m]
    return build_chain(g, k, h, chain.form, declared_m=dm)
