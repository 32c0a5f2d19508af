"""Exact matrices over the certificate field, Lie bracket, and inner product.

Algebra elements are dense n x n matrices (n <= 7) of CScalar entries.  The
bi-invariant inner product is g0(X, Y) = -Re trace(X Y), optionally scaled by
a positive rational; every verdict downstream is invariant under that scale.
Linear algebra over the coefficient field (row reduction, span membership,
null spaces) also lives here since chains and the catalog both need it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .scalars import (
    C_ZERO, ONE, ZERO, CScalar, ParamScalar, Scalar,
)


class AlgebraElement:
    """Square matrix with exact complex entries.

    Entries are CScalars; in parametric mode the real/imaginary parts may be
    ParamScalars.  Instances are immutable and safe to share.
    """

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        n = len(rows)
        mat = []
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
            mat.append(tuple(CScalar.of(x) for x in r))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(mat))

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(n: int) -> "AlgebraElement":
        return AlgebraElement([[C_ZERO] * n for _ in range(n)])

    @staticmethod
    def identity(n: int) -> "AlgebraElement":
        return AlgebraElement([[CScalar(1) if i == j else C_ZERO for j in range(n)]
                               for i in range(n)])

    # -- basic structure --------------------------------------------------

    def entry(self, i: int, j: int) -> CScalar:
        return self.rows[i][j]

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.rows for e in row)

    def is_parametric(self) -> bool:
        return any(e.is_parametric() for row in self.rows for e in row)

    def is_anti_hermitian(self) -> bool:
        for i in range(self.n):
            for j in range(self.n):
                if self.rows[i][j] != -self.rows[j][i].conjugate():
                    return False
        return True

    def is_real(self) -> bool:
        return all(e.is_real() for row in self.rows for e in row)

    def conjugate_transpose(self) -> "AlgebraElement":
        return AlgebraElement([[self.rows[j][i].conjugate() for j in range(self.n)]
                               for i in range(self.n)])

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement):
            raise TypeError("expected AlgebraElement")
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        return AlgebraElement([[a + b for a, b in zip(r1, r2)]
                               for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement([[a - b for a, b in zip(r1, r2)]
                               for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return AlgebraElement([[-a for a in r] for r in self.rows])

    def scale(self, s) -> "AlgebraElement":
        s = CScalar.of(s)
        if s.is_zero():
            return AlgebraElement.zero(self.n)
        return AlgebraElement([[C_ZERO if a.is_zero() else a * s for a in r]
                               for r in self.rows])

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    def __matmul__(self, other):
        self._check(other)
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = C_ZERO
                for a, b in zip(self.rows[i], cols[j]):
                    if a.is_zero() or b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return AlgebraElement(out)

    def trace(self) -> CScalar:
        acc = C_ZERO
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    # -- parametric helpers ----------------------------------------------------

    def instantiate(self, values: Mapping) -> "AlgebraElement":
        return AlgebraElement([[e.instantiate(values) for e in row] for row in self.rows])

    def coords(self) -> list[Scalar | ParamScalar]:
        """Flatten into 2*n^2 real coordinates (re then im, row-major)."""
        out = []
        for row in self.rows:
            for e in row:
                out.append(e.re)
        for row in self.rows:
            for e in row:
                out.append(e.im)
        return out

    def to_numpy(self, values: Mapping[str, float] | None = None) -> np.ndarray:
        return np.array([[e.to_complex(values) for e in row] for row in self.rows],
                        dtype=complex)

    def __repr__(self):
        body = "\n ".join("[" + ", ".join(repr(e) for e in row) + "]" for row in self.rows)
        return f"AlgebraElement({self.n}x{self.n})[\n {body}\n]"


# ---------------------------------------------------------------------------
# Elementary generators
# ---------------------------------------------------------------------------

def _basis_check(i: int, j: int, n: int, diag_ok: bool = False):
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"indices ({i},{j}) out of range for n={n}")
    if not diag_ok and i == j:
        raise IndexError("off-diagonal generator needs i != j")


def make_E(i: int, j: int, n: int) -> AlgebraElement:
    """Skew-symmetric generator: entry (i,j) is 1 and (j,i) is -1."""
    _basis_check(i, j, n)
    rows = [[C_ZERO] * n for _ in range(n)]
    rows[i - 1][j - 1] = CScalar(1)
    rows[j - 1][i - 1] = CScalar(-1)
    return AlgebraElement(rows)


def make_F(i: int, j: int, n: int) -> AlgebraElement:
    """Symmetric generator: entries (i,j) and (j,i) are 1."""
    _basis_check(i, j, n)
    rows = [[C_ZERO] * n for _ in range(n)]
    rows[i - 1][j - 1] = CScalar(1)
    rows[j - 1][i - 1] = CScalar(1)
    return AlgebraElement(rows)


def make_Fjj(j: int, n: int) -> AlgebraElement:
    """Diagonal generator: entry (j,j) is 1."""
    _basis_check(j, j, n, diag_ok=True)
    rows = [[C_ZERO] * n for _ in range(n)]
    rows[j - 1][j - 1] = CScalar(1)
    return AlgebraElement(rows)


def make_iF(i: int, j: int, n: int) -> AlgebraElement:
    """i * F_ij, the anti-Hermitian partner of the symmetric generator."""
    return make_F(i, j, n).scale(CScalar(0, 1))


def make_iFjj(j: int, n: int) -> AlgebraElement:
    return make_Fjj(j, n).scale(CScalar(0, 1))


# ---------------------------------------------------------------------------
# Bracket and inner product
# ---------------------------------------------------------------------------

def bracket(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Matrix commutator a b - b a, exact."""
    return (a @ b) - (b @ a)


class InnerProductForm:
    """g0(X, Y) = -Re trace(X Y) times a positive rational scale."""

    __slots__ = ("scale",)

    def __init__(self, scale: Fraction | int = 1):
        scale = Fraction(scale)
        if scale <= 0:
            raise ValueError("inner product scale must be positive")
        object.__setattr__(self, "scale", scale)

    def __setattr__(self, name, value):
        raise AttributeError("InnerProductForm is immutable")

    def __call__(self, a: AlgebraElement, b: AlgebraElement):
        return inner(a, b, self)

    def __eq__(self, other):
        return isinstance(other, InnerProductForm) and self.scale == other.scale

    def __repr__(self):
        return f"InnerProductForm(scale={self.scale})"


G0 = InnerProductForm(1)


def inner(a: AlgebraElement, b: AlgebraElement,
          form: InnerProductForm = G0) -> Scalar | ParamScalar:
    """Bi-invariant pairing -Re trace(a b), scaled; exact (real-valued)."""
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    acc: Scalar | ParamScalar = ZERO
    for i in range(a.n):
        for k in range(a.n):
            x, y = a.rows[i][k], b.rows[k][i]
            if x.is_zero() or y.is_zero():
                continue
            acc = acc + (x.re * y.re - x.im * y.im)
    out = -acc
    if form.scale != 1:
        out = out * Scalar(form.scale)
    return out


def norm_sq(a: AlgebraElement, form: InnerProductForm = G0):
    return inner(a, a, form)


# ---------------------------------------------------------------------------
# Exact linear algebra over the Scalar field
# ---------------------------------------------------------------------------

class RankParametricError(TypeError):
    """Raised when an exact rank is requested of a parametric matrix."""


def matrix_rank(a: AlgebraElement) -> int:
    """Exact rank by Gaussian elimination over the field.

    Parametric matrices are rejected; callers should use the symbolic minor
    tests in the criteria layer instead.
    """
    if a.is_parametric():
        raise RankParametricError(
            "rank of a parametric matrix is not a single integer; "
            "use the symbolic minor tests in chaincurv.criteria")
    # complex entries: split each into two real rows is wasteful; eliminate
    # directly over the complex field (CScalar division is exact).
    rows = [list(r) for r in a.rows]
    n = a.n
    rank = 0
    col = 0
    while rank < n and col < n:
        piv = next((r for r in range(rank, n) if not rows[r][col].is_zero()), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [e * inv for e in rows[rank]]
        for r in range(n):
            if r != rank and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [e - f * p for e, p in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def rref(matrix: list[list[Scalar]]) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form over the field; returns (rows, pivot columns)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [e * inv for e in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [e - f * p for e, p in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def solve_in_span(basis: Sequence[AlgebraElement],
                  target: AlgebraElement) -> list[Scalar] | None:
    """Exact coordinates of ``target`` in the span of ``basis``, or None.

    All elements must be non-parametric; coordinates are real (the field),
    which suffices because catalog bases are anti-Hermitian with entries in
    the field times {1, i}.
    """
    cols = [b.coords() for b in basis]
    t = target.coords()
    if any(isinstance(x, ParamScalar) for col in cols for x in col) or \
       any(isinstance(x, ParamScalar) for x in t):
        raise TypeError("solve_in_span needs non-parametric elements")
    m = len(t)
    aug = [[cols[j][i] for j in range(len(basis))] + [t[i]] for i in range(m)]
    rows, pivots = rref(aug)
    k = len(basis)
    if k in pivots:
        return None  # inconsistent: target outside the span
    sol = [ZERO] * k
    for r, c in enumerate(pivots):
        sol[c] = rows[r][k]
    return sol


def in_span(basis: Sequence[AlgebraElement], target: AlgebraElement) -> bool:
    return solve_in_span(basis, target) is not None


def independent(elements: Sequence[AlgebraElement]) -> bool:
    """Exact linear independence over the field (non-parametric)."""
    if not elements:
        return True
    rows = [e.coords() for e in elements]
    if any(isinstance(x, ParamScalar) for row in rows for x in row):
        raise TypeError("independence test needs non-parametric elements")
    _, pivots = rref(rows)
    return len(pivots) == len(elements)


def nullspace(matrix: list[list[Scalar]]) -> list[list[Scalar]]:
    """Basis of the exact null space of a Scalar matrix."""
    if not matrix:
        return []
    rows, pivots = rref(matrix)
    ncols = len(matrix[0])
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fc in free:
        vec = [ZERO] * ncols
        vec[fc] = ONE
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        out.append(vec)
    return out


def span_equal(basis1: Sequence[AlgebraElement],
               basis2: Sequence[AlgebraElement]) -> bool:
    return (all(in_span(basis2, v) for v in basis1)
            and all(in_span(basis1, v) for v in basis2))


def combine(basis: Sequence[AlgebraElement], coeffs: Iterable) -> AlgebraElement:
    """Exact linear combination of basis elements with Scalar coefficients."""
    basis = list(basis)
    if not basis:
        raise ValueError("empty basis")
    n = basis[0].n
    grid = [[C_ZERO] * n for _ in range(n)]
    for b, c in zip(basis, coeffs):
        c = CScalar.of(c)
        if c.is_zero():
            continue
        for i in range(n):
            row = b.rows[i]
            for j in range(n):
                e = row[j]
                if not e.is_zero():
                    grid[i][j] = grid[i][j] + e * c
    return AlgebraElement(grid)
