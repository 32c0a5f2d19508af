"""Floating-point search for new witness pairs, with exact rationalization.

The search minimizes |[X, Y]|^2 over pairs in p, holding a normalization
away from zero with a quadratic penalty whose weight grows on a fixed
schedule.  Star mode normalizes the vertical bracket component (the
quantity a witness must keep nonzero); double-star mode normalizes the
vertical wedge instead.  Everything here is evidence, never proof: a
candidate only matters once it rationalizes into the exact coefficient
ring and re-verifies through the exact witness check.

Rationalization rounds the X side into the ring on a shear-fixed gauge and
then recovers Y exactly as a kernel vector of ad(X) restricted to p, which
is far more robust than rounding both sides: the commutant is linear in Y.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import minimize

from .algebra import AlgebraElement, bracket, combine, inner, nullspace
from .chains import Chain
from .criteria import WitnessPair, WitnessRejected, check_mm_m_zero, verify_witness
from .scalars import ONE, SQRT2, SQRT3, SQRT6, ZERO, Scalar

STAR = "star"
DOUBLE_STAR = "double-star"

_RADICALS = (ONE, SQRT2, SQRT3, SQRT6)
_RADICAL_FLOATS = tuple(r.to_float() for r in _RADICALS)


def round_to_ring(x: float, denominator_bound: int = 8) -> tuple[Scalar, float]:
    """Nearest ring element of the form r * {1, sqrt2, sqrt3, sqrt6}.

    Returns the element and the absolute residual; r runs over rationals
    with denominator at most the bound.
    """
    best: tuple[Scalar, float] | None = None
    for rad, radf in zip(_RADICALS, _RADICAL_FLOATS):
        frac = Fraction(x / radf).limit_denominator(denominator_bound)
        cand = rad * frac
        resid = abs(cand.to_float() - x)
        if best is None or resid < best[1]:
            best = (cand, resid)
    return best


@dataclass(frozen=True)
class SearchProblem:
    """Numeric embedding of one instantiated chain.

    The exact frames are orthogonal by construction, so the numeric
    orthonormal bases are plain rescalings; their numeric Gram matrices are
    the identity to machine precision.
    """

    chain: Chain
    mode: str
    m_exact: tuple[AlgebraElement, ...]
    s_exact: tuple[AlgebraElement, ...]
    p_basis: np.ndarray          # (dp, n, n) orthonormal numeric frames
    g_basis: np.ndarray          # (dg, n, n)
    bracket_tensor: np.ndarray   # (dg, dp, dp)
    vertical_tensor: np.ndarray  # (dm, dm, dm)
    dim_m: int

    @staticmethod
    def from_chain(chain: Chain, mode: str = STAR) -> "SearchProblem":
        if mode not in (STAR, DOUBLE_STAR):
            raise ValueError(f"unknown search mode {mode!r}")
        if chain.is_parametric:
            raise ValueError("search needs an instantiated chain")
        m_exact = tuple(chain.m_part.frame())
        s_exact = tuple(chain.s_part.frame())

        def unit(v: AlgebraElement) -> np.ndarray:
            a = v.to_numpy()
            nrm = float(np.sqrt(_ip(a, a)))
            return a / nrm

        p_basis = np.array([unit(v) for v in m_exact + s_exact])
        g_basis = np.array([unit(v) for v in chain.g.fixed_basis])
        dp = len(p_basis)
        dm = len(m_exact)
        dg = len(g_basis)
        br = np.zeros((dg, dp, dp))
        for a in range(dp):
            for b in range(a + 1, dp):
                comm = p_basis[a] @ p_basis[b] - p_basis[b] @ p_basis[a]
                for c in range(dg):
                    val = _ip(comm, g_basis[c])
                    br[c, a, b] = val
                    br[c, b, a] = -val
        vt = np.zeros((dm, dm, dm))
        for a in range(dm):
            for b in range(a + 1, dm):
                comm = p_basis[a] @ p_basis[b] - p_basis[b] @ p_basis[a]
                for c in range(dm):
                    val = _ip(comm, p_basis[c])
                    vt[c, a, b] = val
                    vt[c, b, a] = -val
        problem = SearchProblem(chain, mode, m_exact, s_exact, p_basis,
                                g_basis, br, vt, dm)
        # sanity: the numeric frames really are orthonormal
        gram = np.array([[_ip(u, v) for v in p_basis] for u in p_basis])
        if not np.allclose(gram, np.eye(dp), atol=1e-12):
            raise AssertionError("numeric frame failed the orthonormality check")
        return problem

    @property
    def dim_p(self) -> int:
        return len(self.p_basis)


def _ip(a: np.ndarray, b: np.ndarray) -> float:
    return float(-np.trace(a @ b).real)


@dataclass
class SearchResult:
    mode: str
    feasible: bool
    best_objective: float
    candidate: Optional[tuple[np.ndarray, np.ndarray]]
    witness: Optional[WitnessPair]
    restarts_run: int
    margin: Optional[float]
    objective_trace: list[float] = field(default_factory=list)
    note: str = ""

    @property
    def found(self) -> bool:
        return self.witness is not None


def _objective_pieces(problem: SearchProblem, z: np.ndarray):
    dp = problem.dim_p
    dm = problem.dim_m
    x, y = z[:dp], z[dp:]
    B = problem.bracket_tensor
    by = B @ y                     # (dg, dp)
    vals = by @ x                  # (dg,)
    f = float(vals @ vals)
    grad_x = 2.0 * (vals @ by)
    bx = np.einsum("cab,a->cb", B, x)
    grad_y = 2.0 * (vals @ bx)
    u, v = x[:dm], y[:dm]
    if problem.mode == STAR:
        V = problem.vertical_tensor
        vv = V @ v
        cvals = vv @ u
        c = float(cvals @ cvals)
        cg_u = 2.0 * (cvals @ vv)
        vu = np.einsum("cab,a->cb", V, u)
        cg_v = 2.0 * (cvals @ vu)
    else:
        nu, nv, uv = float(u @ u), float(v @ v), float(u @ v)
        c = nu * nv - uv * uv
        cg_u = 2.0 * nv * u - 2.0 * uv * v
        cg_v = 2.0 * nu * v - 2.0 * uv * u
    cons_grad = np.zeros_like(z)
    cons_grad[:dm] = cg_u
    cons_grad[dp:dp + dm] = cg_v
    f_grad = np.concatenate([grad_x, grad_y])
    return f, f_grad, c, cons_grad


def penalized(problem: SearchProblem, z: np.ndarray, mu: float):
    f, fg, c, cg = _objective_pieces(problem, z)
    gap = c - 1.0
    val = f + mu * gap * gap
    grad = fg + (2.0 * mu * gap) * cg
    return val, grad


DEFAULT_MU_SCHEDULE = (1e1, 1e3, 1e5, 1e7)


def search(problem: SearchProblem, restarts: int = 20, seed: int = 1,
           budget: int = 300, mu_schedule: Sequence[float] = DEFAULT_MU_SCHEDULE,
           rationalize_tol: float = 1e-10, denominator_bound: int = 8) -> SearchResult:
    """Penalized first-order minimization with random restarts.

    Deterministic for fixed (seed, restarts, budget).  Stops early once a
    candidate rationalizes into an exactly verified witness (the stopping
    rule is itself deterministic).  The reported margin is the smallest
    ratio |[X,Y]| / sqrt(normalization) seen over all evaluations.
    """
    if restarts < 1:
        raise ValueError("need at least one restart")
    if problem.mode == STAR and check_mm_m_zero(problem.chain):
        return SearchResult(problem.mode, False, float("inf"), None, None, 0, None,
                            note="infeasible: the vertical bracket component "
                                 "vanishes identically on this chain")
    if problem.mode == DOUBLE_STAR and problem.dim_m < 2:
        return SearchResult(problem.mode, False, float("inf"), None, None, 0, None,
                            note="infeasible: the vertical space has no 2-planes")

    rng = np.random.default_rng(seed)
    dp = problem.dim_p
    best_obj = float("inf")
    best_z = None
    trace: list[float] = []
    ratio_floor = float("inf")
    witness: Optional[WitnessPair] = None
    run = 0
    for r in range(restarts):
        run = r + 1
        z = rng.standard_normal(2 * dp)
        z /= np.linalg.norm(z)
        for mu in mu_schedule:
            res = minimize(lambda zz: penalized(problem, zz, mu), z,
                           jac=True, method="L-BFGS-B",
                           options={"maxiter": budget, "ftol": 1e-18, "gtol": 1e-14})
            z = res.x
            f, _, c, _ = _objective_pieces(problem, z)
            if c > 1e-9:
                ratio_floor = min(ratio_floor, np.sqrt(f) / np.sqrt(c))
        f, _, c, _ = _objective_pieces(problem, z)
        if c > 0.25:
            obj = f / c
            if obj < best_obj:
                best_obj = obj
                best_z = z.copy()
        trace.append(best_obj)
        if best_obj < rationalize_tol and witness is None:
            witness = rationalize(problem, best_z, denominator_bound)
            if witness is not None:
                break
    if witness is None and best_obj < rationalize_tol:
        witness = rationalize(problem, best_z, denominator_bound)
    cand = None
    if best_z is not None:
        cand = (best_z[:dp].copy(), best_z[dp:].copy())
    return SearchResult(problem.mode, True, best_obj, cand, witness, run,
                        None if ratio_floor == float("inf") else float(ratio_floor),
                        objective_trace=trace)


def gradient_check(problem: SearchProblem, samples: int = 5, seed: int = 7,
                   step: float = 1e-5, mu: float = 10.0) -> float:
    """Max relative error of the analytic gradient against central differences."""
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        z = rng.standard_normal(2 * problem.dim_p)
        _, grad = penalized(problem, z, mu)
        num = np.zeros_like(z)
        for i in range(len(z)):
            zp, zm = z.copy(), z.copy()
            zp[i] += step
            zm[i] -= step
            num[i] = (penalized(problem, zp, mu)[0] - penalized(problem, zm, mu)[0]) / (2 * step)
        denom = max(1.0, float(np.linalg.norm(num)))
        worst = max(worst, float(np.linalg.norm(grad - num)) / denom)
    return worst


def objective_at(problem: SearchProblem, x: AlgebraElement, y: AlgebraElement) -> float:
    """Numeric |[x, y]|^2 after embedding an exact pair (sanity coupling)."""
    z = embed_pair(problem, x, y)
    f, _, _, _ = _objective_pieces(problem, z)
    return f


def embed_pair(problem: SearchProblem, x: AlgebraElement, y: AlgebraElement) -> np.ndarray:
    xn, yn = x.to_numpy(), y.to_numpy()
    coords = [
        np.array([_ip(v, b) for b in problem.p_basis])
        for v in (xn, yn)
    ]
    return np.concatenate(coords)


# ---------------------------------------------------------------------------
# Rationalization
# ---------------------------------------------------------------------------

def _exact_frame(problem: SearchProblem) -> list[AlgebraElement]:
    return list(problem.m_exact) + list(problem.s_exact)


def _float_coords_exact_frame(problem: SearchProblem, vec: np.ndarray) -> np.ndarray:
    frame = _exact_frame(problem)
    mats = [f.to_numpy() for f in frame]
    return np.array([_ip(vec, m) / _ip(m, m) for m in mats])


def _exact_from_coords(problem: SearchProblem, coords: Sequence[Scalar]) -> AlgebraElement:
    return combine(_exact_frame(problem), coords)


def _kernel_partner(problem: SearchProblem, x_exact: AlgebraElement) -> Optional[WitnessPair]:
    """Exact Y with [X, Y] = 0 inside p, witness-quality if possible."""
    chain = problem.chain
    frame = _exact_frame(problem)
    cols = [bracket(x_exact, v).coords() for v in frame]
    height = len(cols[0])
    matrix = [[cols[j][i] for j in range(len(cols))] for i in range(height)]
    kernel = nullspace(matrix)
    candidates = [combine(frame, kv) for kv in kernel]
    # single kernel vectors first, then pair sums
    for y in candidates:
        try:
            return verify_witness(chain, x_exact, y)
        except WitnessRejected:
            continue
    for y1, y2 in itertools.combinations(candidates, 2):
        try:
            return verify_witness(chain, x_exact, y1 + y2)
        except WitnessRejected:
            continue
    return None


def _sparsify(problem: SearchProblem, z: np.ndarray, tol: float,
              budget: int = 400) -> np.ndarray:
    """Deterministically zero out candidate coordinates while staying on the
    witness variety; the survivors are forced to special algebraic values."""
    mu_schedule = (1e2, 1e4, 1e6)
    zeroed: list[int] = []

    def solve(z0, idx):
        zz = z0.copy()
        for mu in mu_schedule:
            def fun(w):
                val, grad = penalized(problem, w, mu)
                pen = w[idx]
                val += mu * float(pen @ pen)
                grad = grad.copy()
                grad[idx] += 2.0 * mu * pen
                return val, grad
            res = minimize(fun, zz, jac=True, method="L-BFGS-B",
                           options={"maxiter": budget, "ftol": 1e-18, "gtol": 1e-14})
            zz = res.x
        f, _, c, _ = _objective_pieces(problem, zz)
        leak = max((abs(zz[i]) for i in idx), default=0.0)
        ok = c > 0.25 and f / c < tol and leak < 1e-7
        return zz, ok

    improved = True
    while improved:
        improved = False
        live = [i for i in range(len(z)) if i not in zeroed and abs(z[i]) > 1e-9]
        for i in sorted(live, key=lambda j: abs(z[j])):
            z2, ok = solve(z, zeroed + [i])
            if ok:
                z = z2
                zeroed.append(i)
                improved = True
                break
    z = z.copy()
    z[zeroed] = 0.0
    return z


def rationalize(problem: SearchProblem, candidate: np.ndarray,
                denominator_bound: int = 8, sparsify: bool = True) -> Optional[WitnessPair]:
    """Round a low-objective candidate into the exact ring and re-verify.

    Gauge freedom (the pair's linear reparametrizations and scale) is fixed
    here and only here: the candidate is first pushed onto a sparse corner
    of the witness variety, then sheared, pivot-scaled, and rounded on the
    X side in the exact (unnormalized) frame; Y is recovered exactly from
    the kernel of ad(X) on p, which is linear in Y.  Returns the verified
    pair, or None when no ring pair within the bound verifies.
    """
    dp = problem.dim_p
    f0, _, c0, _ = _objective_pieces(problem, candidate)
    if c0 > 1e-6 and sparsify:
        candidate = _sparsify(problem, candidate, tol=max(1e-16, 100 * f0 / c0))
    x, y = candidate[:dp].copy(), candidate[dp:].copy()
    # shear gauge: orthogonalize the pair's roles by pivot elimination
    variants = [(x, y)]
    i0 = int(np.argmax(np.abs(x)))
    if abs(x[i0]) > 1e-9:
        y1 = y - (y[i0] / x[i0]) * x
        j0 = int(np.argmax(np.abs(y1)))
        if abs(y1[j0]) > 1e-9:
            x1 = x - (x[j0] / y1[j0]) * y1
            variants.insert(0, (x1, y1))
    pieces = []
    for (xa, ya) in variants:
        for raw in (xa, ya):
            pieces.append(_float_coords_exact_frame(
                problem, np.tensordot(raw, problem.p_basis, axes=(0, 0))))
    bounds = sorted({denominator_bound, 2, 4, 12, 24})
    for cx in pieces:
        nz = np.flatnonzero(np.abs(cx) > 1e-7)
        if len(nz) == 0:
            continue
        order = nz[np.argsort(-np.abs(cx[nz]))]
        for pivot in order[:3]:
            scaled = cx / cx[pivot]
            for bound in bounds:
                coords = []
                resid = 0.0
                for val in scaled:
                    if abs(val) < 1e-7:
                        coords.append(ZERO)
                        continue
                    s, r = round_to_ring(float(val), bound)
                    coords.append(s)
                    resid = max(resid, r)
                if resid > 1e-5:
                    continue
                x_exact = _exact_from_coords(problem, coords)
                if x_exact.is_zero():
                    continue
                if not problem.chain.h_part.component_is_zero(x_exact):
                    continue
                pair = _kernel_partner(problem, x_exact)
                if pair is not None:
                    return pair
    return None
