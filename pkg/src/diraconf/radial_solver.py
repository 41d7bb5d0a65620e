"""Bound states of the coupled radial Dirac equations by shooting.

The equations integrated here, for a Hamiltonian with a time-like potential
V0, a scalar (beta-coupled) potential V1 and a second time-like potential V2,
and a bispinor with upper radial part f and lower radial part g, are

    f'(r) + (kappa+1)/r f = (E + m + V1 - V0 - V2) g
    -g'(r) + (kappa-1)/r g = (E - m - V1 - V0 - V2) f

so the time-like pieces always enter as E - V0 - V2 and the scalar piece
shifts the mass, m + V1.  Eigenvalues are located by integrating outward
from a power-series start at r_min and inward from a WKB-seeded tail at
r_max, and driving the mismatch of g/f at an interior matching radius to
zero (bisection, then secant polish).  A fourth-order Runge-Kutta kernel
does the stepping; see ``diraconf._kernels`` for backend selection.

A radial Schroedinger solver built on the same machinery handles the
nonrelativistic confining problems (single component u(r), with
-u''/2m + [v + l(l+1)/(2 m r^2)] u = (E - m) u).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

import numpy as np

from ._kernels import rk4_linear2x2
from .errors import BracketError, ConvergenceError, DomainError, WrongStateError

_trapezoid = getattr(np, "trapezoid", None) or np.trapz

__all__ = [
    "RadialGrid",
    "PotentialSpec",
    "BoundState",
    "ScalarBoundState",
    "ShiftStudy",
    "coulomb_potential",
    "coulomb_plus_linear",
    "radial_equation_defects",
    "integrate_radial",
    "find_bound_state",
    "solve_schrodinger_radial",
    "shift_convergence_study",
    "suggest_rmax",
    "suggest_rmax_schrodinger",
]


@dataclass(frozen=True)
class RadialGrid:
    """Strictly increasing radial grid, logarithmic or linear.

    Production eigenvalue solves want count >= 10_000 or so; small counts
    are fine for kernel cross-checks.
    """

    r_min: float
    r_max: float
    count: int
    spacing: str = "log"

    def __post_init__(self):
        if not 0 < self.r_min < self.r_max:
            raise DomainError(
                f"need 0 < r_min < r_max, got [{self.r_min}, {self.r_max}]"
            )
        if self.count < 16:
            raise DomainError(f"count must be >= 16, got {self.count}")
        if self.spacing not in ("log", "linear"):
            raise DomainError(f"spacing must be 'log' or 'linear', got {self.spacing!r}")

    @cached_property
    def t(self) -> np.ndarray:
        """Integration variable at the nodes (ln r for log spacing, r otherwise)."""
        if self.spacing == "log":
            return np.linspace(math.log(self.r_min), math.log(self.r_max), self.count)
        return np.linspace(self.r_min, self.r_max, self.count)

    @cached_property
    def r(self) -> np.ndarray:
        return np.exp(self.t) if self.spacing == "log" else self.t

    @cached_property
    def r_all(self) -> np.ndarray:
        """Radii at nodes and interval midpoints (2*count - 1 points)."""
        if self.spacing == "log":
            tt = np.linspace(math.log(self.r_min), math.log(self.r_max),
                             2 * self.count - 1)
            return np.exp(tt)
        return np.linspace(self.r_min, self.r_max, 2 * self.count - 1)

    @cached_property
    def steps(self) -> np.ndarray:
        return np.diff(self.t)

    def integrate(self, values: np.ndarray) -> float:
        """Trapezoid quadrature of sampled values against dr.

        On the log grid this is the trapezoid rule in ln r with the exact
        Jacobian; for integrands decaying at both ends it is accurate far
        beyond second order (Euler-Maclaurin boundary terms vanish).
        """
        if self.spacing == "log":
            return float(_trapezoid(values * self.r, self.t))
        return float(_trapezoid(values, self.r))


def _zero(r):
    return np.zeros_like(np.asarray(r, dtype=float))


@dataclass(frozen=True)
class PotentialSpec:
    """Radial potential triple; callables must accept float arrays.

    ``coulomb_strength`` declares the leading origin behavior of v0
    (v0 ~ -coulomb_strength / r) so the outward integration can start on
    the correct power-series branch.  Leave it zero for potentials regular
    at the origin.
    """

    v0: Callable = _zero
    v1: Callable = _zero
    v2: Callable = _zero
    coulomb_strength: float = 0.0


def coulomb_potential(lam: float) -> PotentialSpec:
    return PotentialSpec(v0=lambda r: -lam / r, coulomb_strength=lam)


def coulomb_plus_linear(lam: float, mu: float, nu: float) -> PotentialSpec:
    """Coulomb term plus the two linear confining potentials."""
    return PotentialSpec(
        v0=lambda r: -lam / r,
        v1=lambda r: mu * r,
        v2=lambda r: nu * r,
        coulomb_strength=lam,
    )


@dataclass
class BoundState:
    energy: float
    kappa: int
    grid: RadialGrid
    f: np.ndarray
    g: np.ndarray
    nodes_f: int
    converged: bool
    residual: float


@dataclass
class ScalarBoundState:
    energy: float
    ell: int
    grid: RadialGrid
    u: np.ndarray
    du: np.ndarray
    nodes: int
    converged: bool
    residual: float


def radial_equation_defects(f, df, g, dg, r, E, kappa, m, v0, v1, v2):
    """Pointwise defects of the two coupled radial equations.

    All arguments are arrays sampled on the same radii (or scalars); the
    derivative arrays must come from an independent route (analytic
    differentiation or finite differences), not from the equations
    themselves.
    """
    p = E + m + v1 - v0 - v2
    q = E - m - v1 - v0 - v2
    res1 = df + (kappa + 1.0) / r * f - p * g
    res2 = -dg + (kappa - 1.0) / r * g - q * f
    return res1, res2


class _DiracSystem:
    """Precomputed coefficient tables for one (potential, kappa, m, grid)."""

    def __init__(self, potential: PotentialSpec, kappa: int, m: float,
                 grid: RadialGrid):
        if kappa == 0:
            raise DomainError("kappa must be nonzero")
        lam = potential.coulomb_strength
        if lam != 0.0 and abs(lam) >= abs(kappa):
            raise DomainError(
                f"|coulomb_strength|={abs(lam)} must stay below |kappa|={abs(kappa)}"
            )
        self.potential = potential
        self.kappa = kappa
        self.m = m
        self.grid = grid
        ra = grid.r_all
        self.v0_all = np.asarray(potential.v0(ra), dtype=float)
        self.v1_all = np.asarray(potential.v1(ra), dtype=float)
        self.v2_all = np.asarray(potential.v2(ra), dtype=float)
        self.p_tilde = m + self.v1_all - self.v0_all - self.v2_all
        self.q_tilde = -m - self.v1_all - self.v0_all - self.v2_all
        if grid.spacing == "log":
            self.a11 = np.full_like(ra, -(kappa + 1.0))
            self.a22 = np.full_like(ra, kappa - 1.0)
            self._r_factor = ra
        else:
            self.a11 = -(kappa + 1.0) / ra
            self.a22 = (kappa - 1.0) / ra
            self._r_factor = np.ones_like(ra)

    def coefficients(self, E: float):
        a12 = self._r_factor * (E + self.p_tilde)
        a21 = -self._r_factor * (E + self.q_tilde)
        return self.a11, a12, a21, self.a22

    def outward_seed(self, E: float):
        kappa, m = self.kappa, self.m
        lam = self.potential.coulomb_strength
        r0 = self.grid.r[0]
        if lam != 0.0:
            s = math.sqrt(kappa * kappa - lam * lam)
            cf = r0 ** (s - 1.0)
            cg = (s + kappa) / lam * cf
            # first-order series correction in r keeps the seed defect
            # below the integrator's own truncation error
            ep, em = E + m, E - m
            det = (s + kappa + 1.0) * (kappa - 1.0 - s) - lam * lam
            if abs(det) > 1e-10:
                cf1 = ((kappa - 1.0 - s) * ep * cg + lam * em * cf) / det
                cg1 = (lam * ep * cg + (s + kappa + 1.0) * em * cf) / det
                return cf + cf1 * r0, cg + cg1 * r0
            return cf, cg
        q0 = E - m - float(self.v0_all[0] + self.v1_all[0] + self.v2_all[0])
        p0 = E + m + float(self.v1_all[0] - self.v0_all[0] - self.v2_all[0])
        if kappa < 0:
            cf = r0 ** (-kappa - 1.0)
            return cf, q0 * cf * r0 / (2.0 * kappa - 1.0)
        cg = r0 ** (kappa - 1.0)
        return p0 * cg * r0 / (2.0 * kappa + 1.0), cg

    def inward_seed(self, E: float):
        w2 = (self.m + self.v1_all[-1]) ** 2 - (
            E - self.v0_all[-1] - self.v2_all[-1]
        ) ** 2
        w = math.sqrt(max(float(w2), 1e-30))
        r_last = self.grid.r[-1]
        p_last = E + self.p_tilde[-1]
        f0 = 1.0
        g0 = (-w + (self.kappa + 1.0) / r_last) * f0 / p_last
        return f0, g0

    def allowed_region(self, E: float) -> np.ndarray:
        rn = self.grid.r
        v0 = self.v0_all[::2]
        v1 = self.v1_all[::2]
        v2 = self.v2_all[::2]
        return (E - v0 - v2) ** 2 - (self.m + v1) ** 2 - self.kappa * (
            self.kappa + 1.0
        ) / rn**2 > 0


class _SchrodingerSystem:
    """Same machinery for the single-component radial equation."""

    def __init__(self, v: Callable, ell: int, m: float, grid: RadialGrid,
                 coulomb_coeff: float = 0.0):
        if ell < 0:
            raise DomainError("ell must be >= 0")
        self.ell = ell
        self.m = m
        self.grid = grid
        self.coulomb_coeff = coulomb_coeff
        ra = grid.r_all
        self.v_all = np.asarray(v(ra), dtype=float)
        self.v_eff = self.v_all + ell * (ell + 1.0) / (2.0 * m * ra**2)
        if grid.spacing == "log":
            self._r_factor = ra
        else:
            self._r_factor = np.ones_like(ra)
        self.a11 = np.zeros_like(ra)
        self.a12 = self._r_factor.copy()
        self.a22 = np.zeros_like(ra)

    def coefficients(self, E: float):
        a21 = self._r_factor * 2.0 * self.m * (self.v_eff - (E - self.m))
        return self.a11, self.a12, a21, self.a22

    def outward_seed(self, E: float):
        r0 = self.grid.r[0]
        ell = self.ell
        beta = self.m * self.coulomb_coeff / (ell + 1.0)
        u = r0 ** (ell + 1.0) * (1.0 + beta * r0)
        du = (ell + 1.0) * r0**ell + (ell + 2.0) * beta * r0 ** (ell + 1.0)
        return u, du

    def inward_seed(self, E: float):
        k2 = 2.0 * self.m * (self.v_eff[-1] - (E - self.m))
        k = math.sqrt(max(float(k2), 1e-30))
        return 1.0, -k

    def allowed_region(self, E: float) -> np.ndarray:
        rn = self.grid.r
        return 2.0 * self.m * (E - self.m - self.v_all[::2]) - self.ell * (
            self.ell + 1.0
        ) / rn**2 > 0


def _propagate(system, E: float, reverse: bool):
    grid = system.grid
    n = grid.count
    a11, a12, a21, a22 = system.coefficients(E)
    y1 = np.empty(n)
    y2 = np.empty(n)
    logscale = np.empty(n)
    seed = system.inward_seed(E) if reverse else system.outward_seed(E)
    status = rk4_linear2x2(
        np.ascontiguousarray(grid.steps),
        np.ascontiguousarray(a11), np.ascontiguousarray(a12),
        np.ascontiguousarray(a21), np.ascontiguousarray(a22),
        float(seed[0]), float(seed[1]), bool(reverse),
        y1, y2, logscale,
    )
    if status != 0:
        raise ConvergenceError(
            f"integration produced non-finite values at E={E!r}"
        )
    return y1, y2, logscale


def _match_index(system, E: float) -> int:
    """Outer classical turning point; falls back to the peak of |f|."""
    n = system.grid.count
    allowed = np.nonzero(system.allowed_region(E))[0]
    if allowed.size:
        idx = int(allowed[-1])
    else:
        f, _, logscale = _propagate(system, E, reverse=False)
        with np.errstate(divide="ignore"):
            log_f = np.where(f != 0.0, np.log(np.abs(np.where(f != 0.0, f, 1.0))),
                             -np.inf) + logscale
        idx = int(np.argmax(log_f))
    return min(max(idx, 8), n - 9)


def _matching_defect(system, E: float, i_match: int):
    """Wronskian-style defect at the matching node, normalized to [-1, 1].

    Vanishes exactly at eigenvalues and, unlike a log-derivative mismatch,
    has no poles when a node of the outward sweep crosses the matching
    radius as E varies across the bracket.
    """
    f_out, g_out, _ = _propagate(system, E, reverse=False)
    f_in, g_in, _ = _propagate(system, E, reverse=True)
    i = i_match
    a = g_out[i] * f_in[i]
    b = g_in[i] * f_out[i]
    return (a - b) / (abs(a) + abs(b) + 1e-300)


def _merge_and_scale(system, E: float):
    """Outward and inward trajectories glued at the match point, peak ~ 1."""
    i_match = _match_index(system, E)
    f_out, g_out, so = _propagate(system, E, reverse=False)
    f_in, g_in, si = _propagate(system, E, reverse=True)
    n = system.grid.count
    im = i_match
    while f_out[im] == 0.0 or f_in[im] == 0.0:
        im += 1
    mag_out = np.maximum(np.abs(f_out[: im + 1]), np.abs(g_out[: im + 1]))
    with np.errstate(divide="ignore"):
        ref = float(np.max(np.log(np.where(mag_out > 0, mag_out, 1e-320))
                           + so[: im + 1]))
    f = np.empty(n)
    g = np.empty(n)
    scale_out = np.exp(so[: im + 1] - ref)
    f[: im + 1] = f_out[: im + 1] * scale_out
    g[: im + 1] = g_out[: im + 1] * scale_out
    glue_log = (
        math.log(abs(f_out[im])) + so[im] - ref
        - math.log(abs(f_in[im])) - si[im]
    )
    sign_c = math.copysign(1.0, f_out[im]) * math.copysign(1.0, f_in[im])
    scale_in = sign_c * np.exp(np.minimum(si[im:] + glue_log, 100.0))
    f[im:] = f_in[im:] * scale_in
    g[im:] = g_in[im:] * scale_in
    return f, g, im


def _count_nodes(values: np.ndarray, threshold_rel: float = 1e-10) -> int:
    peak = float(np.max(np.abs(values)))
    thr = threshold_rel * peak
    live = values[np.abs(values) > thr]
    if live.size < 2:
        return 0
    return int(np.sum(live[1:] * live[:-1] < 0))


def _fd_derivative(values: np.ndarray, h: float) -> np.ndarray:
    """Fourth-order central differences on a uniform grid (interior only)."""
    d = np.full_like(values, np.nan)
    d[2:-2] = (values[:-4] - 8 * values[1:-3] + 8 * values[3:-1] - values[4:]) / (
        12.0 * h
    )
    return d


def _dirac_fd_residual(system, E: float, f: np.ndarray, g: np.ndarray) -> float:
    """Equation defect of the sampled solution, relative to the local
    magnitude of the terms being balanced (finite-difference derivatives)."""
    grid = system.grid
    h = float(grid.steps[0])
    rn = grid.r
    df_dt = _fd_derivative(f, h)
    dg_dt = _fd_derivative(g, h)
    if grid.spacing == "log":
        df, dg = df_dt / rn, dg_dt / rn
    else:
        df, dg = df_dt, dg_dt
    kappa, m = system.kappa, system.m
    v0 = system.v0_all[::2]
    v1 = system.v1_all[::2]
    v2 = system.v2_all[::2]
    res1, res2 = radial_equation_defects(f, df, g, dg, rn, E, kappa, m,
                                         v0, v1, v2)
    p = E + m + v1 - v0 - v2
    q = E - m - v1 - v0 - v2
    mag1 = np.abs(df) + np.abs((kappa + 1.0) / rn * f) + np.abs(p * g)
    mag2 = np.abs(dg) + np.abs((kappa - 1.0) / rn * g) + np.abs(q * f)
    scale = np.maximum(np.abs(f), np.abs(g))
    live = scale > 1e-8 * float(np.max(scale))
    live[:2] = live[-2:] = False
    if not np.any(live):
        return math.inf
    rel1 = np.abs(res1[live]) / (mag1[live] + 1e-300)
    rel2 = np.abs(res2[live]) / (mag2[live] + 1e-300)
    return float(np.max(np.maximum(rel1, rel2)))


def _solve_eigenvalue(system, E_bracket, tol: float):
    e_lo, e_hi = sorted(float(e) for e in E_bracket)
    i_match = _match_index(system, 0.5 * (e_lo + e_hi))
    d_lo = _matching_defect(system, e_lo, i_match)
    d_hi = _matching_defect(system, e_hi, i_match)
    if d_lo == 0.0:
        return e_lo, i_match
    if d_hi == 0.0:
        return e_hi, i_match
    if d_lo * d_hi > 0:
        raise BracketError(
            f"matching defect does not change sign on [{e_lo}, {e_hi}] "
            f"(defects {d_lo:.3e}, {d_hi:.3e})"
        )
    last = (e_lo, d_lo)
    prev = (e_hi, d_hi)
    while e_hi - e_lo > tol:
        e_mid = 0.5 * (e_lo + e_hi)
        d_mid = _matching_defect(system, e_mid, i_match)
        prev, last = last, (e_mid, d_mid)
        if d_mid == 0.0:
            return e_mid, i_match
        if d_lo * d_mid < 0:
            e_hi, d_hi = e_mid, d_mid
        else:
            e_lo, d_lo = e_mid, d_mid
    # secant polish inside the final bracket
    e_best = 0.5 * (e_lo + e_hi)
    (e1, d1), (e2, d2) = prev, last
    for _ in range(8):
        if d2 == d1:
            break
        e_new = e2 - d2 * (e2 - e1) / (d2 - d1)
        if not (e_lo <= e_new <= e_hi):
            break
        d_new = _matching_defect(system, e_new, i_match)
        e1, d1, e2, d2 = e2, d2, e_new, d_new
        e_best = e_new
        if d_new == 0.0 or abs(e2 - e1) < 1e-16 * max(1.0, abs(e2)):
            break
    return e_best, i_match


def integrate_radial(potential: PotentialSpec, kappa: int, E: float, m: float,
                     grid: RadialGrid, direction: str = "outward"):
    """Raw (f, g) trajectory for one energy, peak magnitude scaled to 1."""
    if direction not in ("outward", "inward"):
        raise DomainError(f"direction must be 'outward' or 'inward', got {direction!r}")
    system = _DiracSystem(potential, kappa, m, grid)
    f, g, logscale = _propagate(system, E, reverse=(direction == "inward"))
    mag = np.maximum(np.abs(f), np.abs(g))
    with np.errstate(divide="ignore"):
        logm = np.where(mag > 0, np.log(np.where(mag > 0, mag, 1.0)), -745.0) + logscale
    ref = float(np.max(logm))
    scale = np.exp(logscale - ref)
    return f * scale, g * scale


def find_bound_state(potential: PotentialSpec, kappa: int, m: float,
                     grid: RadialGrid, E_bracket, target_nodes: int,
                     tol: float | None = None) -> BoundState:
    """Locate one bound state of the coupled radial Dirac equations.

    Parameters
    ----------
    potential : PotentialSpec
        Radial potentials (time-like v0 and v2, scalar v1).
    kappa : int
        Dirac angular quantum number of the state.
    m : float
        Particle mass.
    grid : RadialGrid
        Integration grid; r_max must lie well inside the forbidden region.
    E_bracket : (float, float)
        Energies bracketing exactly one sign change of the matching defect.
    target_nodes : int
        Required node count of f (n - l - 1 for Coulomb-like numbering);
        a mismatch raises WrongStateError so the caller can widen the scan.
    tol : float, optional
        Bisection window; defaults to 1e-12 * m.

    Returns
    -------
    BoundState with f, g normalized to int (f^2 + g^2) r^2 dr = 1 and the
    maximum pointwise equation defect (finite-difference check) in
    ``residual``.
    """
    system = _DiracSystem(potential, kappa, m, grid)
    if tol is None:
        tol = 1e-12 * m
    energy, _ = _solve_eigenvalue(system, E_bracket, tol)
    f, g, _ = _merge_and_scale(system, energy)
    norm2 = grid.integrate((f * f + g * g) * grid.r**2)
    f /= math.sqrt(norm2)
    g /= math.sqrt(norm2)
    if f[np.argmax(np.abs(f) > 1e-3 * np.max(np.abs(f)))] < 0:
        f, g = -f, -g  # fix overall sign: f > 0 as it rises from the origin
    nodes = _count_nodes(f)
    if nodes != target_nodes:
        raise WrongStateError(
            f"found a state with {nodes} nodes, wanted {target_nodes} "
            f"(E = {energy!r}); widen or shift the bracket",
            found_nodes=nodes, target_nodes=target_nodes,
        )
    residual = _dirac_fd_residual(system, energy, f, g)
    return BoundState(energy=energy, kappa=kappa, grid=grid, f=f, g=g,
                      nodes_f=nodes, converged=True, residual=residual)


def solve_schrodinger_radial(v: Callable, ell: int, m: float, grid: RadialGrid,
                             E_bracket, target_nodes: int,
                             coulomb_coeff: float = 0.0,
                             tol: float | None = None) -> ScalarBoundState:
    """Radial Schroedinger bound state via the same shoot-and-match kernel.

    ``v`` is the potential without the centrifugal term; energies include
    the rest mass, matching the relativistic solver's convention.
    ``coulomb_coeff`` declares a c/r component of v for the series start.
    """
    system = _SchrodingerSystem(v, ell, m, grid, coulomb_coeff)
    if tol is None:
        tol = 1e-12 * m
    energy, _ = _solve_eigenvalue(system, E_bracket, tol)
    u, du, _ = _merge_and_scale(system, energy)
    norm2 = grid.integrate(u * u)
    u /= math.sqrt(norm2)
    du /= math.sqrt(norm2)
    if u[np.argmax(np.abs(u) > 1e-3 * np.max(np.abs(u)))] < 0:
        u, du = -u, -du
    nodes = _count_nodes(u)
    if nodes != target_nodes:
        raise WrongStateError(
            f"found a state with {nodes} nodes, wanted {target_nodes} "
            f"(E = {energy!r})",
            found_nodes=nodes, target_nodes=target_nodes,
        )
    # defect of -u''/2m + (v_eff - (E-m)) u relative to the local term
    # magnitudes, via 4th-order differences of the sampled du
    h = float(grid.steps[0])
    ddu_dt = _fd_derivative(du, h)
    ddu = ddu_dt / grid.r if grid.spacing == "log" else ddu_dt
    v_eff = system.v_eff[::2]
    res = -ddu / (2.0 * m) + (v_eff - (energy - m)) * u
    mag = np.abs(ddu) / (2.0 * m) + np.abs((v_eff - (energy - m)) * u)
    scale = np.abs(u)
    live = scale > 1e-8 * float(np.max(scale))
    live[:2] = live[-2:] = False
    residual = float(np.max(np.abs(res[live]) / (mag[live] + 1e-300)))
    return ScalarBoundState(energy=energy, ell=ell, grid=grid, u=u, du=du,
                            nodes=nodes, converged=True, residual=residual)


def suggest_rmax(potential: PotentialSpec, kappa: int, E_guess: float,
                 m: float, r_start: float, decay_target: float = 34.0) -> float:
    """Extend r_max until the WKB tail suppression reaches exp(-decay_target)."""
    r = float(r_start)
    acc = 0.0
    growth = 1.005  # fine enough that even M ~ 1000 power-law walls are resolved
    while acc < decay_target:
        r_next = r * growth
        rm = 0.5 * (r + r_next)
        v0 = float(np.asarray(potential.v0(np.array([rm])))[0])
        v1 = float(np.asarray(potential.v1(np.array([rm])))[0])
        v2 = float(np.asarray(potential.v2(np.array([rm])))[0])
        w2 = (m + v1) ** 2 - (E_guess - v0 - v2) ** 2
        if w2 > 0:
            acc += math.sqrt(w2) * (r_next - r)
        r = r_next
        if r > 1e9:
            raise ConvergenceError(
                "could not find a classically forbidden tail below r = 1e9"
            )
    return r


def suggest_rmax_schrodinger(v: Callable, E_guess: float, m: float,
                             r_start: float, decay_target: float = 34.0) -> float:
    """Schroedinger analogue of ``suggest_rmax`` (decay rate sqrt(2m(v - E~)))."""
    r = float(r_start)
    acc = 0.0
    growth = 1.005
    while acc < decay_target:
        r_next = r * growth
        rm = 0.5 * (r + r_next)
        vm = float(np.asarray(v(np.array([rm])))[0])
        k2 = 2.0 * m * (vm - (E_guess - m))
        if k2 > 0:
            acc += math.sqrt(k2) * (r_next - r)
        r = r_next
        if r > 1e9:
            raise ConvergenceError(
                "could not find a classically forbidden tail below r = 1e9"
            )
    return r


@dataclass
class ShiftStudy:
    """Numerical first-order shift study over a geometric mu sequence."""

    n: int
    kappa: int
    kappa0: int
    lam: float
    mass: float
    mu_values: list
    energies: list
    base_energy: float
    slopes: list            # (E(mu) - E(0)) / mu
    richardson: float       # extrapolated slope, mu -> 0


def shift_convergence_study(n: int, kappa: int, kappa0: int, lam: float,
                            m: float, mu_sequence: Sequence[float],
                            points: int = 20000,
                            bracket_halfwidth: float | None = None) -> ShiftStudy:
    """Solve E(mu) for fine-tuned (mu, nu) pairs and extrapolate dE/dmu.

    The sequence must be geometric (constant ratio) so the Richardson step
    can cancel the O(mu) curvature of the slopes.  All solves reuse one
    grid, which cancels most of the discretization bias in the differences.
    """
    mu_values = [float(mu) for mu in mu_sequence]
    if len(mu_values) < 2:
        raise DomainError("need at least two mu values")
    ratios = [mu_values[i] / mu_values[i + 1] for i in range(len(mu_values) - 1)]
    if any(abs(q / ratios[0] - 1) > 1e-9 for q in ratios):
        raise DomainError("mu_sequence must be geometric")
    if any(mu <= 0 for mu in mu_values):
        raise DomainError("mu values must be positive (normalizable branch)")
    q = ratios[0]
    if q <= 1:
        mu_values = mu_values[::-1]
        q = 1.0 / q

    root = math.sqrt(1.0 - lam * lam / (kappa0 * kappa0))
    s_kap = math.sqrt(kappa * kappa - lam * lam)

    def sommerfeld(n_level):
        return m / math.sqrt(1.0 + (lam / (n_level - abs(kappa) + s_kap)) ** 2)

    e_ref = sommerfeld(n)
    if bracket_halfwidth is None:
        # wide enough for every shifted level, narrower than the distance
        # to the neighboring unperturbed levels of the same kappa
        scale = abs(mu_values[0] * lam) * (3.0 * n * n + abs(kappa) * (abs(kappa) + 1))
        min_gap = sommerfeld(n + 1) - e_ref
        if n - 1 >= abs(kappa):
            min_gap = min(min_gap, e_ref - sommerfeld(n - 1))
        bracket_halfwidth = min(max(20.0 * scale, 1e-9 * m), 0.25 * min_gap)
    target_nodes = n - (abs(kappa) if kappa < 0 else kappa + 1)

    grid = RadialGrid(
        r_min=1e-6 / (lam * m),
        r_max=suggest_rmax(coulomb_potential(lam), kappa, e_ref, m,
                           r_start=4.0 * n * n / (lam * m)),
        count=points,
    )

    def solve_at(mu):
        if mu == 0.0:
            pot = coulomb_potential(lam)
        else:
            pot = coulomb_plus_linear(lam, mu, -mu * root)
        state = find_bound_state(pot, kappa, m, grid,
                                 (e_ref - bracket_halfwidth, e_ref + bracket_halfwidth),
                                 target_nodes)
        return state.energy

    base = solve_at(0.0)
    energies = [solve_at(mu) for mu in mu_values]
    slopes = [(e - base) / mu for e, mu in zip(energies, mu_values)]
    # slopes behave as c1 + c2 mu; with mu_{k+1} = mu_k / q the pairwise
    # extrapolation (q s_{k+1} - s_k)/(q - 1) removes the linear term
    rich = (q * slopes[-1] - slopes[-2]) / (q - 1.0)
    return ShiftStudy(n=n, kappa=kappa, kappa0=kappa0, lam=lam, mass=m,
                      mu_values=mu_values, energies=energies, base_energy=base,
                      slopes=slopes, richardson=rich)
