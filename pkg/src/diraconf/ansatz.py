"""Closed-form preserved eigenstate of the Coulomb-plus-linear Dirac problem.

For negative kappa0 and couplings (lam, mu) the bispinor with radial parts

    f(r) = N r^(b-1) exp(-a r) exp(-alpha2 r^2 / 2),    g(r) = -gamma f(r)

is an exact eigenstate of H = alpha.p + beta m - lam/r + beta mu r + nu r,
provided the time-like slope is fine-tuned to nu = -mu sqrt(1 - lam^2/kappa0^2).
Its energy is the Dirac-Coulomb value of the nodeless n = -kappa0 level,
E = m sqrt(1 - lam^2/kappa0^2): the confining potentials leave that one
eigenvalue untouched.

Parameter values (general kappa0 < 0):

    b      = sqrt(kappa0^2 - lam^2)
    a      = m lam / |kappa0|
    alpha2 = mu lam / |kappa0|       (so mu > 0 is required for decay)
    gamma  = (|kappa0| - b)/lam = lam/(|kappa0| + b)
           = a/(m + E) = (m - E)/a
           = alpha2/(mu - nu) = (mu + nu)/alpha2

All six gamma expressions must coincide; ``AnsatzParams.gamma_deviations``
reports their spread and the test suite pins it at the 1e-12 level.  Note
the exponent is sqrt(kappa0^2 - lam^2), not sqrt(1 - lam^2/kappa0^2): only
the former satisfies the full set of relations once |kappa0| > 1 (the two
agree for kappa0 = -1).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coulomb import CouplingSet
from .errors import DomainError
from .radial_solver import RadialGrid, radial_equation_defects
from .special_functions import gamma_fn, kummer_U

__all__ = [
    "AnsatzParams",
    "nu_fine_tuned",
    "nu_expanded",
    "build_ansatz",
    "evaluate_spinor",
    "radial_residual",
]


def _check_couplings(lam: float, kappa0: int):
    if kappa0 >= 0:
        raise DomainError(f"kappa0 must be a negative integer, got {kappa0}")
    if not abs(lam) < abs(kappa0):
        raise DomainError(f"need |lam| < |kappa0|, got lam={lam}, kappa0={kappa0}")


def nu_fine_tuned(mu: float, lam: float, kappa0: int) -> float:
    """Time-like slope that cancels the scalar slope's effect on the
    reference level: nu = -mu sqrt(1 - lam^2/kappa0^2)."""
    _check_couplings(lam, kappa0)
    return -mu * math.sqrt(1.0 - lam * lam / (kappa0 * kappa0))


def nu_expanded(mu: float, lam: float, kappa0: int) -> float:
    """Weak-coupling expansion of the fine-tuning: -mu + mu lam^2/(2 kappa0^2).

    Differs from ``nu_fine_tuned`` by O(mu lam^4)."""
    _check_couplings(lam, kappa0)
    return -mu + mu * lam * lam / (2.0 * kappa0 * kappa0)


@dataclass(frozen=True)
class AnsatzParams:
    """Parameters of the closed-form preserved eigenstate (immutable)."""

    couplings: CouplingSet
    kappa0: int
    b: float
    a: float
    alpha2: float
    gamma: float
    energy: float
    norm: float

    def gamma_candidates(self) -> tuple[float, ...]:
        """The six independent expressions that must all equal gamma."""
        c = self.couplings
        m, e = c.mass, self.energy
        ak = abs(self.kappa0)
        return (
            self.a / (m + e),
            (ak - self.b) / c.lam,
            self.alpha2 / (c.mu - c.nu),
            (m - e) / self.a,
            c.lam / (ak + self.b),
            (c.mu + c.nu) / self.alpha2,
        )

    def gamma_deviations(self) -> tuple[float, ...]:
        return tuple(abs(cand / self.gamma - 1.0) for cand in self.gamma_candidates())


def build_ansatz(lam: float, mu: float, kappa0: int, m: float = 1.0) -> AnsatzParams:
    """Construct the preserved eigenstate for couplings (lam, mu) and kappa0 < 0.

    Requires mu > 0: the Gaussian width is alpha2 = mu lam/|kappa0|, and only
    a positive scalar slope gives a decaying (normalizable) profile.  The
    fine-tuned nu is computed internally.
    """
    _check_couplings(lam, kappa0)
    if not lam > 0:
        raise DomainError(f"lam must be positive, got {lam}")
    if not m > 0:
        raise DomainError(f"m must be positive, got {m}")
    ak = abs(kappa0)
    alpha2 = mu * lam / ak
    if not alpha2 > 0:
        raise DomainError(
            f"alpha2 = mu*lam/|kappa0| = {alpha2} must be positive for a "
            "normalizable state; use mu > 0"
        )
    nu = nu_fine_tuned(mu, lam, kappa0)
    b = math.sqrt(kappa0 * kappa0 - lam * lam)
    a = m * lam / ak
    gamma = (ak - b) / lam
    energy = m * math.sqrt(1.0 - lam * lam / (kappa0 * kappa0))
    norm = (
        2.0 ** (-2.0 * b)
        * a
        * b
        * (1.0 + gamma * gamma)
        * alpha2 ** (-1.0 - b)
        * gamma_fn(2.0 * b)
        * kummer_U(1.0 + b, 1.5, a * a / alpha2)
    ) ** (-0.5)
    return AnsatzParams(
        couplings=CouplingSet(mass=m, lam=lam, mu=mu, nu=nu),
        kappa0=kappa0, b=b, a=a, alpha2=alpha2, gamma=gamma,
        energy=energy, norm=norm,
    )


def evaluate_spinor(params: AnsatzParams, r):
    """Radial components (f, g) at r > 0 (scalar or array)."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError("r must be positive (f ~ r^(b-1) can be singular at 0)")
    f = (
        params.norm
        * r ** (params.b - 1.0)
        * np.exp(-params.a * r - 0.5 * params.alpha2 * r * r)
    )
    return f, -params.gamma * f


def _spinor_with_derivatives(params: AnsatzParams, r: np.ndarray):
    f, g = evaluate_spinor(params, r)
    logderiv = (params.b - 1.0) / r - params.a - params.alpha2 * r
    return f, f * logderiv, g, g * logderiv


def radial_residual(params: AnsatzParams, grid) -> float:
    """Max defect of the two radial equations over the grid, all-analytic.

    Derivatives come from differentiating the closed form, so the result is
    limited only by rounding; detuning nu by even a fraction of a percent
    lifts it by many orders of magnitude.
    """
    r = grid.r if isinstance(grid, RadialGrid) else np.asarray(grid, dtype=float)
    f, df, g, dg = _spinor_with_derivatives(params, r)
    c = params.couplings
    res1, res2 = radial_equation_defects(
        f, df, g, dg, r, params.energy, params.kappa0, c.mass,
        -c.lam / r, c.mu * r, c.nu * r,
    )
    scale = np.maximum(np.abs(f), np.abs(g))
    return float(np.max(np.maximum(np.abs(res1), np.abs(res2)) / scale))
