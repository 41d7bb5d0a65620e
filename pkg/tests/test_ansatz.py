import dataclasses
import math

import numpy as np
import pytest

from diraconf.ansatz import (
    AnsatzParams,
    build_ansatz,
    evaluate_spinor,
    nu_expanded,
    nu_fine_tuned,
    radial_residual,
)
from diraconf.coulomb import CouplingSet, dirac_coulomb_energy
from diraconf.errors import DomainError
from diraconf.special_functions import integrate_adaptive

SWEEP = [(lam, kappa0, mu)
         for lam in (0.1, 0.3, 0.5)
         for kappa0 in (-1, -2, -3)
         for mu in (1e-6, 1e-4)]


def _residual_grid(params, n=2001):
    # from inside the power-law region to where f has decayed by ~1e13
    lam = params.couplings.lam
    m = params.couplings.mass
    r_peak = max(params.b / params.a, 1.0 / params.a)
    f_peak, _ = evaluate_spinor(params, r_peak)
    r_hi = r_peak
    while evaluate_spinor(params, r_hi)[0] > 1e-13 * f_peak:
        r_hi *= 1.05
    return np.geomspace(1e-4 / (lam * m), r_hi, n)


class TestNuFineTuning:
    def test_examples(self):
        assert nu_fine_tuned(1e-4, 0.5, -1) == pytest.approx(-8.660254038e-5,
                                                             rel=1e-9)
        assert nu_fine_tuned(0.3, 0.0, -2) == pytest.approx(-0.3)
        assert nu_fine_tuned(0.01, 0.3, -3) == pytest.approx(-0.0099498744,
                                                             rel=1e-8)

    def test_expanded_examples(self):
        assert nu_expanded(1e-4, 0.5, -1) == pytest.approx(-8.75e-5, rel=1e-12)
        assert nu_expanded(0.2, 0.0, -1) == pytest.approx(-0.2)
        diff = abs(nu_expanded(1e-4, 0.5, -1) - nu_fine_tuned(1e-4, 0.5, -1))
        assert diff == pytest.approx(9.0e-7, rel=0.02)

    def test_expansion_is_quartic(self):
        def gap(lam):
            return abs(nu_expanded(1e-4, lam, -2) - nu_fine_tuned(1e-4, lam, -2))

        ratio = gap(0.4) / gap(0.2)
        assert 14.0 < ratio < 18.0

    def test_domain(self):
        with pytest.raises(DomainError):
            nu_fine_tuned(1e-4, 1.5, -1)
        with pytest.raises(DomainError):
            nu_fine_tuned(1e-4, 0.5, 1)


class TestBuildAnsatz:
    def test_reference_values(self):
        p = build_ansatz(0.5, 1e-4, -1, 1.0)
        assert p.b == pytest.approx(0.8660254, abs=1e-7)
        assert p.a == pytest.approx(0.5, rel=1e-15)
        assert p.alpha2 == pytest.approx(5e-5, rel=1e-12)
        assert p.gamma == pytest.approx(0.2679492, abs=1e-7)
        assert p.energy == pytest.approx(0.8660254, abs=1e-7)
        assert p.couplings.nu == pytest.approx(-8.660254e-5, rel=1e-7)

    @pytest.mark.parametrize("lam,kappa0,mu", SWEEP)
    def test_gamma_consistency_sweep(self, lam, kappa0, mu):
        p = build_ansatz(lam, mu, kappa0)
        assert max(p.gamma_deviations()) <= 1e-12

    @pytest.mark.parametrize("lam,kappa0,mu", SWEEP)
    def test_energy_matches_sommerfeld(self, lam, kappa0, mu):
        p = build_ansatz(lam, mu, kappa0)
        assert p.energy == pytest.approx(
            dirac_coulomb_energy(-kappa0, kappa0, lam), rel=5e-16)

    def test_small_mu_approaches_coulomb_shape(self):
        # Gaussian factor goes to 1, leaving the r^(b-1) e^{-ar} profile
        p = build_ansatz(0.5, 1e-10, -1)
        r = np.array([0.5, 2.0, 8.0])
        f, _ = evaluate_spinor(p, r)
        shape = r ** (p.b - 1.0) * np.exp(-p.a * r)
        ratio = f / shape
        assert np.max(np.abs(ratio / ratio[0] - 1.0)) < 1e-7

    def test_sign_constraints(self):
        with pytest.raises(DomainError):
            build_ansatz(0.5, -1e-4, -1)   # growing Gaussian
        with pytest.raises(DomainError):
            build_ansatz(0.5, 1e-4, 1)     # kappa0 must be negative
        with pytest.raises(DomainError):
            build_ansatz(0.0, 1e-4, -1)    # lam = 0 unbound
        with pytest.raises(DomainError):
            build_ansatz(1.5, 1e-4, -1)    # lam >= |kappa0|


class TestSpinor:
    def test_lower_to_upper_ratio(self):
        p = build_ansatz(0.3, 1e-4, -2)
        r = np.geomspace(0.01, 50.0, 200)
        f, g = evaluate_spinor(p, r)
        assert np.allclose(g, -p.gamma * f, rtol=1e-15, atol=0.0)

    def test_origin_rejected(self):
        p = build_ansatz(0.5, 1e-4, -1)
        with pytest.raises(DomainError):
            evaluate_spinor(p, 0.0)
        with pytest.raises(DomainError):
            evaluate_spinor(p, np.array([1.0, -2.0]))

    @pytest.mark.parametrize("lam,kappa0,mu", SWEEP)
    def test_normalization_closed_form_vs_quadrature(self, lam, kappa0, mu):
        p = build_ansatz(lam, mu, kappa0)

        def integrand(r):
            f, g = evaluate_spinor(p, r)
            return float((f * f + g * g) * r * r)

        res = integrate_adaptive(integrand, 0.0, math.inf, tol=1e-11)
        assert res.value == pytest.approx(1.0, abs=1e-8)


class TestResidual:
    @pytest.mark.parametrize("lam,kappa0,mu", SWEEP)
    def test_exact_preservation(self, lam, kappa0, mu):
        p = build_ansatz(lam, mu, kappa0)
        assert radial_residual(p, _residual_grid(p)) <= 1e-10

    def test_detuned_nu_breaks_it(self):
        p = build_ansatz(0.5, 1e-4, -1)
        grid = _residual_grid(p)
        base = radial_residual(p, grid)
        c = p.couplings
        detuned = dataclasses.replace(
            p, couplings=dataclasses.replace(c, nu=c.nu * 1.01))
        assert radial_residual(detuned, grid) > 1e6 * base

    def test_negative_mu_solves_locally_but_diverges(self):
        # with mu < 0 the same algebra gives alpha2 < 0: the profile still
        # satisfies the equations pointwise (so finite-domain solvers see a
        # "preserved" quasi-bound level), but the growing Gaussian wins
        # beyond r = a/|alpha2| and the norm diverges; that is why
        # build_ansatz enforces mu > 0
        lam, kappa0, m, mu = 0.5, -1, 1.0, -1e-3
        b = math.sqrt(kappa0**2 - lam**2)
        a = m * lam / abs(kappa0)
        alpha2 = mu * lam / abs(kappa0)
        assert alpha2 < 0
        nu = nu_fine_tuned(mu, lam, kappa0)
        p = AnsatzParams(
            couplings=CouplingSet(mass=m, lam=lam, mu=mu, nu=nu),
            kappa0=kappa0, b=b, a=a, alpha2=alpha2,
            gamma=lam / (abs(kappa0) + b),
            energy=m * math.sqrt(1 - lam**2 / kappa0**2), norm=1.0,
        )
        grid = np.geomspace(1e-3, 80.0, 1501)
        assert radial_residual(p, grid) <= 1e-10
        crossover = 2.0 * a / abs(alpha2)
        f_tail, _ = evaluate_spinor(p, np.array([1.2 * crossover]))
        f_peak, _ = evaluate_spinor(p, np.array([b / a]))
        assert f_tail[0] > 1e10 * f_peak[0]

    def test_pure_coulomb_limit(self):
        # mu = nu = 0 with the matching Coulomb parameters is also exact
        lam, kappa0, m = 0.5, -1, 1.0
        b = math.sqrt(kappa0**2 - lam**2)
        p = AnsatzParams(
            couplings=CouplingSet(mass=m, lam=lam, mu=0.0, nu=0.0),
            kappa0=kappa0, b=b, a=m * lam / abs(kappa0), alpha2=0.0,
            gamma=lam / (abs(kappa0) + b),
            energy=m * math.sqrt(1 - lam**2 / kappa0**2), norm=1.0,
        )
        grid = np.geomspace(1e-4 / lam, 80.0, 2001)
        assert radial_residual(p, grid) <= 1e-10
