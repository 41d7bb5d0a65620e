"""Dirac angular quantum numbers.

The single integer kappa encodes both the orbital angular momentum l and
the total angular momentum j of a bispinor state:

    kappa = -(l + 1)  for j = l + 1/2
    kappa = +l        for j = l - 1/2      (l >= 1)

so l = |kappa + 1/2| - 1/2 and j = |kappa| - 1/2.  Half-integers (j and the
magnetic projection M) are stored doubled, as exact integers.

Convention for the spin-angular eigenvalue: on the upper two-spinor
(sigma.L + 1) chi_kappa = -kappa chi_kappa, hence <sigma.L> = -kappa - 1
there (zero for S states); the lower two-spinor carries chi_{-kappa} and
the opposite sign, <sigma.L> = kappa - 1.  The upper-component value is
the one that enters every matrix element computed in this package; it is
fixed by the requirement that the term-by-term assembly of the confining
energy shift reproduces the closed-form shift exactly (see
``fw_effective``).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "AngularState",
    "kappa_from_lj",
    "decompose_kappa",
    "sigma_dot_L_plus_one_eigenvalue",
    "enumerate_kappa",
]


@dataclass(frozen=True)
class AngularState:
    """Angular quantum numbers of one bispinor component.

    ``magnetic_twice`` (2M) is carried for completeness only; no matrix
    element in this package depends on it.
    """

    kappa: int
    magnetic_twice: int = 1

    def __post_init__(self):
        if self.kappa == 0:
            raise DomainError("kappa must be a nonzero integer")
        if abs(self.magnetic_twice) > self.j_twice:
            raise DomainError(
                f"|2M| = {abs(self.magnetic_twice)} exceeds 2j = {self.j_twice}"
            )
        if self.magnetic_twice % 2 == 0:
            raise DomainError("2M must be odd (M is half-integer)")

    @property
    def ell(self) -> int:
        return self.kappa if self.kappa > 0 else -self.kappa - 1

    @property
    def j_twice(self) -> int:
        return 2 * abs(self.kappa) - 1


def kappa_from_lj(ell: int, j_twice: int) -> int:
    """Combine (l, 2j) into kappa; raises if the pair is inconsistent."""
    if ell < 0 or j_twice < 1:
        raise DomainError(f"need ell >= 0 and j_twice >= 1, got ({ell}, {j_twice})")
    if j_twice == 2 * ell + 1:
        return -(ell + 1)
    if j_twice == 2 * ell - 1:
        return ell
    raise DomainError(f"(ell={ell}, 2j={j_twice}) is not a valid Dirac pair")


def decompose_kappa(kappa: int) -> tuple[int, int]:
    """Return (ell, 2j) for a nonzero kappa."""
    if kappa == 0:
        raise DomainError("kappa must be nonzero")
    ell = kappa if kappa > 0 else -kappa - 1
    return ell, 2 * abs(kappa) - 1


def sigma_dot_L_plus_one_eigenvalue(kappa: int, upper: bool = True) -> int:
    """Eigenvalue of (sigma.L + 1) on chi_kappa (upper) or chi_{-kappa} (lower)."""
    if kappa == 0:
        raise DomainError("kappa must be nonzero")
    return -kappa if upper else kappa


def enumerate_kappa(n: int) -> list[int]:
    """All kappa values available at principal quantum number n: -n..n-1 without 0."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return [k for k in range(-n, n) if k != 0]
