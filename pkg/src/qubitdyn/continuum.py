"""Unitary rotation actions and their continuum limit.

Requiring the action alpha*I + beta*X to be invertible with unit forward
norm forces alpha = cos(xi), beta = -i*sin(xi), i.e. the unitary family
U(xi) = cos(xi)*I - i*sin(xi)*X = exp(-i*xi*X).  Products of such actions
depend only on the accumulated angle, and the composition law forces the
accumulated angle of an n-step sequence to be linear in n (uniform spacing
xi_bar per step).  Taking n -> infinity at fixed tau = n*xi_bar yields the
generator equation

    i d|psi>/dtau = G |psi>,    G = mu*I + nu*X,

whose solution, spectrum and conserved mean value are implemented here.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .pauli import Qubit, TwoLevelOperator, action

SQRT_HALF = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class RotationAction:
    """Unitary action U(xi) = cos(xi)*I - i*sin(xi)*X."""

    xi: float

    def operator(self) -> TwoLevelOperator:
        return rotation_operator(self.xi)


def rotation_operator(xi: float) -> TwoLevelOperator:
    return action(math.cos(xi), -1j * math.sin(xi))


@dataclass(frozen=True)
class Generator:
    """Hermitian generator G = mu*I + nu*X of continuous two-level evolution."""

    mu: float
    nu: float

    def operator(self) -> TwoLevelOperator:
        return action(self.mu, self.nu)


def compose_sequence(xis) -> tuple[complex, complex]:
    """Coefficients (A, B) of a rotation sequence applied to a basis bit.

    The product of U(xi_j) factors collapses to a single rotation by the
    angle sum, so A = cos(sum xi_j) and B = -i*sin(sum xi_j); |A|^2 + |B|^2
    is identically 1.
    """
    phi = math.fsum(xis)
    return complex(math.cos(phi)), -1j * math.sin(phi)


def exp_form(phi: float) -> TwoLevelOperator:
    """exp(-i*phi*X) = cos(phi)*I - i*sin(phi)*X."""
    return rotation_operator(phi)


def finite_difference_residual(n: int, xi_bar: float) -> float:
    """Defect of the discrete sequence against its continuum generator.

    Measures max-entry of [U((n+1)*xi_bar) - U(n*xi_bar)]/xi_bar + i*X*U(n*xi_bar),
    the forward-difference residual of i dU/dtau = X U.  It is O(xi_bar)
    uniformly in n (leading term xi_bar/2).
    """
    if xi_bar <= 0:
        raise ValueError("xi_bar must be positive")
    u_n = rotation_operator(n * xi_bar).entries
    u_n1 = rotation_operator((n + 1) * xi_bar).entries
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    residual = (u_n1 - u_n) / xi_bar + 1j * (x @ u_n)
    return float(np.max(np.abs(residual)))


def generator_spectrum(g: Generator) -> list[tuple[float, Qubit]]:
    """Eigenpairs of G ordered by branch sigma = +1 then -1.

    For nu != 0 the eigenvalues are mu +/- nu with the parity eigenstates
    (ket(0) +/- ket(1))/sqrt(2).  At nu = 0 any basis diagonalizes G; the
    computational basis is returned so the nu -> 0 reduction stays continuous.
    """
    if g.nu == 0.0:
        return [(g.mu, Qubit(0, 1)), (g.mu, Qubit(1, 0))]
    plus = Qubit(SQRT_HALF, SQRT_HALF)
    minus = Qubit(-SQRT_HALF, SQRT_HALF)
    return [(g.mu + g.nu, plus), (g.mu - g.nu, minus)]


def eigenbasis_components(psi: Qubit, g: Generator) -> tuple[complex, complex]:
    """Components (c_plus, c_minus) of psi in the eigenbasis of G."""
    (_, v_plus), (_, v_minus) = generator_spectrum(g)
    c_plus = complex(np.vdot(v_plus.vector, psi.vector))
    c_minus = complex(np.vdot(v_minus.vector, psi.vector))
    return c_plus, c_minus


def evolve_two_level(psi0: Qubit, g: Generator, tau: float) -> Qubit:
    """Solve i d|psi>/dtau = G|psi> exactly by eigenbasis dephasing.

    Returns sum_sigma exp(-i*G_sigma*tau) c_sigma |x_sigma>.  The global
    phase exp(-i*tau*mu) is kept: it becomes physical once mu varies with
    position in the spatial solver.
    """
    (lam_p, v_p), (lam_m, v_m) = generator_spectrum(g)
    c_p, c_m = eigenbasis_components(psi0, g)
    vec = (
        cmath.exp(-1j * lam_p * tau) * c_p * v_p.vector
        + cmath.exp(-1j * lam_m * tau) * c_m * v_m.vector
    )
    return Qubit.from_vector(vec)


def mean_generator(psi: Qubit, g: Generator) -> float:
    """<psi|G|psi> = mu + nu*(|c_plus|^2 - |c_minus|^2) for normalized psi.

    Constant along ``evolve_two_level`` trajectories; the nu term is the
    two-level excitation energy, present only for nonzero coupling.
    """
    c_p, c_m = eigenbasis_components(psi, g)
    return g.mu + g.nu * (abs(c_p) ** 2 - abs(c_m) ** 2)


def phase_insensitive_distance(q1: Qubit, q2: Qubit) -> float:
    """min over theta of || q1 - exp(i*theta) q2 ||."""
    overlap = abs(np.vdot(q1.vector, q2.vector))
    d2 = q1.norm**2 + q2.norm**2 - 2.0 * overlap
    return math.sqrt(max(d2, 0.0))
