import math

import numpy as np
import pytest
from scipy.linalg import expm

from qubitdyn.continuum import (
    Generator,
    RotationAction,
    compose_sequence,
    evolve_two_level,
    exp_form,
    finite_difference_residual,
    generator_spectrum,
    mean_generator,
    phase_insensitive_distance,
)
from qubitdyn.pauli import Qubit, compose, is_unitary, ket, max_entry_distance

rng = np.random.default_rng(77)

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SI = np.eye(2, dtype=complex)


def rotation_oracle(xi: float) -> np.ndarray:
    return math.cos(xi) * SI - 1j * math.sin(xi) * SX


def random_qubit() -> Qubit:
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    return Qubit.from_vector(v / np.linalg.norm(v))


# ---------------------------------------------------------------------------
# rotation sequences
# ---------------------------------------------------------------------------

def test_compose_sequence_trivial():
    a, b = compose_sequence([0.0, 0.0, 0.0])
    assert a == 1.0 and b == 0.0


def test_compose_sequence_quarter_turns():
    # oracle: product of two pi/4 rotation matrices applied to (1, 0)
    m = rotation_oracle(math.pi / 4) @ rotation_oracle(math.pi / 4)
    a, b = compose_sequence([math.pi / 4, math.pi / 4])
    assert abs(a - m[0, 0]) < 1e-15 and abs(b - m[1, 0]) < 1e-15
    assert a == pytest.approx(0.0, abs=1e-15)
    assert b == pytest.approx(-1j, abs=1e-15)


def test_compose_sequence_third_turn():
    a, b = compose_sequence([math.pi / 3])
    assert a == pytest.approx(0.5, abs=1e-15)
    assert b == pytest.approx(-1j * math.sqrt(3) / 2, abs=1e-15)


def test_compose_sequence_matches_matrix_product():
    for _ in range(200):
        xis = rng.uniform(-3.0, 3.0, size=int(rng.integers(1, 10)))
        m = SI
        for xi in xis:
            m = rotation_oracle(xi) @ m
        a, b = compose_sequence(xis)
        assert abs(a - m[0, 0]) < 1e-12
        assert abs(b - m[1, 0]) < 1e-12
        assert abs(abs(a) ** 2 + abs(b) ** 2 - 1.0) < 1e-12


def test_exp_form_matches_matrix_exponential():
    assert max_entry_distance(exp_form(0.0), compose(exp_form(0.0), exp_form(0.0))) == 0.0
    np.testing.assert_allclose(exp_form(0.0).entries, SI, atol=0)
    np.testing.assert_allclose(exp_form(math.pi / 2).entries, -1j * SX, atol=1e-12)
    np.testing.assert_allclose(exp_form(math.pi).entries, -SI, atol=1e-12)
    for phi in rng.uniform(-8.0, 8.0, size=50):
        oracle = expm(-1j * phi * SX)
        np.testing.assert_allclose(exp_form(phi).entries, oracle, atol=1e-12)


def test_exp_form_composition_law():
    for _ in range(500):
        p1, p2 = rng.uniform(-10.0, 10.0, size=2)
        lhs = compose(exp_form(p1), exp_form(p2))
        assert max_entry_distance(lhs, exp_form(p1 + p2)) < 1e-12


def test_uniformization_linearity():
    xi_bar = 0.37
    for n, m in [(1, 2), (3, 5), (10, 7), (100, 23)]:
        lhs = compose(exp_form(n * xi_bar), exp_form(m * xi_bar))
        assert max_entry_distance(lhs, exp_form((n + m) * xi_bar)) < 1e-12


def test_rotation_unitarity():
    for xi in rng.uniform(-50.0, 50.0, size=1000):
        assert is_unitary(RotationAction(xi).operator())


def test_invertibility_constraint_parametrization():
    # alpha = cos(xi), beta = -i sin(xi) satisfies both |a|^2+|b|^2 = 1 and
    # a^2 - b^2 = 1, the two requirements for a normalized invertible action
    for xi in rng.uniform(-5.0, 5.0, size=100):
        alpha, beta = math.cos(xi), -1j * math.sin(xi)
        assert abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) < 1e-14
        assert abs(alpha**2 - beta**2 - 1.0) < 1e-14


# ---------------------------------------------------------------------------
# finite-difference residual
# ---------------------------------------------------------------------------

def test_residual_first_order_in_step():
    for n in (0, 2, 17):
        r_coarse = finite_difference_residual(n, 1e-2)
        r_fine = finite_difference_residual(n, 1e-3)
        assert r_coarse / r_fine == pytest.approx(10.0, rel=0.05)


def test_residual_vanishes_in_limit():
    assert finite_difference_residual(5, 1e-8) < 1e-8


def test_residual_taylor_bound():
    # leading term is xi_bar/2 * ||X^2 U|| with unit-modulus entries
    assert finite_difference_residual(0, 0.1) <= 0.05


def test_residual_uniform_in_n():
    values = [finite_difference_residual(n, 1e-3) for n in (0, 1, 10, 1000, 100000)]
    assert max(values) < 1e-3


def test_residual_rejects_bad_step():
    with pytest.raises(ValueError):
        finite_difference_residual(1, 0.0)


# ---------------------------------------------------------------------------
# generator
# ---------------------------------------------------------------------------

def test_spectrum_pure_coupling():
    pairs = generator_spectrum(Generator(mu=0.0, nu=1.0))
    assert [lam for lam, _ in pairs] == [1.0, -1.0]
    c = 1.0 / math.sqrt(2.0)
    np.testing.assert_allclose(pairs[0][1].vector, [c, c], atol=1e-15)
    np.testing.assert_allclose(np.abs(pairs[1][1].vector), [c, c], atol=1e-15)


def test_spectrum_degenerate_returns_basis():
    pairs = generator_spectrum(Generator(mu=2.0, nu=0.0))
    assert [lam for lam, _ in pairs] == [2.0, 2.0]
    assert pairs[0][1] == ket(0)
    assert pairs[1][1] == ket(1)


def test_spectrum_values():
    pairs = generator_spectrum(Generator(mu=1.0, nu=2.0))
    assert [lam for lam, _ in pairs] == [3.0, -1.0]


def test_spectrum_residual():
    for _ in range(100):
        g = Generator(mu=float(rng.normal()), nu=float(rng.normal()))
        matrix = g.operator().entries
        for lam, vec in generator_spectrum(g):
            assert np.linalg.norm(matrix @ vec.vector - lam * vec.vector) < 1e-12


def test_evolve_tau_zero():
    psi = random_qubit()
    out = evolve_two_level(psi, Generator(1.3, -0.4), 0.0)
    np.testing.assert_allclose(out.vector, psi.vector, atol=1e-15)


def test_evolve_quarter_period_flip():
    # oracle: expm(-i (pi/2) X) (0,1) = (-i, 0)
    out = evolve_two_level(ket(0), Generator(mu=0.0, nu=1.0), math.pi / 2)
    np.testing.assert_allclose(out.vector, [-1j, 0.0], atol=1e-14)


def test_evolve_pure_phase_when_uncoupled():
    g = Generator(mu=1.0, nu=0.0)
    for tau in (0.1, 2.0, 17.0):
        psi = random_qubit()
        out = evolve_two_level(psi, g, tau)
        np.testing.assert_allclose(out.vector, np.exp(-1j * tau) * psi.vector, atol=1e-12)


def test_evolve_matches_expm_oracle():
    for _ in range(100):
        g = Generator(mu=float(rng.normal()), nu=float(rng.normal()))
        tau = float(rng.uniform(0, 10))
        psi = random_qubit()
        oracle = expm(-1j * tau * g.operator().entries) @ psi.vector
        out = evolve_two_level(psi, g, tau)
        np.testing.assert_allclose(out.vector, oracle, atol=1e-12)
        assert abs(out.norm - 1.0) < 1e-12


def test_evolve_matches_factorized_product():
    # exp(-i tau mu) * exp_form(nu tau) acting on psi0 gives the same state
    for _ in range(50):
        g = Generator(mu=float(rng.normal()), nu=float(rng.normal()))
        tau = float(rng.uniform(0, 5))
        psi = random_qubit()
        factor = np.exp(-1j * tau * g.mu) * (exp_form(g.nu * tau).entries @ psi.vector)
        np.testing.assert_allclose(evolve_two_level(psi, g, tau).vector, factor, atol=1e-12)


def test_mean_generator_values():
    c = 1.0 / math.sqrt(2.0)
    assert mean_generator(Qubit(c, c), Generator(1.0, 0.5)) == pytest.approx(1.5, abs=1e-12)
    # a basis bit has equal eigen-components, so the coupling term cancels
    assert mean_generator(ket(0), Generator(0.7, 5.0)) == pytest.approx(0.7, abs=1e-12)


def test_mean_generator_matches_quadratic_form():
    for _ in range(100):
        g = Generator(mu=float(rng.normal()), nu=float(rng.normal()))
        psi = random_qubit()
        oracle = float(np.real(np.vdot(psi.vector, g.operator().entries @ psi.vector)))
        assert mean_generator(psi, g) == pytest.approx(oracle, abs=1e-12)


def test_mean_generator_conserved():
    for _ in range(20):
        g = Generator(mu=float(rng.normal()), nu=float(rng.normal()))
        psi = random_qubit()
        e0 = mean_generator(psi, g)
        for tau in np.linspace(0.0, 100.0, 11):
            drift = abs(mean_generator(evolve_two_level(psi, g, float(tau)), g) - e0)
            assert drift < 1e-11


def test_phase_insensitive_distance():
    psi = random_qubit()
    rotated = Qubit.from_vector(np.exp(0.7j) * psi.vector)
    assert phase_insensitive_distance(psi, rotated) < 1e-12
    assert phase_insensitive_distance(ket(0), ket(1)) == pytest.approx(math.sqrt(2.0))
