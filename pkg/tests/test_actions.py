import math

import numpy as np
import pytest

from qubitdyn.actions import (
    CbitAction,
    CircleAction,
    History,
    SingularInverseError,
    cbit_apply,
    cbit_compose,
    circle_compose_defect,
    circle_inverse,
    circle_inverse_norm,
    reverse_history,
    run_history,
)

rng = np.random.default_rng(2024)

SX = np.array([[0, 1], [1, 0]], dtype=int)
SI = np.eye(2, dtype=int)


def bit_matrix(alpha: int) -> np.ndarray:
    return alpha * SI + (1 - alpha) * SX


def bit_vector(x: int) -> np.ndarray:
    # package convention: bit 1 -> (1, 0), bit 0 -> (0, 1)
    return np.array([1, 0]) if x == 1 else np.array([0, 1])


def run_by_matrices(params, x0: int):
    """Independent oracle: sequential exact integer matrix application."""
    v = bit_vector(x0)
    trajectory = []
    for alpha in params:
        v = bit_matrix(alpha) @ v
        trajectory.append(1 if v[0] == 1 else 0)
    return trajectory


# ---------------------------------------------------------------------------
# Z2 regime
# ---------------------------------------------------------------------------

def test_label_convention():
    # U_1 is the identity action, U_0 the flip
    assert np.array_equal(CbitAction(1).operator().entries, SI)
    assert np.array_equal(CbitAction(0).operator().entries, SX)


def test_cbit_apply():
    assert cbit_apply(CbitAction(1), 0) == 0
    assert cbit_apply(CbitAction(1), 1) == 1
    assert cbit_apply(CbitAction(0), 0) == 1
    assert cbit_apply(CbitAction(0), 1) == 0


def test_cbit_apply_rejects_bad_label():
    with pytest.raises(ValueError):
        cbit_apply(CbitAction(1), 2)
    with pytest.raises(ValueError):
        CbitAction(3)


def test_cayley_table():
    # beta = a2*a1 + (1-a2)*(1-a1): X*X = I, X*I = X, I*I = I
    assert cbit_compose(CbitAction(1), CbitAction(1)).alpha == 1
    assert cbit_compose(CbitAction(0), CbitAction(0)).alpha == 1
    assert cbit_compose(CbitAction(0), CbitAction(1)).alpha == 0
    assert cbit_compose(CbitAction(1), CbitAction(0)).alpha == 0


def test_compose_matches_matrix_product():
    for a2 in (0, 1):
        for a1 in (0, 1):
            product = bit_matrix(a2) @ bit_matrix(a1)
            composed = cbit_compose(CbitAction(a2), CbitAction(a1))
            assert np.array_equal(product, composed.operator().entries)


def test_self_inverse_exact():
    for a in (0, 1):
        m = bit_matrix(a)
        assert np.array_equal(m @ m, SI)


def test_associativity_exact():
    for a3 in (0, 1):
        for a2 in (0, 1):
            for a1 in (0, 1):
                left = cbit_compose(cbit_compose(CbitAction(a3), CbitAction(a2)), CbitAction(a1))
                right = cbit_compose(CbitAction(a3), cbit_compose(CbitAction(a2), CbitAction(a1)))
                assert left == right


def test_run_history_against_oracle():
    run = run_history(History([0, 0]), 0)
    assert run.final == 0
    assert run.intermediates == (1, 0)
    for _ in range(200):
        n = int(rng.integers(0, 21))
        params = [int(v) for v in rng.integers(0, 2, size=n)]
        x0 = int(rng.integers(0, 2))
        run = run_history(History(params), x0)
        oracle = run_by_matrices(params, x0)
        assert list(run.intermediates) == oracle
        assert run.final == (oracle[-1] if oracle else x0)


def test_empty_history():
    run = run_history(History([]), 1)
    assert run.final == 1 and run.intermediates == ()


def test_single_flip():
    for x in (0, 1):
        assert run_history(History([0]), x).final == 1 - x


def test_reverse_history():
    assert reverse_history(History([0, 1, 0])).params == (0, 1, 0)
    assert reverse_history(History([0, 0, 1])).params == (1, 0, 0)
    h = History([1, 0, 0, 1])
    assert reverse_history(reverse_history(h)) == h


def test_reverse_round_trip():
    for _ in range(100):
        n = int(rng.integers(0, 21))
        h = History(int(v) for v in rng.integers(0, 2, size=n))
        x0 = int(rng.integers(0, 2))
        forward = run_history(h, x0).final
        assert run_history(reverse_history(h), forward).final == x0


def test_history_composition_law():
    for _ in range(300):
        m = int(rng.integers(1, 21))
        n = int(rng.integers(1, 21))
        h1 = History(int(v) for v in rng.integers(0, 2, size=m))
        h2 = History(int(v) for v in rng.integers(0, 2, size=n))
        x0 = int(rng.integers(0, 2))
        chained = run_history(h2, run_history(h1, x0).final).final
        assert chained == run_history(History(list(h1) + list(h2)), x0).final


# ---------------------------------------------------------------------------
# unit-circle regime
# ---------------------------------------------------------------------------

def random_circle_action():
    theta = rng.uniform(0.0, 2.0 * math.pi)
    return CircleAction(math.cos(theta), math.sin(theta))


def test_defect_equal_coefficients():
    c = 1.0 / math.sqrt(2.0)
    _, defect = circle_compose_defect(CircleAction(c, c), CircleAction(c, c))
    assert defect == pytest.approx(2.0, abs=1e-12)


def test_defect_identity_factor():
    ident = CircleAction(1.0, 0.0)
    for _ in range(20):
        act = random_circle_action()
        _, defect = circle_compose_defect(ident, act)
        assert defect == pytest.approx(1.0, abs=1e-12)


def test_defect_flip_squared():
    flip = CircleAction(0.0, 1.0)
    _, defect = circle_compose_defect(flip, flip)
    assert defect == pytest.approx(1.0, abs=1e-12)


def test_defect_matches_matrix_product_oracle():
    for _ in range(300):
        a1, a2 = random_circle_action(), random_circle_action()
        prod_matrix = a2.operator().entries @ a1.operator().entries
        alpha3, beta3 = prod_matrix[0, 0].real, prod_matrix[0, 1].real
        candidate, defect = circle_compose_defect(a2, a1)
        assert candidate.alpha == pytest.approx(alpha3, abs=1e-14)
        assert candidate.beta == pytest.approx(beta3, abs=1e-14)
        predicted = 1.0 + 4.0 * a2.alpha * a1.alpha * a2.beta * a1.beta
        assert defect == pytest.approx(predicted, abs=1e-12)


def test_defect_rejects_off_circle_input():
    with pytest.raises(ValueError):
        circle_compose_defect(CircleAction(1.0, 1.0), CircleAction(1.0, 0.0))


def test_inverse_identity():
    assert circle_inverse(CircleAction(1.0, 0.0)) == (1.0, 0.0)


def test_inverse_frozen_example():
    # oracle: inv([[s3/2, 1/2], [1/2, s3/2]]) has alpha~ = sqrt(3), beta~ = -1
    alpha_t, beta_t = circle_inverse(CircleAction(math.sqrt(3) / 2, 0.5))
    assert alpha_t == pytest.approx(1.7320508075688772, abs=1e-12)
    assert beta_t == pytest.approx(-1.0, abs=1e-12)


def test_inverse_matches_matrix_inverse_oracle():
    for _ in range(200):
        act = random_circle_action()
        if abs(act.alpha**2 - act.beta**2) < 1e-3:
            continue
        oracle = np.linalg.inv(act.operator().entries)
        alpha_t, beta_t = circle_inverse(act)
        built = alpha_t * np.eye(2) + beta_t * SX
        np.testing.assert_allclose(built, oracle, atol=1e-10)
        # composing with the original returns the identity
        np.testing.assert_allclose(built @ act.operator().entries, np.eye(2), atol=1e-10)


def test_singular_inverse_raises():
    c = 1.0 / math.sqrt(2.0)
    with pytest.raises(SingularInverseError):
        circle_inverse(CircleAction(c, c))
    with pytest.raises(SingularInverseError):
        circle_inverse_norm(CircleAction(c, -c))


def test_inverse_norm_values():
    assert circle_inverse_norm(CircleAction(1.0, 0.0)) == pytest.approx(1.0)
    # |3/4 - 1/4|^-1 = 2
    assert circle_inverse_norm(CircleAction(math.sqrt(3) / 2, 0.5)) == pytest.approx(2.0, abs=1e-12)
    # oracle: apply the inverse matrix to a basis bit and measure its norm
    act = CircleAction(0.8, 0.6)
    measured = np.linalg.norm(np.linalg.inv(act.operator().entries) @ np.array([0.0, 1.0]))
    assert circle_inverse_norm(act) == pytest.approx(3.5714285714285716, abs=1e-10)
    assert circle_inverse_norm(act) == pytest.approx(measured, abs=1e-10)


def test_inverse_parameters_off_circle():
    # alpha~^2 + beta~^2 = (alpha^2 - beta^2)^-2, never 1 for alpha*beta != 0
    for _ in range(200):
        act = random_circle_action()
        det = act.alpha**2 - act.beta**2
        if abs(det) < 1e-3:
            continue
        alpha_t, beta_t = circle_inverse(act)
        assert alpha_t**2 + beta_t**2 == pytest.approx(det**-2, rel=1e-10)


def test_forward_norm_parameter_independent():
    for _ in range(100):
        act = random_circle_action()
        for x0 in (np.array([1.0, 0.0]), np.array([0.0, 1.0])):
            assert np.linalg.norm(act.operator().entries @ x0) == pytest.approx(1.0, abs=1e-12)


def test_self_adjoint_but_not_unitary():
    for _ in range(100):
        act = random_circle_action()
        u = act.operator().entries
        assert np.array_equal(u, u.conj().T)
        if abs(act.alpha * act.beta) > 1e-3:
            assert np.max(np.abs(u.conj().T @ u - np.eye(2))) > 1e-6
