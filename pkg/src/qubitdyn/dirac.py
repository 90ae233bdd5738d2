"""Relativistic 4x4 operator algebra built from tensor products of 2x2 blocks.

The Hamiltonian H = Z (x) (m c^2 I) + X (x) (c p.sigma) acts on two
two-level factors: factor 1 selects the nonrelativistic/relativistic block
pair and factor 2 carries the particle state.  The Kronecker layout places
factor 1 outermost, and the basis inside each factor follows the package
convention ket(1) = (1, 0), ket(0) = (0, 1); the four components are
ordered |1>|1>, |1>|0>, |0>|1>, |0>|0>.

Algebraic content verified here: the anticommutation relations of
alpha_k = X (x) sigma_k and beta = Z (x) I (beta^2 = I, which the squared
Hamiltonian H^2 = E_p^2 I requires), H^2 = (m^2 c^4 + c^2 p^2) I, the
Clifford relations {gamma^mu, gamma^nu} = 2 eta^{mu nu} I with
eta = diag(+,-,-,-), and the plane-wave eigenstates of both energy
branches.

Note on gamma^2: the real form -Y (x) Y squares to +I and cannot satisfy
the Clifford relation for a spatial index; the anti-Hermitian form
i (Y (x) Y), consistent with the i Y (x) sigma pattern of the other spatial
gammas, is used and all ten anticommutator pairs are checked against it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .pauli import I, X, Y, Z, Qubit, TwoLevelOperator

# relative guard on |m c^2 + lambda E_p|: below it the negative branch
# construction degenerates (rest frame, lambda = -1)
BRANCH_GUARD = 1e-10

MINKOWSKI_SIGNATURE = (1.0, -1.0, -1.0, -1.0)


class SingularBranchError(ValueError):
    """Raised when m c^2 + lambda E_p is too small to build the branch state."""


def _frozen(values) -> np.ndarray:
    out = np.array(values, dtype=complex)
    out.flags.writeable = False
    return out


@dataclass(frozen=True, eq=False)
class DiracOperator:
    """4x4 complex operator, optionally tagged with its tensor factors."""

    entries: np.ndarray = field()
    factors: tuple[TwoLevelOperator, TwoLevelOperator] | None = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiracOperator):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __post_init__(self):
        entries = _frozen(self.entries)
        if entries.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {entries.shape}")
        if self.factors is not None:
            outer, inner = self.factors
            if not np.array_equal(np.kron(outer.entries, inner.entries), entries):
                raise ValueError("entries do not equal the Kronecker product of the factors")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_factors(cls, outer: TwoLevelOperator, inner: TwoLevelOperator) -> "DiracOperator":
        return cls(np.kron(outer.entries, inner.entries), factors=(outer, inner))


@dataclass(frozen=True)
class DiracParams:
    """Mass, light speed and 3-momentum (consistent units)."""

    m: float
    c: float
    p: tuple[float, float, float]

    def __post_init__(self):
        if self.m < 0 or self.c <= 0:
            raise ValueError("require m >= 0 and c > 0")
        object.__setattr__(self, "p", tuple(float(x) for x in self.p))
        if len(self.p) != 3:
            raise ValueError("p must have three components")

    @property
    def energy(self) -> float:
        p2 = sum(x * x for x in self.p)
        return math.sqrt(self.m**2 * self.c**4 + self.c**2 * p2)


@dataclass(frozen=True, eq=False)
class DiracState:
    """Normalized 4-component state with its energy-branch label."""

    components: np.ndarray = field()
    lam: int = +1

    def __post_init__(self):
        comp = _frozen(self.components)
        if comp.shape != (4,):
            raise ValueError("components must be a 4-vector")
        if self.lam not in (+1, -1):
            raise ValueError("lam must be +1 or -1")
        object.__setattr__(self, "components", comp)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.components))


def momentum_coupling(params: DiracParams) -> np.ndarray:
    """The 2x2 block c * (p_x sigma_x + p_y sigma_y + p_z sigma_z)."""
    px, py, pz = params.p
    return params.c * (px * X.entries + py * Y.entries + pz * Z.entries)


def build_hamiltonian(params: DiracParams) -> DiracOperator:
    """H = Z (x) (m c^2 I) + X (x) (c p.sigma); Hermitian and traceless."""
    mass_term = np.kron(Z.entries, params.m * params.c**2 * I.entries)
    kinetic_term = np.kron(X.entries, momentum_coupling(params))
    return DiracOperator(mass_term + kinetic_term)


def alpha_matrices() -> list[DiracOperator]:
    return [DiracOperator.from_factors(X, sigma) for sigma in (X, Y, Z)]


def beta_matrix() -> DiracOperator:
    return DiracOperator.from_factors(Z, I)


def _anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a


def verify_alpha_beta_algebra() -> dict:
    """Check every anticommutation relation of the alpha_k and beta blocks.

    Relations: {alpha_k, alpha_l} = 2 delta_kl I, {alpha_k, beta} = 0 and
    beta^2 = I (the last is forced by H^2 = E_p^2 I).  Returns a report dict
    with one entry per relation and the overall maximum deviation.
    """
    alphas = [a.entries for a in alpha_matrices()]
    beta = beta_matrix().entries
    eye4 = np.eye(4)
    relations = []
    for k in range(3):
        for l in range(k, 3):
            expected = 2.0 * eye4 if k == l else np.zeros((4, 4))
            dev = float(np.max(np.abs(_anticommutator(alphas[k], alphas[l]) - expected)))
            relations.append(
                {
                    "name": f"{{alpha_{k + 1}, alpha_{l + 1}}}",
                    "expected": "2*I" if k == l else "0",
                    "max_deviation": dev,
                }
            )
    for k in range(3):
        dev = float(np.max(np.abs(_anticommutator(alphas[k], beta))))
        relations.append(
            {"name": f"{{alpha_{k + 1}, beta}}", "expected": "0", "max_deviation": dev}
        )
    relations.append(
        {
            "name": "beta^2",
            "expected": "I",
            "max_deviation": float(np.max(np.abs(beta @ beta - eye4))),
        }
    )
    max_dev = max(r["max_deviation"] for r in relations)
    for r in relations:
        r["passed"] = r["max_deviation"] == 0.0
    return {"relations": relations, "max_deviation": max_dev, "passed": max_dev == 0.0}


def square_check(params: DiracParams) -> float:
    """Max-entry deviation of H^2 from E_p^2 * I."""
    h = build_hamiltonian(params).entries
    return float(np.max(np.abs(h @ h - params.energy**2 * np.eye(4))))


def gamma_matrices() -> list[DiracOperator]:
    """The four gamma matrices in tensor-factored form.

    gamma^0 = Z (x) I, gamma^1 = i Y (x) X, gamma^2 = i Y (x) Y,
    gamma^3 = i Y (x) Z; together they satisfy the Clifford relations
    {gamma^mu, gamma^nu} = 2 eta^{mu nu} I with eta = diag(+,-,-,-).
    """
    i_y = TwoLevelOperator(1j * Y.entries)
    return [
        DiracOperator.from_factors(Z, I),
        DiracOperator.from_factors(i_y, X),
        DiracOperator.from_factors(i_y, Y),
        DiracOperator.from_factors(i_y, Z),
    ]


def verify_clifford_algebra() -> dict:
    """Check all ten anticommutator pairs {gamma^mu, gamma^nu} = 2 eta^{mu nu} I."""
    gammas = [g.entries for g in gamma_matrices()]
    eye4 = np.eye(4)
    relations = []
    for mu in range(4):
        for nu in range(mu, 4):
            expected = 2.0 * MINKOWSKI_SIGNATURE[mu] * eye4 if mu == nu else np.zeros((4, 4))
            dev = float(np.max(np.abs(_anticommutator(gammas[mu], gammas[nu]) - expected)))
            relations.append(
                {
                    "name": f"{{gamma^{mu}, gamma^{nu}}}",
                    "expected": f"2*eta^{{{mu}{nu}}}*I",
                    "max_deviation": dev,
                    "passed": dev == 0.0,
                }
            )
    max_dev = max(r["max_deviation"] for r in relations)
    return {
        "relations": relations,
        "max_deviation": max_dev,
        "passed": max_dev == 0.0,
        "notes": [
            "gamma^2 uses the anti-Hermitian form i*(Y x Y); the real form "
            "-(Y x Y) squares to +I and fails the spatial Clifford relation.",
            "beta^2 = I is required for H^2 = E_p^2 * I.",
        ],
    }


def plane_wave_solution(
    lam: int, params: DiracParams, phi: Qubit, t: float = 0.0, h0: float = 1.0
) -> DiracState:
    """Branch-lambda eigenstate of H built from a particle-factor spinor phi.

    The state is N_lam * exp(-i*lam*t*E_p/h0) [ |1> phi + |0> K phi ] with
    K = c p.sigma / (m c^2 + lam E_p) and N_lam fixing unit norm; h0 is the
    action constant dividing the phase exponent (default 1).  Raises
    SingularBranchError when the branch denominator falls under
    BRANCH_GUARD * E_p (rest frame, lam = -1).
    """
    if lam not in (+1, -1):
        raise ValueError("lam must be +1 or -1")
    if not phi.is_normalized(atol=1e-10):
        raise ValueError("phi must be normalized")
    if h0 <= 0:
        raise ValueError("h0 must be positive")
    e_p = params.energy
    denom = params.m * params.c**2 + lam * e_p
    if abs(denom) <= BRANCH_GUARD * e_p:
        raise SingularBranchError(
            f"branch lam={lam} degenerates at p={params.p}: m*c^2 + lam*E_p = {denom}"
        )
    upper = phi.vector
    lower = (momentum_coupling(params) / denom) @ phi.vector
    norm = math.sqrt(float(np.linalg.norm(upper) ** 2 + np.linalg.norm(lower) ** 2))
    phase = cmath.exp(-1j * lam * t * e_p / h0)
    components = phase / norm * np.concatenate([upper, lower])
    return DiracState(components, lam=lam)


def eigen_residual(state: DiracState, params: DiracParams) -> float:
    """|| H psi - lam E_p psi || for a candidate branch eigenstate."""
    h = build_hamiltonian(params).entries
    return float(np.linalg.norm(h @ state.components - state.lam * params.energy * state.components))


def upper_block_projector() -> DiracOperator:
    """(|1><1|) (x) I: selects the first-factor |1> block of a state."""
    selector = TwoLevelOperator([[1, 0], [0, 0]])
    return DiracOperator.from_factors(selector, I)


def verification_report(params: DiracParams, n_draws: int = 100, seed: int = 0) -> dict:
    """Full algebra report: named relations, squared-Hamiltonian deviations over
    random momentum draws, branch-state residuals and the spectrum structure."""
    rng = np.random.default_rng(seed)
    alpha_beta = verify_alpha_beta_algebra()
    clifford = verify_clifford_algebra()

    sq_dev = square_check(params)
    sq_rel = sq_dev / params.energy**2
    random_rel = 0.0
    for _ in range(n_draws):
        draw = DiracParams(
            m=float(rng.uniform(0.1, 3.0)),
            c=float(rng.uniform(0.5, 2.0)),
            p=tuple(rng.uniform(-3.0, 3.0, size=3)),
        )
        random_rel = max(random_rel, square_check(draw) / draw.energy**2)

    h = build_hamiltonian(params).entries
    eigvals = np.sort(np.linalg.eigvalsh(h))
    expected = np.sort([-params.energy, -params.energy, params.energy, params.energy])
    spectrum_dev = float(np.max(np.abs(eigvals - expected)))

    residuals = {}
    for lam in (+1, -1):
        try:
            state = plane_wave_solution(lam, params, Qubit(1, 0))
            residuals[f"lambda_{lam:+d}"] = eigen_residual(state, params)
        except SingularBranchError:
            residuals[f"lambda_{lam:+d}"] = None

    return {
        "alpha_beta": alpha_beta,
        "clifford": clifford,
        "square_deviation": sq_dev,
        "square_relative_deviation": sq_rel,
        "square_relative_deviation_random_max": random_rel,
        "n_random_draws": n_draws,
        "spectrum_deviation": spectrum_dev,
        "eigen_residuals": residuals,
    }
