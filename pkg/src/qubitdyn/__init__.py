"""qubitdyn: two-level dynamics from discrete bit actions.

Layers: exact Z2 bit actions and their failure modes off the unit circle
(`actions`), the unitary rotation family and its continuum generator
(`continuum`), a two-channel spinor field with exact spectral and
split-step propagators on a 1-D grid (`pse`), and the 4x4 tensor-product
operator algebra with its plane-wave solutions (`dirac`).  `cli` exposes
everything as reproducible scenarios.
"""

from .pauli import (
    DEFAULT_ATOL,
    I,
    PAULI_BASIS,
    Qubit,
    TwoLevelOperator,
    X,
    Y,
    Z,
    action,
    apply,
    compose,
    is_self_adjoint,
    is_unitary,
    ket,
    max_entry_distance,
    pauli_decompose,
    pauli_reconstruct,
)
from .actions import (
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
from .continuum import (
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
from .pse import (
    Observables,
    PhysicalParams,
    SpatialGrid,
    SpinorField,
    dense_evolve,
    fourier_analyze,
    fourier_synthesize,
    gaussian_packet,
    harmonic_potential,
    l2_distance,
    load_field_csv,
    local_evolve,
    momentum_evolve,
    observables,
    plane_wave_packet,
    propagate_split_step,
    reduce_nu_zero,
)
from .dirac import (
    DiracOperator,
    DiracParams,
    DiracState,
    SingularBranchError,
    build_hamiltonian,
    gamma_matrices,
    plane_wave_solution,
    square_check,
    verify_alpha_beta_algebra,
    verify_clifford_algebra,
)

__version__ = "0.1.0"
