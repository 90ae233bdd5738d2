"""Complex 2x2 operator and qubit arithmetic over the Pauli basis.

Basis convention used throughout the package: the bit value 1 maps to the
column (1, 0) and the bit value 0 maps to (0, 1).  A ``Qubit`` stores the
amplitude pair (a, b) of that column, so ``ket(1) == Qubit(1, 0)`` and
``ket(0) == Qubit(0, 1)``.  With this ordering the operator matrices I, X,
Y, Z take their standard forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

# Absolute tolerance for structural predicates (unitarity, self-adjointness,
# normalization).  Sized for max-entry drift across ~1e3 accumulated products.
DEFAULT_ATOL = 1e-12


def _frozen_matrix(m) -> np.ndarray:
    out = np.array(m, dtype=complex)
    if out.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {out.shape}")
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class Qubit:
    """Two-component complex amplitude vector (a, b) over the bit basis."""

    a: complex
    b: complex

    @classmethod
    def from_vector(cls, v) -> "Qubit":
        v = np.asarray(v, dtype=complex).reshape(2)
        return cls(complex(v[0]), complex(v[1]))

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.a, self.b], dtype=complex)

    @property
    def norm(self) -> float:
        return math.sqrt(abs(self.a) ** 2 + abs(self.b) ** 2)

    def is_normalized(self, atol: float = DEFAULT_ATOL) -> bool:
        return abs(self.norm**2 - 1.0) <= atol

    def is_cbit(self) -> bool:
        """Exact test for the two classical basis states."""
        return (self.a, self.b) in ((1 + 0j, 0j), (0j, 1 + 0j))

    def normalized(self) -> "Qubit":
        n = self.norm
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return Qubit(self.a / n, self.b / n)


def ket(x: int) -> Qubit:
    """Basis state for bit value ``x``: ket(1) = (1, 0), ket(0) = (0, 1)."""
    if x not in (0, 1):
        raise ValueError(f"bit value must be 0 or 1, got {x!r}")
    return Qubit(1, 0) if x == 1 else Qubit(0, 1)


@dataclass(frozen=True, eq=False)
class TwoLevelOperator:
    """Immutable 2x2 complex operator."""

    entries: np.ndarray = field()

    def __post_init__(self):
        object.__setattr__(self, "entries", _frozen_matrix(self.entries))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwoLevelOperator):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def dagger(self) -> "TwoLevelOperator":
        return TwoLevelOperator(self.entries.conj().T)

    def __matmul__(self, other: "TwoLevelOperator") -> "TwoLevelOperator":
        return TwoLevelOperator(self.entries @ other.entries)


I = TwoLevelOperator([[1, 0], [0, 1]])
X = TwoLevelOperator([[0, 1], [1, 0]])
Y = TwoLevelOperator([[0, -1j], [1j, 0]])
Z = TwoLevelOperator([[1, 0], [0, -1]])

PAULI_BASIS = (I, X, Y, Z)


def action(alpha: complex, beta: complex) -> TwoLevelOperator:
    """The primitive linear action alpha*I + beta*X."""
    return TwoLevelOperator([[alpha, beta], [beta, alpha]])


def apply(op: TwoLevelOperator, q: Qubit) -> Qubit:
    """Matrix-vector product op @ q."""
    return Qubit.from_vector(op.entries @ q.vector)


def compose(op2: TwoLevelOperator, op1: TwoLevelOperator) -> TwoLevelOperator:
    """Product op2 @ op1 (op1 acts first)."""
    return TwoLevelOperator(op2.entries @ op1.entries)


def pauli_decompose(op: TwoLevelOperator) -> tuple[complex, complex, complex, complex]:
    """Coefficients (c_I, c_X, c_Y, c_Z) with op = sum_P c_P * P.

    Uses c_P = trace(P @ op) / 2; the decomposition is unique and
    ``pauli_reconstruct`` inverts it to machine precision.
    """
    m = op.entries
    return tuple(complex(np.trace(p.entries @ m)) / 2 for p in PAULI_BASIS)


def pauli_reconstruct(c_i: complex, c_x: complex, c_y: complex, c_z: complex) -> TwoLevelOperator:
    m = c_i * I.entries + c_x * X.entries + c_y * Y.entries + c_z * Z.entries
    return TwoLevelOperator(m)


def is_unitary(op: TwoLevelOperator, atol: float = DEFAULT_ATOL) -> bool:
    dev = op.entries.conj().T @ op.entries - np.eye(2)
    return float(np.max(np.abs(dev))) <= atol


def is_self_adjoint(op: TwoLevelOperator, atol: float = DEFAULT_ATOL) -> bool:
    dev = op.entries - op.entries.conj().T
    return float(np.max(np.abs(dev))) <= atol


def max_entry_distance(op1: TwoLevelOperator, op2: TwoLevelOperator) -> float:
    return float(np.max(np.abs(op1.entries - op2.entries)))
