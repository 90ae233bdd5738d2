"""Bit actions alpha*I + beta*X in two coefficient regimes.

The Z2 regime {U_0, U_1} is an exact group acting on classical bit labels;
histories of such actions are reversible.  The real unit-circle regime
(alpha^2 + beta^2 = 1, alpha*beta != 0) preserves the forward norm but fails
to close under composition, is not unitary, and its inverses cannot be
normalized.  Those failure modes are exposed here as quantified diagnostics
rather than hidden.

Label convention: U_alpha = alpha*I + (1-alpha)*X, so U_1 is the identity
and U_0 is the bit flip.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from . import pauli
from .pauli import TwoLevelOperator, action

# Composing with the inverse multiplies conditioning by 1/(alpha^2 - beta^2);
# below this the 2x2 inverse is numerically meaningless.
SINGULAR_TOL = 1e-10


class SingularInverseError(ValueError):
    """Raised on the alpha = +/-beta diagonal where alpha*I + beta*X is singular."""


def _check_bit(x: int) -> int:
    if x not in (0, 1):
        raise ValueError(f"bit label must be 0 or 1, got {x!r}")
    return x


@dataclass(frozen=True)
class CbitAction:
    """Z2 action U_alpha = alpha*I + (1-alpha)*X on classical bits."""

    alpha: int

    def __post_init__(self):
        _check_bit(self.alpha)

    @property
    def alpha_bar(self) -> int:
        return 1 - self.alpha

    def operator(self) -> TwoLevelOperator:
        return action(self.alpha, self.alpha_bar)


@dataclass(frozen=True)
class History:
    """Ordered action parameters; params[0] acts first."""

    params: tuple

    def __init__(self, params: Iterable):
        object.__setattr__(self, "params", tuple(params))

    def __len__(self) -> int:
        return len(self.params)

    def __iter__(self):
        return iter(self.params)


class HistoryRun(NamedTuple):
    final: int
    intermediates: tuple


def cbit_apply(a: CbitAction, x: int) -> int:
    """Map a bit label: x -> alpha*x + (1-alpha)*(1-x), always a valid bit."""
    _check_bit(x)
    return a.alpha * x + a.alpha_bar * (1 - x)


def cbit_compose(a2: CbitAction, a1: CbitAction) -> CbitAction:
    """Group product: parameter beta = a2*a1 + (1-a2)*(1-a1), exact integers."""
    beta = a2.alpha * a1.alpha + a2.alpha_bar * a1.alpha_bar
    return CbitAction(beta)


def run_history(h: History, x0: int) -> HistoryRun:
    """Apply a Z2 history sequentially, recording every intermediate bit."""
    x = _check_bit(x0)
    trajectory = []
    for alpha in h:
        x = cbit_apply(CbitAction(alpha), x)
        trajectory.append(x)
    return HistoryRun(final=x, intermediates=tuple(trajectory))


def reverse_history(h: History) -> History:
    """Order-reversed parameter list; undoes ``run_history`` for Z2 actions."""
    return History(reversed(h.params))


@dataclass(frozen=True)
class CircleAction:
    """Real-coefficient action alpha*I + beta*X; membership in the unit-circle
    family additionally requires alpha^2 + beta^2 = 1."""

    alpha: float
    beta: float

    def on_circle(self, atol: float = pauli.DEFAULT_ATOL) -> bool:
        return abs(self.alpha**2 + self.beta**2 - 1.0) <= atol

    def operator(self) -> TwoLevelOperator:
        return action(self.alpha, self.beta)


def circle_compose_defect(a2: CircleAction, a1: CircleAction) -> tuple[CircleAction, float]:
    """Compose two unit-circle actions and measure how far the product falls
    off the circle.

    Returns the product parameters (alpha3, beta3) read off the 2x2 matrix
    product, together with defect = alpha3^2 + beta3^2.  For inputs on the
    circle the defect equals 1 + 4*alpha2*alpha1*beta2*beta1, so the family
    only closes when one of the four coefficients vanishes.
    """
    for a in (a1, a2):
        if not a.on_circle():
            raise ValueError(f"({a.alpha}, {a.beta}) is not on the unit circle")
    alpha3 = a2.alpha * a1.alpha + a2.beta * a1.beta
    beta3 = a2.alpha * a1.beta + a2.beta * a1.alpha
    return CircleAction(alpha3, beta3), alpha3**2 + beta3**2


def circle_inverse(a: CircleAction) -> tuple[float, float]:
    """Parameters (alpha~, beta~) of the inverse action.

    (alpha*I + beta*X)^-1 = [alpha*I - beta*X] / (alpha^2 - beta^2), hence
    alpha~ = alpha/(alpha^2 - beta^2) and beta~ = -beta/(alpha^2 - beta^2).
    The inverse parameters never lie on the unit circle unless beta = 0.
    """
    det = a.alpha**2 - a.beta**2
    if abs(det) <= SINGULAR_TOL:
        raise SingularInverseError(
            f"action with alpha={a.alpha}, beta={a.beta} is singular (alpha^2 - beta^2 = {det})"
        )
    return a.alpha / det, -a.beta / det


def circle_inverse_norm(a: CircleAction) -> float:
    """Norm of the inverse applied to either basis bit: 1/|alpha^2 - beta^2|."""
    det = a.alpha**2 - a.beta**2
    if abs(det) <= SINGULAR_TOL:
        raise SingularInverseError(
            f"action with alpha={a.alpha}, beta={a.beta} is singular (alpha^2 - beta^2 = {det})"
        )
    return 1.0 / abs(det)
