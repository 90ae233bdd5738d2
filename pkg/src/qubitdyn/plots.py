"""Figure rendering for scenario reports.

Each helper draws one figure to a file next to the delimited output; the
CSV files remain the data of record, the figures are the human view.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

_DPI = 150


def _save(fig, path):
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def timeline(path, random_epochs, uniform_epochs, xi_bar: float) -> None:
    fig, ax = plt.subplots(figsize=(7.0, 2.6), constrained_layout=True)
    ax.eventplot(
        [list(random_epochs), list(uniform_epochs)],
        lineoffsets=[1.0, 0.0],
        linelengths=0.8,
        colors=["tab:red", "tab:blue"],
    )
    ax.set_yticks([1.0, 0.0])
    ax.set_yticklabels(["arbitrary spacing", f"uniform (step {xi_bar:g})"])
    ax.set_xlabel("accumulated action angle")
    ax.set_title("Action epochs before and after uniformization")
    _save(fig, path)


def residual_scaling(path, xi_bars, residuals, order: float) -> None:
    xi_bars = np.asarray(xi_bars)
    fig, ax = plt.subplots(figsize=(5.0, 3.6), constrained_layout=True)
    ax.loglog(xi_bars, residuals, "o-", label="measured residual")
    ax.loglog(xi_bars, 0.5 * xi_bars, "--", color="gray", label="first-order reference")
    ax.set_xlabel(r"step angle $\bar\xi$")
    ax.set_ylabel("finite-difference residual")
    ax.set_title(f"Generator-equation residual (measured order {order:.3f})")
    ax.legend()
    _save(fig, path)


def circle_defect(path, cross_terms, defects) -> None:
    fig, ax = plt.subplots(figsize=(5.0, 3.6), constrained_layout=True)
    ax.scatter(cross_terms, defects, s=8, alpha=0.5, label="matrix product")
    xs = np.linspace(min(cross_terms), max(cross_terms), 50)
    ax.plot(xs, 1.0 + xs, color="black", lw=1, label="1 + cross term")
    ax.set_xlabel(r"$4\,\alpha_2\alpha_1\beta_2\beta_1$")
    ax.set_ylabel(r"$\alpha_3^2 + \beta_3^2$")
    ax.set_title("Closure defect of unit-circle actions")
    ax.legend()
    _save(fig, path)


def rabi(path, taus, p_one, p_zero, mean_g) -> None:
    fig, (ax1, ax2) = plt.subplots(
        2, 1, figsize=(6.0, 4.6), sharex=True, constrained_layout=True
    )
    ax1.plot(taus, p_one, label="P(flip)")
    ax1.plot(taus, p_zero, label="P(stay)", ls="--")
    ax1.set_ylabel("probability")
    ax1.legend(loc="upper right")
    ax2.plot(taus, mean_g, color="tab:green")
    ax2.set_xlabel(r"$\tau$")
    ax2.set_ylabel(r"$\langle G\rangle$")
    ax1.set_title("Two-level evolution under G")
    _save(fig, path)


def probability_trace(path, ts, p_x0, reference) -> None:
    fig, ax = plt.subplots(figsize=(6.0, 3.6), constrained_layout=True)
    ax.plot(ts, p_x0, "o", ms=3, label="measured")
    ax.plot(ts, reference, "-", lw=1, color="black", label=r"$\cos^2(\epsilon_0 t/h_0)$")
    ax.set_xlabel("t")
    ax.set_ylabel("channel-0 probability")
    ax.set_title("Channel probability oscillation")
    ax.legend()
    _save(fig, path)


def densities(path, q, labeled_densities, title: str) -> None:
    fig, ax = plt.subplots(figsize=(6.0, 3.6), constrained_layout=True)
    for label, dens in labeled_densities:
        ax.plot(q, dens, label=label)
    ax.set_xlabel("q")
    ax.set_ylabel("density")
    ax.set_title(title)
    ax.legend()
    _save(fig, path)


def error_profile(path, q, diff_density) -> None:
    fig, ax = plt.subplots(figsize=(6.0, 3.6), constrained_layout=True)
    ax.semilogy(q, np.maximum(diff_density, 1e-20))
    ax.set_xlabel("q")
    ax.set_ylabel("|split-step - dense| density")
    ax.set_title("Split-step error against dense propagation")
    _save(fig, path)


def dirac_spectrum(path, p_mags, e_plus, e_minus) -> None:
    fig, ax = plt.subplots(figsize=(5.0, 3.8), constrained_layout=True)
    ax.plot(p_mags, e_plus, label=r"$+E_p$ (doubly degenerate)")
    ax.plot(p_mags, e_minus, label=r"$-E_p$ (doubly degenerate)")
    ax.set_xlabel("|p|")
    ax.set_ylabel("eigenvalue")
    ax.set_title("Spectrum of the 4x4 Hamiltonian")
    ax.legend()
    _save(fig, path)
