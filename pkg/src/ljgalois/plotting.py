"""Figure rendering for the CLI report paths.

All functions write PNG (or whatever the file suffix selects) to disk;
nothing is shown interactively.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from ljgalois.statmech import VirialTable


def plot_virial(table: VirialTable, path: str, log_x: bool = False) -> None:
    """B2(T) for both potentials on one axis, first black, second grey."""
    t = [row[0] for row in table.rows]
    b1 = [row[1] for row in table.rows]
    b2 = [row[3] for row in table.rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(t, b1, color="black", label=table.label_1)
    ax.plot(t, b2, color="grey", label=table.label_2)
    ax.axhline(0.0, color="black", linewidth=0.5, linestyle=":")
    if log_x:
        ax.set_xscale("log")
    ax.set_xlabel(r"$kT/\epsilon$")
    ax.set_ylabel(r"$B_2(T)\ [\sigma^3]$")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_samples(
    samples: list[tuple[float, float]],
    path: str,
    xlabel: str,
    ylabel: str,
    label: str | None = None,
) -> None:
    """Single-curve plot of (x, y) samples."""
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot([s[0] for s in samples], [s[1] for s in samples],
            color="black", label=label)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if label:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
