"""
Figure rendering for verification reports: PNG files written next to
the delimited output, never an interactive window.
"""

from __future__ import annotations

from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .cells import CellPartition
from .classify import VerificationReport


def render_cell_sizes(cp: CellPartition, path: Path) -> None:
    """Bar chart of how many cells there are of each size."""
    counts = Counter(len(c) for c in cp.cells)
    sizes = sorted(counts)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(sizes, [counts[s] for s in sizes], color="#4878a8", edgecolor="black")
    ax.set_xlabel("cell size")
    ax.set_ylabel("number of cells")
    ax.set_title(f"Left cells of rank {cp.n}: {len(cp.cells)} cells")
    ax.set_xticks(sizes)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_verification_summary(report: VerificationReport, path: Path) -> None:
    """Qualifying pairs against the basic-diagram count, with the verdict."""
    fig, ax = plt.subplots(figsize=(6, 4))
    labels = ["qualifying pairs", "basic diagrams"]
    values = [report.qualifying_pairs, report.basic_diagram_count]
    colors = ["#4878a8", "#e49444"]
    bars = ax.bar(labels, values, color=colors, edgecolor="black")
    for bar, value in zip(bars, values):
        ax.annotate(
            str(value),
            (bar.get_x() + bar.get_width() / 2, bar.get_height()),
            ha="center",
            va="bottom",
        )
    verdict = "agrees" if report.theorem_holds else "DISAGREES"
    ax.set_title(
        f"rank {report.n}: {len(report.records)} pairs, "
        f"{len(report.mismatches)} mismatches ({verdict})"
    )
    ax.set_ylabel("count")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
