"""Figure rendering for evaluation reports.

Each renderer writes one PNG next to the delimited output the CLI
produces; all use the non-interactive Agg backend.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .classify import SimilarityMatrix
from .harness import ConfusionMatrix, SweepRow


def _heatmap(values, names, title, colorbar_label, destination, fmt):
    size = max(4.0, 0.5 * len(names) + 2.0)
    fig, ax = plt.subplots(figsize=(size, size))
    im = ax.imshow(values, cmap="viridis")
    ax.set_xticks(range(len(names)), names, rotation=90)
    ax.set_yticks(range(len(names)), names)
    if len(names) <= 24:
        lo, hi = float(np.min(values)), float(np.max(values))
        mid = (lo + hi) / 2
        for i in range(len(names)):
            for j in range(len(names)):
                ax.text(
                    j, i, format(values[i][j], fmt),
                    ha="center", va="center", fontsize=7,
                    color="white" if values[i][j] < mid else "black",
                )
    ax.set_title(title)
    fig.colorbar(im, ax=ax, shrink=0.8, label=colorbar_label)
    fig.tight_layout()
    fig.savefig(destination, dpi=150)
    plt.close(fig)


def render_confusion_heatmap(cm: ConfusionMatrix, destination: str | Path) -> None:
    _heatmap(
        cm.counts, cm.names,
        f"Confusion matrix (accuracy {cm.accuracy:.3f})",
        "sentences", destination, "d",
    )


def render_similarity_heatmap(sim: SimilarityMatrix, destination: str | Path) -> None:
    _heatmap(
        sim.values, sim.names,
        "Pairwise language-vector cosine",
        "cosine", destination, ".2f",
    )


def render_sweep_curve(rows: Sequence[SweepRow], destination: str | Path) -> None:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ns = [r.n for r in rows]
    accs = [100.0 * r.accuracy for r in rows]
    ax.plot(ns, accs, marker="o")
    for n, a in zip(ns, accs):
        ax.annotate(f"{a:.1f}", (n, a), textcoords="offset points", xytext=(0, 6),
                    ha="center", fontsize=8)
    ax.set_xlabel("n-gram size")
    ax.set_ylabel("sentences correct (%)")
    ax.set_xticks(ns)
    ax.set_ylim(min(accs) - 5, 101)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(destination, dpi=150)
    plt.close(fig)
