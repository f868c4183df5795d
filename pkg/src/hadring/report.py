"""Figure rendering for autocorrelation vectors and search reports.

Filenames are deterministic functions of the plotted object so repeated runs
overwrite rather than accumulate.  The Agg backend is forced; nothing here
ever opens a window.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .correlation import AutocorrelationVector
from .hadsearch import SearchReport
from .seqcore import BitSequence, format_sequence


def save_autocorrelation_figure(x: BitSequence, vec: AutocorrelationVector, out_dir: str) -> str:
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"autocorr-n{x.n}-0x{x.bits:x}.png")
    fig, ax = plt.subplots(figsize=(6, 3))
    ax.stem(range(x.n), vec.values)
    ax.axhline(0, color="0.6", linewidth=0.8)
    ax.set_xlabel("shift")
    ax.set_ylabel("correlation")
    ax.set_title(format_sequence(x))
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def save_search_figures(report: SearchReport, out_dir: str) -> list:
    """Render one overview figure plus an autocorrelation figure per found orbit."""
    os.makedirs(out_dir, exist_ok=True)
    m = report.config.m
    idx, count = report.config.chunk
    paths = []

    overview = os.path.join(out_dir, f"search-m{m}-chunk{idx}of{count}.png")
    fig, ax = plt.subplots(figsize=(6, 3.5))
    if report.found:
        weights = sorted({o.weight for o in report.found})
        counts = [sum(1 for o in report.found if o.weight == w) for w in weights]
        ax.bar([str(w) for w in weights], counts, color="tab:blue")
        ax.set_xlabel("weight")
        ax.set_ylabel("orbits found")
    else:
        ax.text(0.5, 0.5, "no sequences found", ha="center", va="center", fontsize=14)
        ax.set_xticks([])
        ax.set_yticks([])
    ax.set_title(
        f"m={m} chunk {idx}/{count}: {report.sequences_found} sequences, "
        f"{len(report.found)} orbits"
    )
    fig.tight_layout()
    fig.savefig(overview, dpi=120)
    plt.close(fig)
    paths.append(overview)

    for orbit in report.found:
        vec = AutocorrelationVector(orbit.sequence.n, tuple(orbit.autocorrelation))
        paths.append(save_autocorrelation_figure(orbit.sequence, vec, out_dir))
    return paths
