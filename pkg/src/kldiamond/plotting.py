"""Figures for verification sweeps (written to files, never shown)."""

from __future__ import annotations

from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .analysis import IntervalReport  # noqa: E402


def plot_d_vs_g(reports: list[IntervalReport], path: Path, title: str = "") -> Path:
    """Bubble plot of (d, g) counts; every bubble should sit on the diagonal."""
    counts = Counter((r.d, r.g) for r in reports if r.g is not None and r.ldiff > 0)
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    if counts:
        xs, ys, ns = zip(*((d, g, n) for (d, g), n in sorted(counts.items())))
        ax.scatter(xs, ys, s=[20 + 6 * n ** 0.75 for n in ns], alpha=0.6, edgecolors="k")
        for d, g, n in zip(xs, ys, ns):
            ax.annotate(str(n), (d, g), textcoords="offset points", xytext=(6, -10), fontsize=8)
        top = max(max(xs), max(ys)) + 1
        ax.plot([0, top], [0, top], "k--", lw=0.8)
        ax.set_xlim(0, top)
        ax.set_ylim(0, top)
    ax.set_xlabel("d (R-polynomial)")
    ax.set_ylabel("g (min. diamond generating set)")
    ax.set_title(title or "d vs g")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_q_by_ldiff(reports: list[IntervalReport], path: Path, title: str = "") -> Path:
    """Stacked bars: how often each q value occurs, per length difference."""
    rows = [r for r in reports if r.ldiff > 0]
    ldiffs = sorted({r.ldiff for r in rows})
    qs = sorted({r.q for r in rows})
    fig, ax = plt.subplots(figsize=(6, 4))
    bottom = [0] * len(ldiffs)
    for q in qs:
        heights = [sum(1 for r in rows if r.ldiff == ld and r.q == q) for ld in ldiffs]
        ax.bar(ldiffs, heights, bottom=bottom, label=f"q={q}")
        bottom = [b + h for b, h in zip(bottom, heights)]
    ax.set_xlabel("l(y) - l(x)")
    ax.set_ylabel("intervals")
    ax.set_title(title or "coefficient of q by interval length")
    if qs:
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def write_sweep_figures(reports: list[IntervalReport], directory: Path, group: str) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    return [
        plot_d_vs_g(reports, directory / f"{group}_d_vs_g.png", f"{group}: d vs g"),
        plot_q_by_ldiff(reports, directory / f"{group}_q_by_ldiff.png", f"{group}: q by length"),
    ]
