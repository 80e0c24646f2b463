"""File-only figure rendering for the CLI report commands.

Each renderer writes one PNG plus a small CSV holding exactly the
plotted series, so the numbers behind every figure stay inspectable.
Counts too large for floating point are drawn on a log10 scale computed
from the exact integers.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

__all__ = ["render_counts", "render_distribution"]


def _write_series(path: Path, header: list[str], rows: list[tuple]) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def render_counts(directory: str, name: str, ks: list[int], counts: list[int]) -> list[str]:
    """Bar chart of a partition-count vector; returns the files written."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    use_log = max(counts) > 10**15
    heights = [math.log10(c) if use_log else float(c) for c in counts]

    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(ks, heights, color="#4878a8")
    ax.set_xlabel("blocks k")
    ax.set_ylabel("log10 count" if use_log else "count")
    ax.set_title(f"{name}: partition counts")
    fig.tight_layout()
    png = out / f"{name}-counts.png"
    fig.savefig(png, dpi=120)
    plt.close(fig)

    data = out / f"{name}-counts.csv"
    _write_series(data, ["k", "count"], [(k, str(c)) for k, c in zip(ks, counts)])
    return [str(png), str(data)]


def render_distribution(
    directory: str,
    name: str,
    ks: list[int],
    probs: list[float],
    mean: float,
    std_dev: float,
) -> list[str]:
    """Block-count distribution with the fitted normal density overlaid."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)

    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(ks, probs, color="#4878a8", label="exact distribution")
    span = 4.0 * std_dev
    xs = [mean - span + i * (2 * span / 400) for i in range(401)]
    ys = [
        math.exp(-0.5 * ((x - mean) / std_dev) ** 2) / (std_dev * math.sqrt(2 * math.pi))
        for x in xs
    ]
    ax.plot(xs, ys, color="#c44e52", label="normal density")
    ax.set_xlabel("blocks k")
    ax.set_ylabel("probability")
    ax.set_title(f"{name}: block-count distribution")
    ax.legend()
    fig.tight_layout()
    png = out / f"{name}-distribution.png"
    fig.savefig(png, dpi=120)
    plt.close(fig)

    data = out / f"{name}-distribution.csv"
    density = [
        math.exp(-0.5 * ((k - mean) / std_dev) ** 2) / (std_dev * math.sqrt(2 * math.pi))
        for k in ks
    ]
    _write_series(
        data,
        ["k", "probability", "normal_density"],
        [(k, f"{p:.17g}", f"{d:.17g}") for k, p, d in zip(ks, probs, density)],
    )
    return [str(png), str(data)]
