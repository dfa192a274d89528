"""Matplotlib summaries of an acceptance sweep."""
from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def sweep_figure(results, path: str) -> str:
    """Two panels: instance size against formula length per target, and
    criterion runtimes coloured by outcome. Returns ``path``."""
    fig, (ax_size, ax_time) = plt.subplots(1, 2, figsize=(11, 4.2))
    series: dict = {}
    for r in results:
        for name, x, y in r.samples:
            series.setdefault(name, ([], []))
            series[name][0].append(x)
            series[name][1].append(y)
    for name, (xs, ys) in sorted(series.items()):
        ax_size.scatter(xs, ys, s=9, alpha=0.5, label=name)
    ax_size.set_xlabel("literal occurrences in the formula")
    ax_size.set_ylabel("objects in the instance")
    ax_size.set_yscale("log")
    if series:
        ax_size.legend(fontsize=8, frameon=False)
    ax_size.set_title("reduction output size")

    keys = [r.key for r in results]
    secs = [max(r.seconds, 1e-3) for r in results]
    colors = ["tab:green" if r.passed else "tab:red" for r in results]
    ax_time.barh(keys, secs, color=colors)
    ax_time.set_xscale("log")
    ax_time.set_xlabel("seconds")
    ax_time.invert_yaxis()
    ax_time.set_title("criteria (green = pass)")

    fig.tight_layout()
    tmp = path + ".tmp"
    fig.savefig(tmp, format=os.path.splitext(path)[1].lstrip(".") or "png", dpi=120)
    plt.close(fig)
    os.replace(tmp, path)
    return path
