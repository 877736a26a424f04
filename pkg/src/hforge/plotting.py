"""Report figures written next to the tab-separated tables."""

from __future__ import annotations

from math import comb

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

RC = {
    "font.size": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "legend.frameon": False,
    "svg.hashsalt": "hforge",
}

# strip timestamps/software tags so reruns are byte-identical
_METADATA = {
    ".png": {"Software": None},
    ".svg": {"Date": None, "Creator": None},
    ".pdf": {"CreationDate": None, "Creator": None, "Producer": None},
}


def _save(fig, path):
    suffix = str(path)[str(path).rfind("."):].lower()
    fig.savefig(path, dpi=120, metadata=_METADATA.get(suffix), bbox_inches="tight")
    plt.close(fig)


def plot_family_table(table: dict, path) -> None:
    """g(n, k) per k against 2 C(2n, k+1) and the sum C(n, l+1) lower curve."""
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(6, 4))
        ks = sorted({k for _, k in table})
        for i, k in enumerate(ks):
            ns = sorted(n for n, kk in table if kk == k)
            colour = f"C{i}"
            ax.plot(ns, [table[(n, k)] for n in ns], "o-", color=colour, label=f"g(n,{k})")
            upper = [(n, 2 * comb(2 * n, k + 1)) for n in ns if k < n]
            if upper:
                ax.plot(*zip(*upper), ":", color=colour, alpha=0.7, label=f"2C(2n,{k + 1})")
            lower = [(n, sum(comb(n, j + 1) for j in range(0, k + 1))) for n in ns]
            ax.plot(*zip(*lower), "--", color=colour, alpha=0.5, label=f"sum C(n,l+1), l<={k}")
        ax.set_yscale("log")
        ax.set_xlabel("n")
        ax.set_ylabel("family size")
        ax.legend(fontsize=7, ncol=2)
        _save(fig, path)


def plot_crossing_ratios(rows, path, n: int, k: int) -> None:
    """Crossings of G_{n,k,t} divided by n t^(2k+1), against t."""
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(5, 3.5))
        ts = [r[0] for r in rows]
        ratios = [float(r[2]) for r in rows]
        ax.plot(ts, ratios, "s-", color="C3")
        ax.set_xlabel("t (span cap)")
        ax.set_ylabel(f"crossings / (n t^{2 * k + 1})")
        ax.set_title(f"G(n={n}, k={k}, t)")
        ax.set_ylim(bottom=0)
        _save(fig, path)
