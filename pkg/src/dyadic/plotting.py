"""Matplotlib figures: subbase pairs and Hasse diagrams.

Figures are rendered with the Agg backend straight to files.
"""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

COLORS = {"0": "#3b6ea8", "1": "#d08c2b"}
RC = {"font.size": 9, "axes.spines.top": False, "axes.spines.right": False}


def _segments(region, component):
    """(lo, hi, lo_closed, hi_closed) for each 1-D box of one component."""
    return [ivs[0] for i, ivs in region.boxes() if i == component]


def plot_subbase(S, depth: int, path, title: str | None = None):
    """One row per index ``n``: ``S[n,0]`` and ``S[n,1]`` as coloured bars (1-D) or panels (2-D)."""
    dims = S.space.dims()
    if all(d == 1 for d in dims):
        return _plot_1d(S, depth, path, title)
    if len(dims) == 1 and dims[0] == 2:
        return _plot_2d(S, depth, path, title)
    raise ValueError("plotting supports 1-D components or a single 2-D component")


def _plot_1d(S, depth, path, title):
    ncomp = len(S.space.components)
    with plt.rc_context(RC):
        fig, axes = plt.subplots(1, ncomp, figsize=(4.5 * ncomp, 0.35 * depth + 1.2), squeeze=False)
        for c, ax in enumerate(axes[0]):
            lo, hi = S.space.components[c].box[0]
            for n in range(depth):
                y = depth - 1 - n
                for a in "01":
                    for iv in _segments(S.pair(n)[int(a)], c):
                        ax.add_patch(Rectangle((float(iv.lo), y + 0.15), float(iv.hi - iv.lo), 0.7,
                                               color=COLORS[a], lw=0))
                        # closed endpoints get a dot, open ones a hollow ring
                        for x, closed in ((iv.lo, iv.lo_closed), (iv.hi, iv.hi_closed)):
                            ax.plot(float(x), y + 0.5, "o", ms=3, mec=COLORS[a],
                                    mfc=COLORS[a] if closed else "white")
            ax.set_xlim(float(lo), float(hi))
            ax.set_ylim(0, depth)
            ax.set_yticks([depth - 0.5 - n for n in range(depth)])
            ax.set_yticklabels([str(n) for n in range(depth)])
            ax.set_ylabel("index n")
            if ncomp > 1:
                ax.set_title(f"component {c}")
        fig.suptitle(title or f"{S.name}: S[n,0] (blue) and S[n,1] (orange)")
        fig.tight_layout()
        fig.savefig(path, dpi=120)
        plt.close(fig)
    return path


def _plot_2d(S, depth, path, title):
    (x0, x1), (y0, y1) = S.space.components[0].box
    cols = min(depth, 4)
    rows = -(-depth // cols)
    with plt.rc_context(RC):
        fig, axes = plt.subplots(rows, cols, figsize=(2.2 * cols, 2.2 * rows), squeeze=False)
        for n in range(rows * cols):
            ax = axes[n // cols][n % cols]
            ax.set_xticks([])
            ax.set_yticks([])
            if n >= depth:
                ax.axis("off")
                continue
            for a in "01":
                for _, ivs in S.pair(n)[int(a)].boxes():
                    bx, by = ivs
                    ax.add_patch(Rectangle((float(bx.lo), float(by.lo)), float(bx.hi - bx.lo),
                                           float(by.hi - by.lo), color=COLORS[a], lw=0))
            for p in S.space.deletions:
                ax.plot(float(p.coords[0]), float(p.coords[1]), "x", color="black", ms=5)
            ax.set_xlim(float(x0), float(x1))
            ax.set_ylim(float(y0), float(y1))
            ax.set_aspect("equal")
            ax.set_title(f"n={n}")
        fig.suptitle(title or f"{S.name}: S[n,0] (blue) and S[n,1] (orange)")
        fig.tight_layout()
        fig.savefig(path, dpi=120)
        plt.close(fig)
    return path


def plot_hasse(P, path, title: str | None = None):
    """Members placed by level (bottom to top), edges along the Hasse relation."""
    by_level: dict[int, list] = {}
    for w in P.members:
        by_level.setdefault(P.levels[w], []).append(w)
    pos = {}
    for lvl, ws in by_level.items():
        for i, w in enumerate(ws):
            pos[w] = (i - (len(ws) - 1) / 2, lvl)
    width = max(len(ws) for ws in by_level.values())
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(min(2 + 0.7 * width, 30), 1.2 + 0.9 * len(by_level)))
        for lo, hi in P.hasse:
            (xa, ya), (xb, yb) = pos[lo], pos[hi]
            ax.plot([xa, xb], [ya, yb], color="#999999", lw=0.6, zorder=1)
        for w, (x, y) in pos.items():
            ax.text(x, y, w.replace("_", "⊥") if w else "⊥", ha="center", va="center",
                    family="monospace", fontsize=8, zorder=2,
                    bbox={"boxstyle": "round,pad=0.2", "fc": "white", "ec": "#444444", "lw": 0.5})
        ax.set_yticks(sorted(by_level))
        ax.set_ylabel("level")
        ax.set_xticks([])
        ax.spines["bottom"].set_visible(False)
        ax.set_xlim(-width / 2 - 0.5, width / 2 + 0.5)
        ax.set_ylim(-0.6, max(by_level) + 0.6)
        ax.set_title(title or f"{getattr(P.subbase, 'name', '')} {P.kind} to length {P.depth}")
        fig.tight_layout()
        fig.savefig(path, dpi=120)
        plt.close(fig)
    return path
