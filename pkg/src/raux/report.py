"""Figure rendering for the report path of the CLI.

Each renderer takes the same data the delimited output carries and writes
a PNG next to it: the sign-grid x-ray (curves Re = 0 / Im = 0 trace the
zeros), the image of the strip-parallelogram border under G, and the zero
census scatter.  Matplotlib loads lazily and uses the Agg backend so the
CLI works headless.
"""
from __future__ import annotations

import numpy as np


def _plt():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_xray(xs, ys, sign_re, sign_im, func_name: str, path: str) -> None:
    """Sign-grid portrait: Re-sign as background, Im = 0 curves overlaid."""
    plt = _plt()
    fig, ax = plt.subplots(figsize=(7.0, 7.0 * (len(ys) / max(1, len(xs)))))
    extent = (xs[0], xs[-1], ys[0], ys[-1])
    ax.imshow(
        np.asarray(sign_re), origin="lower", extent=extent, cmap="RdBu",
        alpha=0.35, aspect="auto", vmin=-1, vmax=1,
    )
    ax.contour(xs, ys, np.asarray(sign_re), levels=[0.0], colors="firebrick",
               linewidths=0.9)
    ax.contour(xs, ys, np.asarray(sign_im), levels=[0.0], colors="navy",
               linewidths=0.9)
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_title(f"x-ray of {func_name} (red: Re=0, blue: Im=0)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_border(values, path: str) -> None:
    """Closed image curve of the parallelogram boundary, origin marked."""
    plt = _plt()
    vals = np.asarray(values, dtype=complex)
    fig, ax = plt.subplots(figsize=(6.5, 6.5))
    ax.plot(vals.real, vals.imag, lw=1.2, color="navy")
    ax.plot([0.0], [0.0], marker="o", ms=6, color="firebrick")
    ax.set_xlabel("Re G")
    ax.set_ylabel("Im G")
    ax.set_title("image of the strip-parallelogram border (origin marked)")
    ax.set_aspect("equal", adjustable="datalim")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_zeros(zeros, box, path: str) -> None:
    plt = _plt()
    zs = np.asarray(zeros, dtype=complex)
    fig, ax = plt.subplots(figsize=(7.0, 7.0))
    if len(zs):
        ax.plot(zs.real, zs.imag, ".", ms=3.0, color="navy")
    ax.set_xlim(box[0], box[1])
    ax.set_ylim(box[2], box[3])
    ax.set_xlabel("sigma")
    ax.set_ylabel("t")
    ax.set_title(f"{len(zs)} zeros in [{box[0]:g},{box[1]:g}] x [{box[2]:g},{box[3]:g}]")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
