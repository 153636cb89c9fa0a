"""Figures for the audit report."""

from __future__ import annotations

import math
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Polygon  # noqa: E402

from .counting import AuditReport, annulus_points  # noqa: E402
from .gint import GaussianInt  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "figure.dpi": 100,
    "savefig.bbox": "tight",
}

# scatter every secret only below this many points
MAX_SCATTER = 200_000

AUTH_COLOR = "#2b6ca3"
UNAUTH_COLOR = "#c8553d"


def _save(fig, path):
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)
    return path


def plot_coalition_norms(report: AuditReport, path: str) -> str:
    """Bar chart of log10 N(lcm(C)) per coalition against m_minus and m_plus."""
    p = report.params
    rows = report.rows
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(max(4.0, 0.35 * len(rows) + 1.5), 3.2))
        xs = range(len(rows))
        heights = [math.log10(r.norm) if r.norm > 0 else 0.0 for r in rows]
        colors = [AUTH_COLOR if r.authorized else UNAUTH_COLOR for r in rows]
        ax.bar(xs, heights, color=colors, width=0.7)
        ax.axhline(math.log10(p.m_plus), color="k", lw=0.8, ls="--", label="m+")
        ax.axhline(math.log10(p.m_minus), color="0.4", lw=0.8, ls=":", label="m-")
        ax.set_xticks(list(xs))
        ax.set_xticklabels([",".join(map(str, r.members)) for r in rows],
                           rotation=90 if len(rows) > 8 else 0)
        ax.set_ylabel("log10 norm of coalition lcm")
        ax.set_xlabel("coalition")
        ax.legend(loc="upper left", frameon=False)
        return _save(fig, path)


def _square(z: GaussianInt):
    corners = []
    for a, b in ((0.5, 0.5), (-0.5, 0.5), (-0.5, -0.5), (0.5, -0.5)):
        corners.append((z.re * a - z.im * b, z.re * b + z.im * a))
    return corners


def plot_secret_space(report: AuditReport, path: str) -> str:
    """Secret annulus with the fundamental square of the widest unauthorized lcm."""
    p = report.params
    unauth = [r for r in report.rows if not r.authorized]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.2, 4.2))
        size = report.secret_space_size or 0
        if 0 < size <= MAX_SCATTER:
            pts = list(annulus_points(p.m_minus, p.m_plus))
            ax.scatter([z.re for z in pts], [z.im for z in pts], s=0.2,
                       color=AUTH_COLOR, linewidths=0, rasterized=True, label="secrets")
        for r2, style in ((p.m_minus, ":"), (p.m_plus / 4, "--")):
            ax.add_patch(plt.Circle((0, 0), math.sqrt(r2), fill=False, ls=style, lw=0.8))
        if unauth:
            widest = max(unauth, key=lambda r: r.norm)
            big = p.coalition_lcm(widest.members)
            ax.add_patch(Polygon(_square(big), closed=True, fill=False,
                                 color=UNAUTH_COLOR, lw=1.0,
                                 label=f"F(lcm{{{','.join(map(str, widest.members))}}})"))
        lim = 1.05 * math.sqrt(p.m_plus / 4)
        ax.set_xlim(-lim, lim)
        ax.set_ylim(-lim, lim)
        ax.set_aspect("equal")
        ax.set_xlabel("Re")
        ax.set_ylabel("Im")
        ax.legend(loc="upper right", frameon=False, markerscale=10)
        return _save(fig, path)


def write_figures(report: AuditReport, directory: str) -> list[str]:
    os.makedirs(directory, exist_ok=True)
    return [
        plot_coalition_norms(report, os.path.join(directory, "coalition_norms.png")),
        plot_secret_space(report, os.path.join(directory, "secret_space.png")),
    ]
