"""Per-phase eccentricity chart for an orientation report."""

from __future__ import annotations

from matplotlib.figure import Figure

from .driver import OrientationReport


def phase_figure(report: OrientationReport) -> Figure:
    """Grouped bars of the measured out/in eccentricity of each phase's
    center, with the per-phase guarantees drawn as tick marks."""
    phases = report.phases
    fig = Figure(figsize=(6.4, 3.6))
    ax = fig.add_subplot(1, 1, 1)
    xs = list(range(len(phases)))
    width = 0.38
    outs = [p.e_out_i for p in phases]
    ins = [p.e_in_i for p in phases]
    ax.bar([x - width / 2 for x in xs], outs, width, label="out", color="#4c72b0")
    ax.bar([x + width / 2 for x in xs], ins, width, label="in", color="#dd8452")
    ax.scatter([x - width / 2 for x in xs], [p.bound_out_i for p in phases],
               marker="_", s=300, color="black", zorder=3, label="guarantee")
    ax.scatter([x + width / 2 for x in xs], [p.bound_in_i for p in phases],
               marker="_", s=300, color="black", zorder=3)
    ax.set_xticks(xs)
    ax.set_xticklabels([f"{p.phase_index}\n{p.mode}" for p in phases])
    ax.set_xlabel("phase")
    ax.set_ylabel("eccentricity of phase center")
    ax.set_title(f"{report.algorithm}: radius {report.radius_before} -> {report.radius_after} "
                 f"(bound {report.bound:g})", fontsize=10)
    ax.legend(frameon=False, fontsize=8)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.tight_layout()
    return fig


def save_phase_figure(report: OrientationReport, path: str) -> None:
    fig = phase_figure(report)
    fig.savefig(path, dpi=120)
