"""Columnar trajectory reports and the figures rendered alongside them.

For each universe element the report carries the raw membership trajectory
and, against a chosen target set, the disagreement trajectory whose
shrinkage the convergence definitions are about. Rows follow universe
order, so output is deterministic.
"""

from __future__ import annotations

import math

from .intervals import IntervalSet, to_json
from .sets import FiniteSet
from .svf import SetValuedFunction, delta_trajectory


def plot_rows(f: SetValuedFunction, target: FiniteSet | None = None) -> list[dict]:
    rows = []
    for i, el in enumerate(f.universe.elements):
        traj = f.trajectories[i]
        row = {
            "element": el,
            "label": str(el),
            "trajectory": to_json(traj),
            "trajectory_text": str(traj),
        }
        if target is not None:
            delta = delta_trajectory(f, target, el)
            row["delta"] = to_json(delta)
            row["delta_text"] = str(delta)
        rows.append(row)
    return rows


def rows_to_tsv(rows: list[dict]) -> str:
    with_delta = rows and "delta_text" in rows[0]
    header = "element\ttrajectory\tdelta" if with_delta else "element\ttrajectory"
    lines = [header]
    for row in rows:
        cells = [row["label"], row["trajectory_text"]]
        if with_delta:
            cells.append(row["delta_text"])
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


def _finite_endpoints(isets) -> list[float]:
    values = []
    for iset in isets:
        for lo, hi in iset.intervals:
            if math.isfinite(lo.value):
                values.append(lo.value)
            if math.isfinite(hi.value):
                values.append(hi.value)
    return values


def _spans(iset: IntervalSet, lo_clip: float, hi_clip: float):
    for lo, hi in iset.intervals:
        a = max(lo.value, lo_clip)
        b = min(hi.value, hi_clip)
        if a <= b:
            yield a, max(b - a, (hi_clip - lo_clip) * 0.004)


def render_figure(f: SetValuedFunction, path, target: FiniteSet | None = None,
                  target_name: str | None = None) -> None:
    """Draw per-element trajectory bars (and disagreement bars) to a file."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    deltas = None
    isets = list(f.trajectories) + [f.domain]
    if target is not None:
        deltas = [delta_trajectory(f, target, el) for el in f.universe.elements]
        isets += deltas
    endpoints = _finite_endpoints(isets)
    lo_clip = min(endpoints, default=0.0) - 1.0
    hi_clip = max(endpoints, default=1.0) + 1.0

    fig, ax = plt.subplots(figsize=(8, 0.6 * len(f.universe) + 1.6))
    for i, el in enumerate(f.universe.elements):
        ax.broken_barh(list(_spans(f.trajectories[i], lo_clip, hi_clip)),
                       (i + 0.08, 0.34), color="steelblue")
        if deltas is not None:
            ax.broken_barh(list(_spans(deltas[i], lo_clip, hi_clip)),
                           (i - 0.42, 0.34), color="crimson")
    ax.set_yticks(range(len(f.universe)))
    ax.set_yticklabels([str(el) for el in f.universe.elements])
    ax.set_xlim(lo_clip, hi_clip)
    ax.set_xlabel("t")
    title = "membership trajectories"
    if target is not None:
        title += f" and disagreement vs {target_name or 'target'}"
    ax.set_title(title)
    handles = [plt.Rectangle((0, 0), 1, 1, color="steelblue")]
    labels = ["element in value at t"]
    if deltas is not None:
        handles.append(plt.Rectangle((0, 0), 1, 1, color="crimson"))
        labels.append("element in symmetric difference at t")
    ax.legend(handles, labels, loc="upper right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
