"""Command-line surface: scenario runs plus thin veneers over each module."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import sequences as seqmod
from .elementspec import disk_family, family_derivative, family_sample, \
    injectivity_check, shift_error
from .errors import SvfkitError
from .geometry import RadialFamilyKind, build_svf, closed_disk_mask, open_disk_mask
from .plotdata import plot_rows, render_figure, rows_to_tsv
from .scenario import (RunContext, exit_code_for, load_scenario,
                       report_to_text, run_scenario)
from .sets import FiniteSet
from .svf import (continuous_at, converges_at, converges_at_infinity, limit_at,
                  limit_at_infinity, limsup_liminf_at_infinity)
from .theorems import ALL_THEOREMS, run_theorem_suite


def _echo_result(data: dict, fmt: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(data, sort_keys=True, indent=2))
    else:
        for key, value in data.items():
            click.echo(f"{key}: {value}")


def _csv_floats(raw: str) -> list[float]:
    return [float(tok) for tok in raw.split(",") if tok.strip()]


def _build_family_svf(family: str, radii: str | None, points: str | None,
                      universe: str | None, members: str | None):
    kind = RadialFamilyKind(family)
    if kind is RadialFamilyKind.POINT:
        if not points:
            raise click.UsageError("POINT families need --points")
        return build_svf(kind, _csv_floats(points))
    if kind is RadialFamilyKind.CONSTANT:
        if not universe:
            raise click.UsageError("CONSTANT families need --universe")
        ids = [tok.strip() for tok in universe.split(",") if tok.strip()]
        kept = [tok.strip() for tok in (members or "").split(",") if tok.strip()]
        return build_svf(kind, ids, members=kept)
    if not radii:
        raise click.UsageError("radial families need --radii")
    return build_svf(kind, _csv_floats(radii))


def _resolve_target_cli(f, raw: str):
    if raw == "open-disk":
        return open_disk_mask(f.universe)
    if raw == "closed-disk":
        return closed_disk_mask(f.universe)
    members = []
    for tok in raw.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            members.append(float(tok))
        except ValueError:
            members.append(tok)
    return FiniteSet.from_members(f.universe, members)


def _family_options(fn):
    fn = click.option("--family", required=True,
                      type=click.Choice([k.value for k in RadialFamilyKind]))(fn)
    fn = click.option("--radii", default=None, help="comma-separated radii")(fn)
    fn = click.option("--points", default=None, help="comma-separated coordinates")(fn)
    fn = click.option("--universe", default=None, help="comma-separated ids")(fn)
    fn = click.option("--members", default=None, help="comma-separated member ids")(fn)
    return fn


_format_option = click.option("--format", "fmt", type=click.Choice(["json", "text"]),
                              default="json", show_default=True)


@click.group()
@click.version_option(package_name="svfkit")
def main():
    """Exact convergence and continuity analysis for set-valued functions."""


@main.command("run")
@click.argument("scenario_path", type=click.Path(exists=True, dir_okay=False))
@_format_option
@click.option("--seed", type=int, default=None, help="default seed for suite tasks")
@click.option("--trials", type=int, default=None, help="default trials for suite tasks")
@click.option("--parallel", is_flag=True, help="run independent tasks in threads")
@click.option("--no-timing", is_flag=True, help="omit wall-clock fields")
def run_cmd(scenario_path, fmt, seed, trials, parallel, no_timing):
    """Execute a scenario file and report per-task results."""
    try:
        scenario = load_scenario(scenario_path)
        ctx = RunContext(seed=seed, trials=trials, parallel=parallel,
                         timing=not no_timing)
        report = run_scenario(scenario, ctx)
    except SvfkitError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    if fmt == "json":
        click.echo(json.dumps(report, sort_keys=True, indent=2))
    else:
        click.echo(report_to_text(report))
    sys.exit(exit_code_for(report))


@main.command("limit-inf")
@_family_options
@click.option("--target", default=None,
              help="open-disk, closed-disk, or comma-separated member ids")
@_format_option
def limit_inf_cmd(family, radii, points, universe, members, target, fmt):
    """Limit at infinity, or a convergence verdict when --target is given."""
    f = _build_family_svf(family, radii, points, universe, members)
    if target is not None:
        verdict = converges_at_infinity(f, _resolve_target_cli(f, target))
        _echo_result(verdict.to_json(), fmt)
        return
    lim = limit_at_infinity(f)
    _echo_result({"absent": lim is None,
                  "members": None if lim is None else list(lim.members())}, fmt)


@main.command("limit-at")
@_family_options
@click.option("--at", "t0", type=float, required=True)
@click.option("--side", type=click.Choice(["both", "left", "right"]), default="both",
              show_default=True)
@click.option("--target", default=None)
@_format_option
def limit_at_cmd(family, radii, points, universe, members, t0, side, target, fmt):
    """One- or two-sided limit at a point, or a verdict against --target."""
    f = _build_family_svf(family, radii, points, universe, members)
    if target is not None:
        verdict = converges_at(f, t0, _resolve_target_cli(f, target), side)
        _echo_result(verdict.to_json(), fmt)
        return
    lim = limit_at(f, t0, side)
    _echo_result({"absent": lim is None,
                  "members": None if lim is None else list(lim.members())}, fmt)


@main.command("continuity")
@_family_options
@click.option("--at", "t0", type=float, required=True)
@click.option("--side", type=click.Choice(["both", "left", "right"]), default="both",
              show_default=True)
@_format_option
def continuity_cmd(family, radii, points, universe, members, t0, side, fmt):
    """Continuity verdict at a point."""
    f = _build_family_svf(family, radii, points, universe, members)
    _echo_result(continuous_at(f, t0, side).to_json(), fmt)


@main.command("limsup-liminf")
@_family_options
@_format_option
def limsup_cmd(family, radii, points, universe, members, fmt):
    """Superior and inferior limits at infinity."""
    f = _build_family_svf(family, radii, points, universe, members)
    limsup, liminf = limsup_liminf_at_infinity(f)
    _echo_result({"limsup": list(limsup.members()),
                  "liminf": list(liminf.members())}, fmt)


@main.command("seq")
@click.option("--spec", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON file with universe/prefix/cycle")
@click.option("--candidate", default=None, help="comma-separated member ids")
@click.option("--suite", is_flag=True, help="run the randomized equivalence suite")
@click.option("--trials", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--universe-size", type=int, default=6, show_default=True)
@_format_option
def seq_cmd(spec, candidate, suite, trials, seed, universe_size, fmt):
    """Sequence limits, a convergence verdict, or the equivalence suite."""
    if suite:
        report = seqmod.equivalence_suite(trials, seed, universe_size)
        _echo_result(report.to_json(), fmt)
        sys.exit(0 if report.violations == 0 else 1)
    if spec is None:
        raise click.UsageError("--spec is required unless --suite is given")
    with open(spec, "r", encoding="utf-8") as fh:
        s = seqmod.sequence_from_json(json.load(fh))
    limsup, liminf = seqmod.limsup_liminf(s)
    out = {"limsup": list(limsup.members()), "liminf": list(liminf.members())}
    if candidate is not None:
        ids = [tok.strip() for tok in candidate.split(",") if tok.strip()]
        out.update(seqmod.converges_to(
            s, FiniteSet.from_members(s.universe, ids)).to_json())
    _echo_result(out, fmt)


@main.command("theorem-suite")
@click.option("--tag", "tags", multiple=True,
              type=click.Choice(ALL_THEOREMS), help="repeatable")
@click.option("--all", "run_all", is_flag=True, help="run every registered tag")
@click.option("--trials", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--universe-size", type=int, default=6, show_default=True)
@click.option("--parallel", is_flag=True)
@_format_option
def theorem_suite_cmd(tags, run_all, trials, seed, universe_size, parallel, fmt):
    """Randomized re-checks of the listed theorems; exits 1 on any violation."""
    chosen = ALL_THEOREMS if run_all or not tags else tags
    reports = [run_theorem_suite(tag, trials, seed, universe_size, parallel)
               for tag in chosen]
    payload = {"reports": [r.to_json() for r in reports],
               "violations": sum(r.violations for r in reports)}
    if fmt == "json":
        click.echo(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for r in reports:
            click.echo(f"{r.theorem_id}: {r.trials} trials, "
                       f"{r.violations} violations")
    sys.exit(0 if payload["violations"] == 0 else 1)


@main.command("element-spec")
@click.option("--catalog", type=click.Choice(["disk"]), default="disk",
              show_default=True)
@click.option("--p", "p_values", default="0.25,0.5,0.75", show_default=True)
@click.option("--q", "q_values", default=None,
              help="defaults to four quarter-turn angles")
@click.option("--check", type=click.Choice(["shift", "injectivity", "sample",
                                            "derivative"]), default="shift",
              show_default=True)
@click.option("--at", "times", default="1", show_default=True,
              help="comma-separated probe times")
@click.option("--method", type=click.Choice(["analytic", "central_difference"]),
              default="analytic", show_default=True)
@click.option("--h", "step", type=float, default=1e-4, show_default=True)
@click.option("--tol", type=float, default=None)
@_format_option
def element_spec_cmd(catalog, p_values, q_values, check, times, method, step,
                     tol, fmt):
    """Point-family checks: unit-shift identity, injectivity, sampling."""
    import math
    qs = _csv_floats(q_values) if q_values else [k * math.pi / 2 for k in range(4)]
    family = disk_family(_csv_floats(p_values), qs)
    ts = _csv_floats(times)
    if check == "shift":
        used_tol = tol if tol is not None else (1e-9 if method == "analytic" else 1e-6)
        err = max(shift_error(family, t, method, step) for t in ts)
        _echo_result({"holds": err <= used_tol, "max_error": err}, fmt)
        sys.exit(0 if err <= used_tol else 1)
    if check == "injectivity":
        verdict = injectivity_check(family, ts, tol if tol is not None else 1e-9)
        out = verdict.to_json()
        if out["witness_element"] is not None:
            out["witness_element"] = repr(out["witness_element"])
        _echo_result(out, fmt)
        sys.exit(0 if verdict.holds else 1)
    sampler = family_sample if check == "sample" else \
        lambda fam, t: family_derivative(fam, t, method, step)
    for t in ts:
        cloud = sampler(family, t)
        _echo_result({"t": t, "points": [list(p) for p in cloud.points]}, fmt)


@main.command("plot-data")
@_family_options
@click.option("--target", default=None)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None,
              help="write TSV here (default: stdout)")
@click.option("--figure", "figure_path", type=click.Path(dir_okay=False),
              default=None, help="figure file (default: alongside --out)")
@click.option("--no-figure", is_flag=True, help="suppress the rendered figure")
def plot_data_cmd(family, radii, points, universe, members, target, out_path,
                  figure_path, no_figure):
    """Emit per-element trajectory columns; renders a figure next to the file."""
    f = _build_family_svf(family, radii, points, universe, members)
    mask = _resolve_target_cli(f, target) if target is not None else None
    rows = plot_rows(f, mask)
    tsv = rows_to_tsv(rows)
    if out_path is None:
        click.echo(tsv, nl=False)
    else:
        Path(out_path).write_text(tsv, encoding="utf-8")
        click.echo(f"wrote {out_path}")
    if not no_figure and (figure_path or out_path):
        fig_path = figure_path or str(Path(out_path).with_suffix(".png"))
        render_figure(f, fig_path, mask, target_name=target)
        click.echo(f"wrote {fig_path}")


def entrypoint():  # kept for ad-hoc python -m use
    main()


if __name__ == "__main__":
    main()
