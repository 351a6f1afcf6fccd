"""Scenario ingestion and task execution.

Scenario files are strict JSON: one version tag, named objects, and an
ordered task list. Unknown fields anywhere are rejected so fixture drift
surfaces immediately. Reports are plain JSON-able dicts with deterministic
content (timing removed under no_timing).
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import sequences as seqmod
from .elementspec import (affine_family, disk_family, injectivity_check,
                          scaled_direction_family, shift_error)
from .errors import ParseError, SvfkitError, UnknownCommand
from .geometry import (RadialFamilyKind, build_svf, closed_disk_mask,
                       open_disk_mask)
from .intervals import from_json as iset_from_json
from .plotdata import plot_rows
from .sets import FiniteSet, Universe
from .svf import (SetValuedFunction, continuous_at, converges_at,
                  converges_at_infinity, limit_at, limit_at_infinity,
                  limsup_liminf_at_infinity)
from .theorems import ALL_THEOREMS, run_theorem_suite

SCENARIO_VERSION = "1"

COMMANDS = ("limit-inf", "limit-at", "continuity", "limsup-liminf", "seq",
            "theorem-suite", "element-spec", "plot-data")


def _require_keys(data: dict, where: str, required: set, optional: set = frozenset()):
    if not isinstance(data, dict):
        raise ParseError(f"{where}: expected an object, got {type(data).__name__}")
    missing = required - data.keys()
    if missing:
        raise ParseError(f"{where}: missing fields {sorted(missing)}")
    unknown = data.keys() - required - optional
    if unknown:
        raise ParseError(f"{where}: unknown fields {sorted(unknown)}")


@dataclass(frozen=True)
class Task:
    index: int
    command: str
    name: str | None
    args: dict
    expect: dict | None


@dataclass(frozen=True)
class Scenario:
    version: str
    objects: dict
    tasks: tuple[Task, ...]


# ---------------------------------------------------------------------------
# object construction

def _axis_values(raw, where: str) -> list[float]:
    if isinstance(raw, list):
        return [float(v) for v in raw]
    _require_keys(raw, where, {"start", "step", "count"})
    return [raw["start"] + k * raw["step"] for k in range(int(raw["count"]))]


def _build_object(name: str, spec) -> object:
    where = f"objects.{name}"
    if not isinstance(spec, dict) or "type" not in spec:
        raise ParseError(f"{where}: expected an object with a 'type' field")
    kind = spec["type"]
    if kind == "svf":
        if "family" in spec:
            _require_keys(spec, where, {"type", "family"},
                          {"radii", "points", "universe", "members"})
            try:
                family = RadialFamilyKind(spec["family"])
            except ValueError:
                raise ParseError(f"{where}: unknown family {spec['family']!r}") from None
            if family is RadialFamilyKind.POINT:
                return build_svf(family, spec.get("points") or ())
            if family is RadialFamilyKind.CONSTANT:
                return build_svf(family, spec.get("universe") or (),
                                 members=spec.get("members") or ())
            if "radii" not in spec:
                raise ParseError(f"{where}: radial families need 'radii'")
            return build_svf(family, spec["radii"])
        _require_keys(spec, where, {"type", "universe", "domain", "trajectories"})
        universe = Universe(tuple(spec["universe"]))
        domain = iset_from_json(spec["domain"])
        by_element = {}
        for row in spec["trajectories"]:
            _require_keys(row, f"{where}.trajectories", {"element", "intervals"})
            by_element[row["element"]] = iset_from_json(row["intervals"])
        trajectories = tuple(by_element.get(el, iset_from_json([]))
                             for el in universe.elements)
        return SetValuedFunction(universe, domain, trajectories)
    if kind == "sequence":
        _require_keys(spec, where, {"type", "universe", "prefix", "cycle"})
        return seqmod.sequence_from_json(spec)
    if kind == "family":
        _require_keys(spec, where, {"type", "catalog"}, {"p", "q", "vectors", "motions"})
        catalog = spec["catalog"]
        if catalog == "disk":
            return disk_family(_axis_values(spec.get("p", []), f"{where}.p"),
                               _axis_values(spec.get("q", []), f"{where}.q"))
        if catalog == "scaled-direction":
            return scaled_direction_family(spec.get("vectors") or ())
        if catalog == "affine":
            return affine_family(spec.get("motions") or ())
        raise ParseError(f"{where}: unknown catalog family {catalog!r}")
    raise ParseError(f"{where}: unknown object type {kind!r}")


_TASK_FIELDS = {
    "limit-inf": {"object"} | {"target"},
    "limit-at": {"object", "at"} | {"side", "target"},
    "continuity": {"object", "at"} | {"side"},
    "limsup-liminf": {"object"},
    "seq": set() | {"object", "candidate", "suite", "trials", "seed", "universe-size"},
    "theorem-suite": set() | {"tag", "all", "trials", "seed", "universe-size"},
    "element-spec": {"object", "check"} | {"at", "probes", "method", "h", "tol"},
    "plot-data": {"object"} | {"target"},
}

_TASK_REQUIRED = {
    "limit-inf": {"object"},
    "limit-at": {"object", "at"},
    "continuity": {"object", "at"},
    "limsup-liminf": {"object"},
    "seq": set(),
    "theorem-suite": set(),
    "element-spec": {"object", "check"},
    "plot-data": {"object"},
}


def parse_scenario(data) -> Scenario:
    _require_keys(data, "scenario", {"version", "objects", "tasks"})
    if data["version"] != SCENARIO_VERSION:
        raise ParseError(f"unsupported scenario version {data['version']!r}")
    if not isinstance(data["objects"], dict):
        raise ParseError("objects: expected a name -> spec mapping")
    objects = {name: _build_object(name, spec)
               for name, spec in data["objects"].items()}
    if not isinstance(data["tasks"], list):
        raise ParseError("tasks: expected an array")
    tasks = []
    for i, raw in enumerate(data["tasks"]):
        where = f"tasks[{i}]"
        if not isinstance(raw, dict) or "command" not in raw:
            raise ParseError(f"{where}: expected an object with a 'command' field")
        command = raw["command"]
        if command not in COMMANDS:
            raise UnknownCommand(f"{where}: unknown command {command!r}")
        allowed = _TASK_FIELDS[command] | {"command", "name", "expect"}
        _require_keys(raw, where, {"command"} | _TASK_REQUIRED[command],
                      allowed - {"command"} - _TASK_REQUIRED[command])
        args = {k: v for k, v in raw.items()
                if k not in ("command", "name", "expect")}
        if "object" in args and args["object"] not in objects:
            raise ParseError(f"{where}: references undeclared object "
                             f"{args['object']!r}")
        if command == "seq" and "object" not in args and not args.get("suite"):
            raise ParseError(f"{where}: seq needs an object or suite: true")
        expect = raw.get("expect")
        if expect is not None and not isinstance(expect, dict):
            raise ParseError(f"{where}: expect must be an object")
        tasks.append(Task(i, command, raw.get("name"), args, expect))
    return Scenario(data["version"], objects, tuple(tasks))


def load_scenario(path) -> Scenario:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read scenario: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"scenario is not valid JSON: {exc}") from None
    return parse_scenario(data)


# ---------------------------------------------------------------------------
# task execution

@dataclass
class RunContext:
    seed: int | None = None
    trials: int | None = None
    parallel: bool = False
    timing: bool = True
    defaults: dict = field(default_factory=lambda: {"trials": 1000, "seed": 0,
                                                    "universe-size": 6})

    def trials_for(self, args: dict) -> int:
        return int(args.get("trials", self.trials or self.defaults["trials"]))

    def seed_for(self, args: dict) -> int:
        if "seed" in args:
            return int(args["seed"])
        return int(self.seed if self.seed is not None else self.defaults["seed"])


def _resolve_svf(objects, args) -> SetValuedFunction:
    obj = objects[args["object"]]
    if not isinstance(obj, SetValuedFunction):
        raise ParseError(f"object {args['object']!r} is not a set-valued function")
    return obj


def _resolve_target(f: SetValuedFunction, raw) -> FiniteSet:
    if raw == "open-disk":
        return open_disk_mask(f.universe)
    if raw == "closed-disk":
        return closed_disk_mask(f.universe)
    if isinstance(raw, list):
        return FiniteSet.from_members(f.universe, raw)
    raise ParseError(f"bad target {raw!r}: expected 'open-disk', 'closed-disk' "
                     "or a member list")


def _members_or_absent(mask: FiniteSet | None) -> dict:
    if mask is None:
        return {"absent": True, "members": None}
    return {"absent": False, "members": list(mask.members())}


def _run_limit_inf(objects, args, ctx):
    f = _resolve_svf(objects, args)
    if "target" in args:
        verdict = converges_at_infinity(f, _resolve_target(f, args["target"]))
        return verdict.to_json()
    return _members_or_absent(limit_at_infinity(f))


def _run_limit_at(objects, args, ctx):
    f = _resolve_svf(objects, args)
    side = args.get("side", "both")
    t0 = float(args["at"])
    if "target" in args:
        verdict = converges_at(f, t0, _resolve_target(f, args["target"]), side)
        return verdict.to_json()
    return _members_or_absent(limit_at(f, t0, side))


def _run_continuity(objects, args, ctx):
    f = _resolve_svf(objects, args)
    return continuous_at(f, float(args["at"]), args.get("side", "both")).to_json()


def _run_limsup_liminf(objects, args, ctx):
    f = _resolve_svf(objects, args)
    limsup, liminf = limsup_liminf_at_infinity(f)
    return {"limsup": list(limsup.members()), "liminf": list(liminf.members())}


def _run_seq(objects, args, ctx):
    if args.get("suite"):
        report = seqmod.equivalence_suite(
            ctx.trials_for(args), ctx.seed_for(args),
            int(args.get("universe-size", ctx.defaults["universe-size"])))
        return {**report.to_json()}
    s = objects[args["object"]]
    if not isinstance(s, seqmod.SetSequence):
        raise ParseError(f"object {args['object']!r} is not a sequence")
    limsup, liminf = seqmod.limsup_liminf(s)
    out = {"limsup": list(limsup.members()), "liminf": list(liminf.members())}
    if "candidate" in args:
        candidate = FiniteSet.from_members(s.universe, args["candidate"])
        out.update(seqmod.converges_to(s, candidate).to_json())
    return out


def _run_theorem_suite(objects, args, ctx):
    tags = ALL_THEOREMS if args.get("all") else (args["tag"],) if "tag" in args \
        else ALL_THEOREMS
    trials = ctx.trials_for(args)
    seed = ctx.seed_for(args)
    size = int(args.get("universe-size", ctx.defaults["universe-size"]))
    reports = [run_theorem_suite(tag, trials, seed, size, parallel=ctx.parallel)
               for tag in tags]
    return {"reports": [r.to_json() for r in reports],
            "violations": sum(r.violations for r in reports)}


def _run_element_spec(objects, args, ctx):
    family = objects[args["object"]]
    check = args["check"]
    method = args.get("method", "analytic")
    h = float(args.get("h", 1e-4))
    if check == "shift":
        at = args.get("at", [1.0])
        times = [float(t) for t in (at if isinstance(at, list) else [at])]
        tol = float(args.get("tol", 1e-9 if method == "analytic" else 1e-6))
        err = max(shift_error(family, t, method, h) for t in times)
        return {"holds": err <= tol, "max_error": err}
    if check == "injectivity":
        probes = [float(t) for t in args.get("probes", [1.0])]
        verdict = injectivity_check(family, probes, float(args.get("tol", 1e-9)))
        out = verdict.to_json()
        out["witness_element"] = repr(out["witness_element"]) \
            if out["witness_element"] is not None else None
        return out
    if check == "sample":
        from .elementspec import family_sample
        cloud = family_sample(family, float(args["at"]))
        return {"points": [list(p) for p in cloud.points]}
    if check == "derivative":
        from .elementspec import family_derivative
        cloud = family_derivative(family, float(args["at"]), method, h)
        return {"points": [list(p) for p in cloud.points]}
    raise ParseError(f"unknown element-spec check {check!r}")


def _run_plot_data(objects, args, ctx):
    f = _resolve_svf(objects, args)
    target = _resolve_target(f, args["target"]) if "target" in args else None
    return {"rows": plot_rows(f, target)}


_RUNNERS = {
    "limit-inf": _run_limit_inf,
    "limit-at": _run_limit_at,
    "continuity": _run_continuity,
    "limsup-liminf": _run_limsup_liminf,
    "seq": _run_seq,
    "theorem-suite": _run_theorem_suite,
    "element-spec": _run_element_spec,
    "plot-data": _run_plot_data,
}


# ---------------------------------------------------------------------------
# expectation matching

def _match_members(want, got, fieldname):
    if got is None:
        return [{"field": fieldname, "expected": want, "actual": None}]
    missing = [m for m in want if m not in got]
    extra = [m for m in got if m not in want]
    if missing or extra:
        return [{"field": fieldname, "missing": missing, "extra": extra}]
    return []


def check_expectation(expect: dict, result: dict) -> list[dict]:
    diffs: list[dict] = []
    for key, want in expect.items():
        if key in ("members", "limsup", "liminf"):
            diffs += _match_members(want, result.get(key), key)
        elif key in ("absent", "holds", "violations"):
            got = result.get(key)
            if got != want:
                diffs.append({"field": key, "expected": want, "actual": got})
        elif key == "witness":
            got = result.get("witness_element")
            if got != want:
                diffs.append({"field": "witness", "expected": want, "actual": got})
        elif key == "max_error_le":
            got = result.get("max_error")
            if got is None or got > want:
                diffs.append({"field": "max_error", "expected_at_most": want,
                              "actual": got})
        elif key == "points":
            got = result.get("points")
            if got != want:
                diffs.append({"field": "points", "expected": want, "actual": got})
        else:
            raise ParseError(f"unknown expectation field {key!r}")
    return diffs


# ---------------------------------------------------------------------------
# the run loop

def run_scenario(scenario: Scenario, ctx: RunContext | None = None) -> dict:
    """Execute all tasks in declaration order and assemble the report."""
    ctx = ctx or RunContext()

    def execute(task: Task) -> dict:
        start = time.perf_counter()
        result = _RUNNERS[task.command](scenario.objects, task.args, ctx)
        elapsed_ms = (time.perf_counter() - start) * 1000.0
        record = {
            "index": task.index,
            "name": task.name,
            "command": task.command,
            "result": result,
            "pass": True,
        }
        if task.expect is not None:
            record["expected"] = task.expect
            diffs = check_expectation(task.expect, result)
            if diffs:
                record["pass"] = False
                record["diff"] = diffs
        if ctx.timing:
            record["elapsed_ms"] = round(elapsed_ms, 3)
        return record

    if ctx.parallel:
        with ThreadPoolExecutor() as pool:
            records = list(pool.map(execute, scenario.tasks))
    else:
        records = [execute(task) for task in scenario.tasks]
    return {
        "version": SCENARIO_VERSION,
        "overall_pass": all(r["pass"] for r in records),
        "tasks": records,
    }


def report_to_text(report: dict) -> str:
    lines = []
    for record in report["tasks"]:
        mark = "ok" if record["pass"] else "FAIL"
        name = record["name"] or f"task-{record['index']}"
        lines.append(f"[{mark}] {name} ({record['command']})")
        if not record["pass"]:
            for diff in record.get("diff", ()):
                lines.append(f"      diff: {json.dumps(diff, sort_keys=True)}")
    lines.append(f"overall: {'pass' if report['overall_pass'] else 'fail'}")
    return "\n".join(lines)


def exit_code_for(report: dict) -> int:
    return 0 if report["overall_pass"] else 1


__all__ = ["Scenario", "Task", "RunContext", "parse_scenario", "load_scenario",
           "run_scenario", "check_expectation", "report_to_text", "exit_code_for",
           "COMMANDS", "SCENARIO_VERSION", "SvfkitError"]
