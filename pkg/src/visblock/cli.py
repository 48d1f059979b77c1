"""Command line front end: generators, per-task analysis commands, and the
reproducible run/report harness.

A run directory is addressed by a hash of its normalized config, holds
inputs/, results/, logs/, and a manifest with hashes of every artifact.
Result files carry no timestamps, so re-running the same config rewrites
byte-identical results; wall times live only in the manifest.

Exit codes: 0 success, 2 a verified property failed, 3 every shortfall was
budget exhaustion, 4 bad input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import math
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from . import __version__
from .blocking import (
    BipartiteDrawing,
    is_blocking_set,
    midpoint_blocking_set,
    min_blocking_set,
    triangulation_lower_bound,
)
from .crossing import (
    cover_from_blockers,
    crossing_family_partition,
    crossing_graph,
    partition_size_floor,
)
from .drawings import construct_kn_arc_drawing, verify_drawing_blocking, verify_simplicity
from .errors import GeometryError
from .generators import KINDS, GeneratorSpec, generate
from .geometry import Point, PointSet, is_general_position, max_collinear
from .midpoints import midpoint_set, sum_set
from .visibility import (
    Colouring,
    big_line_big_clique_check,
    chromatic_number,
    clique_number,
    diameter,
    monochromatic_line_check,
    proposition1_check,
    visibility_graph,
)

log = logging.getLogger("visblock")

EXIT_OK = 0
EXIT_VERIFICATION = 2
EXIT_BUDGET = 3
EXIT_INPUT = 4

TASKS = ("visgraph", "block", "midpoints", "crossing", "drawing", "ramsey")
ENV_PREFIX = "VISBLOCK_"

MONO_LINE_CAP = 12  # 2^(n-1) colourings checked exhaustively up to here


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


@dataclass
class TaskOutcome:
    result: dict
    verification_failed: bool = False
    budget_exhausted: bool = False


def _as_pointset(obj) -> PointSet:
    if not isinstance(obj, PointSet):
        raise GeometryError("this task needs a point set, not a drawing bundle")
    return obj


def task_visgraph(obj, budget_ms: Optional[int]) -> TaskOutcome:
    ps = _as_pointset(obj)
    g = visibility_graph(ps)
    dia = diameter(g)
    om = clique_number(g, budget_ms)
    ch = chromatic_number(g, budget_ms)
    n = len(ps)
    checks: dict = {}
    failed = False
    if n >= 2 and max_collinear(ps) < n:
        checks["diameter_at_most_two"] = dia <= 2
        failed |= dia > 2
    else:
        checks["diameter_at_most_two"] = None
    if om.exact and ch.exact:
        checks["clique_at_most_chromatic"] = om.omega <= ch.chi
        failed |= om.omega > ch.chi
    else:
        checks["clique_at_most_chromatic"] = None
    result = {
        "n": n,
        "edge_count": g.edge_count(),
        "edges": [list(e) for e in g.edges()],
        "diameter": dia,
        "clique": om.to_obj(),
        "chromatic": ch.to_obj(),
        "checks": checks,
    }
    return TaskOutcome(result, failed, not (om.exact and ch.exact))


def task_block(obj, budget_ms: Optional[int]) -> TaskOutcome:
    if isinstance(obj, BipartiteDrawing):
        chk = obj.check()
        result = {
            "input": "drawing-bundle",
            "name": obj.name,
            "n": obj.n,
            "edge_count": len(obj.edges),
            "stated_blockers": len(obj.blockers),
            "check": chk.to_obj(),
        }
        failed = not chk.ok
        budget_hit = False
        if len(obj.edges) <= 12:
            bs = min_blocking_set(list(obj.edges), budget_ms)
            result["solver"] = bs.to_obj()
            budget_hit = not bs.optimal
        return TaskOutcome(result, failed, budget_hit)
    ps = _as_pointset(obj)
    bs = min_blocking_set(ps, budget_ms)
    chk = is_blocking_set(ps, bs.points)
    failed = not chk.ok
    lb = None
    if len(ps) >= 3 and is_general_position(ps):
        lb = triangulation_lower_bound(ps)
        if bs.optimal and bs.size < lb:
            failed = True
    result = {
        "input": "point-set",
        "n": len(ps),
        "blocking": bs.to_obj(),
        "check": chk.to_obj(),
        "lower_bound_triangulation": lb,
    }
    return TaskOutcome(result, failed, not bs.optimal)


def task_midpoints(obj, budget_ms: Optional[int]) -> TaskOutcome:
    ps = _as_pointset(obj)
    n = len(ps)
    if n < 2:
        raise GeometryError("midpoint analysis needs at least two points")
    mids = midpoint_set(ps)
    sums = sum_set(ps)
    m, s = len(mids), len(sums)
    failed = not (m <= s <= m + n)
    checks: dict = {"sandwich": m <= s <= m + n}
    result = {"n": n, "midpoints": m, "sumset": s, "checks": checks}
    if is_general_position(ps):
        disjoint = mids.isdisjoint(set(ps))
        checks["midpoints_avoid_set"] = disjoint
        failed |= not disjoint
        if n >= 3:
            mbs = midpoint_blocking_set(ps)
            mchk = is_blocking_set(ps, mbs.points)
            failed |= not mchk.ok
            result["midpoint_blocking"] = {"size": mbs.size, "check": mchk.to_obj()}
    else:
        checks["midpoints_avoid_set"] = None
    return TaskOutcome(result, failed)


def task_crossing(obj, budget_ms: Optional[int]) -> TaskOutcome:
    ps = _as_pointset(obj)
    g = crossing_graph(ps)
    part = crossing_family_partition(ps, budget_ms)
    floor = partition_size_floor(len(ps))
    result = {
        "n": len(ps),
        "segment_count": g.m,
        "crossing_pairs": len(g.crossing_pairs()),
        "partition": part.to_obj(),
        "partition_size": part.size,
        "size_floor": floor,
    }
    return TaskOutcome(result, part.size < floor, not part.exact)


def task_drawing(obj, budget_ms: Optional[int]) -> TaskOutcome:
    n = obj.n if isinstance(obj, BipartiteDrawing) else len(_as_pointset(obj))
    if n < 2:
        raise GeometryError("arc drawing needs n >= 2")
    d = construct_kn_arc_drawing(n)
    blocking = verify_drawing_blocking(d)
    simplicity = verify_simplicity(d)
    result = {
        "n": n,
        "edge_count": len(d.edges),
        "blocker_count": len(d.blockers),
        "blocking": blocking.to_obj(),
        "simplicity": simplicity.to_obj(),
        "drawing": d.to_obj(),
    }
    return TaskOutcome(result, not (blocking.ok and simplicity.ok))


def task_ramsey(obj, budget_ms: Optional[int]) -> TaskOutcome:
    ps = _as_pointset(obj)
    n = len(ps)
    result: dict = {"n": n}
    failed = False
    budget_hit = False
    if n >= 3:
        try:
            verdict = big_line_big_clique_check(ps, 3, 3, budget_ms)
        except GeometryError as exc:
            if "budget" not in str(exc):
                raise
            result["line_or_clique"] = {"kind": "unknown", "message": str(exc)}
            budget_hit = True
        else:
            result["line_or_clique"] = verdict.to_obj()
            failed |= verdict.kind == "neither"
    g = visibility_graph(ps)
    ch = chromatic_number(g, budget_ms)
    if ch.exact:
        rep = proposition1_check(ps, ch.colouring)
        result["largest_class_certificate"] = rep.to_obj()
        failed |= not (rep.proper and rep.s >= rep.s_lower and rep.is_blocked)
    else:
        budget_hit = True
    if n >= 2 and max_collinear(ps) < n and n <= MONO_LINE_CAP:
        missing = 0
        checked = 0
        for bits in range(1 << (n - 1)):  # colour of point 0 fixed by symmetry
            colours = tuple(1 + (bits >> i & 1) for i in range(n - 1))
            col = Colouring(2, (1,) + colours)
            checked += 1
            if monochromatic_line_check(ps, col) is None:
                missing += 1
        result["mono_line_two_colourings"] = {
            "checked": checked,
            "missing": missing,
            "all_present": missing == 0,
        }
        failed |= missing > 0
    else:
        result["mono_line_two_colourings"] = None
    return TaskOutcome(result, failed, budget_hit)


TASK_FNS = {
    "visgraph": task_visgraph,
    "block": task_block,
    "midpoints": task_midpoints,
    "crossing": task_crossing,
    "drawing": task_drawing,
    "ramsey": task_ramsey,
}


@dataclass(frozen=True)
class ExperimentConfig:
    generator: GeneratorSpec
    tasks: tuple[str, ...]
    budgets_ms: dict = field(default_factory=dict)
    output_dir: str = "runs"
    formats: tuple[str, ...] = ("json",)

    def __post_init__(self):
        if not self.tasks:
            raise GeometryError("config needs at least one task")
        for t in self.tasks:
            if t not in TASKS:
                raise GeometryError(f"unknown task {t!r}; pick from {TASKS}")
        for t, b in self.budgets_ms.items():
            if t not in TASKS:
                raise GeometryError(f"budget for unknown task {t!r}")
            if not isinstance(b, int) or b < 0:
                raise GeometryError(f"budget for {t!r} must be a non-negative integer")
        for f in self.formats:
            if f not in ("json", "csv"):
                raise GeometryError(f"unknown format {f!r}")

    def to_obj(self) -> dict:
        return {
            "generator": self.generator.to_obj(),
            "tasks": list(self.tasks),
            "budgets_ms": dict(sorted(self.budgets_ms.items())),
            "output_dir": self.output_dir,
            "formats": list(self.formats),
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "ExperimentConfig":
        if not isinstance(obj, dict):
            raise GeometryError("config must be a JSON object")
        try:
            gen = GeneratorSpec.from_obj(obj["generator"])
            tasks = tuple(obj["tasks"])
        except KeyError as exc:
            raise GeometryError(f"config missing {exc}") from exc
        return cls(
            gen,
            tasks,
            dict(obj.get("budgets_ms", {})),
            str(obj.get("output_dir", "runs")),
            tuple(obj.get("formats", ["json"])),
        )


def _config_hash(config: ExperimentConfig) -> str:
    blob = json.dumps(config.to_obj(), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


def run(config: ExperimentConfig) -> Path:
    """Execute all tasks; always returns the run directory. Failures are
    recorded in the manifest, never swallowed silently."""
    run_dir = Path(config.output_dir) / f"run-{_config_hash(config)}"
    for sub in ("inputs", "results", "logs"):
        (run_dir / sub).mkdir(parents=True, exist_ok=True)
    handler = logging.FileHandler(run_dir / "logs" / "run.log", mode="w")
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.INFO)
    manifest: dict = {
        "run_id": run_dir.name,
        "package_version": __version__,
        "python_version": sys.version.split()[0],
        "generator": config.generator.to_obj(),
        "budgets_ms": dict(sorted(config.budgets_ms.items())),
        "tasks": {},
        "cross_checks": {},
    }
    outcomes: dict[str, TaskOutcome] = {}
    try:
        (run_dir / "config.json").write_text(_dumps(config.to_obj()))
        try:
            subject = generate(config.generator)
        except GeometryError as exc:
            log.error("generation failed: %s", exc)
            manifest["generation"] = {"status": "error", "message": str(exc)}
            subject = None
        else:
            manifest["generation"] = {"status": "ok"}
            name = "drawing.json" if isinstance(subject, BipartiteDrawing) else "points.json"
            (run_dir / "inputs" / name).write_text(_dumps(subject.to_obj()))
        for task in config.tasks:
            entry: dict = {"budget_ms": config.budgets_ms.get(task)}
            if subject is None:
                entry["status"] = "skipped"
                manifest["tasks"][task] = entry
                continue
            t0 = time.perf_counter()
            try:
                outcome = TASK_FNS[task](subject, config.budgets_ms.get(task))
            except GeometryError as exc:
                log.error("task %s failed: %s", task, exc)
                entry["status"] = "error"
                entry["message"] = str(exc)
            else:
                outcomes[task] = outcome
                if outcome.verification_failed:
                    entry["status"] = "verification_failed"
                elif outcome.budget_exhausted:
                    entry["status"] = "budget_exhausted"
                else:
                    entry["status"] = "ok"
                (run_dir / "results" / f"{task}.json").write_text(_dumps(outcome.result))
            entry["wall_ms"] = round((time.perf_counter() - t0) * 1000, 3)
            manifest["tasks"][task] = entry
        _cross_checks(subject, outcomes, manifest)
        hashes = {}
        for sub in ("inputs", "results"):
            for f in sorted((run_dir / sub).glob("*.json")):
                hashes[f"{sub}/{f.name}"] = _sha256(f)
        manifest["artifact_hashes"] = hashes
        (run_dir / "manifest.json").write_text(_dumps(manifest))
    finally:
        log.removeHandler(handler)
        handler.close()
    return run_dir


def _cross_checks(subject, outcomes: dict[str, TaskOutcome], manifest: dict) -> None:
    block = outcomes.get("block")
    cross = outcomes.get("crossing")
    if (
        isinstance(subject, PointSet)
        and block is not None
        and cross is not None
        and block.result.get("input") == "point-set"
        and block.result["blocking"]["optimal"]
        and cross.result["partition"]["exact"]
    ):
        t = cross.result["partition_size"]
        b = block.result["blocking"]["size"]
        ok = t <= b
        try:
            blockers = [Point.from_obj(p) for p in block.result["blocking"]["blockers"]]
            witness = cover_from_blockers(subject, blockers)
            ok = ok and witness.size <= b
        except GeometryError as exc:
            log.error("blocker-induced cover failed: %s", exc)
            ok = False
        manifest["cross_checks"]["partition_at_most_blocking"] = ok
        if not ok:
            for name in ("block", "crossing"):
                manifest["tasks"][name]["status"] = "verification_failed"


def exit_code_from_manifest(manifest: dict) -> int:
    statuses = [t["status"] for t in manifest.get("tasks", {}).values()]
    if manifest.get("generation", {}).get("status") == "error":
        return EXIT_INPUT
    if any(s == "error" for s in statuses):
        return EXIT_INPUT
    if any(s == "verification_failed" for s in statuses):
        return EXIT_VERIFICATION
    if any(s == "budget_exhausted" for s in statuses):
        return EXIT_BUDGET
    return EXIT_OK


# reporting

REPORT_COLUMNS = ("n", "bound_3n_3_t", "b", "m", "t", "n2_over_14", "n_ln_n")


def _load_run(run_dir: Path) -> dict:
    mf = run_dir / "manifest.json"
    if not mf.is_file():
        raise GeometryError(f"run {run_dir}: missing manifest.json")
    try:
        manifest = json.loads(mf.read_text())
    except json.JSONDecodeError as exc:
        raise GeometryError(f"run {run_dir}: unreadable manifest: {exc}") from exc
    results = {}
    for f in sorted((run_dir / "results").glob("*.json")):
        try:
            results[f.stem] = json.loads(f.read_text())
        except json.JSONDecodeError as exc:
            raise GeometryError(f"run {run_dir}: unreadable result {f.name}: {exc}") from exc
    return {"dir": run_dir, "manifest": manifest, "results": results}


def report(run_dirs: list[Path], out_dir: Path) -> dict[str, Path]:
    if not run_dirs:
        raise GeometryError("report needs at least one run directory")
    runs = [_load_run(Path(d)) for d in run_dirs]
    rows = []
    drawing_rows = []
    for r in runs:
        res = r["results"]
        ns = {v.get("n") for v in res.values() if isinstance(v, dict) and "n" in v}
        if len(ns) > 1:
            raise GeometryError(f"run {r['dir']}: results disagree on n: {sorted(ns)}")
        if "drawing" in res:
            d = res["drawing"]
            for key in ("n", "blocker_count", "blocking", "simplicity"):
                if key not in d:
                    raise GeometryError(f"run {r['dir']}: drawing result missing {key!r}")
            drawing_rows.append(
                (d["n"], d["blocker_count"],
                 d["blocking"]["ok"] and d["simplicity"]["ok"])
            )
        point_tasks = [t for t in ("visgraph", "block", "midpoints", "crossing") if t in res]
        if not point_tasks:
            continue
        if not ns:
            raise GeometryError(f"run {r['dir']}: no result reports n")
        n = ns.pop()
        row: dict = {"n": n}
        blk = res.get("block")
        if blk is not None and blk.get("input") == "point-set":
            if "blocking" not in blk:
                raise GeometryError(f"run {r['dir']}: block result missing 'blocking'")
            row["b"] = blk["blocking"]["size"]
            if blk.get("lower_bound_triangulation") is not None:
                row["bound_3n_3_t"] = blk["lower_bound_triangulation"]
        mid = res.get("midpoints")
        if mid is not None:
            if "midpoints" not in mid:
                raise GeometryError(f"run {r['dir']}: midpoints result missing count")
            row["m"] = mid["midpoints"]
        crs = res.get("crossing")
        if crs is not None:
            if "partition_size" not in crs:
                raise GeometryError(f"run {r['dir']}: crossing result missing size")
            row["t"] = crs["partition_size"]
        row["n2_over_14"] = n * n / 14
        row["n_ln_n"] = n * math.log(n) if n >= 1 else 0.0
        rows.append(row)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: dict[str, Path] = {}
    rows.sort(key=lambda r: r["n"])
    summary = out_dir / "summary.csv"
    with open(summary, "w") as fh:
        fh.write(",".join(REPORT_COLUMNS) + "\n")
        for row in rows:
            cells = []
            for col in REPORT_COLUMNS:
                v = row.get(col, "")
                cells.append(f"{v:.4f}" if isinstance(v, float) else str(v))
            fh.write(",".join(cells) + "\n")
    written["summary"] = summary
    for col in ("b", "m", "t"):
        pts = [(row["n"], row[col]) for row in rows if col in row]
        if not pts:
            continue
        p = out_dir / f"plot_{col}.txt"
        p.write_text("".join(f"{n} {v}\n" for n, v in pts))
        written[f"plot_{col}"] = p
    if drawing_rows:
        drawing_rows.sort()
        p = out_dir / "drawing_table.csv"
        with open(p, "w") as fh:
            fh.write("n,blockers,verified\n")
            for n, blockers, ok in drawing_rows:
                fh.write(f"{n},{blockers},{ok}\n")
        written["drawing_table"] = p
    return written


# argument parsing

def _env_default(name: str, cast=str):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return None
    try:
        return cast(raw)
    except ValueError:
        raise GeometryError(f"environment variable {ENV_PREFIX + name} is not valid: {raw!r}")


def _load_subject(path: str):
    try:
        obj = json.loads(open(path).read())
    except OSError as exc:
        raise GeometryError(f"cannot read input {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GeometryError(f"input {path} is not valid JSON: {exc}") from exc
    if isinstance(obj, dict) and "left" in obj:
        return BipartiteDrawing.from_obj(obj)
    if isinstance(obj, dict) and "points" in obj:
        return PointSet.from_obj(obj)
    raise GeometryError(f"input {path} holds neither a point set nor a drawing bundle")


def _spec_from_args(args) -> GeneratorSpec:
    params: dict = {}
    for key in ("n", "w", "h", "bound", "seed"):
        v = getattr(args, key, None)
        if v is not None:
            params[key] = v
    if args.kind == "random_general_position" and "seed" not in params:
        env_seed = _env_default("SEED", int)
        if env_seed is not None:
            params["seed"] = env_seed
    if getattr(args, "path", None):
        params["path"] = args.path
    if getattr(args, "progression", None):
        try:
            params.update(json.loads(args.progression))
        except json.JSONDecodeError as exc:
            raise GeometryError(f"--progression is not valid JSON: {exc}") from exc
    return GeneratorSpec(
        args.kind,
        params,
        getattr(args, "max_collinear", None),
        bool(getattr(args, "dedupe_symmetry", False)),
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="visblock",
        description="Exact experiments on visibility, blocking sets, midpoints, "
        "crossings, and drawings of planar point sets.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit a point set or drawing bundle")
    gen.add_argument("--kind", required=True, choices=list(KINDS))
    gen.add_argument("--n", type=int)
    gen.add_argument("--w", type=int)
    gen.add_argument("--h", type=int)
    gen.add_argument("--bound", type=int)
    gen.add_argument("--seed", type=int)
    gen.add_argument("--path")
    gen.add_argument("--progression", help="JSON with v0, generators, extents")
    gen.add_argument("--max-collinear", type=int, dest="max_collinear")
    gen.add_argument("--dedupe-symmetry", action="store_true", dest="dedupe_symmetry")
    gen.add_argument("--output-dir")

    for name, blurb in (
        ("visgraph", "visibility graph, diameter, clique and colouring"),
        ("block", "minimum blocking set or bundle verification"),
        ("midpoints", "midpoint and sumset arithmetic"),
        ("crossing", "crossing graph and family partition"),
        ("drawing", "arc drawing construction and verification"),
        ("ramsey", "line-or-clique and colouring certificates"),
    ):
        p = sub.add_parser(name, help=blurb)
        if name == "drawing":
            p.add_argument("--input", help="point set JSON (its size sets n)")
            p.add_argument("--n", type=int, help="number of vertices, instead of --input")
        else:
            p.add_argument("--input", required=True)
        p.add_argument("--budget-ms", type=int, dest="budget_ms")
        p.add_argument("--output-dir")
        p.add_argument("--format", choices=["json"], default="json")

    rn = sub.add_parser("run", help="execute an experiment config")
    rn.add_argument("--config", required=True)
    rn.add_argument("--output-dir")
    rn.add_argument("--budget-ms", type=int, dest="budget_ms",
                    help="default budget for tasks without one")

    rp = sub.add_parser("report", help="aggregate run directories into tables")
    rp.add_argument("dirs", nargs="+")
    rp.add_argument("--output-dir")
    rp.add_argument("--format", choices=["csv"], default="csv")
    return parser


def _emit(payload: dict, output_dir: Optional[str], filename: str) -> None:
    text = _dumps(payload)
    if output_dir:
        out = Path(output_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / filename).write_text(text)
        print(out / filename)
    else:
        sys.stdout.write(text)


def main(argv: Optional[list[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _dispatch(args) -> int:
    output_dir = getattr(args, "output_dir", None) or _env_default("OUTPUT_DIR")
    budget = getattr(args, "budget_ms", None)
    if budget is None:
        budget = _env_default("BUDGET_MS", int)

    if args.command == "generate":
        subject = generate(_spec_from_args(args))
        name = "drawing.json" if isinstance(subject, BipartiteDrawing) else "points.json"
        _emit(subject.to_obj(), output_dir, name)
        return EXIT_OK

    if args.command in TASKS:
        if args.command == "drawing" and args.input is None:
            if args.n is None:
                raise GeometryError("drawing needs --input or --n")
            subject: Union[PointSet, BipartiteDrawing] = PointSet.build(
                [(i, 0) for i in range(1, args.n + 1)], name=f"path-{args.n}"
            )
        else:
            subject = _load_subject(args.input)
        outcome = TASK_FNS[args.command](subject, budget)
        _emit(outcome.result, output_dir, f"{args.command}.json")
        if outcome.verification_failed:
            return EXIT_VERIFICATION
        if outcome.budget_exhausted:
            return EXIT_BUDGET
        return EXIT_OK

    if args.command == "run":
        try:
            cfg_obj = json.loads(open(args.config).read())
        except OSError as exc:
            raise GeometryError(f"cannot read config {args.config}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise GeometryError(f"config {args.config} is not valid JSON: {exc}") from exc
        config = ExperimentConfig.from_obj(cfg_obj)
        if output_dir:
            config = ExperimentConfig(
                config.generator, config.tasks, config.budgets_ms,
                output_dir, config.formats,
            )
        if budget is not None:
            budgets = {t: config.budgets_ms.get(t, budget) for t in config.tasks}
            config = ExperimentConfig(
                config.generator, config.tasks, budgets,
                config.output_dir, config.formats,
            )
        run_dir = run(config)
        manifest = json.loads((run_dir / "manifest.json").read_text())
        print(run_dir)
        return exit_code_from_manifest(manifest)

    if args.command == "report":
        written = report([Path(d) for d in args.dirs], Path(output_dir or "."))
        for p in sorted(written.values()):
            print(p)
        return EXIT_OK

    raise GeometryError(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
