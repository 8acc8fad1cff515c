"""Command line: ``polar-ch2 {verify-all,check,lemma-suite,orbits,basis}``.

Exit codes: 0 all checks pass, 1 a check failed, 2 bad input or configuration.
Seed precedence: ``--seed``, then ``$POLAR_CH2_SEED``, then 0.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import jsonschema

from . import ball, suites
from .catalog import catalog, entry
from .criterion import NotSubalgebraError, NotTotallyGeodesicError, is_polar_with_section, section_type
from .lemma import run_lemma_suite
from .lie import LieElt, Mat3, NotInAlgebraError, raw_coords
from .roots import NAMES, P_NAMES, bracket_table, frame
from .scalars import QSqrt3
from .subspace import span

SEED_ENV = "POLAR_CH2_SEED"

SCALAR = {"type": ["integer", "string"]}
SUBALGEBRA_SCHEMA = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "basis": {"type": "array", "items": {"type": "array", "items": SCALAR, "minItems": 8, "maxItems": 8}},
        "matrices": {"type": "array", "items": {
            "type": "array", "minItems": 3, "maxItems": 3,
            "items": {"type": "array", "items": {"type": "string"}, "minItems": 3, "maxItems": 3}}},
    },
    "oneOf": [{"required": ["basis"]}, {"required": ["matrices"]}],
    "additionalProperties": False,
}
SECTION_SCHEMA = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "basis": {"type": "array", "items": {"type": "array", "items": SCALAR, "minItems": 4, "maxItems": 4}},
    },
    "required": ["basis"],
    "additionalProperties": False,
}


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    seed: int
    samples: int = suites.DEFAULT_SAMPLES
    grid: str | None = None
    fmt: str = "text"
    out: Path | None = None
    jobs: int = 1


def resolve_seed(arg: int | None) -> int:
    if arg is not None:
        return arg
    env = os.environ.get(SEED_ENV)
    if env is None or env == "":
        return suites.DEFAULT_SEED
    try:
        return int(env)
    except ValueError as exc:
        raise ConfigError(f"{SEED_ENV}={env!r} is not an integer") from exc


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# --- input files ---------------------------------------------------------------------

def _load(path: str, schema: dict):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"{path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    errors = sorted(jsonschema.Draft202012Validator(schema).iter_errors(data), key=lambda e: list(e.path))
    if errors:
        lines = [f"{path}: {'/'.join(str(p) for p in e.path) or '<root>'}: {e.message}" for e in errors]
        raise ConfigError("\n".join(lines))
    return data


def _scalar(x, where: str) -> QSqrt3:
    try:
        return QSqrt3.coerce(x) if isinstance(x, int) else QSqrt3.parse(x)
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"{where}: cannot parse {x!r} as an element of Q(sqrt3)") from exc


def load_subalgebra(path: str):
    data = _load(path, SUBALGEBRA_SCHEMA)
    f = frame()
    if "basis" in data:
        vecs = [[_scalar(x, f"{path}: basis/{i}/{j}") for j, x in enumerate(v)] for i, v in enumerate(data["basis"])]
    else:
        vecs = []
        for i, rows in enumerate(data["matrices"]):
            try:
                m = LieElt(Mat3.from_strings(rows))
            except NotInAlgebraError as exc:
                raise ConfigError(f"{path}: matrices/{i}: not in su(1,2): {exc}") from exc
            except ValueError as exc:
                raise ConfigError(f"{path}: matrices/{i}: {exc}") from exc
            vecs.append(f.coords(m))
    return span(vecs, 8)


def load_section(path: str):
    data = _load(path, SECTION_SCHEMA)
    vecs = [[_scalar(x, f"{path}: basis/{i}/{j}") for j, x in enumerate(v)] for i, v in enumerate(data["basis"])]
    return span(vecs, 4)


# --- rendering ----------------------------------------------------------------------------

def catalog_markdown(report: dict) -> str:
    lines = ["| id | h | section | in normal | slice | bracket | cohomogeneity | verdict |",
             "|---|---|---|---|---|---|---|---|"]
    for r in report["catalog"]["entries"]:
        c = r.get("checks", {})
        lines.append("| {} | {} | {} | {} | {} | {} | {} | {} |".format(
            r["id"], r["h"], r["section"], c.get("section_in_normal"), c.get("slice_section"),
            c.get("bracket_orthogonality"), r.get("cohomogeneity"), "polar" if r["passed"] else "FAIL"))
    lines.append("")
    for name in ("structure", "catalog", "lemma", "numerical"):
        lines.append(f"- {name}: {'pass' if report[name]['passed'] else 'FAIL'}")
    lines.append(f"- overall: {'pass' if report['passed'] else 'FAIL'}")
    return "\n".join(lines) + "\n"


def catalog_text(report: dict) -> str:
    out = []
    for r in report["catalog"]["entries"]:
        out.append(f"{r['id']:5s} {'polar' if r['passed'] else 'FAIL':5s}  h = {r['h']}; s = {r['section']}")
        for res in r.get("residuals", []):
            out.append(f"        {res['check']}: {' | '.join(res['witness'])} -> {res['value']}")
        if "error" in r:
            out.append(f"        {r['error']}")
    for name in ("structure", "catalog", "lemma", "numerical"):
        out.append(f"{name}: {'pass' if report[name]['passed'] else 'FAIL'}")
    out.append(f"{report['catalog']['polar_count']}/{len(report['catalog']['entries'])} catalog entries polar")
    return "\n".join(out) + "\n"


# --- commands ------------------------------------------------------------------------------

def cmd_verify_all(cfg: RunConfig, fault: str | None) -> int:
    if fault is not None and fault not in {e.id for e in catalog()}:
        raise ConfigError(f"unknown catalog entry {fault!r}")
    report = suites.verify_all(cfg.seed, cfg.samples, cfg.jobs, fault)
    if cfg.fmt == "json":
        sys.stdout.write(dump_json(report))
    elif cfg.fmt == "markdown":
        sys.stdout.write(catalog_markdown(report))
    else:
        sys.stdout.write(catalog_text(report))
    return 0 if report["passed"] else 1


def cmd_check(cfg: RunConfig, h_file: str, s_file: str) -> int:
    h = load_subalgebra(h_file)
    s = load_section(s_file)
    try:
        section_type(s)
        rep = is_polar_with_section(h, s)
    except NotSubalgebraError as exc:
        raise ConfigError(str(exc)) from exc
    except NotTotallyGeodesicError as exc:
        raise ConfigError(str(exc)) from exc
    out = rep.to_dict()
    out["section_type"] = section_type(s)
    out["note"] = "a negative verdict rules out this section only, not polarity of the action"
    if cfg.fmt == "json":
        sys.stdout.write(dump_json(out))
    else:
        sys.stdout.write(f"verdict: {'polar with this section' if rep.verdict else 'not polar with this section'}\n")
        for k, v in rep.checks.items():
            sys.stdout.write(f"  {k}: {v}\n")
        for r in rep.residuals:
            sys.stdout.write(f"  {r.check}: {' | '.join(r.witness)} -> {r.value}\n")
        sys.stdout.write(f"cohomogeneity: {rep.cohomogeneity}; section type: {out['section_type']}\n")
    return 0 if rep.verdict else 1


def cmd_lemma(cfg: RunConfig) -> int:
    report = run_lemma_suite(cfg.samples, cfg.seed, max(50, cfg.samples // 2))
    if cfg.fmt == "json":
        sys.stdout.write(dump_json(report))
    else:
        sys.stdout.write(f"Y=0 accepted: {report['Y=0']['accepted']} "
                         f"(rejected unconstrained: {report['Y=0']['rejected_unconstrained']})\n")
        sys.stdout.write(f"Y!=0 accepted: {report['Y!=0']['accepted']} "
                         f"(a forced to 0: {report['Y!=0']['a_forced_zero']})\n")
        sys.stdout.write(f"conjugations: {report['conjugations']['exact_matches']}\n")
        sys.stdout.write(f"impossibility checks: {'pass' if report['impossibility']['passed'] else 'FAIL'}\n")
        for fl in report["failures"]:
            sys.stdout.write(f"FAIL {fl}\n")
        sys.stdout.write(f"{'pass' if report['passed'] else 'FAIL'}\n")
    return 0 if report["passed"] else 1


def _parse_point(text: str | None, seed: int) -> ball.BallPoint:
    if text is None:
        import numpy as np

        return ball.random_point(np.random.default_rng(seed), 0.6)
    try:
        vals = [float(v) for v in text.split(",")]
        if len(vals) != 4:
            raise ValueError
        return ball.BallPoint.from_real(vals)
    except ValueError as exc:
        raise ConfigError(f"--base expects x1,y1,x2,y2 inside the unit ball, got {text!r}") from exc


def cmd_orbits(cfg: RunConfig, entry_id: str, base: str | None) -> int:
    try:
        e = entry(entry_id)
    except KeyError as exc:
        raise ConfigError(str(exc.args[0])) from exc
    try:
        n, radius = ball.parse_grid(cfg.grid or "5")
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    p0 = _parse_point(base, cfg.seed)
    cloud = ball.orbit_cloud(e, p0, n, radius, seed=cfg.seed)
    out = cfg.out or Path(".")
    out.mkdir(parents=True, exist_ok=True)
    stem = entry_id.replace(".", "_")
    csv_path = cloud.write_csv(out / f"orbit_{stem}.csv")
    json_path = cloud.write_json(out / f"orbit_{stem}.json")
    sys.stdout.write(f"{len(cloud)} points -> {csv_path}, {json_path}\n")
    return 0


def basis_dict() -> dict:
    f = frame()
    return {
        "names": list(NAMES),
        "matrices": {n: x.m.to_strings() for n, x in zip(NAMES, f.elements)},
        "raw_coordinates": {n: [str(c) for c in raw_coords(x)] for n, x in zip(NAMES, f.elements)},
        "gram": [[str(c) for c in row] for row in f.gram],
        "bracket_table": bracket_table(),
        "p_names": list(P_NAMES),
    }


def cmd_basis(cfg: RunConfig) -> int:
    d = basis_dict()
    if cfg.fmt == "json":
        sys.stdout.write(dump_json(d))
        return 0
    for n in NAMES:
        sys.stdout.write(f"{n}:\n")
        for row in d["matrices"][n]:
            sys.stdout.write("  [" + ", ".join(f"{x:>12s}" for x in row) + "]\n")
    sys.stdout.write("\nbracket table [row, column]:\n")
    width = max(len(c) for row in d["bracket_table"] for c in row) + 2
    sys.stdout.write(" " * 5 + "".join(f"{n:>{width}s}" for n in NAMES) + "\n")
    for n, row in zip(NAMES, d["bracket_table"]):
        sys.stdout.write(f"{n:>5s}" + "".join(f"{c:>{width}s}" for c in row) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polar-ch2", description="Exact checks of polar actions on CH^2.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, samples=True):
        sp.add_argument("--seed", type=int, default=None, help=f"random seed (default ${SEED_ENV} or 0)")
        if samples:
            sp.add_argument("--samples", type=int, default=suites.DEFAULT_SAMPLES)

    v = sub.add_parser("verify-all", help="structure, catalog, lemma and numerical suites")
    common(v)
    fmt = v.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--markdown", action="store_true")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--fault", metavar="ENTRY", help="replace the section of ENTRY by p_alpha")

    c = sub.add_parser("check", help="run the criterion on a subalgebra and section")
    c.add_argument("--subalgebra", required=True)
    c.add_argument("--section", required=True)
    c.add_argument("--json", action="store_true")

    lsp = sub.add_parser("lemma-suite", help="replay the two-dimensional subalgebra analysis")
    common(lsp)
    lsp.add_argument("--json", action="store_true")

    o = sub.add_parser("orbits", help="export an orbit point cloud in the ball model")
    common(o, samples=False)
    o.add_argument("--entry", required=True)
    o.add_argument("--out", type=Path, default=Path("."))
    o.add_argument("--grid", default="5", help="N or N:R (N samples per parameter on [-R, R])")
    o.add_argument("--base", help="base point x1,y1,x2,y2 (default: seeded random point)")

    b = sub.add_parser("basis", help="canonical basis matrices and bracket table")
    g = b.add_mutually_exclusive_group()
    g.add_argument("--print", action="store_true", help="plain text (default)")
    g.add_argument("--json", action="store_true")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        seed = resolve_seed(getattr(args, "seed", None))
        fmt = "json" if getattr(args, "json", False) else "markdown" if getattr(args, "markdown", False) else "text"
        samples = getattr(args, "samples", suites.DEFAULT_SAMPLES)
        if samples < 1:
            raise ConfigError("--samples must be positive")
        jobs = getattr(args, "jobs", 1)
        if jobs < 1:
            raise ConfigError("--jobs must be positive")
        cfg = RunConfig(args.command, seed, samples, getattr(args, "grid", None), fmt,
                        getattr(args, "out", None), jobs)
        if args.command == "verify-all":
            return cmd_verify_all(cfg, args.fault)
        if args.command == "check":
            return cmd_check(cfg, args.subalgebra, args.section)
        if args.command == "lemma-suite":
            return cmd_lemma(cfg)
        if args.command == "orbits":
            return cmd_orbits(cfg, args.entry, args.base)
        return cmd_basis(cfg)
    except ConfigError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
