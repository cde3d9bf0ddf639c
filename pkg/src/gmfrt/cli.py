"""Command-line entry point: ``gmfrt {construct,metrics,verify,enumerate,simulate,improve}``.

Machine-readable output goes to stdout (or ``--output``), diagnostics to
stderr. Exit status: 0 success, 1 domain or usage error, 2 verification
mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import extremal, formats, metrics, oracle, trees
from .errors import AlreadyExtremalError, GmfrtError
from .graph import Graph, is_tree

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2
SEED_ENV = "GMFRT_SEED"

VERIFY_HEADER = [
    "n",
    "m",
    "min_gmfrt",
    "min_gmfrt_decimal",
    "max_gmfrt",
    "max_gmfrt_decimal",
    "min_profile",
    "max_profile",
    "construction_match",
]
SIMULATE_HEADER = [
    "vertex",
    "degree",
    "samples",
    "mean_frt",
    "std_error",
    "predicted",
    "predicted_decimal",
    "z_score",
    "max_steps_hit",
    "seed",
]
MODES = {"sequences": "degree_sequences", "labeled": "labeled_graphs"}


class UsageError(GmfrtError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1, keeping 2 for verification mismatches
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    subcommand: str
    n: int | None = None
    m: int | None = None
    seed: int = 0
    trials: int | None = None
    n_max: int | None = None
    format: str = "graph6"
    input: str | None = None
    output: str | None = None
    direction: str | None = None
    graph_kind: str | None = None  # construct --graph
    tree_kind: str | None = None  # construct --tree
    tree: bool = False  # improve --tree
    mode: str = "sequences"
    start: int | None = None
    all_vertices: bool = False
    max_steps: int = 10**8
    sidecar: str | None = None
    as_json: bool = False
    count_only: bool = False
    workers: int = 1

    def validate(self) -> None:
        def positive(name: str, value: int | None, minimum: int = 1) -> None:
            if value is not None and value < minimum:
                raise UsageError(f"--{name.replace('_', '-')} must be >= {minimum}, got {value}")

        positive("n", self.n)
        positive("m", self.m, 0)
        positive("trials", self.trials)
        positive("n_max", self.n_max, 2)
        positive("max_steps", self.max_steps)
        positive("workers", self.workers)
        if self.seed < 0 or self.seed >= 1 << 64:
            raise UsageError("--seed must be an unsigned 64-bit integer")
        sc = self.subcommand
        if sc == "construct":
            if (self.graph_kind is None) == (self.tree_kind is None):
                raise UsageError("construct needs exactly one of --graph or --tree")
            if self.n is None:
                raise UsageError("construct needs --n")
            if self.graph_kind and self.m is None:
                raise UsageError("construct --graph needs --m")
            if self.tree_kind and self.m is not None and self.m != self.n - 1:
                raise UsageError("--tree builds trees; --m must be omitted or equal n - 1")
        elif sc == "enumerate":
            if self.n is None or self.m is None:
                raise UsageError("enumerate needs --n and --m")
        elif sc == "simulate":
            if self.input is None or self.trials is None:
                raise UsageError("simulate needs --graph and --trials")
            if self.all_vertices == (self.start is not None):
                raise UsageError("simulate needs exactly one of --start or --all-vertices")
        elif sc == "improve":
            if self.input is None or self.direction is None:
                raise UsageError("improve needs --input and --direction")
            if self.direction == "min" and not self.tree:
                raise UsageError("--direction min is only defined for trees (add --tree)")


def _frac(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _profile_str(profiles) -> str:
    return "|".join(" ".join(str(d) for d in p) for p in profiles)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_graph(path: str) -> Graph:
    return formats.read_graph(_read_text(path))


def _construct(cfg: RunConfig) -> int:
    if cfg.tree_kind:
        g = trees.build_path(cfg.n) if cfg.tree_kind == "path" else trees.build_star(cfg.n)
        value = trees.min_tree_gmfrt(cfg.n) if cfg.tree_kind == "path" else trees.max_tree_gmfrt(cfg.n)
        meta = {
            "objective": "min" if cfg.tree_kind == "path" else "max",
            "case_id": cfg.tree_kind,
            "k": None,
            "l": None,
        }
    else:
        build = extremal.build_min_gmfrt_graph if cfg.graph_kind == "min" else extremal.build_max_gmfrt_graph
        res = build(cfg.n, cfg.m)
        g, value = res.graph, res.predicted_gmfrt
        k = _frac(res.k) if isinstance(res.k, Fraction) else res.k
        meta = {"objective": res.objective, "case_id": res.case_id, "k": k, "l": res.l}
    rendered = formats.render(g, cfg.format)
    sidecar = {
        "n": g.n,
        "m": g.m,
        **meta,
        "degrees": sorted(g.degrees, reverse=True),
        "predicted_gmfrt": _frac(value),
        "predicted_gmfrt_decimal": metrics.decimal(value),
    }
    if cfg.as_json:
        _emit(json.dumps({"format": cfg.format, "graph": rendered, **sidecar}) + "\n", cfg.output)
    else:
        _emit(rendered, cfg.output)
    if cfg.sidecar:
        with open(cfg.sidecar, "w", encoding="utf-8") as fh:
            json.dump(sidecar, fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def _metrics(cfg: RunConfig) -> int:
    g = _load_graph(cfg.input or "-")
    _emit(json.dumps(metrics.report(g).to_json()) + "\n", cfg.output)
    return EXIT_OK


def _verify(cfg: RunConfig) -> int:
    method = MODES[cfg.mode]
    report = oracle.certify_constructions(
        cfg.n_max,
        method=method,
        seed=cfg.seed,
        workers=cfg.workers,
        progress=lambda n, m: print(f"certifying n={n} m={m}", file=sys.stderr) if m == n - 1 else None,
    )
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(VERIFY_HEADER)
    for row in report.rows:
        c = row.certificate
        writer.writerow(
            [
                row.n,
                row.m,
                _frac(c.min_gmfrt),
                metrics.decimal(c.min_gmfrt),
                _frac(c.max_gmfrt),
                metrics.decimal(c.max_gmfrt),
                _profile_str(c.min_profiles),
                _profile_str(c.max_profiles),
                str(row.construction_match).lower(),
            ]
        )
    _emit(buf.getvalue(), cfg.output)
    for row in report.violations:
        for problem in row.problems:
            print(f"MISMATCH n={row.n} m={row.m}: {problem}", file=sys.stderr)
    for prof in report.realization_failures:
        print(f"REALIZATION FAILURE {list(prof)}", file=sys.stderr)
    print(
        f"{len(report.rows)} (n, m) pairs, {len(report.violations)} mismatches, "
        f"{report.realization_checks} spot realizations, {len(report.realization_failures)} failed",
        file=sys.stderr,
    )
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _enumerate(cfg: RunConfig) -> int:
    if cfg.mode == "labeled":
        items = (formats.to_graph6(g) for g in oracle.enumerate_connected_labeled(cfg.n, cfg.m))
    else:
        items = (
            " ".join(map(str, ds.degrees))
            for ds in oracle.enumerate_connected_degree_sequences(cfg.n, cfg.m)
        )
    if cfg.count_only:
        _emit(f"{sum(1 for _ in items)}\n", cfg.output)
    else:
        _emit("".join(f"{line}\n" for line in items), cfg.output)
    return EXIT_OK


def _simulate(cfg: RunConfig) -> int:
    from . import walk  # numba import is slow; only pay for it here

    g = _load_graph(cfg.input)
    if not cfg.all_vertices:
        stats = walk.estimate_mfrt(g, cfg.start, cfg.trials, cfg.seed, cfg.max_steps)
        _emit(json.dumps(stats.to_json()) + "\n", cfg.output)
        return EXIT_OK
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SIMULATE_HEADER)
    for v, s in enumerate(walk.estimate_all_vertices(g, cfg.trials, cfg.seed, cfg.max_steps)):
        row = s.to_json()
        writer.writerow(
            [v, g.degree(v)]
            + [row[k] for k in ("samples", "mean_frt", "std_error", "predicted", "predicted_decimal")]
            + [f"{row['z_score']:.6f}", row["max_steps_hit"], row["seed"]]
        )
    _emit(buf.getvalue(), cfg.output)
    return EXIT_OK


def _improve(cfg: RunConfig) -> int:
    g = _load_graph(cfg.input)
    lines = []

    def record(step: int, pivot, delta: Fraction, after: Graph) -> None:
        value = metrics.gmfrt(after)
        lines.append(
            json.dumps(
                {
                    "step": step,
                    "pivot": pivot,
                    "delta": _frac(delta),
                    "gmfrt": _frac(value),
                    "gmfrt_decimal": metrics.decimal(value),
                    "degrees": sorted(after.degrees, reverse=True),
                }
            )
        )

    final = g
    if cfg.tree:
        if not is_tree(g):
            raise UsageError("--tree given but the input graph is not a tree")
        steps = trees.flatten_to_path(g) if cfg.direction == "min" else trees.starify_to_star(g)
        for i, out in enumerate(steps, 1):
            record(i, out.pivot, out.predicted_delta, out.after)
            final = out.after
    else:
        step = 0
        while True:
            try:
                nxt = extremal.concentrate_step(final)
            except AlreadyExtremalError:
                break
            step += 1
            record(step, None, metrics.gmfrt(final) - metrics.gmfrt(nxt), nxt)
            final = nxt
    sys.stdout.write("".join(f"{ln}\n" for ln in lines))
    if cfg.output:
        _emit(formats.render(final, cfg.format), cfg.output)
    return EXIT_OK


DISPATCH = {
    "construct": _construct,
    "metrics": _metrics,
    "verify": _verify,
    "enumerate": _enumerate,
    "simulate": _simulate,
    "improve": _improve,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gmfrt", description="Global mean first return time toolkit.")
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build an extremal graph or tree")
    kind = c.add_mutually_exclusive_group()
    kind.add_argument("--graph", dest="graph_kind", choices=["min", "max"])
    kind.add_argument("--tree", dest="tree_kind", choices=["path", "star"])
    c.add_argument("--n", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--format", choices=list(formats.FORMATS), default="graph6")
    c.add_argument("--output")
    c.add_argument("--sidecar", help="write case metadata JSON here")
    c.add_argument("--json", dest="as_json", action="store_true", help="emit graph and metadata as one JSON object")

    mt = sub.add_parser("metrics", help="exact MFRT / GMFRT report for a graph")
    mt.add_argument("--input", default="-")
    mt.add_argument("--output")

    v = sub.add_parser("verify", help="certify the builders against brute force")
    v.add_argument("--n-max", dest="n_max", type=int, required=True)
    v.add_argument("--mode", choices=list(MODES), default="sequences")
    v.add_argument("--output")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--seed", type=int)

    e = sub.add_parser("enumerate", help="list connected degree sequences or labeled graphs")
    e.add_argument("--n", type=int)
    e.add_argument("--m", type=int)
    e.add_argument("--mode", choices=list(MODES), default="sequences")
    e.add_argument("--count", dest="count_only", action="store_true")
    e.add_argument("--output")

    s = sub.add_parser("simulate", help="Monte Carlo first return times")
    s.add_argument("--graph", dest="input")
    s.add_argument("--start", type=int)
    s.add_argument("--all-vertices", action="store_true")
    s.add_argument("--trials", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--max-steps", dest="max_steps", type=int, default=10**8)
    s.add_argument("--output")

    im = sub.add_parser("improve", help="trace GMFRT-monotone transforms")
    im.add_argument("--input")
    im.add_argument("--tree", action="store_true")
    im.add_argument("--direction", choices=["min", "max"])
    im.add_argument("--output", help="write the final graph here")
    im.add_argument("--format", choices=list(formats.FORMATS), default="graph6")
    return p


def config_from_args(argv: list[str] | None = None) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    if ns.get("seed") is None:
        env = os.environ.get(SEED_ENV)
        try:
            ns["seed"] = int(env) if env else 0
        except ValueError:
            raise UsageError(f"{SEED_ENV}={env!r} is not an integer") from None
    known = RunConfig.__dataclass_fields__
    cfg = RunConfig(**{k: v for k, v in ns.items() if k in known and v is not None})
    cfg.validate()
    return cfg


def run(cfg: RunConfig) -> int:
    return DISPATCH[cfg.subcommand](cfg)


def main(argv: list[str] | None = None) -> int:
    try:
        return run(config_from_args(argv))
    except (GmfrtError, OSError) as exc:
        print(f"gmfrt: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
