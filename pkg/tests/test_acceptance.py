"""Acceptance criteria 1-8.

Each criterion prints one ``PASS``/``FAIL`` line with its measured runtime.
Run under pytest (``pytest tests/test_acceptance.py -v``) or directly
(``python tests/test_acceptance.py``) for the summary table alone.
"""

from __future__ import annotations

import contextlib
import io
import json
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

import pytest

from gmfrt import cli
from gmfrt.errors import AlreadyExtremalError, NoValidMoveError
from gmfrt.extremal import build_max_gmfrt_graph, build_min_gmfrt_graph, concentrate_step
from gmfrt.graph import from_edge_list, random_connected_graph, random_tree_with_degrees
from gmfrt.metrics import gmfrt
from gmfrt.oracle import (
    brute_force_extrema,
    certify_constructions,
    enumerate_connected_degree_sequences,
    mutate_builder,
)
from gmfrt.trees import (
    build_path,
    build_star,
    flatten_delta,
    flatten_step,
    flatten_to_path,
    starify_delta,
    starify_step,
    starify_to_star,
)
from gmfrt.walk import estimate_all_vertices

SEED = 20240611


@dataclass
class Outcome:
    ok: bool
    detail: str
    seconds: float = 0.0
    limit: float | None = None

    @property
    def passed(self) -> bool:
        return self.ok and (self.limit is None or self.seconds < self.limit)

    def line(self, label: str) -> str:
        budget = f" (limit {self.limit:g} s)" if self.limit is not None else ""
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {label}: {self.detail}; {self.seconds:.2f} s{budget}"


def _timed(fn, limit: float | None) -> Outcome:
    t0 = time.perf_counter()
    out = fn()
    out.seconds = time.perf_counter() - t0
    out.limit = limit
    return out


def _cli(*argv: str) -> tuple[int, str]:
    buf, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(err):
        code = cli.main(list(argv))
    return code, buf.getvalue()


def _random_tree(n: int, rng: random.Random):
    degrees = [1] * n
    for _ in range(n - 2):
        degrees[rng.randrange(n)] += 1
    return random_tree_with_degrees(degrees, rng)


def _petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


# --- criteria ---------------------------------------------------------------


def criterion_1() -> Outcome:
    bad = []
    for n in range(3, 13):
        path_val, star_val = gmfrt(build_path(n)), gmfrt(build_star(n))
        if path_val != n + Fraction(n - 2, n) or star_val != 2 * n - 4 + Fraction(4, n):
            bad.append(f"closed form n={n}")
        cert = brute_force_extrema(n, n - 1)
        if (cert.min_gmfrt, cert.max_gmfrt) != (path_val, star_val):
            bad.append(f"oracle n={n}: [{cert.min_gmfrt}, {cert.max_gmfrt}]")
    return Outcome(not bad, "path/star exact for n=3..12, oracle agrees" if not bad else "; ".join(bad))


def criterion_2() -> Outcome:
    bad, pairs = [], 0
    for n in range(2, 15):
        for m in range(n - 1, n * (n - 1) // 2 + 1):
            pairs += 1
            lo = brute_force_extrema(n, m).min_gmfrt
            if lo < n or (lo == n) != (2 * m % n == 0):
                bad.append(f"({n},{m}) min={lo}")
    detail = f"{pairs} (n,m) pairs, min >= n with equality iff n | 2m"
    return Outcome(not bad, detail if not bad else f"{len(bad)} violations: {bad[:5]}")


def criterion_3() -> Outcome:
    parts = []
    ok = True
    for n_max, mode in ((7, "labeled"), (10, "sequences")):
        code, out = _cli("verify", "--n-max", str(n_max), "--mode", mode, "--seed", str(SEED))
        rows = out.strip().splitlines()[1:]
        mismatches = sum(1 for r in rows if not r.endswith(",true"))
        ok &= code == cli.EXIT_OK and mismatches == 0
        parts.append(f"{mode} n<={n_max}: {len(rows)} rows, {mismatches} mismatches, exit {code}")
    return Outcome(ok, "; ".join(parts))


def criterion_4() -> Outcome:
    code, out = _cli("construct", "--graph", "max", "--n", "12", "--m", "19", "--json")
    data = json.loads(out)
    expected = [11, 5, 5, 4, 4, 3, 1, 1, 1, 1, 1, 1]
    oracle_max = brute_force_extrema(12, 19).max_gmfrt
    ok = (
        code == 0
        and (data["case_id"], data["k"], data["l"]) == ("III", 6, 3)
        and data["degrees"] == expected
        and Fraction(data["predicted_gmfrt"]) == oracle_max
    )
    return Outcome(ok, f"case {data['case_id']} k={data['k']} l={data['l']} gmfrt={data['predicted_gmfrt']} oracle={oracle_max}")


def criterion_5() -> Outcome:
    rng = random.Random(SEED)
    flat = star = 0
    bad = []
    for _ in range(1000):
        t = _random_tree(rng.randint(3, 30), rng)
        deg = t.degrees
        for v in range(t.n):
            if deg[v] >= 3:
                out = flatten_step(t, v)  # raises if the recomputed delta differs
                flat += 1
                if out.predicted_delta != flatten_delta(t.n, deg[v]) or out.predicted_delta <= 0:
                    bad.append(("flatten", t, v))
        for v1 in range(t.n):
            for v2 in range(t.n):
                if v1 != v2 and deg[v1] >= deg[v2] >= 2:
                    out = starify_step(t, v1, v2)
                    star += 1
                    if out.predicted_delta != starify_delta(t.n, deg[v1], deg[v2]) or out.predicted_delta >= 0:
                        bad.append(("starify", t, v1, v2))
    return Outcome(not bad, f"{flat} flatten and {star} starify steps exact, signs correct, {len(bad)} failures")


def criterion_6() -> Outcome:
    rng = random.Random(SEED)
    trees_checked = tree_bad = 0
    for n in range(3, 11):
        for ds in enumerate_connected_degree_sequences(n, n - 1):
            t = random_tree_with_degrees(ds.degrees, rng)
            trees_checked += 1
            path = t
            for step in flatten_to_path(t):
                path = step.after
            star = t
            for step in starify_to_star(t):
                star = step.after
            if max(path.degrees) > 2 or max(star.degrees) != n - 1:
                tree_bad += 1

    reached = no_move = 0
    for _ in range(200):
        n = rng.randint(3, 7)
        g = random_connected_graph(n, rng.randint(n - 1, n * (n - 1) // 2), rng)
        target = brute_force_extrema(n, g.m).max_profiles
        try:
            while True:
                g = concentrate_step(g)
        except AlreadyExtremalError:
            pass
        except NoValidMoveError:
            no_move += 1
            continue
        reached += tuple(sorted(g.degrees, reverse=True)) in target
    ok = tree_bad == 0 and reached == 200 and no_move == 0
    return Outcome(
        ok,
        f"{trees_checked} tree sequences converge ({tree_bad} failures); "
        f"concentrate: {reached}/200 reach certified max, NoValidMove={no_move}",
    )


def _kac_graphs() -> list[tuple[str, object]]:
    rng = random.Random(SEED)
    graphs = [
        ("K2", from_edge_list(2, [(0, 1)])),
        ("P4", build_path(4)),
        ("C6", from_edge_list(6, [(i, (i + 1) % 6) for i in range(6)])),
        ("S6", build_star(6)),
        ("Petersen", _petersen()),
    ]
    for i in range(3):
        n = rng.randint(10, 20)
        m = rng.randint(n - 1, min(60, n * (n - 1) // 2))
        graphs.append((f"random#{i}(n={n},m={m})", random_connected_graph(n, m, rng)))
    return graphs


def criterion_7(trials: int = 10**6) -> Outcome:
    worst, vertices, bad = 0.0, 0, []
    graphs = _kac_graphs()
    for name, g in graphs:
        for s in estimate_all_vertices(g, trials, SEED):
            vertices += 1
            worst = max(worst, abs(s.z_score))
            if abs(s.z_score) > 5 or not s.valid:
                bad.append(f"{name} v={s.start} z={s.z_score:.2f}")
    name, g = graphs[-1]
    again = estimate_all_vertices(g, trials, SEED)
    first = estimate_all_vertices(g, trials, SEED)
    deterministic = [s.mean_frt for s in again] == [s.mean_frt for s in first]
    ok = not bad and deterministic
    detail = f"{vertices} vertices x {trials} walks, max |z|={worst:.2f}, rerun identical={deterministic}"
    return Outcome(ok, detail if not bad else f"{detail}; outside 5 SE: {bad}")


def criterion_8() -> Outcome:
    runs = {
        "min mutated": (mutate_builder(build_min_gmfrt_graph), build_max_gmfrt_graph),
        "max mutated": (build_min_gmfrt_graph, mutate_builder(build_max_gmfrt_graph)),
    }
    parts, ok = [], True
    for label, (lo, hi) in runs.items():
        for n_max, method in ((7, "labeled_graphs"), (10, "degree_sequences")):
            report = certify_constructions(n_max, method, lo, hi, spot_checks=0, seed=SEED)
            ok &= not report.ok
            parts.append(f"{label}/{method}: {len(report.violations)}/{len(report.rows)} rows flagged")
    return Outcome(ok, "; ".join(parts))


CRITERIA = [
    ("1 tree extrema", criterion_1, 1.0),
    ("2 lower bound n<=14", criterion_2, 120.0),
    ("3 construction certification", criterion_3, 600.0),
    ("4 worked example (12,19)", criterion_4, 1.0),
    ("5 transform deltas", criterion_5, 10.0),
    ("6 convergence", criterion_6, None),
    ("7 Kac Monte Carlo", criterion_7, 300.0),
    ("8 mutation negative control", criterion_8, None),
]


@pytest.fixture
def report_line(capsys):
    def emit(text: str) -> None:
        with capsys.disabled():
            print(f"\n{text}")

    return emit


@pytest.mark.slow
@pytest.mark.parametrize("label, fn, limit", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(label, fn, limit, report_line):
    out = _timed(fn, limit)
    report_line(out.line(f"criterion {label}"))
    assert out.passed, out.line(label)


if __name__ == "__main__":
    results = [(label, _timed(fn, limit)) for label, fn, limit in CRITERIA]
    for label, out in results:
        print(out.line(f"criterion {label}"))
    sys.exit(0 if all(out.passed for _, out in results) else 1)
