"""Command-line harness for the genus experiments.

Every command builds a JSON report with four blocks: config (the exact
parameters used, round-trippable through JSON), metadata (timestamps and
wall times, the only nondeterministic content), rows (one per trial or
grid point, deterministic given config and seed), and summary.  CSV output
emits the rows alone.  Exit codes: 0 on success, 1 when an acceptance
suite or budgeted search fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .asymptotics import (
    component_fraction,
    component_fraction_derivative,
    cycle_count_limit,
    genus_per_edge,
    mc_cycle_count_limit,
)
from .census import predicted_core_excess, supercritical_report
from .corpus import named_fixtures
from .embeddings import (
    SearchBudgetError,
    exact_genus,
    genus_lower_bound_density,
    genus_lower_bound_short_cycles,
    genus_upper_bound,
    trace_faces,
)
from .fragile import fragile_experiment
from .graphs import (
    CycleBudgetError,
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    format_edge_list,
    grid_graph,
    hypercube_graph,
    load_edge_list,
    path_graph,
)
from .random_models import gnm, gnp, trial_rng
from .regimes import contiguity_verdict, predict_genus

OUT_DIR_ENV = "GENUSLAB_OUT_DIR"


def _resolve_out(path: str | None) -> str | None:
    """Relative output paths land under $GENUSLAB_OUT_DIR when it is set."""
    if path is None:
        return None
    base = os.environ.get(OUT_DIR_ENV)
    if base and not os.path.isabs(path):
        os.makedirs(base, exist_ok=True)
        return os.path.join(base, path)
    return path


def _report(config: dict, rows: list[dict], summary: dict, seconds: list[float]) -> dict:
    return {
        "config": config,
        "metadata": {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "tool": "genuslab",
            "version": __version__,
            "trial_seconds": [round(t, 6) for t in seconds],
        },
        "rows": rows,
        "summary": summary,
    }


def _write_output(
    report: dict,
    fmt: str,
    out: str | None,
    csv_rows: list[dict] | None = None,
    csv_fields: list[str] | None = None,
) -> None:
    if fmt == "json":
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        rows = report["rows"] if csv_rows is None else csv_rows
        fields = csv_fields
        if fields is None:
            fields = list(rows[0].keys()) if rows else []
        buf = io.StringIO()
        writer = csv.DictWriter(
            buf, fieldnames=fields, extrasaction="ignore", lineterminator="\n"
        )
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
        text = buf.getvalue()
    dest = _resolve_out(out)
    if dest is None:
        sys.stdout.write(text)
    else:
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)


def _run_trials(worker, tasks: list, jobs: int) -> tuple[list[dict], list[float]]:
    """Fan a picklable worker over tasks; rows come back in task order, so
    the result is independent of the job count."""
    if jobs <= 1:
        results = [worker(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(worker, tasks))
    rows = [row for row, _ in results]
    seconds = [sec for _, sec in results]
    return rows, seconds


def _load_input_graph(ns) -> Graph:
    fixture = getattr(ns, "fixture", None)
    if fixture is not None:
        table = named_fixtures()
        if fixture not in table:
            raise ValueError(
                f"unknown fixture {fixture!r}; choose from {sorted(table)}"
            )
        return table[fixture]
    if getattr(ns, "input", None) is None:
        raise ValueError("provide --input FILE or --fixture NAME")
    return load_edge_list(ns.input)


def _random_tree(n: int, max_degree: int, rng: np.random.Generator) -> Graph:
    """Uniform attachment tree with every degree capped at max_degree."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if max_degree < 2 and n > 2:
        raise ValueError("max_degree below 2 only allows paths on <= 2 vertices")
    open_slots = [0]
    degree = [0] * n
    edges = []
    for v in range(1, n):
        idx = int(rng.integers(len(open_slots)))
        parent = open_slots[idx]
        edges.append((parent, v))
        degree[parent] += 1
        degree[v] += 1
        if degree[parent] >= max_degree:
            open_slots[idx] = open_slots[-1]
            open_slots.pop()
        if degree[v] < max_degree:
            open_slots.append(v)
        if not open_slots and v < n - 1:
            raise ValueError("degree cap exhausted before the tree was complete")
    return Graph(n, edges)


def _grid_dims(n: int) -> tuple[int, int]:
    rows = max(1, math.isqrt(n))
    return rows, max(1, n // rows)


def _build_base(kind: str, n: int, delta: int, seed) -> Graph:
    if kind == "path":
        return path_graph(n)
    if kind == "cycle":
        return cycle_graph(n)
    if kind == "grid":
        rows, cols = _grid_dims(n)
        return grid_graph(rows, cols)
    if kind == "random-tree":
        return _random_tree(n, delta, trial_rng(seed, 0))
    raise ValueError(f"unknown base graph kind {kind!r}")


# workers are module level so process pools can pickle them

def _kappa_trial(task) -> tuple[dict, float]:
    n, lam, master, index, trial = task
    t0 = time.perf_counter()
    m = int(math.floor(lam * n))
    G = gnm(n, m, trial_rng(master, index))
    kappa = int(G.component_count)
    predicted = component_fraction(2.0 * lam) * n
    row = {
        "lambda": lam,
        "trial_index": trial,
        "seed": f"{master}:{index}",
        "m": m,
        "kappa": kappa,
        "predicted_kappa": predicted,
        "abs_deviation": abs(kappa - predicted) / n,
    }
    return row, time.perf_counter() - t0


def _census_trial(task) -> tuple[dict, float]:
    n, s, ell, a, cap, master, index = task
    t0 = time.perf_counter()
    rep = supercritical_report(n, s, trial_rng(master, index), ell=ell, a=a, cap=cap)
    row = {"trial_index": index, "seed": f"{master}:{index}"}
    row.update(asdict(rep))
    return row, time.perf_counter() - t0


def _fragile_trial(task) -> tuple[dict, float]:
    source, delta, k, ell, master, index = task
    t0 = time.perf_counter()
    kind, value = source
    if kind == "file":
        H = load_edge_list(value)
    else:
        base_name, base_n = value
        H = _build_base(base_name, base_n, delta, master)
    rep = fragile_experiment(H, delta, k, trial_rng(master, index + 1), ell=ell)
    row = {"trial_index": index}
    row.update(asdict(rep))
    row["seed"] = f"{master}:{index + 1}"
    return row, time.perf_counter() - t0


def _curve_point(task) -> tuple[dict, float]:
    n, m, ell, master, index = task
    t0 = time.perf_counter()
    G = gnm(n, m, trial_rng(master, index))
    try:
        lower = genus_lower_bound_short_cycles(G, ell, cap=200_000)
    except CycleBudgetError:
        # dense points have too many short cycles to enumerate
        lower = 0
    lower = max(lower, genus_lower_bound_density(G))
    upper = genus_upper_bound(G)
    pred = predict_genus(n, m)
    mid = 0.5 * (pred.predicted_genus[0] + pred.predicted_genus[1])
    row = {
        "m": m,
        "lower_ratio": lower / m if m else 0.0,
        "upper_ratio": upper / m if m else 0.0,
        "predicted_ratio": mid / m if m else 0.0,
        "regime": pred.regime,
        "seed": f"{master}:{index}",
    }
    return row, time.perf_counter() - t0


def _cmd_generate(ns) -> int:
    model = ns.model
    seed = ns.seed
    if model == "gnm":
        if ns.m is None:
            raise ValueError("gnm needs --m")
        G = gnm(ns.n, ns.m, trial_rng(seed, 0))
    elif model == "gnp":
        if ns.p is None:
            raise ValueError("gnp needs --p")
        G = gnp(ns.n, ns.p, trial_rng(seed, 0))
    elif model == "complete":
        G = complete_graph(ns.n)
    elif model == "hypercube":
        G = hypercube_graph(ns.n)
    elif model in {"path", "cycle", "grid", "random-tree"}:
        G = _build_base(model, ns.n, ns.delta, seed)
    else:
        raise ValueError(f"unknown model {model!r}")
    text = format_edge_list(G)
    dest = _resolve_out(ns.out)
    if dest is None:
        sys.stdout.write(text)
    else:
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def _cmd_genus(ns) -> int:
    G = _load_input_graph(ns)
    if ns.mode == "exact":
        try:
            result = exact_genus(G, node_budget=ns.budget)
        except SearchBudgetError as exc:
            payload = {
                "error": "search budget exhausted",
                "bounds": {"lower": exc.lower_bound, "upper": exc.upper_bound},
                "visited": exc.nodes_explored,
            }
            _write_output(
                {"config": _config_of(ns), "metadata": {}, "rows": [payload],
                 "summary": payload},
                "json", ns.out,
            )
            return 1
        payload = {
            "genus": result.genus,
            "f": result.face_count,
            "visited": result.nodes_explored,
        }
        if ns.faces:
            trace = trace_faces(G, result.rotation, validate=False)
            payload["faces"] = [list(face) for face in trace.faces]
    else:
        bounds = {
            "lower": genus_lower_bound_short_cycles(G, ns.ell),
            "upper": genus_upper_bound(G),
            "density_lower": genus_lower_bound_density(G),
        }
        payload = {"bounds": bounds, "ell": ns.ell, "n": G.n, "m": G.m}
        report = _report(_config_of(ns), [payload], payload, [])
        flat = {"n": G.n, "m": G.m, "ell": ns.ell, **bounds}
        _write_output(report, ns.format, ns.out, csv_rows=[flat])
        return 0
    report = _report(_config_of(ns), [payload], payload, [])
    _write_output(report, ns.format, ns.out)
    return 0


def _cmd_asym(ns) -> int:
    if ns.function is not None:
        if not ns.arg:
            raise ValueError(f"asym {ns.function} needs --arg values")
        merged = {
            "u": "u", "du": "du", "mu": "mu", "lambda-i": "cycle_limit",
        }[ns.function]
        setattr(ns, merged, list(ns.arg) + (getattr(ns, merged) or []))
    rows: list[dict] = []
    for c in ns.u or []:
        rows.append({"function": "component_fraction", "argument": c,
                     "value": component_fraction(c, tol=ns.tol)})
    for c in ns.du or []:
        rows.append({"function": "component_fraction_derivative", "argument": c,
                     "value": component_fraction_derivative(c, tol=ns.tol)})
    for lam in ns.mu or []:
        rows.append({"function": "genus_per_edge", "argument": lam,
                     "value": genus_per_edge(lam, tol=ns.tol)})
    for i in ns.cycle_limit or []:
        rows.append({"function": "cycle_count_limit", "argument": i,
                     "value": cycle_count_limit(i)})
    for i in ns.mc_cycle_limit or []:
        est = mc_cycle_count_limit(i, samples=ns.mc_samples, seed=ns.seed)
        rows.append({"function": "mc_cycle_count_limit", "argument": i,
                     "value": est.value, "stderr": est.stderr})
    if not rows:
        raise ValueError(
            "nothing to evaluate; pass --u, --du, --mu, --cycle-limit, "
            "or --mc-cycle-limit"
        )
    report = _report(_config_of(ns), rows, {"evaluations": len(rows)}, [])
    _write_output(report, ns.format, ns.out,
                  csv_fields=["function", "argument", "value", "stderr"])
    return 0


def _cmd_predict(ns) -> int:
    rows = []
    for m in ns.m:
        pred = predict_genus(ns.n, m)
        rows.append({
            "n": ns.n,
            "m": m,
            "regime": pred.regime,
            "predicted_lo": pred.predicted_genus[0],
            "predicted_hi": pred.predicted_genus[1],
            "parameters": pred.parameters,
        })
    report = _report(_config_of(ns), rows, {"points": len(rows)}, [])
    _write_output(report, ns.format, ns.out,
                  csv_fields=["n", "m", "regime", "predicted_lo", "predicted_hi"])
    return 0


def _cmd_contiguity(ns) -> int:
    verdict = contiguity_verdict(ns.n, ns.m, ns.genus, ns.eps)
    row = {"n": ns.n, "m": ns.m, "genus": ns.genus, "eps": ns.eps,
           "verdict": verdict.value}
    report = _report(_config_of(ns), [row], row, [])
    _write_output(report, ns.format, ns.out)
    return 0


def _cmd_census(ns) -> int:
    tasks = [
        (ns.n, ns.s, ns.ell, ns.a, ns.cap, ns.seed, i) for i in range(ns.trials)
    ]
    rows, seconds = _run_trials(_census_trial, tasks, ns.jobs)
    mean_excess = float(np.mean([r["core_excess"] for r in rows]))
    summary = {
        "s": ns.s,
        "mean_excess": mean_excess,
        "predicted": predicted_core_excess(ns.n, ns.s),
        "mean_genus_lower": float(np.mean([r["genus_lower"] for r in rows])),
        "mean_genus_upper": float(np.mean([r["genus_upper"] for r in rows])),
        "mean_census_cycle_count": float(
            np.mean([r["census_cycle_count"] for r in rows])
        ),
        "predicted_genus": rows[0]["predicted"] if rows else 0.0,
    }
    report = _report(_config_of(ns), rows, summary, seconds)
    _write_output(report, ns.format, ns.out, csv_rows=[summary],
                  csv_fields=["s", "mean_excess", "predicted"])
    return 0


def _cmd_mc_kappa(ns) -> int:
    tasks = []
    for li, lam in enumerate(ns.lam):
        for t in range(ns.trials):
            tasks.append((ns.n, lam, ns.seed, li * ns.trials + t, t))
    rows, seconds = _run_trials(_kappa_trial, tasks, ns.jobs)
    devs = [r["abs_deviation"] for r in rows]
    summary = {
        "mean_deviation": float(np.mean(devs)),
        "max_deviation": float(np.max(devs)),
        "trials": len(rows),
    }
    report = _report(_config_of(ns), rows, summary, seconds)
    _write_output(report, ns.format, ns.out)
    return 0


def _cmd_curve(ns) -> int:
    if ns.m:
        grid = list(ns.m)
    else:
        fractions = [0.25, 0.4, 0.45, 0.49, 0.5, 0.51, 0.55, 0.6, 0.75,
                     1.0, 1.5, 2.0, 3.0, 5.0, 8.0, 12.0, 20.0, 30.0]
        grid = sorted({max(1, int(round(f * ns.n))) for f in fractions})
    tasks = [(ns.n, m, ns.ell, ns.seed, i) for i, m in enumerate(grid)]
    rows, seconds = _run_trials(_curve_point, tasks, ns.jobs)
    summary = {
        "points": len(rows),
        "max_upper_ratio": float(max(r["upper_ratio"] for r in rows)),
    }
    report = _report(_config_of(ns), rows, summary, seconds)
    _write_output(report, ns.format, ns.out,
                  csv_fields=["m", "lower_ratio", "upper_ratio", "predicted_ratio"])
    return 0


def _cmd_fragile(ns) -> int:
    if ns.input is not None:
        source = ("file", ns.input)
    else:
        if ns.base is None:
            raise ValueError("provide --input FILE or --base KIND --n N")
        if ns.n is None:
            raise ValueError("--base needs --n")
        source = ("base", (ns.base, ns.n))
    tasks = [
        (source, ns.delta, ns.k, ns.ell, ns.seed, i) for i in range(ns.trials)
    ]
    rows, seconds = _run_trials(_fragile_trial, tasks, ns.jobs)
    positive = sum(1 for r in rows if r["genus_lower_gamma"] > 0)
    summary = {
        "trials": len(rows),
        "mean_t": float(np.mean([r["t"] for r in rows])),
        "mean_good_edges": float(np.mean([r["good_edge_count"] for r in rows])),
        "mean_gamma_edges": float(np.mean([r["gamma_edges"] for r in rows])),
        "mean_genus_lower_gamma": float(
            np.mean([r["genus_lower_gamma"] for r in rows])
        ),
        "positive_lower_fraction": positive / len(rows) if rows else 0.0,
        "max_upper_bound": max(r["upper_bound"] for r in rows) if rows else 0,
    }
    report = _report(_config_of(ns), rows, summary, seconds)
    _write_output(report, ns.format, ns.out)
    return 0


def _check(name: str, passed: bool, detail: str) -> dict:
    return {"name": name, "passed": bool(passed), "detail": detail}


def _suite_asymptotics(ns) -> list[dict]:
    checks = []
    grid = [j / 100.0 for j in range(101)]
    worst = max(abs(component_fraction(c) - (1.0 - c / 2.0)) for c in grid)
    checks.append(_check("subcritical_series_identity", worst < 1e-9,
                         f"max |u(c)-(1-c/2)| = {worst:.3e}"))
    mu_half = genus_per_edge(0.5)
    checks.append(_check("genus_per_edge_zero_at_half", abs(mu_half) < 1e-9,
                         f"mu(0.5) = {mu_half:.3e}"))
    lams = [0.5 + 0.1 * j for j in range(196)]
    vals = [genus_per_edge(l) for l in lams]
    diffs = [b - a for a, b in zip(vals, vals[1:])]
    checks.append(_check("genus_per_edge_increasing", min(diffs) > -1e-12,
                         f"min successive difference = {min(diffs):.3e}"))
    checks.append(_check("genus_per_edge_at_20", 0.45 < vals[-1] < 0.5,
                         f"mu(20) = {vals[-1]:.12f}"))
    h = 1e-3
    worst_d = 0.0
    for c in (0.8, 1.5, 3.0):
        central = (component_fraction(c + h) - component_fraction(c - h)) / (2 * h)
        worst_d = max(worst_d, abs(component_fraction_derivative(c) - central))
    checks.append(_check("derivative_matches_central_difference", worst_d < 1e-6,
                         f"max |analytic - central| = {worst_d:.3e}"))
    return checks


def _suite_mc_kappa(ns) -> list[dict]:
    n = ns.n or 100_000
    trials = ns.trials or 10
    checks = []
    for li, lam in enumerate((0.25, 0.5, 1.0, 2.0)):
        worst = 0.0
        for t in range(trials):
            row, _ = _kappa_trial((n, lam, ns.seed, li * trials + t, t))
            worst = max(worst, row["abs_deviation"])
        checks.append(_check(
            f"kappa_concentration_lambda_{lam}", worst < 0.01,
            f"max |kappa/n - u(2*lambda)| over {trials} trials = {worst:.5f}",
        ))
    return checks


def _suite_supercritical(ns) -> list[dict]:
    n = ns.n or 1_000_000
    trials = ns.trials or 10
    s = ns.s or int(round(n**0.75))
    rows = []
    for i in range(trials):
        row, _ = _census_trial((n, s, None, None, 10_000_000, ns.seed, i))
        rows.append(row)
    mean_excess = float(np.mean([r["core_excess"] for r in rows]))
    pred_excess = predicted_core_excess(n, s)
    mean_upper = float(np.mean([r["genus_upper"] for r in rows]))
    pred_genus = rows[0]["predicted"]
    band = 0.25 * pred_genus + mean_excess / 6.0
    checks = [
        _check("core_excess_matches_prediction",
               abs(mean_excess - pred_excess) <= 0.25 * pred_excess,
               f"mean excess {mean_excess:.1f} vs predicted {pred_excess:.1f}"),
        _check("core_genus_upper_in_band",
               abs(mean_upper - pred_genus) <= band,
               f"mean upper {mean_upper:.1f} vs predicted {pred_genus:.1f} "
               f"(band {band:.1f})"),
    ]
    return checks


def _suite_fragile(ns) -> list[dict]:
    n = ns.n or 100_000
    trials = ns.trials or 10
    k = ns.k or 5000
    H = path_graph(n)
    reports = [
        fragile_experiment(H, 2, k, trial_rng(ns.seed, i + 1), ell=3)
        for i in range(trials)
    ]
    lo_t = (n - reports[0].l * 2) / (reports[0].l * 4)
    hi_t = n / (reports[0].l * 2)
    t_ok = all(lo_t <= r.t <= hi_t for r in reports)
    enough_edges = sum(1 for r in reports if r.gamma_edges >= r.t)
    positive = sum(1 for r in reports if r.genus_lower_gamma > 0)
    mean_lower = float(np.mean([r.genus_lower_gamma for r in reports]))
    mean_t = float(np.mean([r.t for r in reports]))
    checks = [
        _check("piece_count_in_interval", t_ok,
               f"t values in [{lo_t:.1f}, {hi_t:.1f}]"),
        _check("quotient_has_enough_edges", enough_edges >= trials - 1,
               f"gamma_edges >= t in {enough_edges}/{trials} trials"),
        _check("quotient_genus_positive", positive >= trials - 1,
               f"positive lower bound in {positive}/{trials} trials"),
        _check("quotient_genus_mean", mean_lower >= 0.02 * mean_t,
               f"mean lower bound {mean_lower:.1f} vs 0.02*t = {0.02 * mean_t:.1f}"),
        _check("upper_bound_at_most_k",
               all(r.upper_bound <= k for r in reports),
               f"max upper bound {max(r.upper_bound for r in reports)}"),
    ]
    return checks


def _suite_oracle(ns) -> list[dict]:
    fixtures = named_fixtures()
    expected = {
        "k5": (1, 5),
        "c5": (0, 2),
        "c5_chord": (0, 3),
        "k5_minus_edge": (0, 6),
        "k33": (1, None),
        "k6": (1, None),
        "q3": (0, None),
    }
    checks = []
    for name, (genus, faces) in expected.items():
        G = fixtures[name]
        result = exact_genus(G)
        ok = result.genus == genus and (faces is None or result.face_count == faces)
        density = genus_lower_bound_density(G)
        ok = ok and density <= result.genus
        detail = (
            f"genus {result.genus} (want {genus}), f {result.face_count}"
            + ("" if faces is None else f" (want {faces})")
            + f", density lower bound {density}"
        )
        checks.append(_check(f"oracle_{name}", ok, detail))
    return checks


_SUITES = {
    "asymptotics": _suite_asymptotics,
    "mc-kappa": _suite_mc_kappa,
    "supercritical": _suite_supercritical,
    "fragile": _suite_fragile,
    "oracle": _suite_oracle,
}


def _cmd_suite(ns) -> int:
    t0 = time.perf_counter()
    checks = _SUITES[ns.name](ns)
    passed = all(c["passed"] for c in checks)
    summary = {
        "suite": ns.name,
        "passed": passed,
        "checks_passed": sum(1 for c in checks if c["passed"]),
        "checks_total": len(checks),
    }
    report = _report(_config_of(ns), checks, summary, [time.perf_counter() - t0])
    _write_output(report, ns.format, ns.out,
                  csv_fields=["name", "passed", "detail"])
    return 0 if passed else 1


def _config_of(ns) -> dict:
    config = {}
    skip = {"func"}
    for key, value in sorted(vars(ns).items()):
        if key in skip or callable(value):
            continue
        if isinstance(value, tuple):
            value = list(value)
        config[key] = value
    return config


def _add_common(p, default_format="json") -> None:
    p.add_argument("--format", choices=("json", "csv"), default=default_format)
    p.add_argument("--out", default=None, help="output path (default stdout); "
                   f"relative paths resolve under ${OUT_DIR_ENV} when set")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for trial fan-out (default 1)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genuslab",
        description="Genus bounds and sparse random graph experiments.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a graph as an edge list")
    p.add_argument("--model", required=True,
                   choices=("gnm", "gnp", "path", "cycle", "grid", "complete",
                            "hypercube", "random-tree"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--delta", type=int, default=3,
                   help="degree cap for random-tree")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("genus", help="exact genus or bounds of a graph")
    p.add_argument("mode", choices=("exact", "bounds"))
    p.add_argument("--input", default=None, help="edge list file")
    p.add_argument("--fixture", default=None, help="named bundled fixture")
    p.add_argument("--budget", type=int, default=50_000_000,
                   help="rotation search node budget (exact mode)")
    p.add_argument("--ell", type=int, default=4,
                   help="cycle census length for the lower bound (bounds mode)")
    p.add_argument("--faces", action="store_true",
                   help="include the face walks of a minimum-genus rotation")
    _add_common(p)
    p.set_defaults(func=_cmd_genus)

    p = sub.add_parser("asym", help="evaluate the asymptotic functions")
    p.add_argument("function", nargs="?", default=None,
                   choices=("u", "du", "mu", "lambda-i"),
                   help="function to evaluate at the --arg values")
    p.add_argument("--arg", type=float, nargs="+", default=None,
                   help="arguments for the positional function form")
    p.add_argument("--u", type=float, nargs="+", default=None,
                   help="component fraction u at these arguments")
    p.add_argument("--du", type=float, nargs="+", default=None,
                   help="derivative of u at these arguments")
    p.add_argument("--mu", type=float, nargs="+", default=None,
                   help="genus per edge at these edge densities")
    p.add_argument("--cycle-limit", type=float, nargs="+", default=None,
                   help="limiting census cycle count at these lengths")
    p.add_argument("--mc-cycle-limit", type=float, nargs="+", default=None,
                   help="Monte Carlo check of the cycle count limit")
    p.add_argument("--mc-samples", type=int, default=200_000)
    p.add_argument("--tol", type=float, default=1e-10)
    _add_common(p)
    p.set_defaults(func=_cmd_asym)

    p = sub.add_parser("predict", help="regime classification and genus prediction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, nargs="+", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_predict)

    p = sub.add_parser("contiguity", help="contiguity verdict for (n, m, genus)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None,
                   help="edge count; omit for the all-graphs model")
    p.add_argument("--genus", "--g", type=int, required=True)
    p.add_argument("--eps", type=float, default=0.05)
    _add_common(p)
    p.set_defaults(func=_cmd_contiguity)

    p = sub.add_parser("census", help="structural census experiments")
    census_sub = p.add_subparsers(dest="census_command", required=True)
    q = census_sub.add_parser("supercritical",
                              help="slightly supercritical core statistics")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--s", type=int, required=True)
    q.add_argument("--trials", type=int, default=10)
    q.add_argument("--ell", type=int, default=None,
                   help="short cycle length (default floor(n/s))")
    q.add_argument("--a", type=float, default=None,
                   help="census parameter (default 0.5*ln(s^3/n^2))")
    q.add_argument("--cap", type=int, default=10_000_000)
    _add_common(q)
    q.set_defaults(func=_cmd_census)

    p = sub.add_parser("mc", help="Monte Carlo experiments")
    mc_sub = p.add_subparsers(dest="mc_command", required=True)
    q = mc_sub.add_parser("kappa", help="component count concentration")
    q.add_argument("--n", type=int, default=100_000)
    q.add_argument("--lam", type=float, nargs="+",
                   default=(0.25, 0.5, 1.0, 2.0),
                   help="edge densities m = floor(lam*n)")
    q.add_argument("--trials", type=int, default=10)
    _add_common(q)
    q.set_defaults(func=_cmd_mc_kappa)

    p = sub.add_parser("curve", help="genus per edge across an edge-count grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, nargs="+", default=None,
                   help="edge counts (default: a built-in grid)")
    p.add_argument("--ell", type=int, default=4)
    _add_common(p, default_format="csv")
    p.set_defaults(func=_cmd_curve)

    p = sub.add_parser("fragile", help="random perturbation genus experiment")
    p.add_argument("--input", default=None, help="base graph edge list")
    p.add_argument("--base", default=None,
                   choices=("path", "cycle", "grid", "random-tree"),
                   help="built-in base graph")
    p.add_argument("--n", type=int, default=None,
                   help="vertex count for --base")
    p.add_argument("--delta", type=int, required=True,
                   help="maximum degree of the base graph")
    p.add_argument("--k", type=int, required=True,
                   help="number of random edges to add")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--ell", type=int, default=4,
                   help="cycle census length for the quotient lower bound")
    _add_common(p)
    p.set_defaults(func=_cmd_fragile)

    p = sub.add_parser("suite", help="run a named acceptance suite")
    p.add_argument("name", choices=tuple(sorted(_SUITES)))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_suite)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
