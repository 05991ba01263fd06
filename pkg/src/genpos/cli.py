"""Command-line interface.

Every subcommand emits one JSON object (or CSV table) per line on stdout.
The per-instance search budget defaults to 10000 ms; override with the
GP_BUDGET_MS environment variable or the --budget-ms option (a value <= 0
removes the time limit).

Exit codes: 0 success / all verified, 1 mismatch (or, under --strict,
timeout), 2 input error, 3 budget exhausted with unresolved grid points.
"""

from __future__ import annotations

import functools
import json
import os
import sys

import click

from .budget import Budget
from .errors import InputError, ParseError
from .formulas import (
    Prediction,
    ekr_bound,
    gp_cartesian_lower,
    gp_corona,
    gp_join,
    gp_kneser2,
    gp_kneser3,
    gp_line_complete,
    hamming_lower,
    kneser_condition,
)
from .graph import distances, is_connected
from .harness import build_graph_spec, default_grid, emit_table, run_verify, theorem_ids
from .io import dumps_json, encode_graph6, read_graph, write_graph
from .invariants import alpha, eta, omega, rho
from .solver import characterization_check, gp_auto, gp_diam2, gp_exact, is_general_position

DEFAULT_BUDGET_MS = 10000.0


def _env_budget_ms() -> float:
    raw = os.environ.get("GP_BUDGET_MS")
    if raw is None:
        return DEFAULT_BUDGET_MS
    try:
        return float(raw)
    except ValueError:
        raise InputError(f"GP_BUDGET_MS must be a number, got {raw!r}") from None


def _budget(nodes: int | None, ms: float | None) -> Budget:
    if ms is None:
        ms = _env_budget_ms()
    return Budget(max_nodes=nodes, max_ms=None if ms <= 0 else ms)


def _input_errors(f):
    # uniform mapping of bad input to exit code 2
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (InputError, ParseError) as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(2)
        except json.JSONDecodeError as e:
            click.echo(f"error: invalid JSON: {e}", err=True)
            sys.exit(2)

    return wrapper


def _budget_options(f):
    f = click.option("--budget-nodes", type=int, default=None, help="Search node limit.")(f)
    f = click.option(
        "--budget-ms",
        type=float,
        default=None,
        help="Wall-clock limit in ms (<= 0 for none; default GP_BUDGET_MS or 10000).",
    )(f)
    return f


@click.group()
def main():
    """Exact general position numbers for finite graphs."""


@main.command()
@click.argument("family", required=False)
@click.argument("args", nargs=-1, type=int)
@click.option("--spec", "spec_json", default=None, help='Recursive JSON spec, e.g. \'{"family":"kneser","args":[5,2]}\'.')
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None, help="Write to a file instead of stdout.")
@click.option("--format", "fmt", type=click.Choice(["g6", "json"]), default=None, help="Output format (default: by extension, else g6).")
@_input_errors
def construct(family, args, spec_json, out_path, fmt):
    """Build a named graph family (e.g. `construct kneser 5 2`)."""
    if spec_json is not None:
        g = build_graph_spec(json.loads(spec_json))
    elif family is not None:
        g = build_graph_spec({"family": family, "args": list(args)})
    else:
        raise click.UsageError("give a FAMILY with integer arguments, or --spec")
    if out_path is not None:
        write_graph(g, out_path, fmt)
    elif fmt == "json":
        click.echo(dumps_json(g))
    else:
        click.echo(encode_graph6(g))


@main.command("gp")
@click.option("--graph", "path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--method", type=click.Choice(["auto", "exact", "diam2"]), default="auto")
@_budget_options
@_input_errors
def gp_cmd(path, method, budget_nodes, budget_ms):
    """Compute gp(G) with witness."""
    g = read_graph(path)
    solver = {"auto": gp_auto, "exact": gp_exact, "diam2": gp_diam2}[method]
    r = solver(g, _budget(budget_nodes, budget_ms))
    click.echo(
        json.dumps(
            {
                "value": r.value,
                "witness": list(r.witness),
                "status": r.status,
                "nodes": r.nodes_explored,
                "ms": round(r.elapsed_ms, 1),
                "method": r.method,
            }
        )
    )


@main.command()
@click.option("--which", type=click.Choice(["omega", "alpha", "eta", "rho"]), required=True)
@click.option("--graph", "path", required=True, type=click.Path(exists=True, dir_okay=False))
@_budget_options
@_input_errors
def invariant(which, path, budget_nodes, budget_ms):
    """Compute ω, α, η, or ρ with witness."""
    g = read_graph(path)
    fn = {"omega": omega, "alpha": alpha, "eta": eta, "rho": rho}[which]
    r = fn(g, _budget(budget_nodes, budget_ms))
    click.echo(
        json.dumps(
            {
                "value": r.value,
                "witness": list(r.witness),
                "status": r.status,
                "nodes": r.nodes_explored,
            }
        )
    )


@main.group()
def predict():
    """Closed-form predictions (no search)."""


def _echo_prediction(theorem: str, params: dict, pred: Prediction) -> None:
    if not pred.applicable:
        value = None
    elif pred.value is not None:
        value = pred.value
    else:
        value = list(pred.interval)
    record = {
        "theorem": theorem,
        "params": params,
        "applicable": pred.applicable,
        "value_or_interval": value,
        "witness": None if pred.witness is None else list(pred.witness),
    }
    if not pred.applicable:
        record["reason"] = pred.reason
    click.echo(json.dumps(record))


@predict.command("kneser2")
@click.argument("n", type=int)
@_input_errors
def predict_kneser2(n):
    """gp(K(n,2))."""
    _echo_prediction("thm2.2", {"n": n}, gp_kneser2(n))


@predict.command("kneser3")
@click.argument("n", type=int)
@_input_errors
def predict_kneser3(n):
    """gp(K(n,3))."""
    _echo_prediction("thm2.4", {"n": n}, gp_kneser3(n))


@predict.command("kneser-condition")
@click.argument("n", type=int)
@click.argument("k", type=int)
@_input_errors
def predict_kneser_condition(n, k):
    """Sufficient condition for gp(K(n,k)) = C(n-1,k-1)."""
    _echo_prediction("thm2.3", {"n": n, "k": k}, kneser_condition(n, k))


@predict.command("cartesian-lower")
@click.argument("gp_g", type=int)
@click.argument("gp_h", type=int)
@click.option("--n-g", type=int, default=None, help="Order of G (adds the trivial upper bound).")
@click.option("--n-h", type=int, default=None, help="Order of H.")
@_input_errors
def predict_cartesian_lower(gp_g, gp_h, n_g, n_h):
    """gp(G□H) >= gp(G) + gp(H) - 2."""
    _echo_prediction(
        "thm3.1", {"gp_g": gp_g, "gp_h": gp_h}, gp_cartesian_lower(gp_g, gp_h, n_g, n_h)
    )


@predict.command("hamming")
@click.argument("ns", nargs=-1, type=int, required=True)
@_input_errors
def predict_hamming(ns):
    """gp(K_{n1} [] ... [] K_{nk}) >= sum(n_i) - k (exact for k=2)."""
    _echo_prediction("thm3.2", {"ns": list(ns)}, hamming_lower(list(ns)))


@predict.command("join")
@click.argument("omega_g", type=int)
@click.argument("omega_h", type=int)
@click.argument("eta_g", type=int)
@click.argument("eta_h", type=int)
@click.argument("rho_g", type=int)
@click.argument("rho_h", type=int)
@click.option("--both-complete", is_flag=True, help="Both factors complete: value is n_g + n_h.")
@click.option("--n-g", type=int, default=None)
@click.option("--n-h", type=int, default=None)
@click.option("--form", type=click.Choice(["rho", "eta"]), default="rho")
@_input_errors
def predict_join(omega_g, omega_h, eta_g, eta_h, rho_g, rho_h, both_complete, n_g, n_h, form):
    """gp(G + H) from the factor invariants."""
    params = {
        "omega_g": omega_g,
        "omega_h": omega_h,
        "eta_g": eta_g,
        "eta_h": eta_h,
        "rho_g": rho_g,
        "rho_h": rho_h,
    }
    pred = gp_join(
        omega_g, omega_h, eta_g, eta_h, rho_g, rho_h, both_complete, n_g, n_h, form=form
    )
    _echo_prediction("prop4.2", params, pred)


@predict.command("corona")
@click.argument("n_g", type=int)
@click.argument("rho_h", type=int)
@_input_errors
def predict_corona(n_g, rho_h):
    """gp(G o H) = n(G) * rho(H) for n(G) >= 2."""
    _echo_prediction("thm4.3", {"n_g": n_g, "rho_h": rho_h}, gp_corona(n_g, rho_h))


@predict.command("line-complete")
@click.argument("n", type=int)
@_input_errors
def predict_line_complete(n):
    """gp(L(K_n))."""
    _echo_prediction("thm4.4", {"n": n}, gp_line_complete(n))


@predict.command("ekr")
@click.argument("n", type=int)
@click.argument("k", type=int)
@_input_errors
def predict_ekr(n, k):
    """Erdos-Ko-Rado bound C(n-1,k-1) on alpha(K(n,k)) for n >= 2k."""
    try:
        pred = Prediction(True, value=ekr_bound(n, k))
    except InputError as e:
        pred = Prediction(False, reason=str(e))
    _echo_prediction("ekr", {"n": n, "k": k}, pred)


@main.command("check-set")
@click.option("--graph", "path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--set", "members", required=True, help="Comma-separated vertex ids, e.g. 0,2,5.")
@_input_errors
def check_set(path, members):
    """Test a vertex set: definition and structural characterization."""
    g = read_graph(path)
    try:
        s = tuple(int(tok) for tok in members.split(",") if tok.strip() != "")
    except ValueError:
        raise InputError(f"--set must be comma-separated integers, got {members!r}") from None
    dm = distances(g)
    gp_ok = is_general_position(dm, s)
    record = {"set": sorted(set(s)), "general_position": gp_ok}
    if is_connected(g):
        res = characterization_check(g, dm, s)
        if res.ok:
            record["characterization"] = {
                "ok": True,
                "parts": [list(p) for p in res.partition.parts],
            }
        else:
            v = res.violation
            record["characterization"] = {
                "ok": False,
                "condition": v.condition,
                "vertices": list(v.vertices),
                "detail": v.detail,
            }
        record["agree"] = res.ok == gp_ok
    else:
        record["characterization"] = None
        record["note"] = "structural characterization needs a connected graph"
    click.echo(json.dumps(record))


@main.command()
@click.option("--all", "run_all", is_flag=True, help="Sweep every registered theorem (default).")
@click.option("--theorem", "theorem_id", default=None, help="Sweep one theorem id.")
@click.option("--quick/--stretch", default=True, help="Which manifest grid to use.")
@click.option("--strict", is_flag=True, help="Treat timeouts as failures.")
@click.option("--grid", "grid_json", default=None, help="JSON list of parameter points (overrides the manifest).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json-lines"]), default="csv")
@_budget_options
@_input_errors
def verify(run_all, theorem_id, quick, strict, grid_json, fmt, budget_nodes, budget_ms):
    """Check theorem predictions against the solver over parameter grids."""
    if theorem_id is not None and run_all:
        raise click.UsageError("--all and --theorem are mutually exclusive")
    if theorem_id is not None and theorem_id not in theorem_ids():
        raise InputError(f"unknown theorem id {theorem_id!r}; known: {theorem_ids()}")
    ids = [theorem_id] if theorem_id is not None else theorem_ids()
    budget = _budget(budget_nodes, budget_ms)
    reports = []
    for tid in ids:
        if grid_json is not None:
            grid = json.loads(grid_json)
        else:
            grid = default_grid(tid, stretch=not quick)
        reports.extend(run_verify(tid, grid, budget))
    click.echo(emit_table(reports, fmt), nl=False)
    if any(r.verdict == "mismatch" for r in reports):
        sys.exit(1)
    if any(r.verdict == "timeout" for r in reports):
        sys.exit(1 if strict else 3)


if __name__ == "__main__":
    main()
