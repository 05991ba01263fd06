"""Verification sweeps: prediction vs. exact search over parameter grids.

Each registered theorem id maps to a runner that builds the graph(s) for one
grid point, evaluates the closed-form prediction, runs the solver, and
returns both for comparison. Grids live in ``data/grids.json`` (a quick grid
and a stretch grid per theorem) so scripted runs and long runs share one
manifest.

Verdicts: ``match`` (exact solve equals an exact prediction), ``within-bound``
(value inside a predicted interval — sound even when the search timed out,
because an incumbent is itself a valid lower bound), ``mismatch``,
``timeout`` (budget exhausted, nothing disproved), ``not-applicable``
(formula silent at this point).
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass
from importlib import resources
from typing import Any, Callable

from . import constructions as cons
from .budget import EXACT, Budget
from .errors import InputError
from .formulas import (
    Prediction,
    cartesian_witness,
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
from .graph import Graph, diameter, is_connected
from .invariants import alpha, eta, omega, rho
from .solver import GpResult, gp_auto, gp_exact

MATCH = "match"
WITHIN_BOUND = "within-bound"
MISMATCH = "mismatch"
TIMEOUT = "timeout"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True, slots=True)
class TheoremReport:
    theorem_id: str
    params: dict
    predicted: Prediction
    computed: GpResult | None
    verdict: str
    elapsed_ms: float
    note: str = ""


_FAMILIES: dict[str, Callable[..., Graph]] = {
    "complete": cons.complete,
    "edgeless": cons.edgeless,
    "path": cons.path,
    "cycle": cons.cycle,
    "kneser": cons.kneser,
    "cartesian_product": cons.cartesian_product,
    "join": cons.join,
    "corona": cons.corona,
    "disjoint_union": cons.disjoint_union,
    "line_graph": cons.line_graph,
}


def build_graph_spec(spec: Any) -> Graph:
    """Build a graph from a recursive {"family": ..., "args": [...]} spec."""
    if not isinstance(spec, dict) or "family" not in spec:
        raise InputError(f"graph spec must be an object with a 'family' key, got {spec!r}")
    name = str(spec["family"]).replace("-", "_")
    fn = _FAMILIES.get(name)
    if fn is None:
        raise InputError(f"unknown graph family {spec['family']!r}; known: {sorted(_FAMILIES)}")
    args = spec.get("args", [])
    if not isinstance(args, list):
        raise InputError(f"'args' must be a list in {spec!r}")
    built = [build_graph_spec(a) if isinstance(a, dict) else a for a in args]
    return fn(*built)


def _hamming(ns: list[int]) -> Graph:
    g = cons.complete(ns[0])
    for n in ns[1:]:
        g = cons.cartesian_product(g, cons.complete(n))
    return g


def _is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def _solve(g: Graph, budget: Budget | None, witness=None) -> tuple[GpResult, str]:
    """gp_auto with a warm-start witness; a rejected witness is noted, not fatal."""
    if witness is not None:
        try:
            return gp_auto(g, budget, initial_witness=witness), ""
        except InputError as e:
            return gp_auto(g, budget), f"constructive witness rejected: {e}"
    return gp_auto(g, budget), ""


# --- runners: params -> (prediction, computed, verdict-override, note) ------

_Run = tuple[Prediction, GpResult | None, str | None, str]


def _run_kneser2(params: dict, budget: Budget | None) -> _Run:
    pred = gp_kneser2(params["n"])
    if not pred.applicable:
        return pred, None, None, ""
    computed, note = _solve(cons.kneser(params["n"], 2), budget, pred.witness)
    return pred, computed, None, note


def _run_kneser_condition(params: dict, budget: Budget | None) -> _Run:
    n, k = params["n"], params["k"]
    pred = kneser_condition(n, k)
    if not pred.applicable:
        return pred, None, None, ""
    computed, note = _solve(cons.kneser(n, k), budget, pred.witness)
    return pred, computed, None, note


def _run_kneser3(params: dict, budget: Budget | None) -> _Run:
    pred = gp_kneser3(params["n"])
    if not pred.applicable:
        return pred, None, None, ""
    computed, note = _solve(cons.kneser(params["n"], 3), budget, pred.witness)
    return pred, computed, None, note


def _run_cartesian_lower(params: dict, budget: Budget | None) -> _Run:
    g = build_graph_spec(params["g"])
    h = build_graph_spec(params["h"])
    if not (is_connected(g) and is_connected(h)):
        return Prediction(False, reason="factors must be connected"), None, None, ""
    rg = gp_auto(g, budget)
    rh = gp_auto(h, budget)
    pred = gp_cartesian_lower(rg.value, rh.value, g.n, h.n)
    note = "" if rg.status == EXACT and rh.status == EXACT else "factor gp is a lower bound"
    witness = cartesian_witness(g, rg.witness, h, rh.witness, rg.witness[0], rh.witness[0])
    computed, wnote = _solve(cons.cartesian_product(g, h), budget, witness)
    return pred, computed, None, "; ".join(x for x in (note, wnote) if x)


def _run_hamming(params: dict, budget: Budget | None) -> _Run:
    ns = list(params["ns"])
    pred = hamming_lower(ns)
    if not pred.applicable:
        return pred, None, None, ""
    computed, note = _solve(_hamming(ns), budget, pred.witness)
    return pred, computed, None, note


def _run_diam2(params: dict, budget: Budget | None) -> _Run:
    g = build_graph_spec(params["g"])
    if diameter(g) != 2:
        return Prediction(False, reason="diameter != 2"), None, None, ""
    w = omega(g, budget)
    e = eta(g, budget)
    pred = Prediction(True, value=max(w.value, e.value))
    computed, note = _solve(g, budget)
    override = None
    if w.status != EXACT or e.status != EXACT:
        override = TIMEOUT
        note = "; ".join(x for x in (note, "invariant search hit budget") if x)
    return pred, computed, override, note


def _run_join(params: dict, budget: Budget | None) -> _Run:
    g = build_graph_spec(params["g"])
    h = build_graph_spec(params["h"])
    wg, wh = omega(g, budget), omega(h, budget)
    eg, eh = eta(g, budget), eta(h, budget)
    rg, rh = rho(g, budget), rho(h, budget)
    both = _is_complete(g) and _is_complete(h)
    args = (wg.value, wh.value, eg.value, eh.value, rg.value, rh.value, both, g.n, h.n)
    pred = gp_join(*args, form="rho")
    pred_eta = gp_join(*args, form="eta")
    computed, note = _solve(cons.join(g, h), budget)
    override = None
    if pred.value != pred_eta.value:
        override = MISMATCH
        note = f"eta-form {pred_eta.value} != rho-form {pred.value}"
    elif any(x.status != EXACT for x in (wg, wh, eg, eh, rg, rh)):
        override = TIMEOUT
        note = "; ".join(x for x in (note, "invariant search hit budget") if x)
    return pred, computed, override, note


def _run_corona(params: dict, budget: Budget | None) -> _Run:
    g = build_graph_spec(params["g"])
    h = build_graph_spec(params["h"])
    rh = rho(h, budget)
    pred = gp_corona(g.n, rh.value, n_h=h.n, rho_witness=rh.witness)
    if not pred.applicable:
        return pred, None, None, ""
    computed, note = _solve(cons.corona(g, h), budget, pred.witness)
    override = None
    if rh.status != EXACT:
        override = TIMEOUT
        note = "; ".join(x for x in (note, "rho(H) search hit budget") if x)
    return pred, computed, override, note


def _run_line_complete(params: dict, budget: Budget | None) -> _Run:
    pred = gp_line_complete(params["n"])
    if not pred.applicable:
        return pred, None, None, ""
    g = cons.line_graph(cons.complete(params["n"]))
    computed, note = _solve(g, budget, pred.witness)
    return pred, computed, None, note


def _run_ekr(params: dict, budget: Budget | None) -> _Run:
    n, k = params["n"], params["k"]
    try:
        pred = Prediction(True, value=ekr_bound(n, k))
    except InputError as e:
        return Prediction(False, reason=str(e)), None, None, ""
    t0 = time.monotonic()
    a = alpha(cons.kneser(n, k), budget)
    computed = GpResult(
        a.value, a.witness, a.status, a.nodes_explored, (time.monotonic() - t0) * 1000.0, "alpha"
    )
    return pred, computed, None, ""


_REGISTRY: dict[str, Callable[[dict, Budget | None], _Run]] = {
    "thm2.2": _run_kneser2,
    "thm2.3": _run_kneser_condition,
    "thm2.4": _run_kneser3,
    "thm3.1": _run_cartesian_lower,
    "thm3.2": _run_hamming,
    "thm4.1": _run_diam2,
    "prop4.2": _run_join,
    "thm4.3": _run_corona,
    "thm4.4": _run_line_complete,
    "ekr": _run_ekr,
}


def theorem_ids() -> list[str]:
    return sorted(_REGISTRY)


def load_grids() -> dict:
    text = resources.files("genpos").joinpath("data/grids.json").read_text("utf-8")
    return json.loads(text)


def default_grid(theorem_id: str, stretch: bool = False) -> list[dict]:
    grids = load_grids()
    if theorem_id not in grids:
        raise InputError(f"no grid manifest entry for {theorem_id!r}")
    return grids[theorem_id]["stretch" if stretch else "quick"]


def _verdict(pred: Prediction, computed: GpResult | None) -> str:
    if not pred.applicable:
        return NOT_APPLICABLE
    if computed is None:
        return TIMEOUT
    if pred.value is not None:
        if computed.status == EXACT:
            return MATCH if computed.value == pred.value else MISMATCH
        # unfinished search: only an over-large incumbent can refute
        return MISMATCH if computed.value > pred.value else TIMEOUT
    lo, hi = pred.interval
    if computed.value >= (lo or 0) and (hi is None or computed.value <= hi):
        return WITHIN_BOUND
    return MISMATCH if computed.status == EXACT else TIMEOUT


def run_verify(
    theorem_id: str, param_grid: list[dict] | None = None, budget: Budget | None = None
) -> list[TheoremReport]:
    """Sweep one theorem over a grid; reports come back in grid order."""
    if theorem_id not in _REGISTRY:
        raise InputError(f"unknown theorem id {theorem_id!r}; known: {theorem_ids()}")
    if param_grid is None:
        param_grid = default_grid(theorem_id)
    if not isinstance(param_grid, list) or not all(isinstance(p, dict) for p in param_grid):
        raise InputError(f"param grid must be a list of parameter objects, got {param_grid!r}")
    runner = _REGISTRY[theorem_id]
    reports = []
    for params in param_grid:
        t0 = time.monotonic()
        try:
            pred, computed, override, note = runner(params, budget)
        except (KeyError, TypeError) as e:
            raise InputError(f"malformed grid point {params!r} for {theorem_id}: {e}") from None
        elapsed = (time.monotonic() - t0) * 1000.0
        verdict = override if override is not None else _verdict(pred, computed)
        reports.append(TheoremReport(theorem_id, params, pred, computed, verdict, elapsed, note))
    return reports


def _fmt_predicted(pred: Prediction) -> str:
    if not pred.applicable:
        return "n/a"
    if pred.value is not None:
        return str(pred.value)
    lo, hi = pred.interval
    return f"[{lo},{'inf' if hi is None else hi}]"


def emit_table(reports: list[TheoremReport], format: str = "csv") -> str:
    """Render reports in grid order as CSV or JSON lines."""
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["theorem", "params", "predicted", "computed", "status", "verdict", "ms"])
        for r in reports:
            writer.writerow(
                [
                    r.theorem_id,
                    json.dumps(r.params, sort_keys=True, separators=(",", ":")),
                    _fmt_predicted(r.predicted),
                    "" if r.computed is None else r.computed.value,
                    "" if r.computed is None else r.computed.status,
                    r.verdict,
                    f"{r.elapsed_ms:.1f}",
                ]
            )
        return buf.getvalue()
    if format == "json-lines":
        lines = []
        for r in reports:
            pred = r.predicted
            record = {
                "theorem": r.theorem_id,
                "params": r.params,
                "applicable": pred.applicable,
                "predicted": None
                if not pred.applicable
                else (pred.value if pred.value is not None else list(pred.interval)),
                "computed": None if r.computed is None else r.computed.value,
                "status": None if r.computed is None else r.computed.status,
                "verdict": r.verdict,
                "ms": round(r.elapsed_ms, 1),
            }
            if r.note:
                record["note"] = r.note
            lines.append(json.dumps(record, sort_keys=True))
        return "".join(line + "\n" for line in lines)
    raise InputError(f"unknown table format {format!r}")
