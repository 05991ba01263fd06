"""General position sets: membership tests and the exact solver.

A set S is in general position when no vertex of S lies on a geodesic
between two other vertices of S: for pairwise distinct u, v, w in S with all
three pairwise distances finite, d(u,v) != d(u,w) + d(w,v). Triples touching
an infinite distance never violate — a vertex cannot sit on a geodesic that
does not exist — and the finiteness guards are load-bearing, because IEEE
infinity satisfies ``inf == x + inf``.

Two independent membership tests are provided: the distance-arithmetic
definition (:func:`is_general_position`) and the structural characterization
(:func:`characterization_check`): S is general position iff the components
of G[S] are cliques whose vertex sets form a distance-constant, in-transitive
partition.

``gp_exact`` runs a depth-first branch and bound. For every vertex pair
(a, b) it precomputes the bitmask of third vertices y making {a, b, y}
collinear; the candidate set then shrinks by O(|S|) mask operations per
extension and stays exactly the set of vertices that keep S in general
position (general position is hereditary, so this pruning is lossless).
Branching follows descending degree (ties by id) and the incumbent is
replaced only on strict improvement, so exact results are deterministic.

Disconnected inputs are handled by the same definition under the infinity
semantics above — no component decomposition is attempted. This reproduces
e.g. gp(3K_2) = 6: within a component only clique triples survive, and cross
component triples never violate.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .budget import EXACT, Budget, SearchClock
from .errors import ConsistencyError, InputError
from .graph import (
    INFINITY,
    DistanceMatrix,
    Graph,
    VertexSet,
    diameter,
    distances,
    is_connected,
    vertex_set,
)
from .invariants import _Exhausted, _run_cluster, _run_omega, is_cluster_set


@dataclass(frozen=True, slots=True)
class GpResult:
    """Outcome of a gp computation; witness certifies value."""

    value: int
    witness: VertexSet
    status: str  # "exact" | "lower-bound"
    nodes_explored: int
    elapsed_ms: float
    method: str  # "exact" | "diam2"


@dataclass(frozen=True, slots=True)
class CliquePartition:
    """Components of G[S] (each a clique) plus between-part distances.

    ``part_distances[i][j]`` is the common distance between parts i and j
    (well-defined by distance-constancy); the diagonal is 0 by convention.
    """

    parts: tuple[VertexSet, ...]
    part_distances: tuple[tuple[int, ...], ...]


@dataclass(frozen=True, slots=True)
class Violation:
    """First failed condition of the structural characterization."""

    condition: str  # "clique" | "distance-constant" | "in-transitive"
    vertices: VertexSet
    detail: str


@dataclass(frozen=True, slots=True)
class CharacterizationResult:
    ok: bool
    partition: CliquePartition | None
    violation: Violation | None

    def __bool__(self) -> bool:
        return self.ok


def is_general_position(dm: DistanceMatrix, s) -> bool:
    """Definition-based test: no member between two other members."""
    sv = vertex_set(s, dm.n)
    d = dm.d
    for u, w, v in combinations(sv, 3):
        duw, dwv, duv = d[u][w], d[w][v], d[u][v]
        if duw == INFINITY or dwv == INFINITY or duv == INFINITY:
            continue
        if duv == duw + dwv or duw == duv + dwv or dwv == duw + duv:
            return False
    return True


def characterization_check(g: Graph, dm: DistanceMatrix, s) -> CharacterizationResult:
    """Structural test for connected g: clique components, distance-constant
    and in-transitive between parts. Returns the partition or the first
    violation found (components are scanned in order of minimum member)."""
    if not is_connected(g):
        raise InputError("characterization_check needs a connected graph")
    sv = vertex_set(s, g.n)
    ss = set(sv)

    parts: list[VertexSet] = []
    seen: set[int] = set()
    for v in sv:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y in ss and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        parts.append(tuple(sorted(comp)))

    def fail(condition: str, verts, detail: str) -> CharacterizationResult:
        return CharacterizationResult(False, None, Violation(condition, vertex_set(verts, g.n), detail))

    for part in parts:
        for u, v in combinations(part, 2):
            if not g.has_edge(u, v):
                return fail(
                    "clique", part, f"component {part} is not complete: {u} and {v} are non-adjacent"
                )

    k = len(parts)
    dist = [[0] * k for _ in range(k)]
    for i, j in combinations(range(k), 2):
        d0 = dm.dist(parts[i][0], parts[j][0])
        for u in parts[i]:
            for v in parts[j]:
                if dm.dist(u, v) != d0:
                    return fail(
                        "distance-constant",
                        {parts[i][0], parts[j][0], u, v},
                        f"parts {parts[i]} and {parts[j]}: d({u},{v})={dm.dist(u, v)} != d({parts[i][0]},{parts[j][0]})={d0}",
                    )
        dist[i][j] = dist[j][i] = d0

    for a, b, c in combinations(range(k), 3):
        for x, m, y in ((a, b, c), (b, a, c), (a, c, b)):
            if dist[x][y] == dist[x][m] + dist[m][y]:
                return fail(
                    "in-transitive",
                    {parts[x][0], parts[m][0], parts[y][0]},
                    f"part {parts[m]} lies between parts {parts[x]} and {parts[y]}: "
                    f"{dist[x][y]} = {dist[x][m]} + {dist[m][y]}",
                )

    partition = CliquePartition(tuple(parts), tuple(tuple(row) for row in dist))
    return CharacterizationResult(True, partition, None)


def _run_gp(g: Graph, dm: DistanceMatrix, clock: SearchClock, seed: VertexSet | None) -> tuple[int, VertexSet]:
    n = g.n
    if n == 0:
        return 0, ()
    order = sorted(range(n), key=lambda v: (-len(g.adj[v]), v))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    d = dm.d

    # blocked[a][b]: bitmask of internal ids y with {a, b, y} collinear
    blocked = [[0] * n for _ in range(n)]
    for ai in range(n):
        a = order[ai]
        da = d[a]
        for bi in range(ai + 1, n):
            b = order[bi]
            dab = da[b]
            db = d[b]
            m = 0
            for yi in range(n):
                if yi == ai or yi == bi:
                    continue
                y = order[yi]
                day, dby = da[y], db[y]
                if dab == INFINITY or day == INFINITY or dby == INFINITY:
                    continue
                if dab == day + dby or day == dab + dby or dby == dab + day:
                    m |= 1 << yi
            blocked[ai][bi] = m
            blocked[bi][ai] = m

    best_mask = 0
    if seed:
        for v in seed:
            best_mask |= 1 << pos[v]
    best_size = best_mask.bit_count()
    chosen: list[int] = []

    def expand(smask: int, C: int) -> None:
        nonlocal best_size, best_mask
        while C:
            if not clock.tick():
                raise _Exhausted
            if len(chosen) + C.bit_count() <= best_size:
                return
            xbit = C & -C
            C ^= xbit
            x = xbit.bit_length() - 1
            kill = 0
            for s in chosen:
                kill |= blocked[x][s]
            newC = C & ~kill
            chosen.append(x)
            if len(chosen) > best_size:
                best_size = len(chosen)
                best_mask = smask | xbit
            if newC:
                expand(smask | xbit, newC)
            chosen.pop()

    try:
        expand(0, (1 << n) - 1)
    except _Exhausted:
        pass
    return best_size, tuple(sorted(order[i] for i in _bits(best_mask)))


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def gp_exact(g: Graph, budget: Budget | None = None, initial_witness=None) -> GpResult:
    """Maximum general position set by branch and bound.

    ``initial_witness`` warm-starts the incumbent (useful when a
    construction supplies a large known set); it must itself be in general
    position. Budget exhaustion degrades to status "lower-bound".
    """
    clock = SearchClock(budget)
    dm = distances(g)
    seed = None
    if initial_witness is not None:
        seed = vertex_set(initial_witness, g.n)
        if not is_general_position(dm, seed):
            raise InputError("initial_witness is not a general position set")
    value, witness = _run_gp(g, dm, clock, seed)
    return GpResult(value, witness, clock.status, clock.nodes, clock.elapsed_ms(), "exact")


def _remaining(budget: Budget | None, clock: SearchClock) -> Budget:
    if budget is None:
        return Budget()
    nodes = None if budget.max_nodes is None else max(0, budget.max_nodes - clock.nodes)
    ms = None if budget.max_ms is None else max(0.0, budget.max_ms - clock.elapsed_ms())
    return Budget(nodes, ms)


def gp_diam2(g: Graph, budget: Budget | None = None, initial_witness=None) -> GpResult:
    """gp for diameter-2 graphs: gp(G) = ρ(G) = max{ω(G), η(G)}.

    Runs the ρ search and returns its witness (a union of pairwise
    independent cliques is in general position when diam = 2). When ρ
    finished exactly and budget remains, ω is recomputed as a cross-check;
    η shares ρ's search and needs no second run, so the max{ω, η} form
    reduces to verifying ω ≤ ρ. Disagreement raises ConsistencyError —
    it would contradict a theorem, hence flag a bug.
    """
    if diameter(g) != 2:
        raise InputError("gp_diam2 requires a graph of diameter exactly 2")
    seed = None
    if initial_witness is not None:
        seed = vertex_set(initial_witness, g.n)
        if not is_cluster_set(g, seed):
            raise InputError("initial_witness does not induce a disjoint union of cliques")
    clock = SearchClock(budget)
    value, witness = _run_cluster(g, clock, seed)
    status = clock.status
    nodes = clock.nodes
    if status == EXACT:
        cross = SearchClock(_remaining(budget, clock))
        w_val, _ = _run_omega(g, cross)
        nodes += cross.nodes
        if cross.status == EXACT and max(w_val, value) != value:
            raise ConsistencyError(
                f"omega = {w_val} exceeds rho = {value} on a diameter-2 graph"
            )
    return GpResult(value, witness, status, nodes, clock.elapsed_ms(), "diam2")


def gp_auto(g: Graph, budget: Budget | None = None, initial_witness=None) -> GpResult:
    """Dispatch: the ρ route when diam(g) = 2, otherwise the exact search."""
    if diameter(g) == 2:
        return gp_diam2(g, budget, initial_witness)
    return gp_exact(g, budget, initial_witness)
