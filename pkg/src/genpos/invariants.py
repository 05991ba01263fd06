"""Exact graph invariants: ω, α, η, ρ.

ω and α run a Tomita-style branch-and-bound over vertex bitsets with a
greedy-coloring upper bound (α as ω of the complement).

η asks for the maximum order of an induced complete multipartite subgraph of
the complement; ρ for the maximum number of vertices in a union of pairwise
independent complete subgraphs. Both reduce to the same subset condition on
the graph itself: G[S] must be a disjoint union of cliques, i.e. P_3-free
(for η because complement(G)[S] is complete multipartite exactly when
non-adjacency is transitive on S; for ρ because vertices in different
components of G[S] are automatically at distance ≥ 2). A single part is
admitted as complete multipartite — the edgeless complement of a clique —
so η(G) ≥ ω(G) here; this matches how the k=1 case behaves in the product
proofs that rely on η. The two entry points therefore share one search and
one predicate (:func:`is_cluster_set`) but are kept separate, with the
equality η = ρ checked exhaustively in the test suite.

All searches are deterministic: vertices are branched in descending-degree
order (ties by id) and the incumbent is replaced only on strict improvement,
so for ``status="exact"`` the witness is reproducible. On budget exhaustion
the best set found so far is returned with ``status="lower-bound"``; no
search raises for running out of budget.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import Budget, SearchClock
from .graph import Graph, VertexSet, complement, vertex_set


@dataclass(frozen=True, slots=True)
class InvariantResult:
    """Value, certifying vertex set, and how the search ended."""

    value: int
    witness: VertexSet
    nodes_explored: int
    status: str  # "exact" | "lower-bound"


class _Exhausted(Exception):
    """Internal: unwind the search when the clock runs out."""


def _iter_bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _degree_order(g: Graph) -> tuple[list[int], list[int]]:
    """Relabel by descending degree (ties by id).

    Returns (bits, order) where order[i] is the original id of internal
    vertex i and bits is the internal-id adjacency bitmask list.
    """
    order = sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    bits = [0] * g.n
    for v in range(g.n):
        m = 0
        for u in g.adj[v]:
            m |= 1 << pos[u]
        bits[pos[v]] = m
    return bits, order


def _to_original(mask: int, order: list[int]) -> VertexSet:
    return tuple(sorted(order[i] for i in _iter_bits(mask)))


# --- maximum clique ---------------------------------------------------------


def _color_bound(P: int, bits: list[int]) -> tuple[list[int], list[int]]:
    # Greedy coloring of P; vertices listed in nondecreasing color, so the
    # color doubles as an upper bound on any clique inside the prefix.
    verts: list[int] = []
    bound: list[int] = []
    color = 0
    rest = P
    while rest:
        color += 1
        q = rest
        taken = 0
        while q:
            b = q & -q
            v = b.bit_length() - 1
            verts.append(v)
            bound.append(color)
            taken |= b
            q &= ~(bits[v] | b)
        rest &= ~taken
    return verts, bound


def _run_omega(g: Graph, clock: SearchClock, lower: int = 0) -> tuple[int, VertexSet]:
    if g.n == 0:
        return 0, ()
    bits, order = _degree_order(g)
    best_size = lower
    best_mask = 0

    def expand(size: int, rmask: int, P: int) -> None:
        nonlocal best_size, best_mask
        if not clock.tick():
            raise _Exhausted
        verts, bound = _color_bound(P, bits)
        local = P
        for i in range(len(verts) - 1, -1, -1):
            if size + bound[i] <= best_size:
                return
            v = verts[i]
            vbit = 1 << v
            child = local & bits[v]
            if child:
                expand(size + 1, rmask | vbit, child)
            elif size + 1 > best_size:
                best_size = size + 1
                best_mask = rmask | vbit
            local ^= vbit

    try:
        expand(0, 0, (1 << g.n) - 1)
    except _Exhausted:
        pass
    return best_size, _to_original(best_mask, order)


def omega(g: Graph, budget: Budget | None = None) -> InvariantResult:
    """Clique number ω(g) with a maximum-clique witness."""
    clock = SearchClock(budget)
    value, witness = _run_omega(g, clock)
    return InvariantResult(value, witness, clock.nodes, clock.status)


def alpha(g: Graph, budget: Budget | None = None) -> InvariantResult:
    """Independence number α(g), computed as ω of the complement."""
    clock = SearchClock(budget)
    value, witness = _run_omega(complement(g), clock)
    return InvariantResult(value, witness, clock.nodes, clock.status)


# --- maximum induced cluster subgraph (shared by eta and rho) ---------------


def is_cluster_set(g: Graph, members) -> bool:
    """True iff g[members] is a disjoint union of cliques (P_3-free)."""
    s = vertex_set(members, g.n)
    bits = g.adjacency_bits()
    smask = 0
    for v in s:
        smask |= 1 << v
    seen = 0
    for v in s:
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for x in _iter_bits(frontier):
                nxt |= bits[x] & smask
            frontier = nxt & ~comp
            comp |= frontier
        for x in _iter_bits(comp):
            if bits[x] & comp != comp ^ (1 << x):
                return False
        seen |= comp
    return True


def _run_cluster(
    g: Graph, clock: SearchClock, seed: VertexSet | None = None
) -> tuple[int, VertexSet]:
    """Largest S with g[S] a disjoint union of cliques.

    ``seed`` is a warm-start incumbent; the caller is responsible for its
    validity under :func:`is_cluster_set`.
    """
    if g.n == 0:
        return 0, ()
    bits, order = _degree_order(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    best_mask = 0
    if seed:
        for v in seed:
            best_mask |= 1 << pos[v]
    best_size = best_mask.bit_count()

    def expand(S: int, size: int, comps: list[int], C: int) -> None:
        nonlocal best_size, best_mask
        while C:
            if not clock.tick():
                raise _Exhausted
            if size + C.bit_count() <= best_size:
                return
            xbit = C & -C
            C ^= xbit
            x = xbit.bit_length() - 1
            grown = bits[x] & S
            if grown == 0:
                newcomps = comps + [xbit]
            else:
                newcomps = [c | xbit if c == grown else c for c in comps]
            newS = S | xbit
            if size + 1 > best_size:
                best_size = size + 1
                best_mask = newS
            # keep only later candidates still extendable: x joins S either
            # as a fresh singleton or by completing exactly one clique
            newC = 0
            for y in _iter_bits(C):
                m = bits[y] & newS
                if m == 0 or m in newcomps:
                    newC |= 1 << y
            if newC:
                expand(newS, size + 1, newcomps, newC)

    try:
        expand(0, 0, [], (1 << g.n) - 1)
    except _Exhausted:
        pass
    return best_size, _to_original(best_mask, order)


def eta(g: Graph, budget: Budget | None = None) -> InvariantResult:
    """η(g): maximum order of an induced complete multipartite subgraph of
    the complement; equivalently the largest S with g[S] a cluster graph."""
    clock = SearchClock(budget)
    value, witness = _run_cluster(g, clock)
    return InvariantResult(value, witness, clock.nodes, clock.status)


def rho(g: Graph, budget: Budget | None = None) -> InvariantResult:
    """ρ(g): maximum vertices covered by pairwise independent cliques."""
    clock = SearchClock(budget)
    value, witness = _run_cluster(g, clock)
    return InvariantResult(value, witness, clock.nodes, clock.status)
