"""Deterministic graph corpora shared by the property and acceptance tests.

Seeds are fixed so corpus membership never drifts between runs; tests that
freeze oracle values rely on that.
"""

import itertools
import random

from genpos import (
    Graph,
    cartesian_product,
    complete,
    corona,
    cycle,
    diameter,
    disjoint_union,
    edgeless,
    is_connected,
    join,
    kneser,
    line_graph,
    path,
)


def random_graph(n, p, rng):
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def connected_corpus(count=200, max_n=7, seed=20260826):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_n)
        g = random_graph(n, rng.uniform(0.25, 0.9), rng)
        if is_connected(g):
            out.append(g)
    return out


def diam2_corpus(count=60, max_n=8, seed=4711):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(4, max_n)
        g = random_graph(n, rng.uniform(0.3, 0.8), rng)
        if diameter(g) == 2:
            out.append(g)
    return out


def mixed_corpus(count=100, max_n=14, seed=97):
    # disconnected graphs welcome: the solver's infinity handling is under test
    rng = random.Random(seed)
    return [
        random_graph(rng.randint(1, max_n), rng.uniform(0.05, 0.95), rng)
        for _ in range(count)
    ]


def named_small(max_n=7):
    """Instances of every construction family, filtered to <= max_n vertices."""
    builds = {
        "K1": complete(1),
        "K2": complete(2),
        "K4": complete(4),
        "K7": complete(7),
        "E3": edgeless(3),
        "P2": path(2),
        "P4": path(4),
        "P7": path(7),
        "C3": cycle(3),
        "C4": cycle(4),
        "C5": cycle(5),
        "C7": cycle(7),
        "K(4,2)": kneser(4, 2),
        "K(5,2)": kneser(5, 2),
        "K2xK3": cartesian_product(complete(2), complete(3)),
        "P3xP3": cartesian_product(path(3), path(3)),
        "K1+P3": join(complete(1), path(3)),
        "K23": join(edgeless(2), edgeless(3)),
        "K2+K2": join(complete(2), complete(2)),
        "P3|P3": disjoint_union(path(3), path(3)),
        "K2oK1": corona(complete(2), complete(1)),
        "K2oP3": corona(complete(2), path(3)),
        "L(K4)": line_graph(complete(4)),
        "L(P5)": line_graph(path(5)),
        "L(C6)": line_graph(cycle(6)),
    }
    return [(name, g) for name, g in builds.items() if g.n <= max_n]
