import itertools

import pytest
from hypothesis import given, settings

from genpos import (
    Budget,
    EXACT,
    LOWER_BOUND,
    Graph,
    alpha,
    complement,
    complete,
    corona,
    cycle,
    edgeless,
    eta,
    is_cluster_set,
    kneser,
    line_graph,
    omega,
    path,
    rho,
)

import corpus
import oracles
from strategies import graphs

SAMPLE = corpus.connected_corpus(count=40, max_n=8, seed=11)


# --- agreement with brute force ------------------------------------------------


@pytest.mark.parametrize("i", range(len(SAMPLE)))
def test_omega_alpha_match_oracle(i):
    g = SAMPLE[i]
    assert omega(g).value == oracles.omega_enum(g.n, g.edges())
    assert alpha(g).value == oracles.alpha_enum(g.n, g.edges())


@pytest.mark.parametrize("i", range(len(SAMPLE)))
def test_eta_rho_match_oracle(i):
    g = SAMPLE[i]
    want = oracles.rho_enum(g.n, g.edges())
    assert rho(g).value == want
    assert eta(g).value == want
    assert oracles.eta_enum(g.n, g.edges()) == want


def test_frozen_small_values():
    # values computed by independent subset enumeration, not by this package
    lk4 = line_graph(complete(4))
    assert eta(lk4).value == 3
    assert rho(lk4).value == 3
    assert omega(lk4).value == 3
    assert alpha(lk4).value == 2
    assert rho(path(3)).value == 2
    assert rho(kneser(4, 2)).value == 6
    assert alpha(kneser(5, 2)).value == 4
    assert omega(kneser(6, 2)).value == 3


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_omega_is_alpha_of_complement(g):
    assert omega(g).value == alpha(complement(g)).value


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_rho_dominates_omega_and_alpha(g):
    r = rho(g).value
    assert r >= omega(g).value  # one clique qualifies
    assert r >= alpha(g).value  # all-singleton components qualify
    assert eta(g).value == r


# --- witnesses ------------------------------------------------------------------


@pytest.mark.parametrize("i", range(0, len(SAMPLE), 3))
def test_witnesses_have_the_claimed_structure(i):
    g = SAMPLE[i]
    w = omega(g)
    assert len(w.witness) == w.value
    assert all(g.has_edge(u, v) for u, v in itertools.combinations(w.witness, 2))
    a = alpha(g)
    assert len(a.witness) == a.value
    assert not any(g.has_edge(u, v) for u, v in itertools.combinations(a.witness, 2))
    r = rho(g)
    assert len(r.witness) == r.value
    assert is_cluster_set(g, r.witness)


def test_is_cluster_set():
    p3 = path(3)
    assert is_cluster_set(p3, (0, 1))
    assert is_cluster_set(p3, (0, 2))
    assert not is_cluster_set(p3, (0, 1, 2))  # a P_3 is not a cluster
    c5 = cycle(5)
    assert is_cluster_set(c5, (0, 1, 3))
    assert not is_cluster_set(c5, (0, 1, 2))
    assert is_cluster_set(c5, ())


def test_degenerate_graphs():
    g0 = Graph.from_edges(0, [])
    for fn in (omega, alpha, eta, rho):
        res = fn(g0)
        assert res.value == 0 and res.witness == () and res.status == EXACT
    assert omega(edgeless(4)).value == 1
    assert alpha(edgeless(4)).value == 4
    assert eta(edgeless(4)).value == 4
    assert rho(complete(5)).value == 5


# --- budgets ---------------------------------------------------------------------


def test_exhausted_budget_returns_lower_bound():
    g = kneser(8, 3)
    res = rho(g, Budget(max_nodes=50))
    assert res.status == LOWER_BOUND
    assert res.nodes_explored <= 50
    assert is_cluster_set(g, res.witness)
    assert len(res.witness) == res.value
    # exact value for this graph is 21; an exhausted run cannot exceed it
    assert 0 <= res.value <= 21


def test_omega_budget_never_raises():
    res = omega(kneser(8, 3), Budget(max_nodes=1))
    assert res.status == LOWER_BOUND
    assert res.value >= 0


def test_determinism():
    g = SAMPLE[5]
    a = rho(g)
    b = rho(g)
    assert (a.value, a.witness, a.nodes_explored, a.status) == (
        b.value,
        b.witness,
        b.nodes_explored,
        b.status,
    )


def test_result_is_frozen():
    res = omega(path(3))
    with pytest.raises(AttributeError):
        res.value = 7
