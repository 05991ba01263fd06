"""Closed-form gp predictions with constructive witnesses.

Each predictor returns a :class:`Prediction` rather than raising on
out-of-range parameters, so a verification sweep can distinguish "the
formula is silent here" from "the formula disagrees with the solver".
Witnesses are emitted in the canonical vertex labelings of
:mod:`genpos.constructions`, which keeps regression output byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import InputError
from .graph import Graph, VertexSet, vertex_set
from .constructions import ksubset_index


@dataclass(frozen=True, slots=True)
class Prediction:
    """A formula's output: an exact value or an interval, plus a witness.

    Exactly one of ``value`` / (``lower``, ``upper``) is populated when
    applicable; ``upper`` may be None for a one-sided bound. ``witness``
    is present when the underlying argument is constructive.
    """

    applicable: bool
    value: int | None = None
    lower: int | None = None
    upper: int | None = None
    witness: VertexSet | None = None
    reason: str = ""

    @property
    def interval(self) -> tuple[int | None, int | None]:
        """(lower, upper) with an exact value collapsing to a point."""
        if self.value is not None:
            return self.value, self.value
        return self.lower, self.upper


def _na(reason: str) -> Prediction:
    return Prediction(applicable=False, reason=reason)


def kneser_star_witness(n: int, k: int) -> VertexSet:
    """Ids in kneser(n, k) of all k-subsets containing the element 1."""
    return tuple(
        sorted(
            ksubset_index(n, (1,) + rest)
            for rest in combinations(range(2, n + 1), k - 1)
        )
    )


def gp_kneser2(n: int) -> Prediction:
    """gp(K(n,2)): 6 for 4 <= n <= 6, n-1 for n >= 7.

    Witness: the six 2-subsets of {1..4} (three independent edges) in the
    small range, the star {{1,j}} for n >= 7.
    """
    if n < 4:
        return _na(f"needs n >= 4, got {n}")
    if n <= 6:
        witness = tuple(
            sorted(ksubset_index(n, pair) for pair in combinations(range(1, 5), 2))
        )
        return Prediction(True, value=6, witness=witness)
    return Prediction(True, value=n - 1, witness=kneser_star_witness(n, 2))


def gp_kneser3(n: int) -> Prediction:
    """gp(K(n,3)): 20 for n = 6, C(n-1,2) for n >= 7.

    Witness: every vertex of K(6,3) (which is 10K_2), else the star of
    3-subsets containing 1.
    """
    if n < 6:
        return _na(f"needs n >= 6, got {n}")
    if n == 6:
        return Prediction(True, value=20, witness=tuple(range(20)))
    return Prediction(True, value=comb(n - 1, 2), witness=kneser_star_witness(n, 3))


def kneser_condition(n: int, k: int) -> Prediction:
    """Sufficient condition for gp(K(n,k)) = C(n-1,k-1) with star witness.

    Requires n >= 3k-1 (so that K(n,k) has diameter 2) and, for every
    t in [2, k]:  k^t * C(n-t, k-t) + t <= C(n-1, k-1).
    """
    if k < 2:
        return _na(f"needs k >= 2, got k={k}")
    if n < 3 * k - 1:
        return _na(f"needs n >= 3k-1 = {3 * k - 1} for diameter 2, got n={n}")
    target = comb(n - 1, k - 1)
    for t in range(2, k + 1):
        lhs = k**t * comb(n - t, k - t) + t
        if lhs > target:
            return _na(f"inequality fails at t={t}: {lhs} > {target}")
    return Prediction(True, value=target, witness=kneser_star_witness(n, k))


def gp_cartesian_lower(gp_g: int, gp_h: int, n_g: int | None = None, n_h: int | None = None) -> Prediction:
    """gp(G □ H) >= gp(G) + gp(H) - 2 for connected factors.

    The trivial upper bound n(G)·n(H) is attached when the orders are
    supplied; connectivity of the factors is the caller's responsibility
    (only the gp values travel in).
    """
    upper = n_g * n_h if n_g is not None and n_h is not None else None
    return Prediction(True, lower=gp_g + gp_h - 2, upper=upper)


def cartesian_witness(g: Graph, s_g, h: Graph, s_h, anchor_g: int, anchor_h: int) -> VertexSet:
    """The cross set ((S_G × {h0}) ∪ ({g0} × S_H)) \\ {(g0, h0)}.

    Size |S_G| + |S_H| - 2, in general position in G □ H whenever S_G and
    S_H are in general position in the (connected) factors. Ids follow the
    product labeling (a, b) -> a·n(H) + b.
    """
    sg = vertex_set(s_g, g.n)
    sh = vertex_set(s_h, h.n)
    if anchor_g not in sg:
        raise InputError(f"anchor {anchor_g} is not in the G-side set")
    if anchor_h not in sh:
        raise InputError(f"anchor {anchor_h} is not in the H-side set")
    ids = {a * h.n + anchor_h for a in sg} | {anchor_g * h.n + b for b in sh}
    ids.discard(anchor_g * h.n + anchor_h)
    return tuple(sorted(ids))


def hamming_witness(ns) -> VertexSet:
    """Union of the axis sets X_i in K_{n1} □ ... □ K_{nk}.

    X_i holds the points all-0 except coordinate i running over 1..n_i-1.
    Ids use the left-fold product labeling: (a_1,...,a_k) has the
    mixed-radix id ((a_1·n_2 + a_2)·n_3 + ...) + a_k.
    """
    dims = list(ns)
    if len(dims) < 2 or any(d < 2 for d in dims):
        raise InputError(f"needs k >= 2 factors, each of order >= 2, got {dims}")
    weights = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        weights[i] = weights[i + 1] * dims[i + 1]
    ids = {j * weights[i] for i, d in enumerate(dims) for j in range(1, d)}
    return tuple(sorted(ids))


def hamming_lower(ns) -> Prediction:
    """gp(K_{n1} □ ... □ K_{nk}) >= Σn_i - k; equality when k = 2."""
    dims = list(ns)
    if len(dims) < 2:
        return _na(f"needs at least two factors, got {len(dims)}")
    if any(d < 2 for d in dims):
        return _na(f"every factor needs order >= 2, got {dims}")
    bound = sum(dims) - len(dims)
    witness = hamming_witness(dims)
    if len(dims) == 2:
        return Prediction(True, value=bound, witness=witness)
    return Prediction(True, lower=bound, upper=None, witness=witness)


def gp_join(
    omega_g: int,
    omega_h: int,
    eta_g: int,
    eta_h: int,
    rho_g: int,
    rho_h: int,
    both_complete: bool = False,
    n_g: int | None = None,
    n_h: int | None = None,
    form: str = "rho",
) -> Prediction:
    """gp(G + H) = max{ω(G)+ω(H), ρ(G), ρ(H)} = max{ω(G)+ω(H), η(G), η(H)}.

    ``form`` selects which of the two equal expressions is evaluated, so a
    harness can compute both and report any disagreement instead of
    resolving it silently. Two complete factors short-circuit to
    n(G) + n(H) = gp(K_{n(G)+n(H)}).
    """
    if both_complete:
        if n_g is None or n_h is None:
            raise InputError("both_complete needs n_g and n_h")
        return Prediction(True, value=n_g + n_h)
    if form == "rho":
        return Prediction(True, value=max(omega_g + omega_h, rho_g, rho_h))
    if form == "eta":
        return Prediction(True, value=max(omega_g + omega_h, eta_g, eta_h))
    raise InputError(f"form must be 'rho' or 'eta', got {form!r}")


def gp_corona(n_g: int, rho_h: int, n_h: int | None = None, rho_witness=None) -> Prediction:
    """gp(G ∘ H) = n(G)·ρ(H) for n(G) >= 2.

    When ``n_h`` and a ρ-witness of H are supplied, the witness places that
    set inside every copy of H (copy i occupies ids n_g + i·n_h ..).
    """
    if n_g < 2:
        return _na(f"needs n(G) >= 2, got {n_g}")
    witness = None
    if n_h is not None and rho_witness is not None:
        rw = vertex_set(rho_witness, n_h)
        if len(rw) != rho_h:
            raise InputError(f"rho_witness has size {len(rw)}, expected {rho_h}")
        witness = tuple(
            sorted(n_g + i * n_h + j for i in range(n_g) for j in rw)
        )
    return Prediction(True, value=n_g * rho_h, witness=witness)


def _edge_index(n: int, u: int, v: int) -> int:
    # position of edge (u, v), u < v, in the lex-ordered edge list of K_n
    return u * n - u * (u + 1) // 2 + (v - u - 1)


def gp_line_complete(n: int) -> Prediction:
    """gp(L(K_n)): n when 3 | n, else n-1.

    Witness when 3 | n: the edges of a partition of K_n into n/3 vertex
    disjoint triangles. Otherwise: the n-1 edges at vertex 0, a maximum
    clique of L(K_n).
    """
    if n < 3:
        return _na(f"needs n >= 3, got {n}")
    if n % 3 == 0:
        ids = []
        for i in range(n // 3):
            a, b, c = 3 * i, 3 * i + 1, 3 * i + 2
            ids += [_edge_index(n, a, b), _edge_index(n, a, c), _edge_index(n, b, c)]
        return Prediction(True, value=n, witness=tuple(sorted(ids)))
    witness = tuple(_edge_index(n, 0, v) for v in range(1, n))
    return Prediction(True, value=n - 1, witness=witness)


def ekr_bound(n: int, k: int) -> int:
    """Erdős–Ko–Rado: α(K(n,k)) <= C(n-1,k-1) for n >= 2k (star attains)."""
    if k < 1 or n < 2 * k:
        raise InputError(f"EKR bound needs n >= 2k >= 2, got n={n}, k={k}")
    return comb(n - 1, k - 1)
