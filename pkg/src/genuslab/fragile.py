"""Genus amplification by random edges.

A connected base graph of bounded maximum degree is cut into equal-size
connected cores; contracting each core of the random-edge graph onto a
single vertex yields a quotient that is a minor of the perturbed graph, so
any genus lower bound certified for the quotient transfers to the whole.
The quotient of a sublinear number of random edges is already a uniform
random graph dense enough to have genus proportional to its size, which is
what makes the genus of bounded-degree graphs fragile under perturbation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embeddings import (
    genus_lower_bound_density,
    genus_lower_bound_short_cycles,
    genus_upper_bound,
    perturbation_upper_bound,
)
from .graphs import Graph
from .random_models import add_uniform_edges


class DecompositionError(ValueError):
    """Input violates the decomposition preconditions or guarantees."""


@dataclass(frozen=True)
class PieceDecomposition:
    """Disjoint connected pieces of a base graph, with optional cores.

    pieces is a sequence of vertex sets V_1..V_t, each of size between
    l*Delta and l*Delta**2, together covering all but fewer than l*Delta
    vertices, each inducing a connected subgraph.  cores, once selected,
    are connected subsets U_i of V_i sharing the common size
    s = min_i |V_i|; cores is empty until select_cores fills it.
    """

    l: int
    Delta: int
    pieces: tuple[tuple[int, ...], ...]
    cores: tuple[tuple[int, ...], ...]
    s: int
    t: int


@dataclass(frozen=True)
class FragileReport:
    """Result of one amplification trial.

    genus_lower_gamma is a certified lower bound for the genus of the
    perturbed graph: in the standard branch it is the Euler-formula bound on
    the core quotient (a minor), and in the dense branch (k >= 6n, where
    decomposition is bypassed and t, s, gamma_edges, good_edge_count are
    reported as 0) it is the Euler-formula bound on the random edges alone.
    upper_bound is the base graph's genus bound plus one per added edge.
    """

    n: int
    k: int
    Delta: int
    l: int
    t: int
    s: int
    gamma_edges: int
    good_edge_count: int
    genus_lower_gamma: int
    upper_bound: int
    seed: int | None = None


def _check_base(H: Graph, Delta: int) -> None:
    if Delta < 1:
        raise DecompositionError("Delta must be at least 1")
    if H.n == 0 or H.component_count != 1:
        raise DecompositionError("base graph must be connected")
    maxdeg = int(H.degrees().max())
    if maxdeg > Delta:
        raise DecompositionError(
            f"maximum degree {maxdeg} exceeds Delta={Delta}; the piece-size "
            "guarantee fails for high-degree hubs such as stars"
        )


def decompose_into_pieces(H: Graph, l: int, Delta: int) -> PieceDecomposition:
    """Cut a connected graph of maximum degree at most Delta into connected
    pieces of size between l*Delta and l*Delta**2 covering all but fewer
    than l*Delta vertices.

    Works on a breadth-first spanning tree: scanning vertices deepest
    first, the subtree below a vertex is detached as a piece as soon as its
    undetached part reaches l*Delta vertices.  Every proper child subtree
    was below the threshold at that moment, so a detached piece has at most
    1 + Delta*(l*Delta - 1) <= l*Delta**2 vertices, and the final leftover
    around the root is below l*Delta and is discarded.
    """
    if l < 1:
        raise DecompositionError("l must be at least 1")
    _check_base(H, Delta)
    target = l * Delta
    if target > H.n:
        raise DecompositionError(
            f"need at least l*Delta={target} vertices, have {H.n}"
        )
    parent = [-1] * H.n
    order = [0]
    seen = bytearray(H.n)
    seen[0] = 1
    qi = 0
    while qi < len(order):
        u = order[qi]
        qi += 1
        for x in H.neighbors(u).tolist():
            if not seen[x]:
                seen[x] = 1
                parent[x] = u
                order.append(x)
    children: list[list[int]] = [[] for _ in range(H.n)]
    for v in order[1:]:
        children[parent[v]].append(v)
    size = [1] * H.n
    detached = bytearray(H.n)
    pieces: list[tuple[int, ...]] = []
    for v in reversed(order):
        total = 1
        for c in children[v]:
            if not detached[c]:
                total += size[c]
        size[v] = total
        if total >= target:
            comp: list[int] = []
            stack = [v]
            while stack:
                u = stack.pop()
                comp.append(u)
                detached[u] = 1
                for c in children[u]:
                    if not detached[c]:
                        stack.append(c)
            pieces.append(tuple(sorted(comp)))
    return PieceDecomposition(
        l=l,
        Delta=Delta,
        pieces=tuple(pieces),
        cores=(),
        s=min(len(p) for p in pieces),
        t=len(pieces),
    )


def select_cores(H: Graph, d: PieceDecomposition) -> PieceDecomposition:
    """Shrink each piece to a connected core of the common size s.

    The core is the first s vertices of a breadth-first traversal of the
    piece, which is the same as repeatedly pruning a leaf of the piece's
    spanning tree until s vertices remain.
    """
    cores: list[tuple[int, ...]] = []
    for piece in d.pieces:
        members = set(piece)
        root = piece[0]
        taken = [root]
        seen = {root}
        qi = 0
        while qi < len(taken) and len(taken) < d.s:
            u = taken[qi]
            qi += 1
            for x in H.neighbors(u).tolist():
                if x in members and x not in seen:
                    seen.add(x)
                    taken.append(x)
                    if len(taken) == d.s:
                        break
        cores.append(tuple(sorted(taken[: d.s])))
    return PieceDecomposition(
        l=d.l, Delta=d.Delta, pieces=d.pieces, cores=tuple(cores), s=d.s, t=d.t
    )


def _core_owner(d: PieceDecomposition) -> dict[int, int]:
    if not d.cores:
        raise DecompositionError("cores have not been selected")
    owner: dict[int, int] = {}
    for i, core in enumerate(d.cores):
        for v in core:
            owner[v] = i
    return owner


def build_quotient(d: PieceDecomposition, edges) -> Graph:
    """Graph on the piece indices 0..t-1, joining i and j when some given
    edge runs between core U_i and core U_j.

    Edges touching a vertex outside every core, or with both ends in the
    same core, contribute nothing.  Equals the contraction of the cores in
    the graph formed by the given edges; since each core is connected in
    the base graph, the result is a minor of the union of base graph and
    given edges, and its genus is a valid lower bound for that union.
    """
    owner = _core_owner(d)
    pairs: set[tuple[int, int]] = set()
    for a, b in edges:
        ia = owner.get(int(a))
        ib = owner.get(int(b))
        if ia is None or ib is None or ia == ib:
            continue
        pairs.add((ia, ib) if ia < ib else (ib, ia))
    return Graph(d.t, sorted(pairs))


def count_good_edges(d: PieceDecomposition, edges_in_order) -> int:
    """Count the edges that join two distinct cores no earlier edge joined.

    Scanning in insertion order, an edge is good when both endpoints lie in
    cores, the cores differ, and the pair of cores is new.  The count
    equals the quotient's edge count over the same edge sequence.
    """
    owner = _core_owner(d)
    seen: set[tuple[int, int]] = set()
    count = 0
    for a, b in edges_in_order:
        ia = owner.get(int(a))
        ib = owner.get(int(b))
        if ia is None or ib is None or ia == ib:
            continue
        key = (ia, ib) if ia < ib else (ib, ia)
        if key not in seen:
            seen.add(key)
            count += 1
    return count


def fragile_experiment(
    H: Graph, Delta: int, k: int, seed=None, ell: int = 4
) -> FragileReport:
    """Perturb H with k uniform random pairs and certify genus bounds.

    Sets l = ceil(3*Delta*n/k), decomposes H, selects cores, draws the
    random pairs, and lower-bounds the genus of the perturbed graph by the
    short-cycle Euler bound (census length ell) on the core quotient.
    When k >= 6n the random edges are dense enough on their own:
    decomposition is bypassed and the lower bound is computed directly from
    the random-edge graph, whose every face has length at least 3.
    The piece count is checked against its guaranteed interval
    (n - l*Delta)/(l*Delta^2) <= t <= n/(l*Delta).
    """
    _check_base(H, Delta)
    if k < 1:
        raise ValueError("k must be at least 1")
    n = H.n
    l = -(-3 * Delta * n // k)
    upper = perturbation_upper_bound(genus_upper_bound(H), k)
    combined, added = add_uniform_edges(H, k, seed)
    del combined
    if k >= 6 * n:
        R_graph = Graph(n, added)
        lower = max(
            genus_lower_bound_short_cycles(R_graph, 2),
            genus_lower_bound_density(R_graph),
        )
        return FragileReport(
            n=n, k=k, Delta=Delta, l=l, t=0, s=0,
            gamma_edges=0, good_edge_count=0,
            genus_lower_gamma=lower, upper_bound=upper, seed=seed,
        )
    d = select_cores(H, decompose_into_pieces(H, l, Delta))
    lo_t = (n - l * Delta) / (l * Delta**2)
    hi_t = n / (l * Delta)
    if not (lo_t <= d.t <= hi_t):
        raise DecompositionError(
            f"piece count {d.t} escaped its guaranteed interval "
            f"[{lo_t:.2f}, {hi_t:.2f}]"
        )
    good = count_good_edges(d, added)
    gamma = build_quotient(d, added)
    return FragileReport(
        n=n, k=k, Delta=Delta, l=l, t=d.t, s=d.s,
        gamma_edges=gamma.m, good_edge_count=good,
        genus_lower_gamma=genus_lower_bound_short_cycles(gamma, ell),
        upper_bound=upper, seed=seed,
    )
