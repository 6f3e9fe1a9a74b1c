"""Rotation systems, face tracing, and genus computations.

A rotation system assigns every vertex a cyclic order of its neighbours.
Tracing the orbits of the dart map (u, v) -> (v, successor of u at v) yields
the faces of the corresponding cellular embedding, and the Euler formula
recovers its genus.  Taking the minimum over all rotation systems gives the
(orientable) genus of the graph; this module computes that minimum exactly by
an exhaustive search organised block by block, and also provides the two
cheap Euler-formula bounds used on graphs far too large for the search.

Face-count convention for disconnected graphs: the outer faces of the
components are merged, so a graph with components c and per-component face
counts f_c has face_count = sum(f_c) - (kappa - 1).  An isolated vertex
contributes one (empty) face walk.  With this convention

    genus = (m - n - face_count + kappa + 1) / 2

holds for every graph with at least one vertex and equals the sum of the
component genera.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .graphs import Graph, GraphError, enumerate_cycles

from . import _genus_search

Rotation = dict[int, tuple[int, ...]]


class SearchBudgetError(RuntimeError):
    """Raised when the exact search runs out of its node budget.

    Carries the best rigorous bracket established before giving up.
    """

    def __init__(self, lower_bound: int, upper_bound: int, nodes_explored: int):
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound
        self.nodes_explored = nodes_explored
        super().__init__(
            f"genus search budget exhausted after {nodes_explored} rotation systems; "
            f"genus is in [{lower_bound}, {upper_bound}]"
        )


@dataclass(frozen=True)
class FaceTrace:
    """Faces of one embedding, as closed dart walks."""

    faces: list[list[tuple[int, int]]]
    face_lengths: list[int]
    face_count: int  # merged count, see module docstring
    component_count: int
    genus: int


@dataclass(frozen=True)
class GenusResult:
    genus: int
    face_count: int
    rotation: Rotation
    nodes_explored: int


def validate_rotation(graph: Graph, rotation: Rotation) -> None:
    """Check that rotation assigns each vertex a permutation of its neighbours."""
    if set(rotation) != set(range(graph.n)):
        raise GraphError("rotation must have exactly the graph's vertices as keys")
    for v in range(graph.n):
        order = rotation[v]
        if len(set(order)) != len(order) or sorted(order) != sorted(graph.neighbors(v).tolist()):
            raise GraphError(f"rotation at vertex {v} is not an ordering of its neighbours")


def trace_faces(graph: Graph, rotation: Rotation, validate: bool = True) -> FaceTrace:
    """Trace all face walks of the embedding given by rotation.

    The dart following (u, v) is (v, w) where w follows u in the rotation at
    v.  Every dart lies on exactly one face walk; isolated vertices add one
    empty walk each.
    """
    if validate:
        validate_rotation(graph, rotation)
    if graph.n == 0:
        return FaceTrace([], [], 0, 0, 0)
    position = [
        {w: i for i, w in enumerate(rotation[v])} for v in range(graph.n)
    ]
    faces: list[list[tuple[int, int]]] = []
    seen: set[tuple[int, int]] = set()
    for u in range(graph.n):
        if not rotation[u]:
            faces.append([])
            continue
        for v in rotation[u]:
            if (u, v) in seen:
                continue
            walk = []
            dart = (u, v)
            while dart not in seen:
                seen.add(dart)
                walk.append(dart)
                a, b = dart
                order = rotation[b]
                dart = (b, order[(position[b][a] + 1) % len(order)])
            faces.append(walk)
    kappa = graph.component_count
    face_count = len(faces) - (kappa - 1)
    twice_genus = graph.m - graph.n - face_count + kappa + 1
    if twice_genus < 0 or twice_genus % 2:
        raise AssertionError("face trace violated the Euler formula")
    return FaceTrace(
        faces=faces,
        face_lengths=[len(w) for w in faces],
        face_count=face_count,
        component_count=kappa,
        genus=twice_genus // 2,
    )


def genus_of_rotation(graph: Graph, rotation: Rotation, validate: bool = True) -> int:
    """Genus of the embedding given by rotation (sum over components)."""
    return trace_faces(graph, rotation, validate=validate).genus


def genus_upper_bound(graph: Graph) -> int:
    """Cycle-rank bound: genus <= floor((m - n + kappa) / 2).

    Follows from the Euler formula since every embedding of a graph with an
    edge has at least one face.
    """
    if graph.n == 0:
        return 0
    return max(0, (graph.m - graph.n + graph.component_count) // 2)


def genus_lower_bound_short_cycles(
    graph: Graph, max_cycle_length: int = 4, cap: int = 10_000_000
) -> int:
    """Euler-formula lower bound from a short-cycle census.

    Let C be the number of cycles of length at most ell = max_cycle_length.
    At most 2C faces can be short (each short face walk traverses a cycle and
    each cycle bounds at most two faces), every other face walk has length at
    least ell + 1, and the walk lengths sum to 2m.  Maximising the face count
    under those constraints and plugging into the Euler formula gives

        genus >= ceil((m - n + kappa + 1 - F) / 2),
        F = (2 m + (ell - 2) * 2 C) / (ell + 1).

    The bound is rigorous for graphs with minimum degree 2 and is reported
    unchanged for general graphs: pruning degree-1 vertices changes neither
    m - n + kappa nor the cycle census, so the value agrees with the bound on
    the 2-core whenever the graph has a cycle, and acyclic graphs return 0.
    """
    ell = int(max_cycle_length)
    if ell < 2:
        raise ValueError("max_cycle_length must be at least 2")
    rank = graph.m - graph.n + graph.component_count
    if rank <= 0:
        return 0
    short = len(enumerate_cycles(graph, ell, cap=cap))
    # ceil over exact integers: F <= (2m + (ell-2)*2C) / (ell+1)
    num = (rank + 1) * (ell + 1) - 2 * graph.m - 2 * short * (ell - 2)
    den = 2 * (ell + 1)
    return max(0, -((-num) // den))


def genus_lower_bound_density(graph: Graph) -> int:
    """Edge-density lower bound: a genus-g graph on v >= 3 vertices has at
    most 3v - 6 + 6g edges, so genus >= ceil((e - 3v + 6) / 6) per component.

    Useful when the graph is too dense for a cycle census; agrees with the
    short-cycle bound at ell = 3 when triangles are scarce.
    """
    if graph.n == 0:
        return 0
    ncomp, labels = graph.component_count, graph.component_labels()
    sizes = np.bincount(labels, minlength=ncomp)
    e = graph.edge_array
    if e.size:
        edge_counts = np.bincount(labels[e[:, 0]], minlength=ncomp)
    else:
        edge_counts = np.zeros(ncomp, dtype=np.int64)
    total = 0
    for nv, ne in zip(sizes.tolist(), edge_counts.tolist()):
        if nv >= 3:
            total += max(0, -((-(ne - 3 * nv + 6)) // 6))
    return total


def perturbation_upper_bound(base_genus: int, k: int) -> int:
    """Genus after adding k edges is at most the base genus plus k: each new
    edge can be routed through a fresh handle."""
    if base_genus < 0 or k < 0:
        raise ValueError("base genus and edge count must be nonnegative")
    return base_genus + k


def _biconnected_edge_blocks(graph: Graph) -> list[list[tuple[int, int]]]:
    """Partition the edges into biconnected blocks (bridges are singletons)."""
    n = graph.n
    adj = graph.adjacency_lists()
    disc = [-1] * n
    low = [0] * n
    timer = 0
    blocks: list[list[tuple[int, int]]] = []
    edge_stack: list[tuple[int, int]] = []
    for s in range(n):
        if disc[s] != -1 or len(adj[s]) == 0:
            continue
        disc[s] = low[s] = timer
        timer += 1
        stack = [(s, -1, 0)]
        while stack:
            v, parent, i = stack[-1]
            if i < len(adj[v]):
                stack[-1] = (v, parent, i + 1)
                w = int(adj[v][i])
                if w == parent:
                    continue
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, 0))
                elif disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if not stack:
                    continue
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == (u, v):
                            break
                    blocks.append(block)
    return blocks


def _girth_upper(adj: list[list[int]]) -> int:
    """Girth of a graph given by adjacency lists (assumed to contain a cycle)."""
    n = len(adj)
    best = n + 1
    for s in range(n):
        dist = {s: 0}
        par = {s: -1}
        frontier = [s]
        while frontier and 2 * dist[frontier[0]] + 1 < best:
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if w == par[v]:
                        continue
                    if w in dist:
                        cyc = dist[v] + dist[w] + 1
                        if cyc < best:
                            best = cyc
                    else:
                        dist[w] = dist[v] + 1
                        par[w] = v
                        nxt.append(w)
            frontier = nxt
    return best


def _block_lower_bound(nv: int, ne: int, girth: int) -> int:
    """Euler-formula lower bound for a 2-connected block: every face walk has
    length >= girth, so f <= floor(2e / girth)."""
    num = (ne - nv + 2) * girth - 2 * ne
    den = 2 * girth
    return max(0, -((-num) // den))


def _block_rows(
    out_darts: list[list[int]], anchor: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, list[list[tuple[int, ...]]]]:
    """Flatten per-vertex rotation candidate rows for the search kernel.

    Row r of vertex i lists its outgoing darts in cyclic order, always
    starting from its first dart.  At the anchor vertex only one of each
    mirror pair of rotations is kept: reflecting the whole system reverses
    every rotation and preserves the face structure, so dropping reflections
    at a single vertex cannot lose the minimum.
    """
    nv = len(out_darts)
    perms_per_vertex: list[list[tuple[int, ...]]] = []
    for i in range(nv):
        d = len(out_darts[i])
        perms = list(permutations(range(1, d)))
        if i == anchor and d >= 4:
            perms = [p for p in perms if p <= p[::-1]]
        perms_per_vertex.append(perms)
    deg = np.array([len(o) for o in out_darts], dtype=np.int64)
    row_count = np.array([len(p) for p in perms_per_vertex], dtype=np.int64)
    row_offset = np.zeros(nv, dtype=np.int64)
    total = 0
    for i in range(nv):
        row_offset[i] = total
        total += int(row_count[i] * deg[i])
    flat = np.empty(total, dtype=np.int64)
    for i in range(nv):
        base = out_darts[i]
        off = int(row_offset[i])
        d = int(deg[i])
        for r, p in enumerate(perms_per_vertex[i]):
            flat[off + r * d] = base[0]
            for t, j in enumerate(p):
                flat[off + r * d + 1 + t] = base[j]
    return flat, row_offset, row_count, deg, perms_per_vertex


def exact_genus(
    graph: Graph, node_budget: int = 50_000_000, use_jit: bool | None = None
) -> GenusResult:
    """Minimum orientable genus by exhaustive search over rotation systems.

    The graph is split into biconnected blocks (genus is additive over
    blocks), each block is searched independently with an early exit once its
    Euler-formula lower bound is attained, and the per-block rotations are
    concatenated into a rotation system of the whole graph that realises the
    minimum.  node_budget caps the total number of rotation systems traced
    across all blocks; exceeding it raises SearchBudgetError carrying the
    bracket proved so far.  use_jit selects the numba kernel explicitly
    (None: use it when available).
    """
    if use_jit is None:
        use_jit = _genus_search.HAVE_NUMBA
    if use_jit and not _genus_search.HAVE_NUMBA:
        raise RuntimeError("numba kernel requested but numba is not importable")
    kernel = _genus_search.search_jit if use_jit else _genus_search.search_python

    arcs: list[list[tuple[int, ...]]] = [[] for _ in range(graph.n)]
    blocks = _biconnected_edge_blocks(graph)

    # cheap blocks first so a budget overrun brackets as tightly as possible
    searchable: list[tuple[float, list[tuple[int, int]]]] = []
    for block in blocks:
        if len(block) == 1:
            u, v = block[0]
            arcs[u].append((v,))
            arcs[v].append((u,))
            continue
        degree_in_block: dict[int, int] = {}
        for a, b in block:
            degree_in_block[a] = degree_in_block.get(a, 0) + 1
            degree_in_block[b] = degree_in_block.get(b, 0) + 1
        space = 0.0  # log of the assignment count
        for d in degree_in_block.values():
            for k in range(2, d):
                space += np.log(k)
        searchable.append((space, block))
    searchable.sort(key=lambda t: t[0])

    total_genus = 0
    total_nodes = 0
    # (lb, ub) per searchable block, refined as blocks are processed
    block_bounds: list[tuple[int, int]] = []
    for _, block in searchable:
        verts = sorted({x for e in block for x in e})
        block_bounds.append((0, (len(block) - len(verts) + 1) // 2))

    for bi, (_, block) in enumerate(searchable):
        verts = sorted({x for e in block for x in e})
        index = {x: i for i, x in enumerate(verts)}
        ne = len(block)
        nv = len(verts)
        out_darts = [[] for _ in range(nv)]
        heads = np.empty(2 * ne, dtype=np.int64)
        for j, (a, b) in enumerate(block):
            la, lb_ = index[a], index[b]
            out_darts[la].append(2 * j)
            out_darts[lb_].append(2 * j + 1)
            heads[2 * j] = lb_
            heads[2 * j + 1] = la
        local_adj = [[int(heads[d]) for d in out_darts[i]] for i in range(nv)]
        girth = _girth_upper(local_adj)
        lower = _block_lower_bound(nv, ne, girth)
        block_bounds[bi] = (lower, block_bounds[bi][1])
        f_target = ne - nv + 2 - 2 * lower
        anchor = max(range(nv), key=lambda i: len(out_darts[i]))
        # put the anchor first so its digit moves slowest
        order = [anchor] + [i for i in range(nv) if i != anchor]
        darts_ordered = [out_darts[i] for i in order]
        flat, row_offset, row_count, deg, perms = _block_rows(darts_ordered, 0)
        budget = node_budget - total_nodes
        if budget <= 0:
            budget = 1
        best_digits = np.zeros(nv, dtype=np.int64)
        best_f, nodes, done = kernel(
            2 * ne, flat, row_offset, row_count, deg, f_target, budget, best_digits
        )
        total_nodes += int(nodes)
        achieved = (ne - nv + 2 - int(best_f)) // 2
        if not done:
            lo = total_genus + sum(b[0] for b in block_bounds[bi:])
            hi = total_genus + achieved + sum(b[1] for b in block_bounds[bi + 1 :])
            raise SearchBudgetError(lo, hi, total_nodes)
        total_genus += achieved
        for k, i in enumerate(order):
            row = [darts_ordered[k][0]]
            p = perms[k][int(best_digits[k])]
            row += [darts_ordered[k][j] for j in p]
            arcs[verts[i]].append(tuple(verts[int(heads[d])] for d in row))

    rotation: Rotation = {
        v: tuple(w for arc in arcs[v] for w in arc) for v in range(graph.n)
    }
    if graph.n == 0:
        return GenusResult(0, 0, rotation, total_nodes)
    kappa = graph.component_count
    face_count = graph.m - graph.n + kappa + 1 - 2 * total_genus
    return GenusResult(total_genus, face_count, rotation, total_nodes)
