"""Simple undirected graphs and the structural operations the rest of the
package builds on: components, 2-cores, induced subgraphs, quotients, and
bounded-length cycle enumeration.

Vertices are the integers 0..n-1.  Self-loops and parallel edges are
rejected.  Storage is a numpy edge array plus a CSR adjacency, so the
structural operations stay cheap at n around 10^6.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _sp_connected_components


class GraphError(ValueError):
    """Invalid graph input: label out of range, self-loop, duplicate edge."""


class CycleBudgetError(RuntimeError):
    """Cycle enumeration passed its cap before finishing."""

    def __init__(self, cap: int, max_length: int):
        super().__init__(
            f"more than {cap} simple cycles of length <= {max_length}"
        )
        self.cap = cap
        self.max_length = max_length


def _as_edge_array(edges) -> np.ndarray:
    arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                     dtype=np.int64)
    if arr.size == 0:
        return arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise GraphError("edges must be pairs of vertices")
    return arr


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Edges are normalized to (u, v) with u < v and stored sorted, so two
    graphs with the same edge set have identical edge arrays.
    """

    __slots__ = ("_n", "_edges", "_indptr", "_indices", "_labels", "_ncomp")

    def __init__(self, n: int, edges=()):
        n = int(n)
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        arr = _as_edge_array(edges)
        if arr.size:
            if arr.min() < 0 or arr.max() >= n:
                raise GraphError("edge endpoint out of range")
            if (arr[:, 0] == arr[:, 1]).any():
                raise GraphError("self-loops are not allowed")
            lo = np.minimum(arr[:, 0], arr[:, 1])
            hi = np.maximum(arr[:, 0], arr[:, 1])
            codes = hi * (hi - 1) // 2 + lo
            codes = np.sort(codes)
            if codes.size > 1 and (codes[1:] == codes[:-1]).any():
                raise GraphError("duplicate edges are not allowed")
            hi = ((1.0 + np.sqrt(8.0 * codes.astype(np.float64) + 1.0)) * 0.5).astype(np.int64)
            hi = np.where(hi * (hi - 1) // 2 > codes, hi - 1, hi)
            hi = np.where((hi + 1) * hi // 2 <= codes, hi + 1, hi)
            lo = codes - hi * (hi - 1) // 2
            arr = np.column_stack([lo, hi])
        self._n = n
        self._edges = arr
        self._edges.setflags(write=False)
        # CSR adjacency over both dart directions; neighbor lists come out sorted
        if arr.size:
            tails = np.concatenate([arr[:, 0], arr[:, 1]])
            heads = np.concatenate([arr[:, 1], arr[:, 0]])
            order = np.lexsort((heads, tails))
            self._indices = heads[order]
            counts = np.bincount(tails, minlength=n)
        else:
            self._indices = np.zeros(0, dtype=np.int64)
            counts = np.zeros(n, dtype=np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        self._indptr = indptr
        self._indices.setflags(write=False)
        self._labels = None
        self._ncomp = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._edges.shape[0]

    @property
    def edge_array(self) -> np.ndarray:
        """Read-only (m, 2) array, rows sorted with u < v."""
        return self._edges

    def edge_list(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self._edges]

    def degree(self, v: int) -> int:
        return int(self._indptr[v + 1] - self._indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor array (read-only view)."""
        return self._indices[self._indptr[v]:self._indptr[v + 1]]

    def adjacency_lists(self) -> list[list[int]]:
        ind = self._indices.tolist()
        ptr = self._indptr.tolist()
        return [ind[ptr[v]:ptr[v + 1]] for v in range(self._n)]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = np.searchsorted(row, v)
        return i < len(row) and row[i] == v

    def _components(self) -> tuple[int, np.ndarray]:
        if self._labels is None:
            if self._n == 0:
                self._ncomp, self._labels = 0, np.zeros(0, dtype=np.int64)
            else:
                mat = csr_matrix(
                    (np.ones(len(self._indices), dtype=np.int8),
                     self._indices, self._indptr),
                    shape=(self._n, self._n),
                )
                ncomp, labels = _sp_connected_components(mat, directed=False)
                self._ncomp, self._labels = int(ncomp), labels
        return self._ncomp, self._labels

    @property
    def component_count(self) -> int:
        return self._components()[0]

    def component_labels(self) -> np.ndarray:
        """Label array: component_labels()[v] identifies v's component."""
        return self._components()[1]

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._edges, other._edges)

    def __hash__(self):
        return hash((self._n, self._edges.tobytes()))


def excess(G: Graph) -> int:
    """Edges minus vertices; positive exactly when some component has two
    independent cycles."""
    return G.m - G.n


@dataclass(frozen=True)
class InducedSubgraph:
    """Induced subgraph relabeled to 0..k-1, with the label correspondence.

    old_labels[i] is the original label of new vertex i (sorted ascending).
    """

    graph: Graph
    old_labels: np.ndarray

    def new_index(self, old_label: int) -> int:
        i = int(np.searchsorted(self.old_labels, old_label))
        if i >= len(self.old_labels) or self.old_labels[i] != old_label:
            raise KeyError(old_label)
        return i


def induced_subgraph(G: Graph, vertices) -> InducedSubgraph:
    """Subgraph induced on the given vertex set, relabeled compactly."""
    keep = np.unique(np.asarray(list(vertices) if not isinstance(vertices, np.ndarray) else vertices,
                                dtype=np.int64))
    if keep.size and (keep[0] < 0 or keep[-1] >= G.n):
        raise GraphError("vertex out of range")
    lookup = np.full(G.n, -1, dtype=np.int64)
    lookup[keep] = np.arange(keep.size)
    e = G.edge_array
    if e.size:
        mask = (lookup[e[:, 0]] >= 0) & (lookup[e[:, 1]] >= 0)
        sub_edges = lookup[e[mask]]
    else:
        sub_edges = e
    return InducedSubgraph(Graph(keep.size, sub_edges), keep)


def two_core(G: Graph) -> InducedSubgraph:
    """Maximal subgraph with minimum degree 2 (empty if none exists).

    Peels degree-<2 vertices in vectorized rounds; a long chain of rounds
    (deep pendant paths) falls back to a sequential queue peel.
    """
    n = G.n
    deg = G.degrees().astype(np.int64)
    alive = deg >= 2
    edges = G.edge_array
    e_alive = np.ones(edges.shape[0], dtype=bool) if edges.size else np.zeros(0, dtype=bool)
    rounds = 0
    while True:
        dead_end = e_alive & (~alive[edges[:, 0]] | ~alive[edges[:, 1]]) if edges.size else e_alive
        if not dead_end.any():
            break
        dec = np.bincount(edges[dead_end].ravel(), minlength=n)
        deg -= dec
        e_alive &= ~dead_end
        alive &= deg >= 2
        rounds += 1
        if rounds >= 64:
            # sequential peel on the remnant; edges to vertices killed in the
            # final vectorized round are dropped here, which already lowers
            # the adjacency degrees the queue seeds from
            live = edges[e_alive]
            if live.size:
                live = live[alive[live[:, 0]] & alive[live[:, 1]]]
            adj = {int(v): set() for v in np.flatnonzero(alive)}
            for u, v in live:
                adj[int(u)].add(int(v))
                adj[int(v)].add(int(u))
            queue = [v for v, nb in adj.items() if len(nb) < 2]
            dead = set()
            while queue:
                v = queue.pop()
                if v in dead:
                    continue
                dead.add(v)
                for w in adj[v]:
                    adj[w].discard(v)
                    if len(adj[w]) < 2 and w not in dead:
                        queue.append(w)
                adj[v] = set()
            for v in dead:
                alive[v] = False
            break
    return induced_subgraph(G, np.flatnonzero(alive))


def giant_component(G: Graph) -> InducedSubgraph:
    """Largest connected component; ties broken by smallest contained label."""
    if G.n == 0:
        raise GraphError("empty graph has no components")
    ncomp, labels = G._components()
    sizes = np.bincount(labels, minlength=ncomp)
    best = sizes.max()
    candidates = np.flatnonzero(sizes == best)
    if len(candidates) > 1:
        # first vertex with a candidate label has the smallest label overall
        firsts = [np.argmax(labels == c) for c in candidates]
        chosen = candidates[int(np.argmin(firsts))]
    else:
        chosen = candidates[0]
    return induced_subgraph(G, np.flatnonzero(labels == chosen))


def contract_sets(G: Graph, sets) -> Graph:
    """Quotient graph: each given vertex set becomes one vertex.

    Sets must be disjoint and nonempty.  Vertices outside every set are
    dropped, loops arising inside a set are dropped, and parallel edges
    collapse, so the result is a simple graph on len(sets) vertices.  When
    each set induces a connected subgraph, the result is a minor of G.
    """
    part = np.full(G.n, -1, dtype=np.int64)
    count = 0
    for i, s in enumerate(sets):
        members = np.asarray(list(s) if not isinstance(s, np.ndarray) else s, dtype=np.int64)
        if members.size == 0:
            raise GraphError("contraction sets must be nonempty")
        if members.min() < 0 or members.max() >= G.n:
            raise GraphError("vertex out of range")
        if (part[members] >= 0).any():
            raise GraphError("contraction sets must be disjoint")
        part[members] = i
        count = i + 1
    e = G.edge_array
    if e.size:
        a = part[e[:, 0]]
        b = part[e[:, 1]]
        mask = (a >= 0) & (b >= 0) & (a != b)
        qe = np.column_stack([np.minimum(a[mask], b[mask]), np.maximum(a[mask], b[mask])])
        if qe.size:
            qe = np.unique(qe, axis=0)
    else:
        qe = e
    return Graph(count, qe)


def enumerate_cycles(G: Graph, max_length: int, cap: int = 10_000_000) -> list[tuple[int, ...]]:
    """All simple cycles of length at most max_length, as canonical tuples.

    A cycle (v0, ..., v_{k-1}) is canonical when v0 is its smallest vertex
    and v1 < v_{k-1}; each cycle appears exactly once.  Raises
    CycleBudgetError if more than cap cycles are found.
    """
    if max_length < 3:
        return []
    n = G.n
    adj = G.adjacency_lists()
    on_path = bytearray(n)
    out: list[tuple[int, ...]] = []
    for root in range(n):
        if len(adj[root]) < 2:
            continue
        path = [root]
        on_path[root] = 1
        pos = [0]
        while pos:
            v = path[-1]
            nbrs = adj[v]
            i = pos[-1]
            descended = False
            while i < len(nbrs):
                w = nbrs[i]
                i += 1
                if w == root:
                    if len(path) >= 3 and path[1] < path[-1]:
                        out.append(tuple(path))
                        if len(out) > cap:
                            raise CycleBudgetError(cap, max_length)
                elif w > root and not on_path[w] and len(path) < max_length:
                    pos[-1] = i
                    path.append(w)
                    on_path[w] = 1
                    pos.append(0)
                    descended = True
                    break
            if not descended:
                pos.pop()
                on_path[path.pop()] = 0
    return out


# -- edge list text format: first line "n m", then one "u v" line per edge --

def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError("header must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise GraphError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)


def format_edge_list(G: Graph) -> str:
    rows = [f"{G.n} {G.m}"]
    rows.extend(f"{u} {v}" for u, v in G.edge_array)
    return "\n".join(rows) + "\n"


def load_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def save_edge_list(G: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(G))


# -- small named constructors used by fixtures, tests, and the CLI --

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube_graph(d: int) -> Graph:
    n = 1 << d
    return Graph(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def grid_graph(rows: int, cols: int) -> Graph:
    def idx(r, c):
        return r * cols + c
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((idx(r, c), idx(r, c + 1)))
            if r + 1 < rows:
                edges.append((idx(r, c), idx(r + 1, c)))
    return Graph(rows * cols, edges)
