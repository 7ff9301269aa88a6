"""Labelled multigraph plus the spectral/combinatorial queries the synthesis
loop issues after every edge insertion.

Vertices model X-type checks, edges model ancilla qubits. Parallel edges are
allowed everywhere (path matchings and random sampling both create them);
self-loops are not.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError, ParameterError

# Dense eigendecomposition below this size; iterative solver with deflation of
# the all-ones vector above it.
_DENSE_EIG_LIMIT = 512

_LAMBDA_TOL = 1e-9


class MultiGraph:
    """Undirected multigraph with stable integer edge ids (insertion order)."""

    __slots__ = ("num_vertices", "edges", "_adjacency", "_adjacency_dirty")

    def __init__(self, num_vertices: int):
        if num_vertices < 0:
            raise ParameterError(f"negative vertex count {num_vertices}")
        self.num_vertices = num_vertices
        self.edges: list[tuple[int, int]] = []
        self._adjacency: list[list[tuple[int, int]]] | None = None
        self._adjacency_dirty = True

    @classmethod
    def from_edges(cls, num_vertices: int, pairs) -> "MultiGraph":
        g = cls(num_vertices)
        for u, v in pairs:
            g.add_edge(u, v)
        return g

    def add_edge(self, u: int, v: int) -> int:
        if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
            raise ParameterError(f"edge ({u}, {v}) out of range")
        if u == v:
            raise ParameterError(f"self-loop at vertex {u} is not allowed")
        self.edges.append((u, v))
        self._adjacency_dirty = True
        return len(self.edges) - 1

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def endpoints(self, edge_id: int) -> tuple[int, int]:
        return self.edges[edge_id]

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex incident (neighbor, edge_id) lists, sorted for
        deterministic iteration across identically seeded runs."""
        if self._adjacency_dirty or self._adjacency is None:
            adj: list[list[tuple[int, int]]] = [[] for _ in range(self.num_vertices)]
            for eid, (u, v) in enumerate(self.edges):
                adj[u].append((v, eid))
                adj[v].append((u, eid))
            for lst in adj:
                lst.sort()
            self._adjacency = adj
            self._adjacency_dirty = False
        return self._adjacency

    def degree(self, v: int) -> int:
        return len(self.adjacency()[v])

    def degrees(self) -> list[int]:
        adj = self.adjacency()
        return [len(lst) for lst in adj]

    def copy(self) -> "MultiGraph":
        g = MultiGraph(self.num_vertices)
        g.edges = list(self.edges)
        return g

    def laplacian(self) -> np.ndarray:
        """Dense Laplacian D - A; parallel edges count with multiplicity."""
        n = self.num_vertices
        lap = np.zeros((n, n), dtype=np.float64)
        for u, v in self.edges:
            lap[u, u] += 1.0
            lap[v, v] += 1.0
            lap[u, v] -= 1.0
            lap[v, u] -= 1.0
        return lap

    def component_labels(self) -> list[int]:
        """Connected-component id per vertex (ids are 0..k-1 by first visit)."""
        adj = self.adjacency()
        comp = [-1] * self.num_vertices
        cid = 0
        for root in range(self.num_vertices):
            if comp[root] >= 0:
                continue
            stack = [root]
            comp[root] = cid
            while stack:
                x = stack.pop()
                for y, _ in adj[x]:
                    if comp[y] < 0:
                        comp[y] = cid
                        stack.append(y)
            cid += 1
        return comp

    def num_components(self) -> int:
        labels = self.component_labels()
        return (max(labels) + 1) if labels else 0

    def dump_edges(self) -> str:
        """Debug dump, one `u v edge_id` line per edge (diffable between runs)."""
        return "\n".join(f"{u} {v} {eid}" for eid, (u, v) in enumerate(self.edges))

    def __repr__(self) -> str:
        return f"MultiGraph(V={self.num_vertices}, E={self.num_edges})"


def lambda2(g: MultiGraph) -> float:
    """Second-smallest Laplacian eigenvalue (algebraic connectivity).

    Exact to ~1e-9; returns ~0 for disconnected graphs. Below
    ``_DENSE_EIG_LIMIT`` vertices a full symmetric eigendecomposition is used;
    above it, an iterative smallest-eigenpair solve with the all-ones vector
    deflated away.
    """
    n = g.num_vertices
    if n < 2:
        raise ParameterError("lambda2 needs at least 2 vertices")
    lap = g.laplacian()
    if n < _DENSE_EIG_LIMIT:
        vals = np.linalg.eigvalsh(lap)
        return float(max(vals[1], 0.0))
    from scipy.sparse.linalg import LinearOperator, eigsh

    # Push the all-ones eigenvector (eigenvalue 0) above the spectrum so the
    # smallest eigenvalue of the deflated operator is lambda2.
    shift = 2.0 * float(np.max(np.diag(lap))) + 2.0
    ones = np.ones(n) / np.sqrt(n)

    def matvec(x):
        return lap @ x + shift * ones * (ones @ x)

    op = LinearOperator((n, n), matvec=matvec, dtype=np.float64)
    vals, _ = eigsh(op, k=1, which="SA", tol=1e-10)
    return float(max(vals[0], 0.0))


def _popcounts(masks: np.ndarray) -> np.ndarray:
    return np.bitwise_count(masks)


def _boundary_sizes(g: MultiGraph, masks: np.ndarray) -> np.ndarray:
    """Edge-boundary size |delta(U)| for every subset mask in ``masks``."""
    out = np.zeros(masks.shape, dtype=np.int64)
    for u, v in g.edges:
        out += ((masks >> np.uint64(u)) ^ (masks >> np.uint64(v))) & np.uint64(1)
    return out


_CHEEGER_LIMIT = 24
_CHUNK = 1 << 18


def _iter_subset_chunks(n: int):
    total = 1 << n
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        yield np.arange(start, stop, dtype=np.uint64)


def cheeger_bruteforce(g: MultiGraph) -> float:
    """Exact Cheeger constant by exhaustive cut enumeration (|V| <= 24).

    beta(G) = min over proper nonempty U of |delta(U)| / min(|U|, |V\\U|).
    """
    n = g.num_vertices
    if n > _CHEEGER_LIMIT:
        raise CapacityError(f"cheeger_bruteforce supports |V| <= {_CHEEGER_LIMIT}, got {n}")
    if n < 2:
        raise ParameterError("cheeger_bruteforce needs at least 2 vertices")
    best = np.inf
    full = (1 << n) - 1
    for masks in _iter_subset_chunks(n):
        sizes = _popcounts(masks).astype(np.int64)
        keep = (masks != 0) & (masks != np.uint64(full))
        if not keep.any():
            continue
        boundary = _boundary_sizes(g, masks)
        denom = np.minimum(sizes, n - sizes)
        ratios = boundary[keep] / denom[keep]
        best = min(best, float(ratios.min()))
    return best


def relative_cheeger_bruteforce(g: MultiGraph, ports, t: int) -> float:
    """Exact relative Cheeger constant beta_t(G, P) by enumeration.

    Largest beta with |delta(U)| >= beta * min(t, |U & P|, |P \\ U|) over all
    subsets U; subsets with a non-positive denominator impose no constraint.
    """
    n = g.num_vertices
    if n > _CHEEGER_LIMIT:
        raise CapacityError(f"relative_cheeger_bruteforce supports |V| <= {_CHEEGER_LIMIT}, got {n}")
    ports = sorted(set(ports))
    if not ports:
        raise ParameterError("port set must be nonempty")
    if t <= 0:
        raise ParameterError(f"t must be positive, got {t}")
    port_mask = np.uint64(sum(1 << p for p in ports))
    p_total = len(ports)
    best = np.inf
    for masks in _iter_subset_chunks(n):
        in_ports = _popcounts(masks & port_mask).astype(np.int64)
        denom = np.minimum(np.minimum(np.int64(t), in_ports), p_total - in_ports)
        keep = denom > 0
        if not keep.any():
            continue
        boundary = _boundary_sizes(g, masks)
        ratios = boundary[keep] / denom[keep]
        best = min(best, float(ratios.min()))
    return best


@dataclass
class SpanningForest:
    """Rooted spanning forest with parent pointers and the tree-edge id set."""

    num_vertices: int
    parent: list[int]          # -1 at roots
    parent_edge: list[int]     # -1 at roots
    depth: list[int]
    comp: list[int]
    tree_edges: set[int] = field(default_factory=set)

    @classmethod
    def from_edge_items(cls, num_vertices: int, items) -> "SpanningForest":
        """BFS forest over (edge_id, u, v) items; roots at the smallest
        unvisited vertex id so identical inputs give identical forests."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(num_vertices)]
        for eid, u, v in items:
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        for lst in adj:
            lst.sort()
        parent = [-1] * num_vertices
        parent_edge = [-1] * num_vertices
        depth = [0] * num_vertices
        comp = [-1] * num_vertices
        tree_edges: set[int] = set()
        cid = 0
        for root in range(num_vertices):
            if comp[root] >= 0:
                continue
            comp[root] = cid
            queue = [root]
            head = 0
            while head < len(queue):
                x = queue[head]
                head += 1
                for y, eid in adj[x]:
                    if comp[y] < 0:
                        comp[y] = cid
                        parent[y] = x
                        parent_edge[y] = eid
                        depth[y] = depth[x] + 1
                        tree_edges.add(eid)
                        queue.append(y)
            cid += 1
        return cls(num_vertices, parent, parent_edge, depth, comp, tree_edges)

    @classmethod
    def from_graph(cls, g: MultiGraph) -> "SpanningForest":
        return cls.from_edge_items(
            g.num_vertices, ((eid, u, v) for eid, (u, v) in enumerate(g.edges))
        )

    def rebuilt_with_swap(self, g: MultiGraph, removed: int, added: int) -> "SpanningForest":
        """Forest over the same graph after exchanging one tree edge."""
        ids = (self.tree_edges - {removed}) | {added}
        return SpanningForest.from_edge_items(
            self.num_vertices, ((eid, *g.endpoints(eid)) for eid in sorted(ids))
        )

    def num_components(self) -> int:
        return (max(self.comp) + 1) if self.comp else 0


def bfs_forest(g: MultiGraph) -> SpanningForest:
    """Deterministic BFS spanning forest of the whole graph."""
    return SpanningForest.from_graph(g)


def tree_path(f: SpanningForest, u: int, v: int) -> list[int] | None:
    """Edge ids of the unique forest path u -> v, or None across components."""
    if f.comp[u] != f.comp[v]:
        return None
    left: list[int] = []
    right: list[int] = []
    a, b = u, v
    while f.depth[a] > f.depth[b]:
        left.append(f.parent_edge[a])
        a = f.parent[a]
    while f.depth[b] > f.depth[a]:
        right.append(f.parent_edge[b])
        b = f.parent[b]
    while a != b:
        left.append(f.parent_edge[a])
        right.append(f.parent_edge[b])
        a = f.parent[a]
        b = f.parent[b]
    return left + right[::-1]
