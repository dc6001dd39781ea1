"""Conflict graph: one vertex per duo-graph edge, adjacency = conflict.

Two duo-graph edges conflict when they cannot coexist in a constrained
matching: they share an endpoint, or their endpoints are consecutive on one
side of the bipartite graph but not on the other. Independent sets here are
exactly the valid constrained matchings, with equal weight.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

import numpy as np

from .duo_graph import DuoGraph, GEdge


def _pos(e) -> tuple[int, int]:
    if isinstance(e, GEdge):
        return e.left_pos, e.right_pos
    i, j = e
    return i, j


def conflicts(e1, e2) -> bool:
    """Whether two distinct duo-graph edges cannot coexist in a matching.

    Accepts :class:`GEdge` objects or bare ``(i, j)`` position pairs.
    Identical position pairs return False (the relation is irreflexive).
    """
    i, j = _pos(e1)
    k, l = _pos(e2)
    return (
        (k == i and l != j)
        or (l == j and k != i)
        or (k == i + 1 and l != j + 1)
        or (k == i - 1 and l != j - 1)
        or (l == j + 1 and k != i + 1)
        or (l == j - 1 and k != i - 1)
    )


@dataclass(frozen=True)
class ConflictVertex:
    """A duo-graph edge promoted to a weighted vertex."""

    id: int
    edge: GEdge

    @property
    def weight(self) -> float:
        return self.edge.weight


class ConflictGraph:
    """Vertex-weighted conflict graph. Immutable after construction.

    ``neighbors[u]`` is the sorted tuple of vertices adjacent to ``u``
    (``u`` itself excluded); ``adjacent`` is the pairwise membership test.
    Vertex ids follow duo-graph edge order, keeping reported sets and
    tie-breaks deterministic.
    """

    def __init__(
        self,
        vertices: tuple[ConflictVertex, ...],
        neighbors: tuple[tuple[int, ...], ...],
    ):
        if len(vertices) != len(neighbors):
            raise ValueError("one neighbor list is required per vertex")
        self.vertices = vertices
        self.neighbors = neighbors
        self.by_left_pos: dict[int, tuple[int, ...]] = {}
        self.by_right_pos: dict[int, tuple[int, ...]] = {}
        by_left: dict[int, list[int]] = {}
        by_right: dict[int, list[int]] = {}
        for v in vertices:
            by_left.setdefault(v.edge.left_pos, []).append(v.id)
            by_right.setdefault(v.edge.right_pos, []).append(v.id)
        self.by_left_pos = {p: tuple(ids) for p, ids in by_left.items()}
        self.by_right_pos = {p: tuple(ids) for p, ids in by_right.items()}

    def __len__(self) -> int:
        return len(self.vertices)

    def adjacent(self, u: int, v: int) -> bool:
        nb = self.neighbors[u]
        k = bisect_left(nb, v)
        return k < len(nb) and nb[k] == v

    def weights(self) -> tuple[float, ...]:
        return tuple(v.weight for v in self.vertices)


def build_conflict_graph(g: DuoGraph) -> ConflictGraph:
    """One vertex per duo-graph edge, in edge order; adjacency by conflict."""
    vertices = tuple(
        ConflictVertex(id=k, edge=e) for k, e in enumerate(g.edges)
    )
    nv = len(vertices)
    if nv == 0:
        return ConflictGraph(vertices=(), neighbors=())
    left = np.array([e.left_pos for e in g.edges], dtype=np.int64)
    right = np.array([e.right_pos for e in g.edges], dtype=np.int64)
    neighbors: list[tuple[int, ...]] = []
    for u in range(nv):
        i, j = int(left[u]), int(right[u])
        # vectorized form of conflicts((i, j), (k, l)) over all vertices
        mask = (
            ((left == i) & (right != j))
            | ((right == j) & (left != i))
            | ((left == i + 1) & (right != j + 1))
            | ((left == i - 1) & (right != j - 1))
            | ((right == j + 1) & (left != i + 1))
            | ((right == j - 1) & (left != i - 1))
        )
        mask[u] = False
        neighbors.append(tuple(int(v) for v in np.nonzero(mask)[0]))
    return ConflictGraph(vertices=vertices, neighbors=tuple(neighbors))


@dataclass(frozen=True)
class CliqueFamily:
    """The six endpoint-anchored cliques around a vertex u = (i, j).

    ``left_at``/``right_at`` hold every vertex incident to the same s1/s2
    duo position as u (u included). The four offset sets hold the neighbors
    of u anchored one position away on either side; u is never in those.
    All member edges of a set share one duo-graph endpoint, so each set is
    a clique. Out-of-range anchors simply yield empty sets.
    """

    vertex: int
    left_below: tuple[int, ...]
    left_at: tuple[int, ...]
    left_above: tuple[int, ...]
    right_below: tuple[int, ...]
    right_at: tuple[int, ...]
    right_above: tuple[int, ...]

    def all_sets(self) -> tuple[tuple[int, ...], ...]:
        return (
            self.left_below,
            self.left_at,
            self.left_above,
            self.right_below,
            self.right_at,
            self.right_above,
        )

    def members(self) -> frozenset[int]:
        out: set[int] = set()
        for s in self.all_sets():
            out.update(s)
        return frozenset(out)


def clique_family(gc: ConflictGraph, u: int) -> CliqueFamily:
    """The six anchored cliques of vertex ``u``; their union covers N[u]."""
    e = gc.vertices[u].edge
    i, j = e.left_pos, e.right_pos
    nb = gc.neighbors[u]
    left = {v: gc.vertices[v].edge.left_pos for v in nb}
    right = {v: gc.vertices[v].edge.right_pos for v in nb}
    return CliqueFamily(
        vertex=u,
        left_below=tuple(v for v in nb if left[v] == i - 1),
        left_at=gc.by_left_pos.get(i, ()),
        left_above=tuple(v for v in nb if left[v] == i + 1),
        right_below=tuple(v for v in nb if right[v] == j - 1),
        right_at=gc.by_right_pos.get(j, ()),
        right_above=tuple(v for v in nb if right[v] == j + 1),
    )


def closed_neighborhood(gc: ConflictGraph, u: int) -> frozenset[int]:
    """``u`` together with all vertices adjacent to it."""
    return frozenset((u, *gc.neighbors[u]))


def conflict_graph_to_dot(gc: ConflictGraph) -> str:
    """Render the conflict graph in DOT with ``(i,j) w=<weight>`` labels."""
    lines = ["graph conflict_graph {"]
    for v in gc.vertices:
        lines.append(
            f'  v{v.id} [label="({v.edge.left_pos},{v.edge.right_pos}) w={v.weight:.6g}"];'
        )
    for u in range(len(gc)):
        for v in gc.neighbors[u]:
            if v > u:
                lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
