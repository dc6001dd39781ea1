"""Bipartite duo graph: one side per string, edges join equal duos.

A matching in this graph is *constrained-feasible* when no two of its edges
conflict: picking edge (i, j) forces position i+1 to pair only with j+1 and
vice versa. ``verify_constrained_matching`` checks that property directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .instance import Duo, Instance, eval_weight, extract_duos


@dataclass(frozen=True)
class GEdge:
    """Edge joining the duo at s1 position ``left_pos`` to the equal duo at
    s2 position ``right_pos``; carries its evaluated weight."""

    left_pos: int
    right_pos: int
    weight: float


@dataclass(frozen=True)
class DuoGraph:
    left: tuple[Duo, ...]
    right: tuple[Duo, ...]
    edges: tuple[GEdge, ...]


@dataclass(frozen=True)
class MatchingCheck:
    """Outcome of a constrained-matching check."""

    valid: bool
    weight: float
    violation: tuple[GEdge, GEdge] | None = None


def build_duo_graph(instance: Instance) -> DuoGraph:
    """Enumerate all equal-duo pairs as weighted edges, (i, j) ascending.

    Edges whose evaluated weight is not strictly positive are dropped here;
    unreachable for the built-in weight families but kept for safety.
    """
    left = tuple(extract_duos(instance.s1))
    right = tuple(extract_duos(instance.s2))
    by_chars: dict[str, list[int]] = {}
    for d in right:
        by_chars.setdefault(d.chars, []).append(d.position)
    edges: list[GEdge] = []
    n = instance.n
    for d in left:
        for j in by_chars.get(d.chars, ()):
            w = eval_weight(instance.weight, d.position, j, n)
            if w > 0.0:
                edges.append(GEdge(left_pos=d.position, right_pos=j, weight=w))
    return DuoGraph(left=left, right=right, edges=tuple(edges))


def verify_constrained_matching(g: DuoGraph, m) -> MatchingCheck:
    """Check that the edge set ``m`` is a valid constrained matching of ``g``.

    Returns the total weight when valid, or the first conflicting pair in
    (left_pos, right_pos)-sorted order when not. All edges of ``m`` must
    belong to ``g``.
    """
    from .conflict_graph import conflicts  # deferred: avoids an import cycle

    known = set(g.edges)
    edges = sorted(m, key=lambda e: (e.left_pos, e.right_pos))
    for e in edges:
        if e not in known:
            raise ValueError(f"edge ({e.left_pos}, {e.right_pos}) is not in the graph")
    for a in range(len(edges)):
        for b in range(a + 1, len(edges)):
            if conflicts(edges[a], edges[b]):
                return MatchingCheck(valid=False, weight=0.0, violation=(edges[a], edges[b]))
    return MatchingCheck(valid=True, weight=sum(e.weight for e in edges))


def duo_graph_to_dot(g: DuoGraph) -> str:
    """Render the duo graph in DOT, one rank per side, weights to 6 decimals."""
    lines = ["graph duo_graph {", "  rankdir=LR;"]
    left_nodes = "; ".join(
        f'a{d.position} [label="a_{d.position}:{d.chars}"]' for d in g.left
    )
    right_nodes = "; ".join(
        f'b{d.position} [label="b_{d.position}:{d.chars}"]' for d in g.right
    )
    lines.append("  { rank=same; %s }" % left_nodes if g.left else "  { rank=same; }")
    lines.append("  { rank=same; %s }" % right_nodes if g.right else "  { rank=same; }")
    for e in g.edges:
        lines.append(
            f'  a{e.left_pos} -- b{e.right_pos} [label="{e.weight:.6f}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
