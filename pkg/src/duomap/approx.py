"""Local-ratio rounding of the LP solution and the end-to-end solve pipeline.

The rounding repeatedly deletes vertices of non-positive weight, picks the
alive vertex whose closed neighborhood carries the least remaining LP mass
(a vertex with mass at most 6 always exists), subtracts its weight from its
alive closed neighborhood, and recurses on the reduced weights; unwinding
adds each picked vertex unless a later-picked neighbor made it in first.
The LP is solved once up front and only restricted to alive vertices at
deeper levels, never re-solved. The resulting independent set carries at
least one sixth of the LP objective under the original weights.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .conflict_graph import ConflictGraph, build_conflict_graph
from .duo_graph import GEdge, build_duo_graph
from .instance import Instance
from .lp import FractionalSolution, build_lp, solve_lp
from .mapping import Mapping, extend_to_bijection, score_mapping

EPS_ZERO = 1e-12  # weights at or below this count as deleted

_MASS_BOUND = 6.0  # closed-neighborhood LP mass never exceeds this


@dataclass
class WeightVector:
    """Working copy of vertex weights plus alive flags for one rounding run."""

    values: np.ndarray
    alive: np.ndarray

    @classmethod
    def from_graph(cls, gc: ConflictGraph) -> "WeightVector":
        return cls(
            values=np.array(gc.weights(), dtype=np.float64),
            alive=np.ones(len(gc), dtype=bool),
        )


@dataclass(frozen=True)
class IndependentSet:
    """Pairwise non-adjacent vertex ids with their total original weight."""

    ids: tuple[int, ...]
    weight: float


@dataclass(frozen=True)
class SolveReport:
    selected: IndependentSet
    selected_pairs: tuple[GEdge, ...]
    mapping: Mapping | None
    selected_weight: float
    realized_weight: float
    lp_objective: float
    guarantee: float


def select_vertex(gc: ConflictGraph, alive, x: FractionalSolution) -> int:
    """The alive vertex with the least restricted closed-neighborhood mass.

    Mass is the sum of x over the vertex and its alive neighbors; ties break
    to the smallest id. By the clique constraints the mass of every vertex
    is at most 6, so a valid pick always exists.
    """
    alive = set(alive)
    if not alive:
        raise ValueError("no alive vertices to select from")
    best: tuple[float, int] | None = None
    for u in sorted(alive):
        mass = x.values[u] + sum(
            x.values[v] for v in gc.neighbors[u] if v in alive
        )
        if best is None or mass < best[0]:
            best = (mass, u)
    return best[1]


def local_ratio_round(
    gc: ConflictGraph,
    x: FractionalSolution,
    w: WeightVector | None = None,
    trace: list[int] | None = None,
) -> IndependentSet:
    """Round a feasible LP solution to an independent set (iteratively).

    ``w`` defaults to a fresh working copy of the graph weights and is
    consumed by the run. When ``trace`` is a list, the id picked at each
    level is appended to it.
    """
    nv = len(gc)
    if nv == 0:
        return IndependentSet(ids=(), weight=0.0)
    if w is None:
        w = WeightVector.from_graph(gc)
    values, alive = w.values, w.alive
    xs = np.array(x.values, dtype=np.float64)
    nbr = [np.array(gc.neighbors[u], dtype=np.int64) for u in range(nv)]

    # restricted closed-neighborhood mass, maintained under deletions
    mass = np.empty(nv)
    for u in range(nv):
        mass[u] = xs[u] + (xs[nbr[u]][alive[nbr[u]]].sum() if len(nbr[u]) else 0.0)

    def kill(v: int) -> None:
        alive[v] = False
        nb = nbr[v]
        if len(nb):
            keep = alive[nb]
            mass[nb[keep]] -= xs[v]

    stack: list[int] = []
    while True:
        for v in np.nonzero(alive & (values <= EPS_ZERO))[0]:
            kill(int(v))
        if not alive.any():
            break
        masked = np.where(alive, mass, np.inf)
        u = int(np.argmin(masked))  # argmin takes the first min: smallest id
        if masked[u] > _MASS_BOUND + 1e-6:
            raise AssertionError(
                f"restricted neighborhood mass {masked[u]} exceeds {_MASS_BOUND}"
            )
        stack.append(u)
        if trace is not None:
            trace.append(u)
        wu = values[u]
        nb = nbr[u]
        if len(nb):
            keep = alive[nb]
            values[nb[keep]] -= wu
        values[u] = 0.0

    in_set = np.zeros(nv, dtype=bool)
    chosen: list[int] = []
    for u in reversed(stack):
        nb = nbr[u]
        if not (len(nb) and in_set[nb].any()):
            in_set[u] = True
            chosen.append(u)
    chosen.sort()
    original = gc.weights()
    return IndependentSet(
        ids=tuple(chosen), weight=float(sum(original[u] for u in chosen))
    )


def solve_mwdsm(instance: Instance) -> SolveReport:
    """Full pipeline: duo graph, conflict graph, LP, rounding, extension.

    On strict instances the selection is extended to a character bijection
    and rescored; the extension may preserve extra duos, so the realized
    weight can exceed the selected weight. Relaxed instances report the
    selected duos only.
    """
    g = build_duo_graph(instance)
    gc = build_conflict_graph(g)
    model = build_lp(gc)
    lp_solution = solve_lp(model)
    selected = local_ratio_round(gc, lp_solution)
    pairs = tuple(gc.vertices[u].edge for u in selected.ids)

    mapping: Mapping | None = None
    realized = selected.weight
    if instance.strict:
        mapping = extend_to_bijection(instance, pairs)
        realized, _ = score_mapping(instance, mapping)

    return SolveReport(
        selected=selected,
        selected_pairs=pairs,
        mapping=mapping,
        selected_weight=selected.weight,
        realized_weight=realized,
        lp_objective=lp_solution.objective,
        guarantee=lp_solution.objective / 6.0,
    )
