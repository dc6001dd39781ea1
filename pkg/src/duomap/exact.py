"""Brute-force oracles at desk scale.

``exact_mwis`` finds the true maximum-weight independent set of a conflict
graph by branch and bound; ``exact_by_mapping_enumeration`` maximizes the
original objective directly by enumerating character bijections. On strict
instances within limits the two must agree, which is what validates the
graph reductions end to end.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .conflict_graph import ConflictGraph
from .errors import TooLargeError
from .instance import Instance, eval_weight

_TIE_EPS = 1e-12


@dataclass(frozen=True)
class ExactResult:
    weight: float
    witness: tuple[int, ...]
    explored: int


def exact_mwis(gc: ConflictGraph, limit: int = 26) -> ExactResult:
    """Exact maximum-weight independent set by branch and bound.

    Branches on the highest-weight candidate (ties to the smallest id) and
    bounds by the sum of remaining positive weights. Ties between optima are
    broken toward the lexicographically smallest sorted vertex tuple, so the
    witness is reproducible.

    Raises:
        TooLargeError: the graph has more than ``limit`` vertices.
    """
    nv = len(gc)
    if nv > limit:
        raise TooLargeError(f"{nv} conflict vertices exceed the oracle limit {limit}")
    w = gc.weights()
    neighbors = gc.neighbors

    best_w = 0.0
    best_set: tuple[int, ...] = ()
    explored = 0

    def search(candidates: list[int], chosen: list[int], cw: float) -> None:
        nonlocal best_w, best_set, explored
        explored += 1
        bound = cw + sum(w[v] for v in candidates if w[v] > 0)
        if bound < best_w - _TIE_EPS:
            return
        if not candidates:
            key = tuple(sorted(chosen))
            if cw > best_w + _TIE_EPS or (
                abs(cw - best_w) <= _TIE_EPS and key < best_set
            ):
                best_w, best_set = cw, key
            return
        v = max(candidates, key=lambda t: (w[t], -t))
        nb = set(neighbors[v])
        chosen.append(v)
        search([c for c in candidates if c != v and c not in nb], chosen, cw + w[v])
        chosen.pop()
        search([c for c in candidates if c != v], chosen, cw)

    search(list(range(nv)), [], 0.0)
    return ExactResult(weight=best_w, witness=best_set, explored=explored)


def exact_by_mapping_enumeration(instance: Instance, limit: int = 8) -> ExactResult:
    """Exact optimum by scoring every character-preserving bijection.

    Bijections are enumerated per character class (a product of per-class
    permutations, never the full factorial), each scored by summing the
    weights of the duo positions it preserves. The witness is the 1-based
    permutation array of an optimal bijection, ties broken toward the
    lexicographically smallest.

    Raises:
        TooLargeError: the strings are longer than ``limit``.
        ValueError: the instance is not strict-mode.
    """
    if not instance.strict:
        raise ValueError("mapping enumeration requires a strict-mode instance")
    n = instance.n
    if n > limit:
        raise TooLargeError(f"n={n} exceeds the oracle limit {limit}")

    classes1: dict[str, list[int]] = {}
    classes2: dict[str, list[int]] = {}
    for p in range(1, n + 1):
        classes1.setdefault(instance.s1[p - 1], []).append(p)
        classes2.setdefault(instance.s2[p - 1], []).append(p)

    chars = sorted(classes1)
    spec = instance.weight

    def score(perm: list[int]) -> float:
        total = 0.0
        for p in range(1, n):
            if perm[p] == perm[p - 1] + 1:
                total += eval_weight(spec, p, perm[p - 1], n)
        return total

    best_w = 0.0
    best_perm: tuple[int, ...] = ()
    explored = 0

    def assign(idx: int, perm: list[int]) -> None:
        nonlocal best_w, best_perm, explored
        if idx == len(chars):
            explored += 1
            total = score(perm)
            key = tuple(perm)
            if total > best_w + _TIE_EPS or (
                abs(total - best_w) <= _TIE_EPS and (not best_perm or key < best_perm)
            ):
                best_w, best_perm = total, key
            return
        c = chars[idx]
        ps = classes1[c]
        for qs in permutations(classes2[c]):
            for p, q in zip(ps, qs):
                perm[p - 1] = q
            assign(idx + 1, perm)

    if n == 0:
        return ExactResult(weight=0.0, witness=(), explored=1)
    assign(0, [0] * n)
    return ExactResult(weight=best_w, witness=best_perm, explored=explored)
