"""Extending a conflict-free duo selection to a full character bijection.

A selected pair (i, j) pins position i to j and i+1 to j+1. Conflict-free
selections never pin a position twice inconsistently; remaining positions are
matched greedily per character class in ascending order, which sometimes
preserves extra duos beyond the selected ones (reported, never assumed).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .duo_graph import GEdge
from .errors import InconsistentSelectionError
from .instance import Instance, eval_weight


@dataclass(frozen=True)
class Mapping:
    """Character bijection: ``perm[p-1]`` is the s2 position (1-based) that
    s1 position p maps to."""

    perm: tuple[int, ...]


def _pairs(selected: Iterable) -> list[tuple[int, int]]:
    out = []
    for e in selected:
        if isinstance(e, GEdge):
            out.append((e.left_pos, e.right_pos))
        else:
            i, j = e
            out.append((int(i), int(j)))
    return sorted(out)


def extend_to_bijection(instance: Instance, selected: Iterable) -> Mapping:
    """Build a character-preserving bijection containing every selected pair.

    ``selected`` holds GEdges or bare (i, j) duo-position pairs, pairwise
    non-conflicting. Requires a strict-mode instance.

    Raises:
        InconsistentSelectionError: the selection is not conflict-free (two
            pins collide) or cannot be completed to a bijection.
    """
    if not instance.strict:
        raise ValueError("bijection extension requires a strict-mode instance")
    n = instance.n
    img = [0] * (n + 1)  # s1 position -> s2 position, 0 = unset
    pre = [0] * (n + 1)  # s2 position -> s1 position
    for i, j in _pairs(selected):
        for p, q in ((i, j), (i + 1, j + 1)):
            if not (1 <= p <= n and 1 <= q <= n):
                raise InconsistentSelectionError(f"pair ({i}, {j}) is out of range")
            if img[p] not in (0, q) or pre[q] not in (0, p):
                raise InconsistentSelectionError(
                    f"selection pins position {p} twice; not an independent set"
                )
            img[p] = q
            pre[q] = p

    free1: dict[str, list[int]] = {}
    free2: dict[str, list[int]] = {}
    for p in range(1, n + 1):
        if img[p] == 0:
            free1.setdefault(instance.s1[p - 1], []).append(p)
    for q in range(1, n + 1):
        if pre[q] == 0:
            free2.setdefault(instance.s2[q - 1], []).append(q)
    for c, ps in free1.items():
        qs = free2.get(c, [])
        if len(ps) != len(qs):
            raise InconsistentSelectionError(
                f"residual character classes for {c!r} have unequal sizes"
            )
        for p, q in zip(ps, qs):
            img[p] = q

    perm = tuple(img[1:])
    if sorted(perm) != list(range(1, n + 1)):
        raise InconsistentSelectionError("extension did not produce a permutation")
    for p in range(1, n + 1):
        if instance.s1[p - 1] != instance.s2[perm[p - 1] - 1]:
            raise InconsistentSelectionError(
                f"extension is not character-preserving at position {p}"
            )
    return Mapping(perm=perm)


def score_mapping(instance: Instance, mapping: Mapping) -> tuple[float, tuple[int, ...]]:
    """Total weight of duos preserved by the mapping, plus their positions.

    The duo at s1 position p is preserved iff p and p+1 map to consecutive
    s2 positions.
    """
    perm = mapping.perm
    n = instance.n
    if len(perm) != n:
        raise ValueError("mapping is not dimensioned to the instance")
    realized = 0.0
    preserved: list[int] = []
    for p in range(1, n):
        if perm[p] == perm[p - 1] + 1:
            realized += eval_weight(instance.weight, p, perm[p - 1], n)
            preserved.append(p)
    return realized, tuple(preserved)
