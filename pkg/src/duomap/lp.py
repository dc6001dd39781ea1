"""Clique-constrained LP over the conflict graph, and a simplex solver for it.

The model maximizes the weighted sum of vertex variables subject to one
constraint per anchored clique: for every vertex u and each of its six
endpoint anchors, the variables of u and its conflicting neighbors at that
anchor sum to at most 1. Constraint sets are deduplicated. Every variable
appears in at least one constraint (its own at-anchor clique does), so the
model is bounded with x <= 1 implied, and x = 0 is always feasible.

The solver is a self-contained dense-tableau primal simplex: Dantzig
entering, lexicographic ratio test against cycling (the exact-rational mode
uses Bland's rule instead). Because the full constraint list can be large on
duo-dense instances, the tableau is built over a lazily activated subset:
solve, add every violated constraint, re-solve, until the solution is
feasible for the whole model (optimal for a relaxation and feasible for the
full model, hence optimal).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .conflict_graph import ConflictGraph, clique_family
from .errors import IterationLimitError

EPS_FEAS = 1e-9
EPS_OBJ = 1e-7

_PIVOT_TOL = 1e-7  # minimum admissible pivot element; tiny pivots amplify noise
_CLEAN_TOL = 1e-12  # tableau entries below this are rounding residue, zeroed
_PERTURB = 1e-7  # anti-degeneracy rhs offset step, refactorized away at the end
_OBJ_PERTURB = 1e-4  # objective tie-break scale, as a fraction of _PERTURB
_SIFT_BATCH = 64  # violated rows activated per round
_SIFT_MIN_ROWS = 192  # no row sifting below this working-set size
_SIFT_MIN_COLS = 10**9  # column sifting disabled: transient duals overprice
_COL_BATCH = 256  # profitable columns activated per round


@dataclass(frozen=True)
class LpModel:
    """Objective coefficients per vertex and deduplicated <=1 constraint sets."""

    weights: tuple[float, ...]
    constraints: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FractionalSolution:
    values: tuple[float, ...]
    objective: float


def build_lp(gc: ConflictGraph) -> LpModel:
    """Emit the six anchored-clique constraints of every vertex, deduplicated.

    Each emitted set is the vertex itself together with its clique at one
    anchor, so every set is nonempty and contains its emitting vertex.
    Sets that coincide (all at-anchor cliques of vertices sharing a duo
    position do) are kept once, in first-emission order.
    """
    seen: dict[tuple[int, ...], None] = {}
    for u in range(len(gc)):
        fam = clique_family(gc, u)
        for s in fam.all_sets():
            key = tuple(sorted({u, *s}))
            if key not in seen:
                seen[key] = None
    return LpModel(weights=gc.weights(), constraints=tuple(seen.keys()))


def check_lp_feasibility(
    model: LpModel, solution: FractionalSolution, eps: float = EPS_FEAS
) -> bool:
    """True iff all values are >= -eps and every constraint holds within eps."""
    if len(solution.values) != len(model.weights):
        raise ValueError("solution is not dimensioned to the model")
    if any(v < -eps for v in solution.values):
        return False
    x = solution.values
    return all(sum(x[v] for v in s) <= 1.0 + eps for s in model.constraints)


def solve_lp(
    model: LpModel,
    *,
    exact: bool = False,
    max_pivots: int = 1_000_000,
) -> FractionalSolution:
    """Solve the model to optimality.

    With ``exact=True`` the tableau runs on rationals with pure Bland
    pivoting (oracle-grade, for small models); otherwise on float64.

    Raises:
        IterationLimitError: the pivot budget ran out (a solver bug, not a
            property of these always-feasible, always-bounded models).
    """
    nvars = len(model.weights)
    if nvars == 0:
        return FractionalSolution(values=(), objective=0.0)

    sets = model.constraints
    active = _initial_cover(sets, nvars)

    if exact:
        return _solve_rational(model, active, max_pivots)

    covering = set(active)  # the cover stays put; it keeps the LP bounded
    active_set = set(active)
    drops = [0] * len(sets)
    w = np.asarray(model.weights, dtype=np.float64)

    # working column set: everything when small, otherwise seeded with each
    # covering row's heaviest member and grown by pricing
    if nvars <= _SIFT_MIN_COLS:
        cols = list(range(nvars))
    else:
        seed = {
            max(sets[k], key=lambda v: (w[v], -v))
            for k in covering
        }
        cols = sorted(seed)
    col_set = set(cols)

    # flat incidence for fast violation sweeps over the full model
    flat = np.concatenate([np.array(s, dtype=np.int64) for s in sets])
    offsets = np.zeros(len(sets), dtype=np.int64)
    np.cumsum([len(s) for s in sets[:-1]], out=offsets[1:])

    budget = max_pivots
    while True:
        local = {v: i for i, v in enumerate(cols)}
        lweights = [model.weights[v] for v in cols]
        lrows = [
            tuple(local[v] for v in sets[k] if v in col_set) for k in active
        ]
        xloc, obj, used, duals = _simplex_float(lweights, lrows, budget)
        budget -= used
        xf = np.zeros(nvars)
        xf[np.array(cols, dtype=np.int64)] = xloc
        y = np.maximum(duals, 0.0)

        # price the full column set against the working-set duals
        priced = np.zeros(nvars)
        for r, k in enumerate(active):
            if y[r] > EPS_FEAS:
                priced[list(sets[k])] += y[r]
        reduced = w - priced
        new_cols = [
            int(j)
            for j in np.nonzero(reduced > EPS_OBJ)[0]
            if int(j) not in col_set
        ]

        sums = np.add.reduceat(xf[flat], offsets)
        new_rows = [
            int(k)
            for k in np.nonzero(sums > 1.0 + EPS_FEAS)[0]
            if int(k) not in active_set
        ]
        if not new_cols and not new_rows:
            values = tuple(float(v) if v > 0.0 else 0.0 for v in xf)
            return FractionalSolution(values=values, objective=float(obj))

        # sift: retire rows with a zero dual value, which by complementary
        # slackness contribute nothing to the optimality certificate, so the
        # working tableau stays small; a row may bounce out twice, then it
        # stays for good
        if len(active) + len(new_rows) > _SIFT_MIN_ROWS:
            kept = []
            for r, k in enumerate(active):
                if k in covering or drops[k] >= 2 or y[r] > EPS_FEAS:
                    kept.append(k)
                else:
                    drops[k] += 1
                    active_set.discard(k)
            active = kept
        new_rows.sort(key=lambda k: (-float(sums[k]), k))
        for k in new_rows[:_SIFT_BATCH]:
            active.append(k)
            active_set.add(k)
        new_cols.sort(key=lambda j: (-float(reduced[j]), j))
        for j in new_cols[:_COL_BATCH]:
            cols.append(j)
            col_set.add(j)
        cols.sort()


def _solve_rational(model: LpModel, active: list[int], max_pivots: int):
    """Row-activation loop on the Fraction tableau; all columns in play."""
    sets = model.constraints
    active_set = set(active)
    budget = max_pivots
    while True:
        rows = [sets[k] for k in active]
        x, obj, used, _ = _simplex_exact(model.weights, rows, budget)
        budget -= used
        violated = [
            k
            for k, s in enumerate(sets)
            if k not in active_set and sum(x[v] for v in s) > 1
        ]
        if not violated:
            values = tuple(float(v) if v > 0 else 0.0 for v in x)
            return FractionalSolution(values=values, objective=float(obj))
        for k in violated:
            active.append(k)
            active_set.add(k)


def _initial_cover(sets, nvars: int) -> list[int]:
    """Covering subset of constraints: each variable's largest containing set.

    Preferring the widest sets (the full position-anchored cliques) keeps the
    first working tableau small and representative, so later activation
    rounds add few rows.
    """
    best = [-1] * nvars
    best_len = [0] * nvars
    for k, s in enumerate(sets):
        size = len(s)
        for v in s:
            if size > best_len[v]:
                best_len[v] = size
                best[v] = k
    if any(k < 0 for k in best):
        raise ValueError("model leaves some variable unconstrained")
    return sorted(set(best))


def _simplex_float(weights, rows, max_pivots: int, perturb: float = _PERTURB):
    """Dense-tableau primal simplex, float64. Returns (x, objective, pivots).

    Entering column by Dantzig's rule. These all-ones-rhs models are heavily
    degenerate, so the rhs is perturbed by tiny distinct per-row offsets
    (making ratio tests decisive, the numerical form of the lexicographic
    method); residual ties fall back to an explicit lexicographic compare
    with slack columns first. The perturbation never leaks into the result:
    the returned solution is refactorized against the original rhs, and the
    optimality certificate (nonnegative reduced costs) is rhs-independent.
    Rounding residue is swept after every pivot so noise never becomes a
    pivot element or a tie-breaker.
    """
    n = len(weights)
    m = len(rows)
    A = np.zeros((m, n))
    for r, s in enumerate(rows):
        A[r, list(s)] = 1.0
    T = np.zeros((m + 1, n + m + 1))
    T[:m, :n] = A
    T[:m, n : n + m] = np.eye(m)
    T[:m, -1] = 1.0 + perturb * np.arange(1, m + 1)
    # the objective gets the same treatment: tie-rich weights (unit spec)
    # otherwise leave Dantzig wandering across equivalent vertices; the
    # returned objective is recomputed from the true weights either way
    T[-1, :n] = -np.asarray(weights) - _OBJ_PERTURB * perturb * np.arange(1, n + 1)
    basis = np.arange(n, n + m)
    lex_order = list(range(n, n + m)) + list(range(n))

    pivots = 0
    while True:
        cost = T[-1, :-1]
        col = int(np.argmin(cost))
        if cost[col] >= -EPS_OBJ:
            break

        colvals = T[:-1, col]
        pos = colvals > _PIVOT_TOL
        if not np.any(pos):
            raise IterationLimitError(
                "unbounded pivot column; the model should imply x <= 1"
            )
        ratios = np.full(m, np.inf)
        ratios[pos] = T[:-1, -1][pos] / colvals[pos]
        best = ratios.min()
        cand = np.nonzero(ratios <= best + EPS_FEAS)[0]
        if len(cand) > 1:
            for k in lex_order:
                vals = T[cand, k] / colvals[cand]
                cand = cand[vals <= vals.min() + _CLEAN_TOL]
                if len(cand) == 1:
                    break
        row = int(cand[0])

        piv = T[row, col]
        T[row] /= piv
        column = T[:, col].copy()
        column[row] = 0.0
        T -= np.outer(column, T[row])
        T[:, col] = 0.0
        T[row, col] = 1.0
        basis[row] = col
        # sweep out rounding residue and keep the basis primal-feasible
        T[np.abs(T) < _CLEAN_TOL] = 0.0
        rhs = T[:-1, -1]
        rhs[(rhs < 0.0) & (rhs > -EPS_FEAS)] = 0.0

        pivots += 1
        if pivots > max_pivots:
            raise IterationLimitError(f"pivot budget exhausted ({max_pivots})")

    # refactorize: recompute the basic solution and the row duals from the
    # original data in two solves, shedding both the rhs perturbation and
    # the drift a long pivot sequence accumulates
    wvec = np.asarray(weights, dtype=np.float64)
    B = np.zeros((m, m))
    cb = np.zeros(m)
    for t, b in enumerate(basis):
        if b < n:
            B[:, t] = A[:, b]
            cb[t] = wvec[b]
        else:
            B[b - n, t] = 1.0
    try:
        xb = np.linalg.solve(B, np.ones(m))
        duals = np.linalg.solve(B.T, cb)
    except np.linalg.LinAlgError:
        xb = None
        duals = np.zeros(m)
    if (xb is None or xb.min() < -EPS_FEAS) and perturb:
        # the perturbed optimal basis is not primal-feasible for the
        # original rhs; redo this subproblem with plain lexicographic
        # pivoting, which cannot land here
        return _simplex_float(weights, rows, max_pivots - pivots, perturb=0.0)
    x = np.zeros(n)
    if xb is not None and xb.min() >= -EPS_FEAS:
        xb[xb < _CLEAN_TOL] = 0.0
        for t, b in enumerate(basis):
            if b < n:
                x[b] = xb[t]
    else:
        for r, b in enumerate(basis):  # tableau reading as a last resort
            if b < n:
                x[b] = max(T[r, -1], 0.0)
    return x, float(wvec @ x), pivots, duals


def _simplex_exact(weights, rows, max_pivots: int):
    """Rational-arithmetic simplex with pure Bland pivoting."""
    n = len(weights)
    m = len(rows)
    width = n + m + 1
    T = [[Fraction(0)] * width for _ in range(m + 1)]
    for r, s in enumerate(rows):
        for v in s:
            T[r][v] = Fraction(1)
        T[r][n + r] = Fraction(1)
        T[r][-1] = Fraction(1)
    for v, w in enumerate(weights):
        T[-1][v] = -Fraction(w)
    basis = list(range(n, n + m))

    pivots = 0
    while True:
        cost = T[-1]
        col = next((c for c in range(width - 1) if cost[c] < 0), None)
        if col is None:
            break
        row = None
        best = None
        for r in range(m):
            if T[r][col] > 0:
                ratio = T[r][-1] / T[r][col]
                if best is None or ratio < best or (ratio == best and basis[r] < basis[row]):
                    best, row = ratio, r
        if row is None:
            raise IterationLimitError(
                "unbounded pivot column; the model should imply x <= 1"
            )
        piv = T[row][col]
        T[row] = [a / piv for a in T[row]]
        for r in range(m + 1):
            if r != row and T[r][col] != 0:
                f = T[r][col]
                T[r] = [a - f * b for a, b in zip(T[r], T[row])]
        basis[row] = col
        pivots += 1
        if pivots > max_pivots:
            raise IterationLimitError(f"pivot budget exhausted ({max_pivots})")

    x = [Fraction(0)] * n
    for r, b in enumerate(basis):
        if b < n:
            x[b] = T[r][-1]
    return x, T[-1][-1], pivots, None


def format_lp_text(model: LpModel) -> str:
    """Human-readable LP dump (objective, constraints, bounds)."""
    terms = " + ".join(
        f"{w:.12g} x{u}" for u, w in enumerate(model.weights)
    )
    lines = ["Maximize", f" obj: {terms if terms else '0'}", "Subject To"]
    for k, s in enumerate(model.constraints):
        lhs = " + ".join(f"x{u}" for u in s)
        lines.append(f" c{k}: {lhs} <= 1")
    lines.append("Bounds")
    for u in range(len(model.weights)):
        lines.append(f" x{u} >= 0")
    lines.append("End")
    return "\n".join(lines) + "\n"
