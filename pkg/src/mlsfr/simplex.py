"""Small dense linear-programming solver.

Two-phase primal simplex on a dense tableau, sized for problems with a
few dozen variables. Pivoting follows Bland's rule (lowest eligible
column enters, ratio ties leave by lowest basic index), which both
prevents cycling and makes the solver fully deterministic: identical
inputs walk identical pivot sequences and return bit-identical results.

After the optimal basis is found the basic values are re-solved from the
original constraint matrix, so feasibility residuals are at machine
precision rather than accumulated pivot error.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_PIVOT_TOL = 1e-10
_REDCOST_TOL = 1e-10
_RATIO_TIE_TOL = 1e-12
_FEAS_TOL = 1e-9


class LinearProgramError(RuntimeError):
    pass


class InfeasibleProblem(LinearProgramError):
    pass


class UnboundedProblem(LinearProgramError):
    pass


@dataclass
class LpResult:
    x: np.ndarray          # optimal values of the original variables
    objective: float
    basis: list[int]       # column indices of the final basis


def _pivot(tableau: np.ndarray, basis: list[int], row: int, col: int) -> None:
    tableau[row] /= tableau[row, col]
    for r in range(tableau.shape[0]):
        if r != row and tableau[r, col] != 0.0:
            tableau[r] -= tableau[r, col] * tableau[row]
    basis[row] = col


def _run(tableau: np.ndarray, basis: list[int], cost: np.ndarray,
         allowed: list[int], max_iter: int) -> None:
    """Bland-rule pivot loop; mutates tableau and basis in place."""
    m = tableau.shape[0]
    for _ in range(max_iter):
        reduced = cost[basis] @ tableau[:, :-1] - cost
        entering = -1
        for j in allowed:
            if reduced[j] < -_REDCOST_TOL:
                entering = j
                break
        if entering < 0:
            return
        leaving = -1
        best = np.inf
        for i in range(m):
            a = tableau[i, entering]
            if a > _PIVOT_TOL:
                ratio = tableau[i, -1] / a
                if ratio < best - _RATIO_TIE_TOL:
                    best, leaving = ratio, i
                elif abs(ratio - best) <= _RATIO_TIE_TOL and leaving >= 0 \
                        and basis[i] < basis[leaving]:
                    leaving = i
        if leaving < 0:
            raise UnboundedProblem("objective is unbounded above")
        _pivot(tableau, basis, leaving, entering)
    raise LinearProgramError("simplex iteration limit exceeded")


def maximize(c, a_ub=None, b_ub=None, a_eq=None, b_eq=None,
             max_iter: int = 50_000) -> LpResult:
    """Maximize c.x subject to a_ub.x <= b_ub, a_eq.x = b_eq and x >= 0."""
    c = np.asarray(c, dtype=float)
    n = c.size
    rows, rhs, is_eq = [], [], []
    if a_ub is not None:
        a_ub = np.atleast_2d(np.asarray(a_ub, dtype=float))
        for row, b in zip(a_ub, np.atleast_1d(np.asarray(b_ub, dtype=float))):
            rows.append(row)
            rhs.append(float(b))
            is_eq.append(False)
    if a_eq is not None:
        a_eq = np.atleast_2d(np.asarray(a_eq, dtype=float))
        for row, b in zip(a_eq, np.atleast_1d(np.asarray(b_eq, dtype=float))):
            rows.append(row)
            rhs.append(float(b))
            is_eq.append(True)
    m = len(rows)
    if m == 0:
        raise LinearProgramError("no constraints given")

    n_slack = sum(1 for eq in is_eq if not eq)
    width = n + n_slack
    a = np.zeros((m, width))
    b = np.zeros(m)
    slack_of_row = {}
    si = 0
    for i in range(m):
        a[i, :n] = rows[i]
        b[i] = rhs[i]
        if not is_eq[i]:
            a[i, n + si] = 1.0
            slack_of_row[i] = n + si
            si += 1
    flip = b < 0
    a[flip] *= -1.0
    b[flip] *= -1.0

    # initial basis: a row's own slack when it survived the sign flip,
    # an artificial column otherwise
    basis: list[int] = []
    art_cols: list[int] = []
    art_rows: list[int] = []
    for i in range(m):
        j = slack_of_row.get(i)
        if j is not None and a[i, j] == 1.0:
            basis.append(j)
        else:
            art_rows.append(i)
            basis.append(-1)  # placeholder
    if art_rows:
        art = np.zeros((m, len(art_rows)))
        for k, i in enumerate(art_rows):
            art[i, k] = 1.0
            art_cols.append(width + k)
            basis[i] = width + k
        a = np.hstack([a, art])

    total = a.shape[1]
    a_pristine = a.copy()
    b_pristine = b.copy()
    tableau = np.hstack([a, b[:, None]])
    real_cols = list(range(width))

    if art_cols:
        cost1 = np.zeros(total)
        cost1[art_cols] = -1.0
        _run(tableau, basis, cost1, real_cols, max_iter)
        if cost1[basis] @ tableau[:, -1] < -_FEAS_TOL:
            raise InfeasibleProblem("constraints have no non-negative solution")
        # remove leftover artificials from the basis with degenerate pivots
        art_set = set(art_cols)
        drop_rows = []
        for i in range(m):
            if basis[i] in art_set:
                entering = next((j for j in real_cols
                                 if abs(tableau[i, j]) > _PIVOT_TOL), None)
                if entering is None:
                    drop_rows.append(i)  # redundant constraint
                else:
                    _pivot(tableau, basis, i, entering)
        if drop_rows:
            keep = [i for i in range(m) if i not in drop_rows]
            tableau = tableau[keep]
            basis = [basis[i] for i in keep]
            a_pristine = a_pristine[keep]
            b_pristine = b_pristine[keep]
            m = len(keep)

    cost2 = np.zeros(total)
    cost2[:n] = c
    _run(tableau, basis, cost2, real_cols, max_iter)

    # re-derive the basic values exactly from the untouched constraints
    values = np.linalg.solve(a_pristine[:, basis], b_pristine)
    if np.min(values, initial=0.0) < -_FEAS_TOL:
        raise LinearProgramError("basis refinement lost feasibility")
    x_full = np.zeros(total)
    x_full[basis] = np.maximum(values, 0.0)
    x = x_full[:n]
    return LpResult(x=x, objective=float(c @ x), basis=list(basis))
