"""Exact-rational linear programming via two-phase primal simplex.

Solves max c.x subject to A_ub x <= b_ub, A_eq x = b_eq, x >= 0 entirely in
Fractions.  Bland's rule guards against cycling; tableaux stay tiny here (a few
dozen rows), so simplicity beats sparsity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


class Infeasible(Exception):
    pass


class Unbounded(Exception):
    pass


@dataclass(frozen=True)
class LPResult:
    value: Fraction
    x: tuple[Fraction, ...]


def _pivot(tableau: list[list[Fraction]], basis: list[int], row: int, col: int):
    piv = tableau[row][col]
    tableau[row] = [v / piv for v in tableau[row]]
    for r, line in enumerate(tableau):
        if r != row and line[col] != 0:
            factor = line[col]
            tableau[r] = [v - factor * p for v, p in zip(line, tableau[row])]
    basis[row] = col


def _simplex(tableau: list[list[Fraction]], basis: list[int], ncols: int):
    """Maximize with objective in the last tableau row (reduced costs negated)."""
    while True:
        obj = tableau[-1]
        col = next((j for j in range(ncols) if obj[j] > 0), None)  # Bland: first
        if col is None:
            return
        best_row, best_ratio = None, None
        for r in range(len(tableau) - 1):
            coeff = tableau[r][col]
            if coeff > 0:
                ratio = tableau[r][-1] / coeff
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[r] < basis[best_row])
                ):
                    best_row, best_ratio = r, ratio
        if best_row is None:
            raise Unbounded()
        _pivot(tableau, basis, best_row, col)


def solve_lp(
    c: Sequence[Fraction],
    a_ub: Sequence[Sequence[Fraction]] = (),
    b_ub: Sequence[Fraction] = (),
    a_eq: Sequence[Sequence[Fraction]] = (),
    b_eq: Sequence[Fraction] = (),
) -> LPResult:
    """max c.x s.t. a_ub x <= b_ub, a_eq x = b_eq, x >= 0 (exact arithmetic).

    Raises Infeasible or Unbounded accordingly.
    """
    nvar = len(c)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    kinds: list[str] = []
    for row, b in zip(a_ub, b_ub):
        rows.append([Fraction(v) for v in row])
        rhs.append(Fraction(b))
        kinds.append("ub")
    for row, b in zip(a_eq, b_eq):
        rows.append([Fraction(v) for v in row])
        rhs.append(Fraction(b))
        kinds.append("eq")
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]
            if kinds[i] == "ub":
                kinds[i] = "lb"  # flipped <= becomes >=: needs surplus var

    nslack = sum(1 for kind in kinds if kind in ("ub", "lb"))
    nart = sum(1 for kind in kinds if kind in ("eq", "lb"))
    ncols = nvar + nslack + nart
    tableau: list[list[Fraction]] = []
    basis: list[int] = []
    slack_at, art_at = nvar, nvar + nslack
    for i, (row, kind) in enumerate(zip(rows, kinds)):
        line = row + [ZERO] * (nslack + nart) + [rhs[i]]
        if kind == "ub":
            line[slack_at] = ONE
            basis.append(slack_at)
            slack_at += 1
        elif kind == "lb":
            line[slack_at] = -ONE
            slack_at += 1
            line[art_at] = ONE
            basis.append(art_at)
            art_at += 1
        else:
            line[art_at] = ONE
            basis.append(art_at)
            art_at += 1
        tableau.append(line)

    if nart:
        # Phase 1: minimize artificial sum, i.e. maximize its negation.
        phase1 = [ZERO] * (ncols + 1)
        for j in range(nvar + nslack, ncols):
            phase1[j] = -ONE
        tableau.append(phase1)
        for r, b in enumerate(basis):
            if b >= nvar + nslack:
                tableau[-1] = [
                    v + w for v, w in zip(tableau[-1], tableau[r])
                ]
        _simplex(tableau, basis, nvar + nslack)  # artificials never re-enter
        if tableau[-1][-1] != 0:
            raise Infeasible()
        tableau.pop()
        # Drive any artificial still basic (at zero) out of the basis.
        for r, b in enumerate(basis):
            if b >= nvar + nslack:
                col = next(
                    (j for j in range(nvar + nslack) if tableau[r][j] != 0), None
                )
                if col is not None:
                    _pivot(tableau, basis, r, col)
        live = [r for r, b in enumerate(basis) if b < nvar + nslack]
        tableau = [
            [tableau[r][j] for j in range(nvar + nslack)] + [tableau[r][-1]]
            for r in live
        ]
        basis = [basis[r] for r in live]
        ncols = nvar + nslack

    objective = [Fraction(v) for v in c] + [ZERO] * (ncols - nvar) + [ZERO]
    tableau.append(objective)
    for r, b in enumerate(basis):
        if objective[b] != 0:
            factor = tableau[-1][b]
            tableau[-1] = [v - factor * p for v, p in zip(tableau[-1], tableau[r])]
    _simplex(tableau, basis, ncols)
    x = [ZERO] * nvar
    for r, b in enumerate(basis):
        if b < nvar:
            x[b] = tableau[r][-1]
    return LPResult(value=-tableau[-1][-1] if False else sum(ci * xi for ci, xi in zip(c, x)), x=tuple(x))
