"""Exact rational linear algebra: small dense matrices and LP feasibility.

Everything is Fraction arithmetic; there are no tolerances anywhere.  The
feasibility solver is a phase-I simplex with Bland's rule, so it terminates
and its answers are exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch
from .rationals import RationalLike, as_fraction

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def vec(values: Sequence[RationalLike]) -> Vec:
    return tuple(as_fraction(v) for v in values)


def mat(rows: Sequence[Sequence[RationalLike]]) -> Mat:
    out = tuple(vec(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise DimensionMismatch("ragged matrix")
    return out


def identity(n: int) -> Mat:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def dot(x: Vec, y: Vec) -> Fraction:
    if len(x) != len(y):
        raise DimensionMismatch(f"dot of lengths {len(x)} and {len(y)}")
    return sum((a * b for a, b in zip(x, y)), ZERO)


def mat_vec(A: Mat, x: Vec) -> Vec:
    return tuple(dot(row, x) for row in A)


def mat_mul(A: Mat, B: Mat) -> Mat:
    if A and B and len(A[0]) != len(B):
        raise DimensionMismatch("matrix product shape mismatch")
    cols = list(zip(*B)) if B else []
    return tuple(tuple(dot(row, col) for col in cols) for row in A)


def det(A: Mat) -> Fraction:
    """Determinant by fraction Gaussian elimination with partial pivoting."""
    n = len(A)
    if any(len(r) != n for r in A):
        raise DimensionMismatch("determinant of a non-square matrix")
    rows = [list(r) for r in A]
    sign = ONE
    result = ONE
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if pivot_row is None:
            return ZERO
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            sign = -sign
        pivot = rows[col][col]
        result *= pivot
        for i in range(col + 1, n):
            factor = rows[i][col] / pivot
            if factor:
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[col])]
    return sign * result


def is_lex_positive(x: Vec) -> bool:
    """First nonzero coordinate is positive (zero vector fails)."""
    for a in x:
        if a != 0:
            return a > 0
    return False


def is_lex_nonnegative(x: Vec) -> bool:
    return is_lex_positive(x) or all(a == 0 for a in x)


def solve_nonneg_combination(columns: Sequence[Vec], target: Vec) -> list[Fraction] | None:
    """Exact coefficients x >= 0 with sum x_j * columns[j] = target, or None.

    Phase-I simplex: artificial variables start in the basis, Bland's rule
    picks pivots, and the system is feasible exactly when the artificial
    objective reaches zero.
    """
    m = len(target)
    n = len(columns)
    for c in columns:
        if len(c) != m:
            raise DimensionMismatch("column length does not match target")
    if n == 0:
        return [] if all(t == 0 for t in target) else None

    # Tableau rows: [A | I | b], with rows flipped so b >= 0.
    rows: list[list[Fraction]] = []
    for i in range(m):
        flip = -ONE if target[i] < 0 else ONE
        row = [flip * columns[j][i] for j in range(n)]
        row.extend(ONE if k == i else ZERO for k in range(m))
        row.append(flip * target[i])
        rows.append(row)
    basis = [n + i for i in range(m)]
    width = n + m

    # Reduced costs for min(sum of artificials); artificial columns start at 0.
    cost = [ZERO] * (width + 1)
    for j in range(width + 1):
        cost[j] = -sum((rows[i][j] for i in range(m)), ZERO)
    for i in range(m):
        cost[n + i] += ONE

    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        ratio = None
        leaving = None
        for i in range(m):
            coef = rows[i][entering]
            if coef > 0:
                r = rows[i][width] / coef
                if ratio is None or r < ratio or (r == ratio and basis[i] < basis[leaving]):
                    ratio = r
                    leaving = i
        if leaving is None:
            raise AssertionError("phase-I simplex cannot be unbounded")
        pivot = rows[leaving][entering]
        rows[leaving] = [a / pivot for a in rows[leaving]]
        for i in range(m):
            if i != leaving and rows[i][entering]:
                factor = rows[i][entering]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[leaving])]
        if cost[entering]:
            factor = cost[entering]
            cost = [a - factor * b for a, b in zip(cost, rows[leaving])]
        basis[leaving] = entering

    residual = -cost[width]  # optimal phase-I objective value
    if residual != 0:
        return None
    x = [ZERO] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = rows[i][width]
    return x


def solve_ge_with_unit(A: Mat, d: int, k: int, sign: RationalLike = 1) -> Vec | None:
    """A point x in d-space with A x >= 0 (componentwise) and sign*x_k >= 1, or None.

    Free variables are split into differences of nonnegative ones and the
    inequalities get slack variables, then phase-I decides feasibility.
    """
    m = len(A)
    sg = as_fraction(sign)
    columns: list[Vec] = []
    rhs = [ZERO] * m + [ONE]

    def col(entries_top: list[Fraction], last: Fraction) -> Vec:
        return tuple(entries_top + [last])

    for j in range(d):  # p_j
        columns.append(col([A[i][j] for i in range(m)], sg if j == k else ZERO))
    for j in range(d):  # q_j
        columns.append(col([-A[i][j] for i in range(m)], -sg if j == k else ZERO))
    for i in range(m):  # surplus on A x >= 0
        columns.append(col([-ONE if r == i else ZERO for r in range(m)], ZERO))
    columns.append(col([ZERO] * m, -ONE))  # surplus on sign*x_k >= 1

    sol = solve_nonneg_combination(columns, tuple(rhs))
    if sol is None:
        return None
    return tuple(sol[j] - sol[d + j] for j in range(d))
