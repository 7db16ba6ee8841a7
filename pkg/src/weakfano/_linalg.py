"""Exact linear algebra over the integers and rationals.

Everything here is dependency-free and exact: integer Bareiss
elimination for determinants, Fraction-based Gaussian elimination for
solves, ranks and kernels.  Matrices are plain lists of lists.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import SingularSystem


def determinant(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    a = [[int(x) for x in r] for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is a Bareiss invariant
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def matrix_rank(rows: list[list[int]]) -> int:
    """Rank of a (possibly rectangular) integer matrix."""
    if not rows or not rows[0]:
        return 0
    a = [[Fraction(x) for x in r] for r in rows]
    m, n = len(a), len(a[0])
    rank = 0
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if a[i][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        lead = a[row][col]
        for i in range(row + 1, m):
            if a[i][col]:
                f = a[i][col] / lead
                for j in range(col, n):
                    a[i][j] -= f * a[row][j]
        row += 1
        rank += 1
        if row == m:
            break
    return rank


def affine_rank(points: list[tuple[int, ...]]) -> int:
    """Dimension of the affine span of a point set (0 for a single point)."""
    if len(points) <= 1:
        return 0
    base = points[0]
    diffs = [[p[j] - base[j] for j in range(len(base))] for p in points[1:]]
    return matrix_rank(diffs)


def solve_exact(rows: list[list[int]], rhs: list[int]) -> list[Fraction]:
    """Solve a square linear system exactly over the rationals."""
    n = len(rows)
    a = [[Fraction(rows[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            raise SingularSystem("singular linear system")
        a[col], a[piv] = a[piv], a[col]
        lead = a[col][col]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col] / lead
                for j in range(col, n + 1):
                    a[i][j] -= f * a[col][j]
    return [a[i][n] / a[i][i] for i in range(n)]


def unimodular_inverse(rows: list[list[int]]) -> list[list[int]]:
    """Exact inverse of an integer matrix, required to be integral.

    Raises SingularSystem for a singular matrix and ValueError when the
    inverse exists but is not an integer matrix.
    """
    n = len(rows)
    a = [
        [Fraction(rows[i][j]) for j in range(n)]
        + [Fraction(1 if i == j else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            raise SingularSystem("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        lead = a[col][col]
        for j in range(2 * n):
            a[col][j] /= lead
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                for j in range(2 * n):
                    a[i][j] -= f * a[col][j]
    inv = []
    for i in range(n):
        out_row = []
        for j in range(n):
            q = a[i][n + j]
            if q.denominator != 1:
                raise ValueError("inverse is not an integer matrix")
            out_row.append(int(q))
        inv.append(out_row)
    return inv


def nullspace_basis(rows: list[list[int]]) -> list[list[Fraction]]:
    """Basis of the rational kernel {x : rows @ x = 0}."""
    if not rows:
        return []
    m, n = len(rows), len(rows[0])
    a = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if a[i][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        lead = a[row][col]
        for j in range(n):
            a[row][j] /= lead
        for i in range(m):
            if i != row and a[i][col]:
                f = a[i][col]
                for j in range(n):
                    a[i][j] -= f * a[row][j]
        pivots.append(col)
        row += 1
        if row == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -a[r][fc]
        basis.append(vec)
    return basis


def cross_normal(vectors: list[list[int]]) -> list[int]:
    """Integer vector orthogonal to d-1 vectors in Z^d.

    Computed by cofactor expansion, so <result, x> equals the
    determinant of the matrix with x stacked on top of ``vectors``.
    """
    d = len(vectors) + 1
    if any(len(v) != d for v in vectors):
        raise ValueError("need d-1 vectors of length d")
    normal = []
    for j in range(d):
        minor = [[v[k] for k in range(d) if k != j] for v in vectors]
        normal.append((-1) ** j * determinant(minor))
    return normal


def primitive_vector(vec: list[int]) -> list[int]:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    if g <= 1:
        return list(vec)
    return [x // g for x in vec]


def mat_vec(rows: list[list[int]], vec: list[int]) -> list[int]:
    """Integer matrix times integer vector."""
    return [sum(r[j] * vec[j] for j in range(len(vec))) for r in rows]
