"""Small exact linear algebra over the rational-function field."""

import random
from fractions import Fraction

from .matrix import Matrix
from .ratfunc import PoleError


def _complexity(entry):
    return len(entry.num.terms) + sum(m for _, m in entry.den_factors)


def column_basis(mat):
    """Indices of a maximal independent set of columns, by elimination."""
    work = [list(r) for r in mat.rows]
    nr, nc = mat.nrows, mat.ncols
    pivots = []
    row = 0
    for col in range(nc):
        if row >= nr:
            break
        best = None
        for r in range(row, nr):
            if not work[r][col].is_zero():
                c = _complexity(work[r][col])
                if best is None or c < best[1]:
                    best = (r, c)
        if best is None:
            continue
        r = best[0]
        work[row], work[r] = work[r], work[row]
        piv = work[row][col]
        inv = piv.inv()
        work[row] = [e * inv for e in work[row]]
        for r2 in range(nr):
            if r2 != row and not work[r2][col].is_zero():
                f = work[r2][col]
                work[r2] = [a - f * b for a, b in zip(work[r2], work[row])]
        pivots.append(col)
        row += 1
    return pivots


def columns(mat, indices):
    """Submatrix formed by the chosen columns."""
    return Matrix(
        mat.nrows,
        len(indices),
        [[mat.rows[i][j] for j in indices] for i in range(mat.nrows)],
        mat.zero,
    )


def hstack(a, b):
    if a.nrows != b.nrows:
        raise ValueError("row counts differ")
    return Matrix(
        a.nrows,
        a.ncols + b.ncols,
        [ra + rb for ra, rb in zip(a.rows, b.rows)],
        a.zero,
    )


class SingularMatrixError(ValueError):
    pass


def _fraction_det_nonzero(rows):
    n = len(rows)
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            return False
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            f = rows[r][col] * inv
            if f:
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return True


def certify_invertible(mat, nvars, seed=0xC0FFEE, attempts=72):
    """Certificate that a matrix over the fraction field is invertible.

    Exact evaluation at a random rational point turns the matrix into one
    over Q, and a nonsingular specialization proves the symbolic
    determinant is a nonzero rational function.  Points hitting poles or
    a vanishing determinant are redrawn, so only a long run of unlucky
    samples leaves a genuinely invertible matrix unproved.
    """
    if mat.nrows != mat.ncols:
        return False, "not square"
    if mat.nrows == 0:
        return True, "empty matrix"
    rng = random.Random(seed)
    for _ in range(attempts):
        point = tuple(
            Fraction(rng.randint(2, 10**6), rng.randint(2, 997))
            for _ in range(nvars)
        )
        try:
            rows = [[e.evaluate(point) for e in r] for r in mat.rows]
        except PoleError:
            continue
        if _fraction_det_nonzero(rows):
            return True, "nonzero determinant at a sample point"
    return False, f"determinant vanished or hit poles at {attempts} sample points"


def invert_matrix(mat, one):
    """Exact inverse by Gauss-Jordan elimination; raises if singular."""
    n = mat.nrows
    if mat.ncols != n:
        raise ValueError("only square matrices invert")
    work = [list(r) for r in mat.rows]
    aug = [[one if i == j else mat.zero for j in range(n)] for i in range(n)]
    for col in range(n):
        best = None
        for r in range(col, n):
            if not work[r][col].is_zero():
                c = _complexity(work[r][col])
                if best is None or c < best[1]:
                    best = (r, c)
        if best is None:
            raise SingularMatrixError(f"matrix is singular at column {col}")
        r = best[0]
        work[col], work[r] = work[r], work[col]
        aug[col], aug[r] = aug[r], aug[col]
        inv = work[col][col].inv()
        work[col] = [e * inv for e in work[col]]
        aug[col] = [e * inv for e in aug[col]]
        for r2 in range(n):
            if r2 != col and not work[r2][col].is_zero():
                f = work[r2][col]
                work[r2] = [a - f * b for a, b in zip(work[r2], work[col])]
                aug[r2] = [a - f * b for a, b in zip(aug[r2], aug[col])]
    return Matrix(n, n, aug, mat.zero)
