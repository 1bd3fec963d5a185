"""Small exact matrix toolkit over Fraction/int: block assembly, products,
inverses, and fraction-free determinants. Matrices are lists of lists."""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def antidiag(n: int) -> Matrix:
    """The antidiagonal matrix J of ones."""
    m = zeros(n, n)
    for i in range(n):
        m[i][n - 1 - i] = Fraction(1)
    return m


def from_rows(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), len(m[0]) if m else 0


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return shape(a) == shape(b) and all(
        x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"shape mismatch: {shape(a)} * {shape(b)}")
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_neg(a: Matrix) -> Matrix:
    return [[-x for x in row] for row in a]


def is_symmetric(m: Matrix) -> bool:
    r, c = shape(m)
    return r == c and all(m[i][j] == m[j][i] for i in range(r) for j in range(r))


def block2(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Matrix:
    """Assemble [[a, b], [c, d]]."""
    top = [ra + rb for ra, rb in zip(a, b)]
    bottom = [rc + rd for rc, rd in zip(c, d)]
    return top + bottom


def split4(m: Matrix, row_cut: int, col_cut: int) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    a = [row[:col_cut] for row in m[:row_cut]]
    b = [row[col_cut:] for row in m[:row_cut]]
    c = [row[:col_cut] for row in m[row_cut:]]
    d = [row[col_cut:] for row in m[row_cut:]]
    return a, b, c, d


def inverse(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises ValueError on singular input."""
    n, c = shape(m)
    if n != c:
        raise ValueError("inverse needs a square matrix")
    work = [[Fraction(x) for x in row] + list(identity(n)[i]) for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv_p = Fraction(1) / work[col][col]
        work[col] = [x * inv_p for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


def det_bareiss(m: Matrix):
    """Fraction-free determinant (Bareiss); exact for int or Fraction entries."""
    n, c = shape(m)
    if n != c:
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    a = [[Fraction(x) for x in row] for row in m]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = a[k][k]
    value = sign * a[n - 1][n - 1]
    return int(value) if value.denominator == 1 else value
