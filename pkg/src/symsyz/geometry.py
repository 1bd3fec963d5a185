"""Concrete matrix models for opposite cells in the symplectic flag variety.

Everything is exact rational arithmetic. The ambient group lives inside
SL(2n): a block matrix [[A, C], [D, E]] is symplectic for the form
F = [[0, J], [-J, 0]] (J the antidiagonal of ones) iff the three block
equations checked by :func:`is_symplectic` hold.

Coordinates x[i][j] on the opposite big cell of the three-step type-A
parabolic quotient sit strictly below the block diagonal with cuts
{r-k, n, 2n-(r-k)}; points are dicts {(i, j): value} on those positions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import exactmat as em
from .polynomials import Poly
from .weyl import check_parameters


@dataclass(frozen=True)
class BlockMatrix2n:
    """Four n-by-n exact blocks of a 2n-by-2n matrix [[A, C], [D, E]]."""

    a: tuple
    c: tuple
    d: tuple
    e: tuple

    @staticmethod
    def from_blocks(a, c, d, e) -> "BlockMatrix2n":
        blocks = [em.from_rows(b) for b in (a, c, d, e)]
        n = len(blocks[0])
        for b in blocks:
            if em.shape(b) != (n, n):
                raise ValueError("blocks must be square of equal size")
        return BlockMatrix2n(*(_freeze(b) for b in blocks))

    @staticmethod
    def from_matrix(m) -> "BlockMatrix2n":
        m = em.from_rows(m)
        rows, cols = em.shape(m)
        if rows != cols or rows % 2:
            raise ValueError("need a square matrix of even size")
        n = rows // 2
        a, c, d, e = em.split4(m, n, n)
        return BlockMatrix2n.from_blocks(a, c, d, e)

    @property
    def n(self) -> int:
        return len(self.a)

    def blocks(self):
        return tuple(em.from_rows(b) for b in (self.a, self.c, self.d, self.e))

    def as_matrix(self):
        a, c, d, e = self.blocks()
        return em.block2(a, c, d, e)


def _freeze(m) -> tuple:
    return tuple(tuple(row) for row in m)


def symplectic_form(n: int):
    """F = [[0, J], [-J, 0]]."""
    j = em.antidiag(n)
    return em.block2(em.zeros(n, n), j, em.mat_neg(j), em.zeros(n, n))


def is_symplectic(z: BlockMatrix2n) -> bool:
    """Check the three block structure equations exactly.

    >>> is_symplectic(BlockMatrix2n.from_matrix(em.identity(4)))
    True
    """
    a, c, d, e = z.blocks()
    n = z.n
    j = em.antidiag(n)
    at, ct, dt, et = (em.transpose(b) for b in (a, c, d, e))
    eq1 = em.mat_eq(em.mat_mul(at, em.mat_mul(j, d)), em.mat_mul(dt, em.mat_mul(j, a)))
    eq2 = em.mat_eq(em.mat_mul(ct, em.mat_mul(j, e)), em.mat_mul(et, em.mat_mul(j, c)))
    lhs = em.mat_sub(em.mat_mul(at, em.mat_mul(j, e)), em.mat_mul(dt, em.mat_mul(j, c)))
    rhs = em.mat_sub(em.mat_mul(et, em.mat_mul(j, a)), em.mat_mul(ct, em.mat_mul(j, d)))
    eq3 = em.mat_eq(lhs, j) and em.mat_eq(rhs, j)
    return eq1 and eq2 and eq3


class NotInOppositeCellError(ValueError):
    """Raised when the upper-left block is singular."""


def opposite_cell_factor(z: BlockMatrix2n) -> tuple[em.Matrix, em.Matrix]:
    """Factor a symplectic z with invertible A as z1 * z2 with z1 lower
    unipotent (block D A^{-1}) and z2 block upper triangular in the
    parabolic. Verifies both factorisation identities before returning.
    """
    if not is_symplectic(z):
        raise ValueError("matrix is not symplectic")
    a, c, d, e = z.blocks()
    n = z.n
    j = em.antidiag(n)
    try:
        a_inv = em.inverse(a)
    except ValueError:
        raise NotInOppositeCellError("upper-left block is singular") from None
    da_inv = em.mat_mul(d, a_inv)
    # J(DA^{-1}) must be symmetric, and A^T J (E - DA^{-1}C) must equal J
    if not em.mat_eq(em.mat_mul(j, da_inv), em.mat_mul(em.transpose(da_inv), j)):
        raise ValueError("factorisation identity for the unipotent part fails")
    schur = em.mat_sub(e, em.mat_mul(da_inv, c))
    if not em.mat_eq(em.mat_mul(em.transpose(a), em.mat_mul(j, schur)), j):
        raise ValueError("factorisation identity for the parabolic part fails")
    z1 = em.block2(em.identity(n), em.zeros(n, n), da_inv, em.identity(n))
    z2 = em.block2(a, c, em.zeros(n, n), schur)
    return z1, z2


def sym_coordinates(z1) -> em.Matrix:
    """Coordinates of a lower-unipotent element on the symplectic opposite
    big cell: requires the lower-left block Y persymmetric (JY = Y^T J) and
    returns the symmetric matrix JY."""
    m = em.from_rows(z1)
    rows, cols = em.shape(m)
    if rows != cols or rows % 2:
        raise ValueError("need a square matrix of even size")
    n = rows // 2
    a, c, d, e = em.split4(m, n, n)
    if not (em.mat_eq(a, em.identity(n)) and em.mat_eq(e, em.identity(n))
            and em.mat_eq(c, em.zeros(n, n))):
        raise ValueError("matrix is not lower unipotent")
    j = em.antidiag(n)
    jy = em.mat_mul(j, d)
    if not em.is_symmetric(jy):
        raise ValueError("lower-left block is not persymmetric")
    return jy


# ---------------------------------------------------------------------------
# Coordinates on the opposite big cell of the three-step parabolic quotient


def cell_cuts(n: int, k: int, r: int) -> tuple[int, int, int]:
    check_parameters(n, k, r)
    return (r - k, n, 2 * n - (r - k))


def free_positions(n: int, k: int, r: int) -> list[tuple[int, int]]:
    """Positions (i, j) with j <= cut < i for one of the three cuts."""
    cuts = cell_cuts(n, k, r)
    return [
        (i, j)
        for i in range(1, 2 * n + 1)
        for j in range(1, i)
        if any(j <= l < i for l in cuts)
    ]


def random_cell_point(n: int, k: int, r: int, rng: random.Random,
                      bound: int = 9) -> dict[tuple[int, int], int]:
    """Random integer coordinates on the free positions."""
    return {
        pos: rng.randint(-bound, bound)
        for pos in free_positions(n, k, r)
    }


def cell_matrix(n: int, k: int, r: int, point: dict) -> em.Matrix:
    """Assemble the lower unidiagonal 2n-by-2n matrix of a cell point."""
    free = set(free_positions(n, k, r))
    m = em.identity(2 * n)
    for (i, j), value in point.items():
        if (i, j) not in free:
            raise ValueError(f"position {(i, j)} is not free for {(n, k, r)}")
        m[i - 1][j - 1] = Fraction(value)
    return m


def _minor_rows_cols(l: int, i: int, j: int) -> tuple[list[int], list[int]]:
    rows = [s for s in range(1, l + 1) if s != j] + [i]
    return rows, list(range(1, l + 1))


def _minor_det_unitriangular(m: em.Matrix, l: int, i: int, j: int):
    """Determinant of the minor with rows {1..l} \\ {j} + {i}, columns 1..l,
    for a lower unidiagonal matrix: reduce the extra row against the unit
    pivots and read off the surviving entry, with the column sign."""
    v = [m[i - 1][c] for c in range(l)]
    for s in range(l, 0, -1):
        if s == j:
            continue
        coeff = v[s - 1]
        if coeff:
            v[s - 1] = Fraction(0)
            for c in range(s - 1):
                v[c] -= coeff * m[s - 1][c]
    sign = -1 if (l - j) % 2 else 1
    return sign * v[j - 1]


def _minor_det_bareiss(m: em.Matrix, l: int, i: int, j: int):
    rows, cols = _minor_rows_cols(l, i, j)
    sub = [[m[ri - 1][ci - 1] for ci in cols] for ri in rows]
    return em.det_bareiss(sub)


@dataclass(frozen=True)
class PluckerValue:
    minor: Fraction
    closed_form: Fraction


def plucker_restriction(n: int, k: int, r: int, i: int, j: int,
                        point: dict, cross_check: bool = False) -> PluckerValue:
    """Restriction of the Plucker coordinate p_(i,j) to the opposite cell,
    computed two ways: as the actual minor of the coordinate matrix, and by
    the closed form for the index range. The two must agree exactly.

    Ranges: (i > r, j <= r-k) uses the first cut; (i > 2n-(r-k), j in the
    second or third column band) use the last cut.
    """
    l, mid, big = cell_cuts(n, k, r)
    lookup = lambda a, b: Fraction(point.get((a, b), 0))
    if i > r and j <= l:
        cut = l
        closed = (-1) ** (l - j) * lookup(i, j)
    elif i > big and mid < j <= big:
        cut = big
        closed = (-1) ** (big - j) * lookup(i, j)
    elif i > big and l < j <= mid:
        # the subtracted product pairs the tail of row i (columns n+1..big)
        # with the column of the middle block above it
        cut = big
        dot = sum(
            lookup(i, n + s) * lookup(n + s, j)
            for s in range(1, n - l + 1)
        )
        closed = (-1) ** (big - j) * (lookup(i, j) - dot)
    else:
        raise ValueError(f"index pair {(i, j)} outside the treated ranges")
    m = cell_matrix(n, k, r, point)
    minor = _minor_det_unitriangular(m, cut, i, j)
    if cross_check:
        assert minor == _minor_det_bareiss(m, cut, i, j)
    if minor != closed:
        raise AssertionError(
            f"minor/closed-form mismatch at {(n, k, r, i, j)}: {minor} != {closed}"
        )
    return PluckerValue(minor, closed)


# ---------------------------------------------------------------------------
# Matrix forms of the opposite cells


def _xvar(i: int, j: int):
    return ("x", i, j)


@dataclass(frozen=True)
class CellPattern:
    """Symbolic form of an opposite cell inside the big cell: every position
    of the 2n-by-2n matrix as a polynomial in the free coordinates."""

    n: int
    k: int
    r: int
    group: str
    free: tuple[tuple[int, int], ...]
    entries: dict

    def entry(self, i: int, j: int) -> Poly:
        return self.entries.get((i, j), Poly.zero())

    def dimension(self) -> int:
        return len(self.free)

    def is_member(self, matrix) -> bool:
        m = em.from_rows(matrix)
        if em.shape(m) != (2 * self.n, 2 * self.n):
            return False
        values = {
            _xvar(i, j): m[i - 1][j - 1] for (i, j) in self.free
        }
        for i in range(1, 2 * self.n + 1):
            for j in range(1, 2 * self.n + 1):
                expected = self.entry(i, j).evaluate(values) if (i, j) in self.entries \
                    else (1 if i == j else 0)
                if m[i - 1][j - 1] != expected:
                    return False
        return True


def opposite_cell_pattern(n: int, k: int, r: int, group: str = "G") -> CellPattern:
    """Constrained block pattern of the opposite cell of the distinguished
    Schubert variety, for the special linear ('H') or symplectic ('G') case.

    In both cases the two lower-left blocks vanish, the bottom band of the
    first column block of coordinates is zero, and the bottom-middle block
    couples as a product; the symplectic case further ties the bottom band
    to the first band and makes the middle block symmetric under J.
    """
    if group not in ("H", "G"):
        raise ValueError("group must be 'H' or 'G'")
    l, mid, big = cell_cuts(n, k, r)
    q = n - l
    entries: dict[tuple[int, int], Poly] = {}
    free: list[tuple[int, int]] = []

    def set_free(i, j):
        entries[(i, j)] = Poly.var(_xvar(i, j))
        free.append((i, j))

    # first band: rows l+1..n, columns 1..l, bottom n-r rows zero
    for i in range(l + 1, n + 1):
        for j in range(1, l + 1):
            if i <= r:
                set_free(i, j)
            else:
                entries[(i, j)] = Poly.zero()
    # middle block D2: rows n+1..big, columns l+1..n
    if group == "H":
        for i in range(n + 1, big + 1):
            for j in range(l + 1, n + 1):
                set_free(i, j)
        # E': rows big+1..2n, columns n+1..big, left n-r columns zero
        for i in range(big + 1, 2 * n + 1):
            for j in range(n + 1, big + 1):
                if j - n > n - r:
                    set_free(i, j)
                else:
                    entries[(i, j)] = Poly.zero()
    else:
        # J D2 symmetric: mirror-diagonal pairs share one coordinate
        for i in range(n + 1, big + 1):
            for j in range(l + 1, n + 1):
                mi, mj = _d2_mirror(n, l, i, j)
                if (mi, mj) in entries:
                    entries[(i, j)] = entries[(mi, mj)]
                else:
                    set_free(i, j)
        # E' = -J (A')^T J, entrywise: e'[s][t] = -a'[q+1-t][l+1-s]
        for i in range(big + 1, 2 * n + 1):
            for j in range(n + 1, big + 1):
                s, t = i - big, j - n
                ai = l + (q + 1 - t)
                aj = l + 1 - s
                entries[(i, j)] = -entries[(ai, aj)]
    # coupled block: rows big+1..2n, columns l+1..n equal E' D2
    for i in range(big + 1, 2 * n + 1):
        for j in range(l + 1, n + 1):
            total = Poly.zero()
            for s in range(1, q + 1):
                total = total + entries[(i, n + s)] * entries[(n + s, j)]
            entries[(i, j)] = total
    # everything else below the diagonal is zero
    for i in range(1, 2 * n + 1):
        for j in range(1, i):
            entries.setdefault((i, j), Poly.zero())
    return CellPattern(n, k, r, group, tuple(free), entries)


def _d2_mirror(n: int, l: int, i: int, j: int) -> tuple[int, int]:
    # J D2 symmetric ties (row, col) to the antidiagonal mirror inside D2
    s, t = i - n, j - l  # 1-based inside the block of size q = n - l
    q = n - l
    return n + (q + 1 - t), l + (q + 1 - s)


def random_symplectic_cell_point(n: int, k: int, r: int, rng: random.Random,
                                 bound: int = 6) -> em.Matrix:
    """Random member of the symplectic opposite-cell pattern."""
    pattern = opposite_cell_pattern(n, k, r, "G")
    values = {_xvar(i, j): Fraction(rng.randint(-bound, bound)) for (i, j) in pattern.free}
    m = em.identity(2 * n)
    for (i, j), poly in pattern.entries.items():
        m[i - 1][j - 1] = poly.evaluate(values)
    return m


# ---------------------------------------------------------------------------
# Linear slices and the product identification


@dataclass(frozen=True)
class LinearSlice:
    """A linear space cut out by vanishing coordinates, with an explicit
    list of free positions."""

    kind: str
    params: tuple
    size: tuple[int, int]
    free: tuple[tuple[int, int], ...]

    def dimension(self) -> int:
        return len(self.free)

    def contains(self, matrix) -> bool:
        m = em.from_rows(matrix)
        if em.shape(m) != self.size:
            return False
        free = set(self.free)
        if self.kind in ("V_w", "T_w"):
            if not em.is_symmetric(m):
                return False
            free |= {(j, i) for (i, j) in free}
        return all(
            m[i - 1][j - 1] == 0
            for i in range(1, self.size[0] + 1)
            for j in range(1, self.size[1] + 1)
            if (i, j) not in free
        )


def v_slice(n: int, k: int, r: int) -> LinearSlice:
    """Fibre slice inside the symmetric matrices: support in the lower-right
    square of side n-(r-k). Free positions are the lower-triangle pairs."""
    check_parameters(n, k, r)
    l = r - k
    free = tuple(
        (i, j) for i in range(l + 1, n + 1) for j in range(l + 1, i + 1)
    )
    return LinearSlice("V_w", (n, k, r), (n, n), free)


def v_prime_slice(n: int, k: int, r: int) -> LinearSlice:
    """Base slice inside the lower unipotent coordinates of the one-step
    cell: the (n-(r-k)) x (r-k) band below the cut, zero below row r."""
    check_parameters(n, k, r)
    l = r - k
    free = tuple((i - l, j) for i in range(l + 1, r + 1) for j in range(1, l + 1))
    return LinearSlice("V'_w", (n, k, r), (n - l, l), free)


def t_slice(n: int, u: int) -> LinearSlice:
    """Enlarged slice of symmetric matrices with zero upper-left
    (n-u)-by-(n-u) block.

    >>> t_slice(3, 1).dimension()
    3
    """
    if not 0 <= 2 * u <= n:
        raise ValueError(f"need 0 <= 2u <= n, got {(n, u)}")
    free = tuple(
        (i, j) for i in range(n - u + 1, n + 1) for j in range(1, i + 1)
    )
    return LinearSlice("T_w", (n, u), (n, n), free)


@dataclass(frozen=True)
class OppositeCellPoint:
    """Point of the symplectic opposite cell, determined by the first band
    A' ((n-(r-k)) x (r-k), bottom n-r rows zero) and the middle block D2
    (J D2 symmetric); the bottom band is the derived block -J (A')^T J."""

    n: int
    k: int
    r: int
    a_prime: tuple
    d2: tuple

    def __post_init__(self):
        l = self.r - self.k
        q = self.n - l
        a_prime = em.from_rows(self.a_prime)
        d2 = em.from_rows(self.d2)
        if em.shape(a_prime) != (q, l) or em.shape(d2) != (q, q):
            raise ValueError("block shapes do not match the parameters")
        if any(a_prime[i][j] != 0 for i in range(self.r - l, q) for j in range(l)):
            raise ValueError("bottom rows of the first band must vanish")
        if not em.is_symmetric(em.mat_mul(em.antidiag(q), d2)):
            raise ValueError("J D2 must be symmetric")
        object.__setattr__(self, "a_prime", _freeze(a_prime))
        object.__setattr__(self, "d2", _freeze(d2))

    @property
    def e_prime(self) -> em.Matrix:
        l, q = self.r - self.k, self.n - (self.r - self.k)
        at = em.transpose(em.from_rows(self.a_prime))
        return em.mat_neg(em.mat_mul(em.antidiag(l), em.mat_mul(at, em.antidiag(q))))

    def matrix(self) -> em.Matrix:
        l, mid, big = cell_cuts(self.n, self.k, self.r)
        e_prime = self.e_prime
        m = em.identity(2 * self.n)
        _paste(m, em.from_rows(self.a_prime), l, 0)
        _paste(m, em.from_rows(self.d2), self.n, l)
        _paste(m, e_prime, big, self.n)
        _paste(m, em.mat_mul(e_prime, em.from_rows(self.d2)), big, l)
        return m

    @staticmethod
    def from_matrix(n: int, k: int, r: int, matrix) -> "OppositeCellPoint":
        m = em.from_rows(matrix)
        if not opposite_cell_pattern(n, k, r, "G").is_member(m):
            raise ValueError("matrix does not satisfy the cell pattern")
        l = r - k
        q = n - l
        a_prime = [[m[l + i][j] for j in range(l)] for i in range(q)]
        d2 = [[m[n + i][l + j] for j in range(q)] for i in range(q)]
        return OppositeCellPoint(n, k, r, tuple(map(tuple, a_prime)), tuple(map(tuple, d2)))


def cell_point_from_blocks(n: int, k: int, r: int, a_prime, d2) -> em.Matrix:
    """Assembled matrix of the cell point with the given blocks."""
    return OppositeCellPoint(
        n, k, r, tuple(map(tuple, a_prime)), tuple(map(tuple, d2))
    ).matrix()


def _paste(m: em.Matrix, block: em.Matrix, row0: int, col0: int) -> None:
    for i, row in enumerate(block):
        for j, value in enumerate(row):
            m[row0 + i][col0 + j] = value


def product_identification(n: int, k: int, r: int, matrix) -> tuple[em.Matrix, em.Matrix]:
    """Split a symplectic cell member into its two linear components: the
    symmetric matrix D^T J A and the unipotent base factor A. Asserts that
    the components land in the expected slices."""
    pattern = opposite_cell_pattern(n, k, r, "G")
    m = em.from_rows(matrix)
    if not pattern.is_member(m):
        raise ValueError("matrix does not satisfy the cell pattern")
    a, c, d, e = em.split4(m, n, n)
    j = em.antidiag(n)
    sym = em.mat_mul(em.transpose(d), em.mat_mul(j, a))
    if not v_slice(n, k, r).contains(sym):
        raise AssertionError("symmetric component escapes its slice")
    l = r - k
    base_coords = [[a[i][jj] for jj in range(l)] for i in range(l, n)]
    if not v_prime_slice(n, k, r).contains(base_coords):
        raise AssertionError("base component escapes its slice")
    return sym, a


def product_identification_inverse(n: int, k: int, r: int, sym, base) -> em.Matrix:
    """Reassemble the cell member from its two components."""
    l = r - k
    q = n - l
    sym = em.from_rows(sym)
    base = em.from_rows(base)
    a_prime = [[base[l + i][j] for j in range(l)] for i in range(q)]
    jq = em.antidiag(q)
    s_block = [[sym[l + i][l + j] for j in range(q)] for i in range(q)]
    d2 = em.mat_mul(jq, s_block)
    return cell_point_from_blocks(n, k, r, a_prime, d2)


# ---------------------------------------------------------------------------
# Desingularisation bookkeeping


@dataclass(frozen=True)
class DesingData:
    n: int
    k: int
    r: int
    base: str
    base_dim: int
    fibre_dim: int
    dim_z: int
    dim_y: int
    ambient_dim: int
    codim: int
    bundle_rank: int


def desing_data(n: int, k: int, r: int) -> DesingData:
    """Dimension bookkeeping of the desingularisation: total space is a
    vector bundle of rank dim(V_w) over a Grassmannian of dimension k(r-k),
    mapping birationally onto the opposite cell inside the symmetric
    matrices.

    >>> desing_data(2, 1, 2).dim_y, desing_data(2, 1, 2).codim
    (2, 1)
    """
    check_parameters(n, k, r)
    ambient = n * (n + 1) // 2
    fibre = v_slice(n, k, r).dimension()
    base_dim = k * (r - k)
    dim_z = base_dim + fibre
    return DesingData(
        n=n, k=k, r=r,
        base=f"GL_{r}/P''_{{{r - k}}}",
        base_dim=base_dim,
        fibre_dim=fibre,
        dim_z=dim_z,
        dim_y=dim_z,
        ambient_dim=ambient,
        codim=ambient - dim_z,
        bundle_rank=ambient - fibre,
    )
