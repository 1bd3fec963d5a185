"""Sparse exact multivariate polynomials over the rationals.

A monomial is a sorted tuple of (variable, exponent) pairs; variables are
arbitrary hashable keys. Just enough arithmetic for minors of symbolic
matrices and for rank computations on spans of polynomials.
"""

from __future__ import annotations

from fractions import Fraction

Monomial = tuple[tuple[object, int], ...]


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Fraction] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def const(c) -> "Poly":
        c = Fraction(c)
        return Poly({(): c} if c else {})

    @staticmethod
    def var(name) -> "Poly":
        return Poly({((name, 1),): Fraction(1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Poly") -> "Poly":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return Poly(terms)

    def __sub__(self, other: "Poly") -> "Poly":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) - c
        return Poly(terms)

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mul_monomials(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Poly(out)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return Poly({m: c * cm for m, cm in self.terms.items()})

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e for _, e in m) for m in self.terms)

    def evaluate(self, values: dict) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for v, e in m:
                term *= Fraction(values[v]) ** e
            total += term
        return total

    def leading_key(self) -> Monomial:
        return max(self.terms)

    def sign_canonical(self) -> "Poly":
        """Normalise so the coefficient of the largest monomial is positive."""
        if not self.terms:
            return self
        if self.terms[self.leading_key()] < 0:
            return -self
        return self

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for m, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"{v}" if e == 1 else f"{v}^{e}" for v, e in m
            ) or "1"
            bits.append(f"{c}*{mono}")
        return " + ".join(bits)


def _mul_monomials(m1: Monomial, m2: Monomial) -> Monomial:
    exps: dict[object, int] = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items(), key=lambda p: repr(p[0])))


def poly_det(rows: list[list[Poly]]) -> Poly:
    """Determinant of a square matrix of polynomials by cofactor expansion."""
    n = len(rows)
    if n == 0:
        return Poly.const(1)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")

    def expand(row_start: int, cols: tuple[int, ...]) -> Poly:
        if not cols:
            return Poly.const(1)
        total = Poly.zero()
        for pos, col in enumerate(cols):
            entry = rows[row_start][col]
            if not entry:
                continue
            sub = expand(row_start + 1, cols[:pos] + cols[pos + 1:])
            term = entry * sub
            total = total + term if pos % 2 == 0 else total - term
        return total

    return expand(0, tuple(range(n)))


def span_rank_and_basis(polys: list[Poly]) -> tuple[int, list[Poly]]:
    """Rank of the linear span, plus a subset of the input forming a basis.

    Sparse Gaussian elimination on monomial coordinates, exact over Q.
    """
    reduced: list[Poly] = []  # pairwise-distinct leading monomials
    basis: list[Poly] = []
    for original in polys:
        p = original
        changed = True
        while changed and p:
            changed = False
            for q in reduced:
                lk = q.leading_key()
                if lk in p.terms:
                    p = p - q.scale(p.terms[lk] / q.terms[lk])
                    changed = True
        if p:
            reduced.append(p)
            basis.append(original)
    return len(reduced), basis
