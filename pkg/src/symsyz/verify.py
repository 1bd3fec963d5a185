"""Seeded verification suites shared by the command line and the test
suite. Each suite returns (name, passed, detail) and is deterministic for a
fixed seed."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import exactmat as em
from .bott import QDominantWeight, bott
from .geometry import (
    BlockMatrix2n,
    cell_cuts,
    desing_data,
    is_symplectic,
    opposite_cell_factor,
    plucker_restriction,
    random_cell_point,
    random_symplectic_cell_point,
    product_identification,
    product_identification_inverse,
    symplectic_form,
)
from .partitions import exterior_of_sym2, schur_dim
from .resolution import (
    consistency_check,
    enlarged_space_table,
    jpw_closed_form,
    k_polynomial,
    minor_generators,
)
from .weyl import (
    ParabolicMarker,
    WeylElementC,
    avoids_patterns,
    family_element,
    h_side_cuts,
    length_C,
    sort_blocks,
    tangent_dim_at_id_C,
    w_max_rep,
    w_tilde_min_rep,
)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str


def _binomial(a: int, b: int) -> int:
    if b < 0 or b > a:
        return 0
    out = 1
    for i in range(b):
        out = out * (a - i) // (i + 1)
    return out


def all_parameters(n_max: int):
    return [
        (n, k, r)
        for n in range(2, n_max + 1)
        for r in range(2, n + 1)
        for k in range(1, r)
    ]


def plucker_suite(seed: int, n_max: int = 5, points_per_case: int = 200,
                  cross_check_every: int = 50) -> SuiteResult:
    """Exact agreement of the three closed-form minor identities with the
    expanded determinants on random integer cell points."""
    rng = random.Random(f"plucker:{seed}:{n_max}")
    checked = 0
    for n, k, r in all_parameters(n_max):
        l, mid, big = cell_cuts(n, k, r)
        pairs = (
            [(i, j) for i in range(r + 1, 2 * n + 1) for j in range(1, l + 1)]
            + [(i, j) for i in range(big + 1, 2 * n + 1) for j in range(mid + 1, big + 1)]
            + [(i, j) for i in range(big + 1, 2 * n + 1) for j in range(l + 1, mid + 1)]
        )
        for count in range(points_per_case):
            point = random_cell_point(n, k, r, rng)
            cross = count % cross_check_every == 0
            for i, j in pairs:
                try:
                    plucker_restriction(n, k, r, i, j, point, cross_check=cross)
                except AssertionError as exc:
                    return SuiteResult("plucker", False, str(exc))
                checked += 1
    return SuiteResult("plucker", True, f"{checked} minors matched exactly")


def random_symplectic(n: int, rng: random.Random, bound: int = 4) -> BlockMatrix2n:
    """Random symplectic matrix with invertible upper-left block, built as
    (lower unipotent) * (parabolic)."""
    j = em.antidiag(n)
    while True:
        a = em.from_rows(
            [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        )
        try:
            em.inverse(a)
            break
        except ValueError:
            continue
    s1 = _random_symmetric(n, rng, bound)
    s2 = _random_symmetric(n, rng, bound)
    z1 = em.block2(em.identity(n), em.zeros(n, n), em.mat_mul(j, s1), em.identity(n))
    e = em.mat_mul(j, em.mat_mul(em.transpose(em.inverse(a)), j))
    c = em.mat_mul(a, em.mat_mul(j, s2))
    z2 = em.block2(a, c, em.zeros(n, n), e)
    return BlockMatrix2n.from_matrix(em.mat_mul(z1, z2))


def _random_symmetric(n: int, rng: random.Random, bound: int) -> em.Matrix:
    m = em.zeros(n, n)
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = Fraction(rng.randint(-bound, bound))
    return m


def factorization_suite(seed: int, count: int = 200, n_values=(2, 3, 4, 5)) -> SuiteResult:
    rng = random.Random(f"factor:{seed}")
    done = 0
    for _ in range(count):
        n = rng.choice(n_values)
        z = random_symplectic(n, rng)
        if not is_symplectic(z):
            return SuiteResult("factorization", False, f"generator produced non-symplectic n={n}")
        z1, z2 = opposite_cell_factor(z)
        f = symplectic_form(n)
        recomposed = em.mat_mul(z1, z2)
        if not em.mat_eq(recomposed, z.as_matrix()):
            return SuiteResult("factorization", False, "recomposition mismatch")
        if not em.mat_eq(em.mat_mul(em.transpose(z2), em.mat_mul(f, z2)), f):
            return SuiteResult("factorization", False, "parabolic factor not symplectic")
        done += 1
    return SuiteResult("factorization", True, f"{done} factorizations exact")


def plethysm_suite(e_max: int = 5, t_max: int = 6) -> SuiteResult:
    for e in range(1, e_max + 1):
        dim = e * (e + 1) // 2
        for t in range(t_max + 1):
            total = sum(
                schur_dim(lam, e) * mult for lam, mult in exterior_of_sym2(t, e)
            )
            if total != _binomial(dim, t):
                return SuiteResult(
                    "plethysm", False,
                    f"dimension count fails at e={e}, t={t}: {total}",
                )
    return SuiteResult("plethysm", True, f"all counts match up to e={e_max}, t={t_max}")


def bott_euler_suite(d_range: int = 6) -> SuiteResult:
    """Line bundles on the projective line: weight (0, d) with cut 1 behaves
    exactly like the degree-d line bundle."""
    for d in range(-d_range, d_range + 1):
        answer = bott(QDominantWeight(2, 1, (0, d)))
        if d >= 0:
            ok = not answer.zero and answer.degree == 0 and answer.dimension == d + 1
        elif d == -1:
            ok = answer.zero
        else:
            ok = not answer.zero and answer.degree == 1 and answer.dimension == -d - 1
        if not ok:
            return SuiteResult("bott-euler", False, f"degree {d}: got {answer}")
        euler = 0 if answer.zero else (-1) ** answer.degree * answer.dimension
        if euler != d + 1:
            return SuiteResult("bott-euler", False, f"Euler characteristic off at {d}")
    return SuiteResult("bott-euler", True, f"line bundles |d| <= {d_range} match")


def betti_suite(n_max: int = 5) -> SuiteResult:
    for n in range(2, n_max + 1):
        for k in range(1, n):
            table = jpw_closed_form(n, k)
            codim = desing_data(n, k, n).codim
            if codim != _binomial(n - k + 1, 2):
                return SuiteResult("betti", False, f"codim mismatch at {(n, k)}")
            if table.length() != codim:
                return SuiteResult("betti", False, f"length != codim at {(n, k)}")
            report = consistency_check(table, codim)
            if not report.divisible or report.degree <= 0:
                return SuiteResult("betti", False, f"K-polynomial fails at {(n, k)}")
            gens = minor_generators(n, k)
            f1 = table.entries.get((1, k + 1), 0)
            if len(gens) != f1:
                return SuiteResult(
                    "betti", False,
                    f"generator count {len(gens)} != F_1 rank {f1} at {(n, k)}",
                )
            if any(g.degree() != k + 1 for g in gens):
                return SuiteResult("betti", False, f"generator degree off at {(n, k)}")
            first_degrees = sorted(d for (i, d) in table.entries if i == 1)
            if first_degrees != [k + 1]:
                return SuiteResult("betti", False, f"F_1 degrees {first_degrees} at {(n, k)}")
    return SuiteResult("betti", True, f"closed form consistent for n <= {n_max}")


def subresolution_suite(cases=((3, 2, 3), (4, 2, 4))) -> SuiteResult:
    for n, k, r in cases:
        big = enlarged_space_table(n, k, r)
        small = jpw_closed_form(n, k)
        if not big.contains(small):
            return SuiteResult("subresolution", False, f"containment fails at {(n, k, r)}")
        if k_polynomial(big) == k_polynomial(small) and big.entries != small.entries:
            return SuiteResult("subresolution", False, f"tables differ but K agrees at {(n, k, r)}")
    return SuiteResult("subresolution", True, f"{len(cases)} enlarged tables contain the closed form")


def weyl_suite(seed: int, n_max: int = 6, tangent_n_max: int = 6) -> SuiteResult:
    for n in range(2, n_max + 1):
        for r in range(2, n + 1):
            for k in range(1, r):
                wmax = w_max_rep(n, k, r)
                if not avoids_patterns(wmax, [(4, 2, 3, 1), (3, 1, 4, 2)]):
                    return SuiteResult("weyl", False, f"pattern occurs at {(n, k, r)}")
                element = WeylElementC.from_full_word(wmax)
                if n <= tangent_n_max:
                    if tangent_dim_at_id_C(element) != length_C(element):
                        return SuiteResult("weyl", False, f"tangent != length at {(n, k, r)}")
                marker = ParabolicMarker((r - k, n))
                tilde = w_tilde_min_rep(family_element(n, k, r), marker)
                if tilde.full_word() != sort_blocks(wmax, h_side_cuts(marker, n)):
                    return SuiteResult("weyl", False, f"coset reps disagree at {(n, k, r)}")
    expected = (3, 4, 6, 9, 10, 1, 2, 5, 7, 8)
    got = w_tilde_min_rep(family_element(5, 2, 4), ParabolicMarker((2, 5))).full_word()
    if got != expected:
        return SuiteResult("weyl", False, f"minimal representative {got}")
    return SuiteResult("weyl", True, f"patterns/tangent/coset checks pass for n <= {n_max}")


def product_suite(seed: int, n_max: int = 5, points_per_case: int = 100) -> SuiteResult:
    rng = random.Random(f"product:{seed}")
    for n, k, r in all_parameters(n_max):
        data = desing_data(n, k, r)
        if data.dim_y + data.codim != n * (n + 1) // 2:
            return SuiteResult("product", False, f"dimension bookkeeping at {(n, k, r)}")
        if r == n and data.codim != _binomial(n - k + 1, 2):
            return SuiteResult("product", False, f"codim at {(n, k, r)}")
        for _ in range(points_per_case):
            m = random_symplectic_cell_point(n, k, r, rng)
            if not is_symplectic(BlockMatrix2n.from_matrix(m)):
                return SuiteResult("product", False, f"pattern not symplectic at {(n, k, r)}")
            sym, base = product_identification(n, k, r, m)
            back = product_identification_inverse(n, k, r, sym, base)
            if not em.mat_eq(back, em.from_rows(m)):
                return SuiteResult("product", False, f"round trip fails at {(n, k, r)}")
    return SuiteResult("product", True, f"{points_per_case} round trips per case, n <= {n_max}")


DEFAULT_SUITES = (
    "weyl",
    "plethysm",
    "bott-euler",
    "plucker",
    "factorization",
    "product",
    "betti",
    "subresolution",
)


def run_suites(seed: int, names=DEFAULT_SUITES, fast: bool = False) -> list[SuiteResult]:
    points = 40 if fast else 200
    n_max = 4 if fast else 5
    runners = {
        "weyl": lambda: weyl_suite(seed, n_max=5 if fast else 6),
        "plethysm": lambda: plethysm_suite(),
        "bott-euler": lambda: bott_euler_suite(),
        "plucker": lambda: plucker_suite(seed, n_max=n_max, points_per_case=points),
        "factorization": lambda: factorization_suite(seed, count=points),
        "product": lambda: product_suite(seed, n_max=n_max, points_per_case=points // 2),
        "betti": lambda: betti_suite(n_max=5),
        "subresolution": lambda: subresolution_suite(),
    }
    return [runners[name]() for name in names]
