from math import comb

import pytest
from hypothesis import given, strategies as st

from symsyz.partitions import (
    FrobeniusHooks,
    cauchy_exterior,
    conjugate,
    durfee_rank,
    enumerate_Q,
    exterior_of_sym2,
    from_hooks,
    is_partition,
    partitions_of,
    schur_dim,
    to_hooks,
    weyl_dim,
)

from oracles import count_ssyt

partition_st = st.integers(0, 14).flatmap(
    lambda n: st.sampled_from(sorted(partitions_of(n))) if n else st.just(())
)


def test_conjugate_examples():
    assert conjugate((2, 2)) == (2, 2)
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((3, 2, 1)) == (3, 2, 1)


def test_durfee_examples():
    assert durfee_rank(()) == 0
    assert durfee_rank((2, 2)) == 2
    assert durfee_rank((3, 2, 2)) == 2


def test_hooks_examples():
    assert to_hooks((2, 2)) == FrobeniusHooks((1, 0), (1, 0))
    assert to_hooks((1,)) == FrobeniusHooks((0,), (0,))
    assert to_hooks((3, 2, 1)) == FrobeniusHooks((2, 0), (2, 0))
    assert from_hooks(FrobeniusHooks((2, 0), (2, 0))) == (3, 2, 1)


def test_hooks_roundtrip_exhaustive():
    for n in range(21):
        for lam in partitions_of(n):
            if lam:
                assert from_hooks(to_hooks(lam)) == lam


@given(partition_st)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert durfee_rank(lam) == durfee_rank(conjugate(lam))


def test_enumerate_Q_examples():
    assert enumerate_Q(0, 4) == ((2, 2),)
    assert enumerate_Q(0, 2) == ()
    assert enumerate_Q(1, 2) == ((2,),)
    with pytest.raises(ValueError):
        enumerate_Q(0, 3)


def test_enumerate_Q_against_filter():
    # oracle: filter every partition of the weight through its hooks
    for offset in range(3):
        for weight in range(2, 17, 2):
            expected = tuple(
                sorted(
                    (
                        lam
                        for lam in partitions_of(weight)
                        if all(
                            a == b + offset
                            for a, b in zip(*to_hooks(lam))
                        )
                    ),
                    reverse=True,
                )
            )
            assert enumerate_Q(offset, weight) == expected


def test_schur_dim_examples():
    assert schur_dim((2,), 2) == 3
    assert schur_dim((1, 1), 3) == 3
    assert schur_dim((2, 2), 3) == 6
    assert schur_dim((1, 1, 1), 2) == 0


def test_schur_dim_matches_tableau_count():
    for size in range(11):
        for lam in partitions_of(size):
            for e in range(1, 7):
                assert schur_dim(lam, e) == count_ssyt(lam, e), (lam, e)


@given(partition_st, st.integers(1, 6))
def test_weyl_dim_agrees_with_hook_content(lam, e):
    if len(lam) <= e:
        padded = tuple(lam) + (0,) * (e - len(lam))
        assert weyl_dim(padded) == schur_dim(lam, e)


def test_exterior_of_sym2_basics():
    assert exterior_of_sym2(0, 5) == [((), 1)]
    assert exterior_of_sym2(1, 5) == [((2,), 1)]
    dims = sum(schur_dim(lam, 2) for lam, _ in exterior_of_sym2(2, 2))
    assert dims == comb(3, 2)


def test_exterior_of_sym2_dimension_counts():
    for e in range(1, 6):
        for t in range(7):
            total = sum(schur_dim(lam, e) * m for lam, m in exterior_of_sym2(t, e))
            assert total == comb(e * (e + 1) // 2, t), (e, t)


def test_cauchy_exterior_basics():
    assert cauchy_exterior(0, 3, 3) == [((), ())]
    assert cauchy_exterior(1, 3, 3) == [((1,), (1,))]
    for lam, dual in cauchy_exterior(5, 4, 3):
        assert conjugate(lam) == dual


def test_cauchy_exterior_dimension_counts():
    for e in range(1, 5):
        for f in range(1, 5):
            for t in range(7):
                total = sum(
                    schur_dim(lam, e) * schur_dim(dual, f)
                    for lam, dual in cauchy_exterior(t, e, f)
                )
                assert total == comb(e * f, t), (e, f, t)


def test_is_partition():
    assert is_partition(())
    assert is_partition((5, 5, 2))
    assert not is_partition((2, 3))
    assert not is_partition((1, 0))
