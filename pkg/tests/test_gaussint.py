import pytest
from hypothesis import given
from hypothesis import strategies as st

from terai.gaussint import (
    GaussianInt,
    TwoSquares,
    eval_pq_identities,
    g_mul,
    g_pow,
    two_square_decompositions,
)

from brute import gmul, gpow_naive, two_squares_table

small = st.integers(min_value=-1000, max_value=1000)


def pairs(decs):
    return [(d.g, d.h) for d in decs]


@pytest.mark.parametrize(
    "z, k, expected",
    [((2, 1), 2, (3, 4)), ((5, 2), 2, (21, 20)), ((1, 1), 0, (1, 0)), ((0, 1), 4, (1, 0))],
)
def test_g_pow_examples(z, k, expected):
    w = g_pow(GaussianInt(*z), k)
    assert (w.re, w.im) == expected


def test_g_mul_example():
    assert g_mul(GaussianInt(1, 6), GaussianInt(1, -6)) == GaussianInt(37, 0)


def test_operators():
    z = GaussianInt(3, -2)
    assert z * z.conjugate() == GaussianInt(z.norm(), 0)
    assert z + 1 == GaussianInt(4, -2)
    assert 1 - z == GaussianInt(-2, 2)
    assert -z == GaussianInt(-3, 2)
    assert z**3 == z * z * z
    assert str(z) == "3-2i"


@given(small, small, st.integers(min_value=0, max_value=20))
def test_norm_multiplicative(re, im, k):
    z = GaussianInt(re, im)
    w = g_pow(z, k)
    assert w.norm() == z.norm() ** k
    assert (w.re, w.im) == gpow_naive((re, im), k)


@given(small, small, small, small)
def test_mul_matches_naive(a, b, c, d):
    prod = g_mul(GaussianInt(a, b), GaussianInt(c, d))
    assert (prod.re, prod.im) == gmul((a, b), (c, d))
    assert prod.norm() == (a * a + b * b) * (c * c + d * d)


@pytest.mark.parametrize(
    "N, expected",
    [(37, [(1, 6)]), (29, [(5, 2)]), (85, [(7, 6), (9, 2)]), (21, []), (5, [(1, 2)]), (2, []), (9, [])],
)
def test_two_square_examples(N, expected):
    assert pairs(two_square_decompositions(N)) == expected


def test_two_squares_agree_with_forward_enumeration():
    limit = 10**5
    table = two_squares_table(limit)
    for N in range(2, limit + 1):
        assert pairs(two_square_decompositions(N)) == table.get(N, []), N


@pytest.mark.parametrize("N", [65, 85, 1105, 5525, 5**6, 13**3 * 17, 29 * 37 * 41 * 53, 999_997 * 4 + 1])
def test_cornacchia_path_matches_scan(N):
    assert two_square_decompositions(N, exhaustive_limit=0) == two_square_decompositions(N)


def test_cornacchia_above_limit():
    N = 1_000_037 * 1_000_033  # both primes are 1 (mod 4)
    decs = two_square_decompositions(N)
    assert len(decs) == 2
    for d in decs:
        assert d.g**2 + d.h**2 == N and d.h % 2 == 0
    assert two_square_decompositions(1_000_003 * 1_000_033) == []  # 1_000_003 = 3 (mod 4)


def test_two_squares_rejects_small():
    with pytest.raises(ValueError):
        two_square_decompositions(1)


def test_two_squares_validates():
    with pytest.raises(ValueError):
        TwoSquares(2, 5, 29)
    with pytest.raises(ValueError):
        TwoSquares(5, 2, 30)


@pytest.mark.parametrize(
    "g, h, k, expected",
    [(5, 2, 1, (7, 3)), (1, 6, 1, (7, -5)), (1, 2, 1, (3, -1))],
)
def test_eval_pq_examples(g, h, k, expected):
    assert eval_pq_identities(g, h, k) == expected


def test_eval_pq_direct_expansion():
    # (5+2i)(1-i) + (5-2i)(1+i) = 14 by hand.
    lhs = gmul((5, 2), (1, -1))
    rhs = gmul((5, -2), (1, 1))
    assert (lhs[0] + rhs[0], lhs[1] + rhs[1]) == (14, 0)


def test_eval_pq_rejects_even_k():
    with pytest.raises(ValueError):
        eval_pq_identities(5, 2, 2)


def test_eval_pq_sum_of_squares():
    for N in range(5, 3000, 4):
        for d in two_square_decompositions(N):
            for k in range(1, 10, 2):
                P, Q = eval_pq_identities(d.g, d.h, k)
                assert P * P + Q * Q == 2 * N**k
