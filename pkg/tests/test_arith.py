import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from terai.arith import (
    DETERMINISTIC_PRIME_LIMIT,
    as_perfect_square,
    is_prime,
    isqrt,
    jacobi,
    power_exponent_of,
)

from brute import jacobi_by_squares, trial_division_prime

ODD_MODULI = range(1, 202, 2)


@pytest.mark.parametrize(
    "a, n, expected",
    [(2, 5, -1), (21, 29, -1), (1, 9, 1), (6, 3, 0)],
)
def test_jacobi_examples(a, n, expected):
    assert jacobi(a, n) == expected


def test_jacobi_21_29_by_squares():
    assert 21 not in {x * x % 29 for x in range(29)}


@pytest.mark.parametrize("n", [0, 2, 10, -3])
def test_jacobi_rejects_bad_modulus(n):
    with pytest.raises(ValueError):
        jacobi(3, n)


def test_jacobi_matches_residue_oracle_exhaustively():
    for n in ODD_MODULI:
        for a in range(n):
            assert jacobi(a, n) == jacobi_by_squares(a, n), (a, n)


def test_jacobi_multiplicative_exhaustively():
    for n in ODD_MODULI:
        values = [jacobi(a, n) for a in range(n)]
        for a in range(n):
            for b in range(n):
                assert values[a * b % n] == values[a] * values[b]


def test_jacobi_supplements():
    for n in ODD_MODULI:
        assert (jacobi(2, n) == -1) == (n % 8 in (3, 5))
        if n > 1:
            assert (jacobi(-1, n) == 1) == (n % 4 == 1)


def test_jacobi_negative_argument():
    for n in ODD_MODULI:
        for a in range(1, 40):
            assert jacobi(-a, n) == jacobi(-1, n) * jacobi(a, n)
            assert jacobi(-a, n) == jacobi(n - a % n, n)


def test_jacobi_large_composite():
    p, q = 2**127 - 1, 2**89 - 1
    for a in (3, 5, 12345678901234567):
        assert jacobi(a, p * q) == jacobi(a, p) * jacobi(a, q)
        # Euler's criterion for the prime factor.
        assert pow(a, (p - 1) // 2, p) == jacobi(a, p) % p


@pytest.mark.parametrize("n, root", [(1369, 37), (2, 1), (0, 0), (1, 1), (3, 1), (4, 2)])
def test_isqrt_examples(n, root):
    assert isqrt(n) == root


@settings(max_examples=500)
@given(st.integers(min_value=0, max_value=10**100))
def test_isqrt_bracket(n):
    r = isqrt(n)
    assert r * r <= n < (r + 1) ** 2


def test_isqrt_huge_and_near_squares():
    for k in (10**150, 3**700, 2**1000 + 12345):
        for n in (k * k - 1, k * k, k * k + 1):
            assert isqrt(n) == math.isqrt(n)


def test_isqrt_negative():
    with pytest.raises(ValueError):
        isqrt(-1)


@pytest.mark.parametrize("n, expected", [(144, 12), (148, None), (0, 0), (1, 1), (-4, None)])
def test_as_perfect_square_examples(n, expected):
    assert as_perfect_square(n) == expected


def test_as_perfect_square_round_trip():
    for k in range(10**4 + 1):
        assert as_perfect_square(k * k) == k
        if k > 1:
            assert as_perfect_square(k * k + 1) is None


@pytest.mark.parametrize("n, expected", [(7, True), (85, False), (239, True), (1, False), (0, False), (2, True)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_trial_division():
    for n in range(5000):
        assert is_prime(n) == trial_division_prime(n), n


@pytest.mark.parametrize(
    "n, expected",
    [
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3825123056546413051, False),  # strong pseudoprime to bases up to 23
        (2**61 - 1, True),
        (2**89 - 1, True),
        ((2**61 - 1) * (2**31 - 1), False),
    ],
)
def test_is_prime_hard_cases(n, expected):
    assert is_prime(n) is expected


def test_is_prime_above_deterministic_limit():
    assert DETERMINISTIC_PRIME_LIMIT < 2**127 - 1
    assert is_prime(2**127 - 1)
    assert not is_prime((2**127 - 1) * (2**89 - 1))
    assert is_prime(2**521 - 1, rounds=4)


@pytest.mark.parametrize("N, base, expected", [(841, 29, 2), (59189, 29, None), (1, 29, 0), (0, 29, None), (1024, 2, 10)])
def test_power_exponent_of(N, base, expected):
    assert power_exponent_of(N, base) == expected


def test_59189_factorization():
    assert 59189 == 29 * 2041 and 2041 % 29 != 0


def test_power_exponent_of_rejects_small_base():
    with pytest.raises(ValueError):
        power_exponent_of(8, 1)
