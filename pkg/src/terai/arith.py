"""Exact integer primitives: Jacobi symbol, integer square root, primality,
perfect-power detection.

Everything here works on Python ints and never touches floating point, so
results stay exact for operands of any size.
"""

from __future__ import annotations

import random
from typing import Optional

__all__ = [
    "jacobi",
    "isqrt",
    "as_perfect_square",
    "is_prime",
    "power_exponent_of",
    "DETERMINISTIC_PRIME_LIMIT",
]

# Miller-Rabin with the first 13 prime bases is exact below this bound
# (Sorenson & Webster, 2015).
DETERMINISTIC_PRIME_LIMIT = 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_SMALL_PRIMES = _MR_BASES + (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

# Quadratic residues used to reject non-squares before taking a root.
_SQUARE_FILTERS = {
    mod: frozenset(x * x % mod for x in range(mod)) for mod in (64, 63, 65, 11)
}


def jacobi(a: int, n: int) -> int:
    """Return the Jacobi symbol (a/n) for odd n >= 1.

    Uses binary quadratic reciprocity, so n never has to be factored.
    A negative ``a`` is split as (-1/n) * (|a|/n).
    """
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"jacobi modulus must be odd and positive, got {n}")
    result = 1
    if a < 0:
        a = -a
        if n % 4 == 3:
            result = -result
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def isqrt(n: int) -> int:
    """floor(sqrt(n)) by integer Newton iteration."""
    if n < 0:
        raise ValueError("isqrt of a negative number")
    if n < 2:
        return n
    # Start above the root: 2**ceil(bits/2) > sqrt(n).
    x = 1 << ((n.bit_length() + 1) // 2)
    while True:
        y = (x + n // x) // 2
        # From an over-estimate the iterates decrease strictly until they
        # reach the floor root; the first non-decrease marks convergence.
        if y >= x:
            return x
        x = y


def as_perfect_square(n: int) -> Optional[int]:
    """Return r with r*r == n, or None when n is not a perfect square."""
    if n < 0:
        return None
    for mod, residues in _SQUARE_FILTERS.items():
        if n % mod not in residues:
            return None
    r = isqrt(n)
    return r if r * r == n else None


def _miller_rabin_round(n: int, d: int, s: int, base: int) -> bool:
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int, rounds: int = 32) -> bool:
    """Primality test.

    Exact for n < DETERMINISTIC_PRIME_LIMIT (fixed witness set). Above the
    limit, ``rounds`` extra random bases are tried, for an error bound of
    at most 4**-rounds. The random bases are seeded from n, so repeated
    calls agree.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if not all(_miller_rabin_round(n, d, s, b) for b in _MR_BASES):
        return False
    if n < DETERMINISTIC_PRIME_LIMIT:
        return True
    rng = random.Random(n)
    return all(
        _miller_rabin_round(n, d, s, rng.randrange(2, n - 1)) for _ in range(rounds)
    )


def power_exponent_of(N: int, base: int) -> Optional[int]:
    """Return k with base**k == N, or None."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if N < 1:
        return None
    k = 0
    while N % base == 0:
        N //= base
        k += 1
    return k if N == 1 else None
