"""Gaussian integers and primitive sum-of-two-squares representations."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import List, Tuple

from .arith import as_perfect_square, isqrt

__all__ = [
    "GaussianInt",
    "TwoSquares",
    "g_mul",
    "g_pow",
    "two_square_decompositions",
    "eval_pq_identities",
    "EXHAUSTIVE_LIMIT",
]

# Above this bound decompositions switch from a direct scan to Cornacchia.
EXHAUSTIVE_LIMIT = 10**6


@dataclass(frozen=True)
class GaussianInt:
    re: int
    im: int = 0

    def __add__(self, other: "GaussianInt | int") -> "GaussianInt":
        other = _coerce(other)
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other: "GaussianInt | int") -> "GaussianInt":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "GaussianInt":
        return _coerce(other) - self

    def __mul__(self, other: "GaussianInt | int") -> "GaussianInt":
        return g_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "GaussianInt":
        return g_pow(self, k)

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_rational(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


def _coerce(z: "GaussianInt | int") -> GaussianInt:
    return z if isinstance(z, GaussianInt) else GaussianInt(int(z), 0)


ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)


def g_mul(z: GaussianInt, w: GaussianInt) -> GaussianInt:
    return GaussianInt(z.re * w.re - z.im * w.im, z.re * w.im + z.im * w.re)


def g_pow(z: GaussianInt, k: int) -> GaussianInt:
    """z**k by square-and-multiply; k must be >= 0."""
    if k < 0:
        raise ValueError("negative exponent in the Gaussian integers")
    result = ONE
    base = z
    while k:
        if k & 1:
            result = g_mul(result, base)
        base = g_mul(base, base)
        k >>= 1
    return result


@dataclass(frozen=True, order=True)
class TwoSquares:
    """N = g**2 + h**2 with gcd(g, h) == 1, g odd and h even."""

    g: int
    h: int
    N: int

    def __post_init__(self) -> None:
        if self.g * self.g + self.h * self.h != self.N:
            raise ValueError(f"{self.g}^2 + {self.h}^2 != {self.N}")
        if self.g < 1 or self.h < 1 or self.h % 2 or gcd(self.g, self.h) != 1:
            raise ValueError(f"({self.g}, {self.h}) is not a primitive odd/even pair")

    @property
    def alpha(self) -> GaussianInt:
        return GaussianInt(self.g, self.h)

    @property
    def beta(self) -> GaussianInt:
        return GaussianInt(self.g, -self.h)


def _from_pair(x: int, y: int, N: int) -> TwoSquares:
    g, h = (x, y) if x % 2 else (y, x)
    return TwoSquares(g, h, N)


def _decompose_exhaustive(N: int) -> List[TwoSquares]:
    out = []
    for g in range(1, isqrt(N) + 1, 2):
        h = as_perfect_square(N - g * g)
        if h and h % 2 == 0 and gcd(g, h) == 1:
            out.append(TwoSquares(g, h, N))
    return out


def _sqrt_minus_one_mod_prime(p: int, rng: random.Random) -> int:
    # For p = 1 (mod 4): a non-residue a gives a**((p-1)/4) as a root of -1.
    while True:
        a = rng.randrange(2, p - 1)
        r = pow(a, (p - 1) // 4, p)
        if r * r % p == p - 1:
            return r


def _sqrt_minus_one_mod_prime_power(p: int, e: int, rng: random.Random) -> int:
    r = _sqrt_minus_one_mod_prime(p, rng)
    mod = p
    for _ in range(e - 1):
        mod *= p
        # Hensel step: r <- r - (r^2 + 1) / (2r)
        r = (r - (r * r + 1) * pow(2 * r, -1, mod)) % mod
    return r


def _cornacchia(N: int, root: int) -> Tuple[int, int]:
    """Solve x^2 + y^2 = N given root**2 = -1 (mod N)."""
    a, b = N, root
    limit = isqrt(N)
    while b > limit:
        a, b = b, a % b
    y = as_perfect_square(N - b * b)
    if y is None:
        raise ArithmeticError(f"Cornacchia failed for N={N}, root={root}")
    return b, y


def _decompose_cornacchia(N: int) -> List[TwoSquares]:
    from sympy import factorint
    from sympy.ntheory.modular import crt

    factors = factorint(N)
    if any(p % 4 != 1 for p in factors):
        return []
    rng = random.Random(N)
    moduli = [p**e for p, e in factors.items()]
    base_roots = [
        _sqrt_minus_one_mod_prime_power(p, e, rng) for p, e in factors.items()
    ]
    found = set()
    # Fixing the sign of the first root covers each +/- root pair once.
    for mask in range(1 << max(len(moduli) - 1, 0)):
        residues = [base_roots[0]]
        for j, (r, mod) in enumerate(zip(base_roots[1:], moduli[1:])):
            residues.append(mod - r if mask >> j & 1 else r)
        root = int(crt(moduli, residues)[0])
        x, y = _cornacchia(N, root)
        found.add(_from_pair(x, y, N))
    return sorted(found)


def two_square_decompositions(
    N: int, exhaustive_limit: int = EXHAUSTIVE_LIMIT
) -> List[TwoSquares]:
    """All primitive N = g^2 + h^2 with g odd, h even, sorted by g."""
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    if N % 4 != 1:
        return []
    if N <= exhaustive_limit:
        return _decompose_exhaustive(N)
    return _decompose_cornacchia(N)


def eval_pq_identities(g: int, h: int, k: int) -> Tuple[int, int]:
    """Halved right-hand sides of the two (1 -/+ i) identities.

    P = ((g+hi)^k (1-i) + (g-hi)^k (1+i)) / 2
    Q = ((g+hi)^k (1+i) + (g-hi)^k (1-i)) / 2

    For odd k both sums are rational; an imaginary remainder raises.
    """
    if k % 2 == 0:
        raise ValueError(f"k must be odd, got {k}")
    alpha_k = g_pow(GaussianInt(g, h), k)
    beta_k = alpha_k.conjugate()
    one_minus_i = GaussianInt(1, -1)
    one_plus_i = GaussianInt(1, 1)
    two_p = alpha_k * one_minus_i + beta_k * one_plus_i
    two_q = alpha_k * one_plus_i + beta_k * one_minus_i
    if two_p.im or two_q.im:
        raise ArithmeticError(f"non-real identity values {two_p}, {two_q}")
    return two_p.re // 2, two_q.re // 2
