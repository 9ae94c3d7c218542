"""Bounded searches standing in for the cited external results.

Each search verifies a finite window only. Reports carry that window so
a verdict reads "verified within bounds"; beyond the window the cited
result is taken on trust.

* ``cohn_search``        -- 2 z^k = y^2 + 1, k > 2 (Cohn)
* ``corollary_c_search`` -- y^q = a^2 + (a+1)^2, q odd >= 3
* ``lemma_l2_search``    -- x^2 + p^(2m) = 2 y^n, n prime > 3
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, List, Optional, Tuple

from .arith import as_perfect_square, is_prime

__all__ = [
    "OracleWindow",
    "OracleResult",
    "cohn_search",
    "consecutive_square_root",
    "corollary_c_search",
    "lemma_l2_search",
    "COHN_SPORADIC",
]

# The single non-trivial solution (y, z, k) of 2 z^k = y^2 + 1 with k > 2.
COHN_SPORADIC = (239, 13, 4)


@dataclass(frozen=True)
class OracleWindow:
    """Named search bounds for one oracle run."""

    name: str
    bounds: Tuple[Tuple[str, object], ...]

    def __post_init__(self) -> None:
        for key, value in self.bounds:
            if isinstance(value, int) and value < 1:
                raise ValueError(f"oracle bound {key} must be >= 1, got {value}")

    def as_dict(self) -> Dict[str, object]:
        return dict(self.bounds)


@dataclass(frozen=True)
class OracleResult:
    window: OracleWindow
    hits: Tuple[tuple, ...]
    unexpected: Tuple[tuple, ...]

    @property
    def as_expected(self) -> bool:
        return not self.unexpected

    def as_dict(self) -> Dict[str, object]:
        return {
            "name": self.window.name,
            "window": self.window.as_dict(),
            "hits": [list(h) for h in self.hits],
            "unexpected": [list(h) for h in self.unexpected],
        }


@lru_cache(maxsize=None)
def _cohn(k_max: int, z_max: int) -> Tuple[Tuple[int, int, int], ...]:
    hits = []
    for k in range(3, k_max + 1):
        for z in range(1, z_max + 1):
            y = as_perfect_square(2 * z**k - 1)
            if y:
                hits.append((y, z, k))
    return tuple(sorted(hits, key=lambda t: (t[2], t[1])))


def cohn_search(
    k_max: int, z_max: int, include_trivial: bool = True
) -> List[Tuple[int, int, int]]:
    """All (y, z, k) with 2 z^k = y^2 + 1, 3 <= k <= k_max, z <= z_max.

    Sorted by (k, z). ``include_trivial=False`` drops the y = z = 1 family.
    """
    if k_max < 3 or z_max < 1:
        raise ValueError("cohn_search needs k_max >= 3 and z_max >= 1")
    hits = _cohn(k_max, z_max)
    if not include_trivial:
        return [h for h in hits if h[:2] != (1, 1)]
    return list(hits)


def cohn_oracle(k_max: int, z_max: int) -> OracleResult:
    hits = cohn_search(k_max, z_max)
    unexpected = tuple(h for h in hits if h[:2] != (1, 1) and h != COHN_SPORADIC)
    window = OracleWindow("cohn", (("k_max", k_max), ("z_max", z_max)))
    return OracleResult(window, tuple(hits), unexpected)


def consecutive_square_root(N: int) -> Optional[int]:
    """Return a with N = a^2 + (a+1)^2, or None.

    N has that shape exactly when 2N - 1 = (2a+1)^2.
    """
    if N < 1:
        return None
    s = as_perfect_square(2 * N - 1)
    return None if s is None else (s - 1) // 2


@lru_cache(maxsize=None)
def _corollary_c(y_max: int, qs: Tuple[int, ...]) -> Tuple[Tuple[int, int, int], ...]:
    hits = []
    for y in range(2, y_max + 1):
        for q in qs:
            a = consecutive_square_root(y**q)
            if a:
                hits.append((y, q, a))
    return tuple(hits)


def corollary_c_search(y_max: int, q_list: Iterable[int]) -> List[Tuple[int, int, int]]:
    """All (y, q, a) with y^q = a^2 + (a+1)^2, 2 <= y <= y_max, a >= 1."""
    qs = tuple(sorted(set(q_list)))
    bad = [q for q in qs if q < 3 or q % 2 == 0]
    if bad:
        raise ValueError(f"exponents must be odd and >= 3, got {bad}")
    return list(_corollary_c(y_max, qs))


def corollary_c_oracle(y_max: int, q_list: Iterable[int]) -> OracleResult:
    qs = tuple(sorted(set(q_list)))
    hits = tuple(corollary_c_search(y_max, qs))
    window = OracleWindow("corollary-c", (("y_max", y_max), ("q_list", list(qs))))
    return OracleResult(window, hits, hits)


def lemma_l2_search(p: int, n: int, m_max: int, y_max: int) -> List[Tuple[int, int, int]]:
    """All (x, y, m) with x^2 + p^(2m) = 2 y^n, gcd(x, y) = 1, m <= m_max,
    y <= y_max, and y not a sum of two consecutive squares."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if not is_prime(n) or n <= 3:
        raise ValueError(f"n = {n} must be a prime > 3")
    hits = []
    for m in range(1, m_max + 1):
        p2m = p ** (2 * m)
        for y in range(1, y_max + 1):
            x = as_perfect_square(2 * y**n - p2m)
            if x and gcd(x, y) == 1 and consecutive_square_root(y) is None:
                hits.append((x, y, m))
    return hits


def lemma_l2_oracle(p: int, n: int, m_max: int, y_max: int) -> OracleResult:
    hits = tuple(lemma_l2_search(p, n, m_max, y_max))
    window = OracleWindow(
        "lemma-l2", (("p", p), ("n", n), ("m_max", m_max), ("y_max", y_max))
    )
    return OracleResult(window, hits, hits)
