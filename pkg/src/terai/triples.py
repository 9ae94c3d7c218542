"""Parametrized Pythagorean triples and the qualifying-instance scanner."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import gcd
from typing import Dict, List

from .arith import is_prime

__all__ = [
    "InstanceError",
    "TeraiInstance",
    "HypothesisReport",
    "make_instance",
    "check_hypotheses",
    "scan_instances",
]


class InstanceError(ValueError):
    """(m, n) does not parametrize a primitive triple, or fails the hypotheses."""


@dataclass(frozen=True)
class TeraiInstance:
    m: int
    n: int
    a: int
    b: int
    c: int
    p: int
    q: int

    @property
    def mn(self) -> int:
        return self.m * self.n

    @property
    def expected_solution(self) -> tuple:
        return (self.a, 2, 2)

    def as_dict(self) -> Dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class HypothesisReport:
    coprime: bool
    opposite_parity: bool
    c_mod8_is_5: bool
    p_prime: bool
    q_prime: bool

    @property
    def qualifies(self) -> bool:
        return all(
            (self.coprime, self.opposite_parity, self.c_mod8_is_5, self.p_prime, self.q_prime)
        )

    def failures(self) -> List[str]:
        return [name for name, ok in asdict(self).items() if not ok]

    def as_dict(self) -> Dict[str, bool]:
        d = asdict(self)
        d["qualifies"] = self.qualifies
        return d


def make_instance(m: int, n: int) -> TeraiInstance:
    if n < 1 or m <= n:
        raise InstanceError(f"need m > n >= 1, got m={m}, n={n}")
    g = gcd(m, n)
    if g != 1:
        raise InstanceError(f"gcd(m, n) = {g}, need 1")
    if (m + n) % 2 == 0:
        raise InstanceError(f"m={m} and n={n} have equal parity")
    return TeraiInstance(
        m=m,
        n=n,
        a=2 * m * n,
        b=m * m - n * n,
        c=m * m + n * n,
        p=m + n,
        q=m - n,
    )


def check_hypotheses(inst: TeraiInstance) -> HypothesisReport:
    # is_prime(1) is False, so q = 1 never qualifies.
    return HypothesisReport(
        coprime=gcd(inst.m, inst.n) == 1,
        opposite_parity=(inst.m - inst.n) % 2 == 1,
        c_mod8_is_5=inst.c % 8 == 5,
        p_prime=is_prime(inst.p),
        q_prime=is_prime(inst.q),
    )


def scan_instances(m_max: int) -> List[TeraiInstance]:
    """Every qualifying instance with m <= m_max, ordered by (m, n)."""
    if m_max < 2:
        raise ValueError(f"m_max must be >= 2, got {m_max}")
    found = []
    for m in range(2, m_max + 1):
        for n in range(1 if m % 2 == 0 else 2, m, 2):
            if gcd(m, n) != 1:
                continue
            inst = make_instance(m, n)
            if check_hypotheses(inst).qualifies:
                found.append(inst)
    return found
