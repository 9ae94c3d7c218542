"""Replay of the descent argument for a concrete (x, y, z) = (x, 2r, 2k).

Notation: the instance gives b = pq and c = m^2 + n^2. A primitive
decomposition c = g^2 + h^2 (g odd, h even) plays the role of the
Gaussian integer alpha = g + hi, with beta its conjugate.

The legs u > v of the primitive triple (x, b^r, c^k) split u^2 - v^2 =
p^r q^r in one of two ways:

  case A:  u - v = 1,    u + v = (pq)^r   =>  2 c^k = (pq)^(2r) + 1
  case B:  u - v = q^r,  u + v = p^r      =>  p^(2r) + q^(2r) = 2 c^k
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .arith import as_perfect_square, power_exponent_of
from .gaussint import (
    GaussianInt,
    TwoSquares,
    eval_pq_identities,
    g_pow,
    two_square_decompositions,
)
from .triples import TeraiInstance

__all__ = [
    "DescentError",
    "CaseScanRow",
    "FilterResult",
    "ASumResult",
    "KConclusion",
    "DescentTrace",
    "legs_from_solution",
    "case_a_check",
    "case_b_check",
    "scan_cases",
    "divisibility_filter",
    "surviving_decompositions",
    "a_sum_congruence",
    "alpha_beta_check",
    "k_divisibility_conclusion",
    "descent_trace",
    "THEOREM_CONSISTENT",
]

THEOREM_CONSISTENT = "theorem-consistent"


class DescentError(ValueError):
    """A descent step failed; ``step`` names which one."""

    def __init__(self, step: str, message: str):
        super().__init__(f"[{step}] {message}")
        self.step = step


def _require_odd(**values: int) -> None:
    for name, value in values.items():
        if value < 1 or value % 2 == 0:
            raise ValueError(f"{name} must be odd and >= 1, got {value}")


def legs_from_solution(inst: TeraiInstance, x: int, r: int, k: int) -> Tuple[int, int]:
    """Legs (u, v) with x = 2uv, b^r = u^2 - v^2, c^k = u^2 + v^2."""
    br, ck = inst.b**r, inst.c**k
    if x < 1 or x * x + br * br != ck * ck:
        raise DescentError("legs", f"x={x}, r={r}, k={k} does not solve x^2 + b^(2r) = c^(2k)")
    two_u2, two_v2 = ck + br, ck - br
    u = as_perfect_square(two_u2 // 2) if two_u2 % 2 == 0 else None
    v = as_perfect_square(two_v2 // 2) if two_v2 % 2 == 0 else None
    if u is None or v is None:
        raise DescentError("legs", "(c^k +/- b^r)/2 is not a pair of perfect squares")
    if 2 * u * v != x or not u > v >= 1:
        raise DescentError("legs", f"legs u={u}, v={v} do not reproduce x={x}")
    return u, v


def case_a_check(inst: TeraiInstance, r: int, k: int) -> bool:
    _require_odd(r=r, k=k)
    return 2 * inst.c**k == (inst.p * inst.q) ** (2 * r) + 1


def case_b_check(inst: TeraiInstance, r: int, k: int) -> bool:
    _require_odd(r=r, k=k)
    return inst.p ** (2 * r) + inst.q ** (2 * r) == 2 * inst.c**k


@dataclass(frozen=True)
class CaseScanRow:
    r: int
    k: int
    case_a_holds: bool
    case_b_holds: bool

    def as_list(self) -> list:
        return [self.r, self.k, self.case_a_holds, self.case_b_holds]


def scan_cases(inst: TeraiInstance, r_max: int, k_max: int) -> List[CaseScanRow]:
    """Case A/B over every odd (r, k) <= (r_max, k_max).

    Even exponents are skipped: the parity certificate excludes them.
    """
    if r_max < 1 or k_max < 1:
        raise ValueError("r_max and k_max must be >= 1")
    b2 = inst.b * inst.b
    p2, q2 = inst.p**2, inst.q**2
    c2 = inst.c**2
    rows = []
    # Powers advance by squares along the odd grid.
    b_pow, p_pow, q_pow = b2, p2, q2  # (pq)^(2r), p^(2r), q^(2r) at r = 1
    for r in range(1, r_max + 1, 2):
        two_ck = 2 * inst.c
        for k in range(1, k_max + 1, 2):
            rows.append(CaseScanRow(r, k, two_ck == b_pow + 1, p_pow + q_pow == two_ck))
            two_ck *= c2
        b_pow *= b2 * b2
        p_pow *= p2 * p2
        q_pow *= q2 * q2
    return rows


@dataclass(frozen=True)
class FilterResult:
    epsilon: int
    t1: int
    t2: int


def divisibility_filter(
    inst: TeraiInstance, dec: TwoSquares, r: int, k: int
) -> Optional[FilterResult]:
    """Match a decomposition against |g + eps h| = p^t1, |g - eps h| = q^t2.

    k = 1 (mod 4) gives eps = +1 (g+h | p^r, g-h | q^r); k = 3 (mod 4)
    swaps the roles, eps = -1. Returns None when the decomposition cannot
    be the one the descent produces.
    """
    _require_odd(r=r, k=k)
    if dec.N != inst.c:
        raise ValueError(f"decomposition of {dec.N} does not match c = {inst.c}")
    eps = 1 if k % 4 == 1 else -1
    t1 = power_exponent_of(abs(dec.g + eps * dec.h), inst.p)
    t2 = power_exponent_of(abs(dec.g - eps * dec.h), inst.q)
    if t1 is None or t2 is None or t1 > r or t2 > r:
        return None
    return FilterResult(eps, t1, t2)


def surviving_decompositions(
    inst: TeraiInstance, r: int, k: int
) -> List[Tuple[TwoSquares, FilterResult]]:
    survivors = []
    for dec in two_square_decompositions(inst.c):
        res = divisibility_filter(inst, dec, r, k)
        if res is not None:
            survivors.append((dec, res))
    return survivors


@dataclass(frozen=True)
class ASumResult:
    A: int
    rhs: int
    a_mod_b: int
    rhs_mod_b: int
    sign: int  # +1 if A = rhs, -1 if A = -rhs (mod b), 0 if neither

    @property
    def match_up_to_sign(self) -> bool:
        return self.sign != 0


def a_sum_congruence(inst: TeraiInstance, dec: TwoSquares, k: int) -> ASumResult:
    """Compare A = sum_j (alpha^2)^(k-1-j) (-beta^2)^j with k 2^(k-1) (mn)^(k-1) mod b.

    The congruence holds only up to a sign (i^(k-1) = (-1)^((k-1)/2)),
    so the sign actually observed is returned.
    """
    _require_odd(k=k)
    a2 = g_pow(dec.alpha, 2)
    minus_b2 = -g_pow(dec.beta, 2)
    a_pows = [GaussianInt(1, 0)]
    for _ in range(k - 1):
        a_pows.append(a_pows[-1] * a2)
    total = GaussianInt(0, 0)
    b_pow = GaussianInt(1, 0)
    for j in range(k):
        total = total + a_pows[k - 1 - j] * b_pow
        b_pow = b_pow * minus_b2
    if total.im:
        raise ArithmeticError(f"A = {total} is not rational")
    b = inst.b
    A = total.re
    rhs = k * 2 ** (k - 1) * inst.mn ** (k - 1)
    if (A - rhs) % b == 0:
        sign = 1
    elif (A + rhs) % b == 0:
        sign = -1
    else:
        sign = 0
    return ASumResult(A, rhs, A % b, rhs % b, sign)


def alpha_beta_check(inst: TeraiInstance, dec: TwoSquares, r: int, k: int) -> bool:
    """2 (alpha^(2k) + beta^(2k)) == +/- 4 b^r."""
    a2k = g_pow(dec.alpha, 2 * k)
    lhs = 2 * (a2k + a2k.conjugate()).re
    return abs(lhs) == 4 * inst.b**r


@dataclass(frozen=True)
class KConclusion:
    branch: str  # "base-case", "contradiction" or "oracle"
    text: str
    a_prime: Optional[int] = None
    # For the oracle branch: 2 * (c^power_of_c)^p = p^(2r) + q^(2r).
    power_of_c: Optional[int] = None


def k_divisibility_conclusion(inst: TeraiInstance, r: int, k: int) -> KConclusion:
    """Where the b | k argument leaves a hypothetical (r, k)."""
    _require_odd(r=r, k=k)
    if r == 1 or k == 1:
        return KConclusion("base-case", "base-case branch")
    b = inst.b
    if k % b:
        return KConclusion("contradiction", f"contradiction: b must divide k, but {b} does not divide {k}")
    a_prime = k // b
    power = inst.q * a_prime
    text = (
        f"oracle branch: a' = {a_prime}, "
        f"2*({inst.c}^{power})^{inst.p} = {inst.p}^{2 * r} + {inst.q}^{2 * r}"
    )
    return KConclusion("oracle", text, a_prime, power)


@dataclass
class DescentTrace:
    instance: TeraiInstance
    solution: Tuple[int, int, int]
    r: int
    k: int
    legs: Tuple[int, int]
    case_tag: str  # "A", "B" or "none"
    decompositions: List[TwoSquares]
    survivors: List[TwoSquares]
    chosen: Optional[TwoSquares] = None
    epsilon: Optional[int] = None
    t1: Optional[int] = None
    t2: Optional[int] = None
    P: Optional[int] = None
    Q: Optional[int] = None
    conclusion: Optional[KConclusion] = None
    identity_checks: List[Tuple[str, bool]] = field(default_factory=list)
    verdict: str = ""

    @property
    def consistent(self) -> bool:
        return self.verdict == THEOREM_CONSISTENT

    def as_dict(self) -> dict:
        def pair(dec):
            return None if dec is None else [dec.g, dec.h]

        return {
            "instance": self.instance.as_dict(),
            "solution": list(self.solution),
            "r": self.r,
            "k": self.k,
            "legs": list(self.legs),
            "case": self.case_tag,
            "decompositions": [pair(d) for d in self.decompositions],
            "survivors": [pair(d) for d in self.survivors],
            "chosen": pair(self.chosen),
            "epsilon": self.epsilon,
            "t1": self.t1,
            "t2": self.t2,
            "P": self.P,
            "Q": self.Q,
            "conclusion": None if self.conclusion is None else self.conclusion.text,
            "identity_checks": [[name, ok] for name, ok in self.identity_checks],
            "verdict": self.verdict,
        }


def descent_trace(inst: TeraiInstance, x: int, y: int, z: int) -> DescentTrace:
    """Run every descent step on the solution (x, y, z) of x^2 + b^y = c^z."""
    if x < 1 or x * x + inst.b**y != inst.c**z:
        raise DescentError("precondition", f"({x}, {y}, {z}) is not a solution")
    if y % 2 or z % 2:
        raise DescentError("precondition", f"y={y} and z={z} must both be even")
    r, k = y // 2, z // 2
    u, v = legs_from_solution(inst, x, r, k)

    p_r, q_r = inst.p**r, inst.q**r
    if u - v == 1 and u + v == p_r * q_r:
        case_tag = "A"
    elif u + v == p_r and u - v == q_r:
        case_tag = "B"
    else:
        case_tag = "none"

    checks: List[Tuple[str, bool]] = [
        ("r odd", r % 2 == 1),
        ("k odd", k % 2 == 1),
        ("u, v opposite parity", (u - v) % 2 == 1),
    ]
    decs = two_square_decompositions(inst.c)
    trace = DescentTrace(inst, (x, y, z), r, k, (u, v), case_tag, decs, [])
    if r % 2 and k % 2:
        checks.append(("case A equation false", not case_a_check(inst, r, k)))
        checks.append(("case B equation", case_b_check(inst, r, k)))
        survivors = surviving_decompositions(inst, r, k)
        trace.survivors = [dec for dec, _ in survivors]
        checks.append(("exactly one surviving decomposition", len(survivors) == 1))
        if len(survivors) == 1:
            dec, res = survivors[0]
            trace.chosen = dec
            trace.epsilon, trace.t1, trace.t2 = res.epsilon, res.t1, res.t2
            P, Q = eval_pq_identities(dec.g, dec.h, k)
            trace.P, trace.Q = P, Q
            checks.append(("|P| = p^r", abs(P) == p_r))
            checks.append(("|Q| = q^r", abs(Q) == q_r))
            checks.append(("t1 = t2 = 1", res.t1 == 1 and res.t2 == 1))
            checks.append(("g*h = m*n", dec.g * dec.h == inst.mn))
            checks.append(("2(alpha^2k + beta^2k) = +/-4 b^r", alpha_beta_check(inst, dec, r, k)))
        trace.conclusion = k_divisibility_conclusion(inst, r, k)
        checks.append(("conclusion is base case", trace.conclusion.branch == "base-case"))
    trace.identity_checks = checks

    failed = [name for name, ok in checks if not ok]
    if failed:
        trace.verdict = "VIOLATION: failed " + ", ".join(failed)
    elif case_tag != "B":
        trace.verdict = f"VIOLATION: case {case_tag}"
    elif (x, y, z) != inst.expected_solution:
        trace.verdict = f"VIOLATION: solution {(x, y, z)} differs from {inst.expected_solution}"
    else:
        trace.verdict = THEOREM_CONSISTENT
    return trace
