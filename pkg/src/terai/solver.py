"""Brute-force search of x^2 + b^y = c^z and the per-instance pipeline."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from functools import partial
from math import gcd
from typing import List, Optional, Tuple

from .arith import as_perfect_square
from .descent import (
    THEOREM_CONSISTENT,
    CaseScanRow,
    DescentError,
    DescentTrace,
    descent_trace,
    k_divisibility_conclusion,
    scan_cases,
)
from .oracles import (
    OracleResult,
    OracleWindow,
    cohn_oracle,
    consecutive_square_root,
    corollary_c_oracle,
    lemma_l2_oracle,
)
from .sieve import ParityCertificate, parity_certificate
from .triples import (
    HypothesisReport,
    InstanceError,
    TeraiInstance,
    check_hypotheses,
    scan_instances,
)

__all__ = [
    "SolutionRecord",
    "Bounds",
    "VerificationReport",
    "find_solutions",
    "verify_instance",
    "verify_range",
    "VIOLATION",
    "INCONCLUSIVE",
]

VIOLATION = "VIOLATION"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True, order=True)
class SolutionRecord:
    x: int
    y: int
    z: int

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.x, self.y, self.z)


def find_solutions(b: int, c: int, y_max: int, z_max: int) -> List[SolutionRecord]:
    """Every (x, y, z) with x >= 1, y <= y_max, z <= z_max, sorted by (z, y)."""
    if b < 2 or c < 2:
        raise ValueError(f"need b, c >= 2, got b={b}, c={c}")
    if gcd(b, c) != 1:
        raise ValueError(f"gcd(b, c) = {gcd(b, c)}, need coprime b and c")
    if y_max < 1 or z_max < 1:
        raise ValueError("y_max and z_max must be >= 1")
    out = []
    cz = 1
    for z in range(1, z_max + 1):
        cz *= c
        by = 1
        for y in range(1, y_max + 1):
            by *= b
            if by >= cz:
                break
            x = as_perfect_square(cz - by)
            if x is not None:
                rec = SolutionRecord(x, y, z)
                assert x * x + b**y == c**z, rec
                out.append(rec)
    return out


@dataclass(frozen=True)
class Bounds:
    y_max: int = 40
    z_max: int = 40
    r_max: int = 15
    k_max: int = 15
    cohn_k_max: int = 10
    cohn_z_max: int = 1000
    corollary_y_max: int = 500
    corollary_q: Tuple[int, ...] = (3, 5, 7, 9, 11)
    l2_m_max: int = 4
    l2_y_max: int = 200

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            values = value if isinstance(value, tuple) else (value,)
            if any(v < 1 for v in values):
                raise ValueError(f"bound {f.name} must be positive, got {value}")

    def below_defaults(self) -> List[str]:
        """Names of the scalar bounds set below their default."""
        return [
            f.name
            for f in fields(self)
            if isinstance(f.default, int) and getattr(self, f.name) < f.default
        ]

    def as_dict(self) -> dict:
        d = asdict(self)
        d["corollary_q"] = list(self.corollary_q)
        return d


@dataclass
class VerificationReport:
    instance: TeraiInstance
    bounds: Bounds
    hypotheses: HypothesisReport
    parity: Optional[ParityCertificate] = None
    case_scan: List[CaseScanRow] = field(default_factory=list)
    solutions: List[SolutionRecord] = field(default_factory=list)
    traces: List[DescentTrace] = field(default_factory=list)
    oracles: List[OracleResult] = field(default_factory=list)
    violations: List[str] = field(default_factory=list)
    verdict: str = INCONCLUSIVE
    elapsed_ms: int = 0

    @property
    def consistent(self) -> bool:
        return self.verdict == THEOREM_CONSISTENT

    def as_dict(self) -> dict:
        parity = None
        if self.parity is not None:
            parity = {
                "symbols": dict(
                    zip(
                        ("j_minus1_c", "j_b_c", "j_c_b", "j_2_c", "j_2_b"),
                        self.parity.symbols,
                    )
                ),
                "valid": self.parity.valid,
                "conclusions": self.parity.conclusions(),
                "deviations": list(self.parity.deviations),
            }
        return {
            "instance": self.instance.as_dict(),
            "bounds": self.bounds.as_dict(),
            "hypotheses": self.hypotheses.as_dict(),
            "parity": parity,
            "case_scan": [row.as_list() for row in self.case_scan],
            "solutions": [list(s.as_tuple()) for s in self.solutions],
            "traces": [t.as_dict() for t in self.traces],
            "oracles": [o.as_dict() for o in self.oracles],
            "violations": list(self.violations),
            "verdict": self.verdict,
            "elapsed_ms": self.elapsed_ms,
        }


def _oracle_branch_check(inst: TeraiInstance, row: CaseScanRow) -> Optional[OracleResult]:
    concl = k_divisibility_conclusion(inst, row.r, row.k)
    if concl.branch != "oracle":
        return None
    y = inst.c**concl.power_of_c
    hits = []
    a = consecutive_square_root(y)
    if a is not None:
        hits.append(("consecutive-squares", a))
    if row.case_b_holds:
        hits.append(("equation-holds", row.r, row.k))
    window = OracleWindow(
        "oracle-branch", (("r", row.r), ("k", row.k), ("a_prime", concl.a_prime))
    )
    return OracleResult(window, tuple(hits), tuple(hits))


def verify_instance(inst: TeraiInstance, bounds: Bounds = Bounds()) -> VerificationReport:
    """Run every check on one qualifying instance and aggregate a verdict.

    Raises InstanceError when the instance does not meet the hypotheses;
    every later failure is recorded as a violation instead.
    """
    start = time.perf_counter()
    hyp = check_hypotheses(inst)
    if not hyp.qualifies:
        raise InstanceError(
            f"({inst.m}, {inst.n}) fails hypotheses: {', '.join(hyp.failures())}"
        )
    report = VerificationReport(inst, bounds, hyp)
    violations = report.violations

    report.parity = parity_certificate(inst)
    if not report.parity.valid:
        violations.append("parity: " + "; ".join(report.parity.deviations))

    report.case_scan = scan_cases(inst, bounds.r_max, bounds.k_max)
    for row in report.case_scan:
        if row.case_a_holds:
            violations.append(f"case-scan: case A holds at r={row.r}, k={row.k}")
        if row.case_b_holds and (row.r, row.k) != (1, 1):
            violations.append(f"case-scan: case B holds at r={row.r}, k={row.k}")
        branch = _oracle_branch_check(inst, row)
        if branch is not None:
            report.oracles.append(branch)

    report.solutions = find_solutions(inst.b, inst.c, bounds.y_max, bounds.z_max)
    expected = inst.expected_solution
    for sol in report.solutions:
        if sol.as_tuple() != expected:
            violations.append(f"solver: unexpected solution {sol.as_tuple()}")
    if bounds.y_max >= 2 and bounds.z_max >= 2:
        if SolutionRecord(*expected) not in report.solutions:
            violations.append(f"solver: expected solution {expected} not found")

    for sol in report.solutions:
        try:
            trace = descent_trace(inst, *sol.as_tuple())
        except DescentError as exc:
            violations.append(f"descent[{exc.step}]: {exc}")
            continue
        report.traces.append(trace)
        if not trace.consistent:
            violations.append(f"descent: {trace.verdict}")

    report.oracles.append(cohn_oracle(bounds.cohn_k_max, bounds.cohn_z_max))
    report.oracles.append(corollary_c_oracle(bounds.corollary_y_max, bounds.corollary_q))
    report.oracles.append(lemma_l2_oracle(inst.q, inst.p, bounds.l2_m_max, bounds.l2_y_max))
    for res in report.oracles:
        if not res.as_expected:
            violations.append(f"oracle {res.window.name}: unexpected hits {list(res.unexpected)}")

    if violations:
        report.verdict = VIOLATION
    elif bounds.below_defaults():
        report.verdict = INCONCLUSIVE
    else:
        report.verdict = THEOREM_CONSISTENT
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


def verify_range(m_max: int, bounds: Bounds = Bounds(), jobs: int = 1) -> List[VerificationReport]:
    """verify_instance over every qualifying instance with m <= m_max."""
    instances = scan_instances(m_max)
    if jobs <= 1 or len(instances) <= 1:
        return [verify_instance(inst, bounds) for inst in instances]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves input order, so the (m, n) ordering survives.
        return list(pool.map(partial(verify_instance, bounds=bounds), instances))
