"""Jacobi-symbol parity certificates.

For a qualifying instance, any solution of x^2 + b^y = c^z satisfies

    x^2 = -b^y (mod c)        so  1 = (-1/c) (b/c)^y   and y is even,
    x^2 =  c^z (mod b)        so  1 = (c/b)^z          and z is even.

Writing y = 2r, z = 2k, the legs u, v of the primitive triple
(x, b^r, c^k) satisfy 2u^2 = b^r + c^k and 2v^2 = c^k - b^r, hence

    2u^2 = b^r (mod c)        so  (2/c) = (b/c)^r      and r is odd,
    2v^2 = c^k (mod b)        so  (2/b) = (c/b)^k      and k is odd.

The certificate records the five symbols those steps rely on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .arith import jacobi
from .triples import TeraiInstance

__all__ = ["ParityCertificate", "parity_certificate", "EXPECTED_SYMBOLS"]

SYMBOL_NAMES = ("j_minus1_c", "j_b_c", "j_c_b", "j_2_c", "j_2_b")
EXPECTED_SYMBOLS: Tuple[int, ...] = (1, -1, -1, -1, -1)

R_K_CAVEAT = (
    "r and k odd is conditional on the leg equations "
    "2u^2 = b^r + c^k and 2v^2 = c^k - b^r of the primitive triple (x, b^r, c^k)"
)


@dataclass(frozen=True)
class ParityCertificate:
    j_minus1_c: int
    j_b_c: int
    j_c_b: int
    j_2_c: int
    j_2_b: int
    deviations: Tuple[str, ...] = field(default=())

    @property
    def symbols(self) -> Tuple[int, ...]:
        return tuple(getattr(self, name) for name in SYMBOL_NAMES)

    @property
    def valid(self) -> bool:
        return self.symbols == EXPECTED_SYMBOLS

    @property
    def y_parity(self) -> Optional[str]:
        return "even" if self.valid else None

    @property
    def z_parity(self) -> Optional[str]:
        return "even" if self.valid else None

    @property
    def r_parity(self) -> Optional[str]:
        return "odd" if self.valid else None

    @property
    def k_parity(self) -> Optional[str]:
        return "odd" if self.valid else None

    def conclusions(self) -> Dict[str, Optional[str]]:
        return {
            "y": self.y_parity,
            "z": self.z_parity,
            "r": self.r_parity,
            "k": self.k_parity,
            "caveat": R_K_CAVEAT if self.valid else None,
        }


def parity_certificate(inst: TeraiInstance) -> ParityCertificate:
    """Evaluate the five symbols for ``inst``.

    A non-qualifying instance yields ``valid == False`` with the offending
    symbols listed in ``deviations``; nothing is raised.
    """
    b, c = inst.b, inst.c
    values = (
        jacobi(-1, c),
        jacobi(b, c),
        jacobi(c, b),
        jacobi(2, c),
        jacobi(2, b),
    )
    deviations = tuple(
        f"{name}={got} (expected {want})"
        for name, got, want in zip(SYMBOL_NAMES, values, EXPECTED_SYMBOLS)
        if got != want
    )
    return ParityCertificate(*values, deviations=deviations)
