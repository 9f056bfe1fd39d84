# -*- coding: utf-8 -*-
"""
Base class for all verification checks
Defines common interface and the context every check reads from
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional

from lattice import Lattice
from operators import DEFAULT_MAX_DENSE_DIM, SectorOperator, assemble_hamiltonian
from sector_basis import binomial
from spectral import KernelSplit, Spectrum, eigendecompose, kernel_split


@dataclass
class VerifyContext:
    """Lattice and parameters shared by all checks of one verify run"""

    lattice: Lattice
    step: int = 1
    betas: List[float] = field(default_factory=lambda: [0.1, 0.5, 1.0, 2.0, 5.0])
    max_dim: int = DEFAULT_MAX_DENSE_DIM
    threads: int = 1
    inject_fault: bool = False

    def __post_init__(self):
        self.hamiltonian = lru_cache(maxsize=None)(self._assemble)
        self.spectrum = lru_cache(maxsize=None)(self._eigendecompose)
        self.split = lru_cache(maxsize=None)(self._kernel_split)

    def _assemble(self, r: int) -> SectorOperator:
        return assemble_hamiltonian(self.lattice, r, self.max_dim)

    def _eigendecompose(self, r: int) -> Spectrum:
        return eigendecompose(self.hamiltonian(r), self.max_dim)

    def _kernel_split(self, i: int) -> KernelSplit:
        return kernel_split(self.lattice, i, self.step, self.max_dim, hamiltonian=self.hamiltonian(i))

    def sectors_within_cap(self) -> List[int]:
        return [r for r in range(self.lattice.v + 1) if binomial(self.lattice.v, r) <= self.max_dim]


@dataclass
class CheckResult:
    name: str
    passed: bool
    residual: float
    detail: str = ""
    skipped: bool = False

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "skipped": self.skipped,
            "residual": self.residual if math.isfinite(self.residual) else None,
            "detail": self.detail,
        }


class BaseCheck(ABC):
    """Abstract base class for one identity of the verify suite"""

    def __init__(self, name: str):
        self.name = name

    @abstractmethod
    def run(self, context: VerifyContext) -> CheckResult:
        """Evaluate the identity on context.lattice"""
        pass

    def _result(self, passed: bool, residual: float, detail: str = "") -> CheckResult:
        return CheckResult(name=self.name, passed=bool(passed), residual=float(residual), detail=detail)

    def _skip(self, detail: str) -> CheckResult:
        return CheckResult(name=self.name, passed=True, residual=0.0, detail=detail, skipped=True)

    def _sector_pairs(self, context: VerifyContext) -> List[tuple]:
        sectors = context.sectors_within_cap()
        return [(r, s) for r in sectors for s in sectors if s <= r]

    def _worst(self, values: List[float], default: float = 0.0) -> float:
        return max(values) if values else default


def describe_failures(failures: List[str], limit: Optional[int] = 5) -> str:
    if not failures:
        return ""
    shown = failures[:limit] if limit else failures
    more = f" (+{len(failures) - len(shown)} more)" if len(failures) > len(shown) else ""
    return "failed at " + ", ".join(shown) + more
