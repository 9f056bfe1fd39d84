# -*- coding: utf-8 -*-
"""
Parameters of one criterion run.

The step v/10, the sector band 4v/10 + 1 .. v/2 and the factor 2 are the
defaults; they only make sense when v is a multiple of 10, otherwise the
caller has to give step and sectors.
"""

from dataclasses import dataclass, replace
from typing import List, Optional

from lattice import Lattice
from operators import DEFAULT_MAX_DENSE_DIM
from utils.errors import ValidationError


@dataclass
class CriterionConfig:
    lattice: Lattice
    betas: List[float]
    step: Optional[int] = None
    sectors: Optional[List[int]] = None
    factor: float = 2.0
    max_dim: int = DEFAULT_MAX_DENSE_DIM
    threads: int = 1

    def resolved(self) -> "CriterionConfig":
        """Copy with defaults filled in, betas sorted, everything validated"""
        v = self.lattice.v
        step, sectors = self.step, self.sectors
        if step is None or sectors is None:
            if v % 10:
                raise ValidationError(
                    f"v={v} is not divisible by 10: supply step and sectors explicitly"
                )
            if step is None:
                step = v // 10
            if sectors is None:
                sectors = list(range(4 * v // 10 + 1, v // 2 + 1))

        if not self.betas:
            raise ValidationError("betas: at least one inverse temperature is required")
        if any(b < 0 for b in self.betas):
            raise ValidationError(f"betas: values must be >= 0, got {list(self.betas)}")
        if step < 0:
            raise ValidationError(f"step: must be >= 0, got {step}")
        if not self.factor > 0:
            raise ValidationError(f"factor: must be > 0, got {self.factor}")
        sectors = sorted(set(int(i) for i in sectors))
        if not sectors:
            raise ValidationError("sectors: the sector range is empty")
        bad = [i for i in sectors if not step <= i <= v]
        if bad:
            raise ValidationError(f"sectors: {bad} outside [{step}, {v}]")

        return replace(
            self,
            betas=sorted(set(float(b) for b in self.betas)),
            step=int(step),
            sectors=sectors,
            factor=float(self.factor),
            threads=max(1, int(self.threads)),
        )
