from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from ..density import Solution


class ExpansionStrategy(str, Enum):
    # most connections into the current set
    LI = "li"
    # largest increase of the minimum occurrence
    LG = "lg"


class MinerConfigModel(BaseModel):
    k: int = Field(default=3, ge=1)
    t: int = Field(default=4, ge=1)
    expansion_strategy: ExpansionStrategy = ExpansionStrategy.LG
    expansion_cap: Optional[int] = None
    max_outer_iterations: Optional[int] = Field(default=None, ge=1)

    @property
    def outer_iteration_limit(self) -> int:
        """max_outer_iterations, defaulting to 3t."""
        return self.max_outer_iterations if self.max_outer_iterations is not None else 3 * self.t

    @model_validator(mode="after")
    def check_expansion_cap(self):
        if self.expansion_cap is not None and self.expansion_cap < self.k + 1:
            raise ValueError(
                f"expansion_cap must be at least k + 1 = {self.k + 1}, got {self.expansion_cap}"
            )
        return self


@dataclass
class MinerDiagnostics:
    member_contributions: List[float] = field(default_factory=list)
    iterations: int = 0
    timings: Dict[str, float] = field(default_factory=dict)


@dataclass
class MinerOutcome:
    solution: Solution
    complete: bool
    diagnostics: MinerDiagnostics = field(default_factory=MinerDiagnostics)
