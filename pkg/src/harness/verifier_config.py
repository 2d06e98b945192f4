from dataclasses import dataclass
from typing import Optional
from src.utils.config import EXHAUSTIVE_MAX_BUDGET, SPLIT_DEPTH, WORKERS


@dataclass
class VerifierConfig:
    """Configuration for exhaustive verification"""
    workers: Optional[int] = None
    split_depth: int = SPLIT_DEPTH
    max_budget: int = EXHAUSTIVE_MAX_BUDGET
    # reply trees below this budget are explored in-process
    parallel_min_budget: int = 16

    def __post_init__(self):
        if self.workers is None:
            self.workers = WORKERS
        if self.workers < 1:
            raise ValueError(f"Need at least one worker, got {self.workers}")
        if self.split_depth < 0:
            raise ValueError(f"Split depth must be non-negative, got {self.split_depth}")

    def parallel_for(self, budget: int) -> bool:
        return self.workers > 1 and budget >= self.parallel_min_budget
