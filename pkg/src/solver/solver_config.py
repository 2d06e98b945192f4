from dataclasses import dataclass
from typing import Optional
from src.utils.config import SOLVER_MAX_BUDGET, SOLVER_MAX_STATES, TABLE_DIR


@dataclass
class SolverConfig:
    """Configuration for ExactSolver"""
    max_states: int = SOLVER_MAX_STATES
    max_budget: int = SOLVER_MAX_BUDGET
    use_memo: bool = True
    table_dir: Optional[str] = None

    def __post_init__(self):
        if self.table_dir is None:
            self.table_dir = TABLE_DIR
        if self.max_budget < 0 or self.max_states < 1:
            raise ValueError(f"Invalid solver limits: budget={self.max_budget} states={self.max_states}")
