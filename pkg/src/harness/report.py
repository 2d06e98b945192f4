from dataclasses import dataclass, field
from typing import List, Optional
from src.game.engine import GameTrace


@dataclass
class VerificationReport:
    """Outcome of checking that a Builder always finishes within its budget."""
    n: int
    budget: int
    mode: str
    branches: int = 0
    max_rounds: int = 0
    trials: Optional[int] = None
    seed: Optional[int] = None
    worst_trace: Optional[GameTrace] = None
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.max_rounds <= self.budget

    @property
    def verdict(self) -> str:
        return 'PASS' if self.passed else 'FAIL'

    def to_text(self) -> str:
        if self.mode == 'sampled':
            how = f"sampled ({self.trials} trials, seed {self.seed})"
        else:
            how = self.mode
        lines = [
            f"{self.verdict}: blue P{self.n} within {self.budget} rounds, {how}",
            f"  branches explored: {self.branches}",
            f"  most rounds used:  {self.max_rounds}",
        ]
        if self.worst_trace is not None:
            colors = ''.join(c.letter for c in self.worst_trace.colors)
            lines.append(f"  worst replies:     {colors or '-'} ({self.worst_trace.status})")
        for failure in self.failures[:10]:
            lines.append(f"  failure: {failure}")
        if len(self.failures) > 10:
            lines.append(f"  ... {len(self.failures) - 10} more failures")
        return '\n'.join(lines)

    def to_record(self) -> str:
        record = {
            'verdict': self.verdict,
            'n': self.n,
            'budget': self.budget,
            'mode': self.mode,
            'trials': self.trials,
            'seed': self.seed,
            'branches': self.branches,
            'max_rounds': self.max_rounds,
            'failures': len(self.failures),
        }
        if self.worst_trace is not None:
            record['worst'] = ''.join(c.letter for c in self.worst_trace.colors) or '-'
            record['worst_status'] = str(self.worst_trace.status).replace(' ', ':')
        return '\n'.join(f"{key}={value}" for key, value in record.items() if value is not None)
