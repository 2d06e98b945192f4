from typing import Optional


class RamseyError(ValueError):
    """Base class for every error raised by the laboratory."""


# graph-core
class LoopEdge(RamseyError):
    pass


class DuplicateEdge(RamseyError):
    pass


class UnknownVertex(RamseyError):
    pass


# game-engine
class IllegalBuilderMove(RamseyError):
    """A builder proposed a loop or an already drawn edge. The partial trace is attached."""

    def __init__(self, message: str, trace: Optional[object] = None) -> None:
        super().__init__(message)
        self.trace = trace


class CorruptTrace(RamseyError):
    pass


# builder-strategy
class TargetTooSmall(RamseyError):
    pass


class PlanDesync(RamseyError):
    """The board no longer matches what the builder plan expects."""


class ContractViolation(RamseyError):
    pass


# exact-solver
class BudgetTooLarge(RamseyError):
    pass


class StateTooLarge(RamseyError):
    pass


class StrategyTableError(RamseyError):
    pass


# harness
class TooLarge(RamseyError):
    pass
