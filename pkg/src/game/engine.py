from enum import Enum
from dataclasses import dataclass, field
from typing import List, Optional, Protocol, Tuple
from src.log.logger import setup_logger
from src.graph.colored_graph import Color, ColoredGraph, Edge
from src.graph.paths import has_blue_path_of_order, has_red_path_of_order
from src.utils.errors import CorruptTrace, IllegalBuilderMove, RamseyError

logger = setup_logger('GAME ENGINE')


@dataclass(frozen=True)
class GameConfig:
    """Red P_{red_order} against blue P_{blue_order} within `budget` rounds."""
    blue_order: int
    budget: int
    red_order: int = 4

    def __post_init__(self):
        if self.red_order < 2 or self.blue_order < 2:
            raise ValueError(f"Target orders must be at least 2, got red={self.red_order} blue={self.blue_order}")
        if self.budget < 1:
            raise ValueError(f"Budget must be positive, got {self.budget}")


class StatusKind(Enum):
    ONGOING = 'ongoing'
    RED_WIN = 'red-win'
    BLUE_WIN = 'blue-win'
    BUDGET_EXCEEDED = 'budget-exceeded'


@dataclass(frozen=True)
class GameStatus:
    kind: StatusKind
    round: Optional[int] = None

    @property
    def finished(self) -> bool:
        return self.kind is not StatusKind.ONGOING

    @property
    def won(self) -> bool:
        return self.kind in (StatusKind.RED_WIN, StatusKind.BLUE_WIN)

    def __str__(self) -> str:
        return self.kind.value if self.round is None else f"{self.kind.value} {self.round}"

    @classmethod
    def parse(cls, text: str) -> 'GameStatus':
        parts = text.split()
        try:
            kind = StatusKind(parts[0])
            rnd = int(parts[1]) if len(parts) > 1 else None
        except (IndexError, ValueError) as exc:
            raise CorruptTrace(f"Bad status line: {text!r}") from exc
        return cls(kind, rnd)


ONGOING = GameStatus(StatusKind.ONGOING)


@dataclass(frozen=True)
class RoundRecord:
    index: int
    u: int
    v: int
    color: Color

    @property
    def edge(self) -> Edge:
        return (self.u, self.v)


@dataclass
class GameTrace:
    config: GameConfig
    rounds: List[RoundRecord] = field(default_factory=list)
    status: GameStatus = ONGOING

    @property
    def colors(self) -> Tuple[Color, ...]:
        return tuple(r.color for r in self.rounds)

    def board(self) -> ColoredGraph:
        """Final board rebuilt from the recorded rounds."""
        g = ColoredGraph.empty()
        for r in self.rounds:
            g = g.ensure_vertices(max(r.u, r.v)).add_edge(r.u, r.v, r.color)
        return g


class Builder(Protocol):
    def reset(self) -> None: ...

    def next_edge(self, board: ColoredGraph, last_color: Optional[Color]) -> Edge: ...


class Painter(Protocol):
    def reset(self) -> None: ...

    def color(self, board: ColoredGraph, edge: Edge) -> Color: ...


def status(g: ColoredGraph, cfg: GameConfig, rounds_used: int) -> GameStatus:
    """
    Status of a board after `rounds_used` rounds. A red target wins over a blue
    one if both are present.
    """
    if has_red_path_of_order(g, cfg.red_order):
        return GameStatus(StatusKind.RED_WIN, rounds_used)
    if has_blue_path_of_order(g, cfg.blue_order):
        return GameStatus(StatusKind.BLUE_WIN, rounds_used)
    if rounds_used >= cfg.budget:
        return GameStatus(StatusKind.BUDGET_EXCEEDED)
    return ONGOING


def status_after(g: ColoredGraph, cfg: GameConfig, rounds_used: int, color: Color) -> GameStatus:
    # only the target of the color just painted can have appeared
    if color is Color.RED and has_red_path_of_order(g, cfg.red_order):
        return GameStatus(StatusKind.RED_WIN, rounds_used)
    if color is Color.BLUE and has_blue_path_of_order(g, cfg.blue_order):
        return GameStatus(StatusKind.BLUE_WIN, rounds_used)
    if rounds_used >= cfg.budget:
        return GameStatus(StatusKind.BUDGET_EXCEEDED)
    return ONGOING


def play_round(g: ColoredGraph, edge: Edge, color: Color) -> ColoredGraph:
    u, v = edge
    return g.ensure_vertices(max(u, v)).add_edge(u, v, color)


def run_game(builder: Builder, painter: Painter, cfg: GameConfig,
             start: Optional[ColoredGraph] = None) -> GameTrace:
    """
    Plays one game.

    Args:
        builder: The edge-drawing player.
        painter: The edge-coloring player.
        cfg: Targets and round budget.
        start: Board to play on, empty by default. Traces of games started
            elsewhere cannot be replayed.

    Returns:
        GameTrace: Every round plus the final status.
    """
    builder.reset()
    painter.reset()
    trace = GameTrace(cfg)
    board = ColoredGraph.empty() if start is None else start
    last: Optional[Color] = None
    current = status(board, cfg, 0)
    while not current.finished:
        u, v = builder.next_edge(board, last)
        if u == v or u < 0 or v < 0 or board.has_edge(u, v):
            trace.status = current
            logger.error(f"Builder proposed illegal edge {u}-{v} at round {len(trace.rounds) + 1}")
            raise IllegalBuilderMove(f"Illegal edge {u}-{v}", trace=trace)
        board = board.ensure_vertices(max(u, v))
        last = painter.color(board, (u, v))
        board = board.add_edge(u, v, last)
        trace.rounds.append(RoundRecord(len(trace.rounds) + 1, u, v, last))
        current = status_after(board, cfg, len(trace.rounds), last)
        logger.debug(f"Round {len(trace.rounds)}: {u}-{v} {last.letter} -> {current}")
    trace.status = current
    logger.info(f"Game over: {current} (blue_order={cfg.blue_order}, budget={cfg.budget})")
    return trace


def replay(trace: GameTrace) -> GameStatus:
    """Recomputes the status of a recorded game; any inconsistency raises CorruptTrace."""
    cfg = trace.config
    board = ColoredGraph.empty()
    current = status(board, cfg, 0)
    for position, r in enumerate(trace.rounds, start=1):
        if r.index != position:
            raise CorruptTrace(f"Round index {r.index} at position {position}")
        if current.finished:
            raise CorruptTrace(f"Round {position} played after the game ended ({current})")
        try:
            board = play_round(board, r.edge, r.color)
        except RamseyError as exc:
            logger.error(f"Replay failed at round {position}: {exc}")
            raise CorruptTrace(f"Round {position}: {exc}") from exc
        current = status_after(board, cfg, position, r.color)
    if current != trace.status:
        logger.error(f"Trace replays to {current}, recorded {trace.status}")
        raise CorruptTrace(f"Recorded status {trace.status} but replay gives {current}")
    return current
