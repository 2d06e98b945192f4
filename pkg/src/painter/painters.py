from typing import Optional, Sequence, Union
import numpy as np
from src.log.logger import setup_logger
from src.graph.colored_graph import Color, ColoredGraph, Edge
from src.graph.paths import has_red_path_of_order, would_create_red_cycle, would_create_red_p4
from src.game.engine import GameConfig
from src.solver.solver import ExactSolver
from src.solver.solver_config import SolverConfig
from src.utils.errors import StateTooLarge

logger = setup_logger('PAINTER')

Seed = Union[int, Sequence[int], None]
MINIMAX_MAX_BLUE_ORDER = 7


def blocking_color(g: ColoredGraph, e: Edge) -> Color:
    """Red unless red would close a red P4 or a red cycle."""
    u, v = e
    if would_create_red_p4(g, u, v) or would_create_red_cycle(g, u, v):
        return Color.BLUE
    return Color.RED


class BlockingPainter:
    """Keeps the red graph a star forest; realizes the lower bound against any Builder."""
    name = 'blocking'

    def reset(self) -> None:
        pass

    def color(self, board: ColoredGraph, edge: Edge) -> Color:
        return blocking_color(board, edge)


class ConstantPainter:
    def __init__(self, fixed: Color) -> None:
        self.fixed = fixed
        self.name = 'red' if fixed is Color.RED else 'blue'

    def reset(self) -> None:
        pass

    def color(self, board: ColoredGraph, edge: Edge) -> Color:
        return self.fixed


class RandomPainter:
    """Uniform independent colors; the same seed replays the same colors."""

    def __init__(self, seed: Seed = None) -> None:
        self.seed = seed
        self.name = 'random' if seed is None else f"random:{seed}"
        self.reset()

    def reset(self) -> None:
        self._rng = np.random.default_rng(self.seed)

    def color(self, board: ColoredGraph, edge: Edge) -> Color:
        return Color.RED if self._rng.random() < 0.5 else Color.BLUE


class MinimaxPainter:
    """
    Colors each edge to maximize the rounds Builder still needs under optimal play,
    as computed by the exact solver. Ties go to Blue.
    """
    name = 'minimax'

    def __init__(self, cfg: GameConfig, solver_config: Optional[SolverConfig] = None) -> None:
        if cfg.blue_order > MINIMAX_MAX_BLUE_ORDER:
            logger.error(f"Minimax painter asked for blue P{cfg.blue_order}")
            raise StateTooLarge(f"Minimax painter supports blue paths up to P{MINIMAX_MAX_BLUE_ORDER}")
        self.cfg = cfg
        self.solver = ExactSolver(cfg.red_order, cfg.blue_order, solver_config)

    def reset(self) -> None:
        pass

    def remaining(self, board: ColoredGraph) -> float:
        if has_red_path_of_order(board, self.cfg.red_order):
            return 0
        rounds = self.solver.rounds_to_win(board)
        return float('inf') if rounds is None else rounds

    def color(self, board: ColoredGraph, edge: Edge) -> Color:
        u, v = edge
        grown = board.ensure_vertices(max(u, v))
        blue = self.remaining(grown.add_edge(u, v, Color.BLUE))
        red = self.remaining(grown.add_edge(u, v, Color.RED))
        logger.debug(f"Edge {u}-{v}: {blue} rounds after blue, {red} after red")
        return Color.RED if red > blue else Color.BLUE


def parse_painter(spec: str, cfg: GameConfig) -> object:
    """
    Painter from a CLI name: blocking, blue, red, random[:seed] or minimax.

    Raises:
        ValueError: Unknown painter name or a malformed seed.
    """
    name, _, arg = spec.partition(':')
    name = name.strip().lower()
    if name == 'blocking':
        return BlockingPainter()
    if name in ('blue', 'red'):
        return ConstantPainter(Color.parse(name))
    if name == 'random':
        try:
            return RandomPainter(int(arg) if arg else None)
        except ValueError as exc:
            raise ValueError(f"Bad seed in painter spec {spec!r}") from exc
    if name == 'minimax':
        return MinimaxPainter(cfg)
    raise ValueError(f"Unknown painter {spec!r}; expected blocking, blue, red, random[:seed] or minimax")
