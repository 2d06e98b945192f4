from typing import Callable, Optional
from src.log.logger import setup_logger
from src.graph.colored_graph import Color, ColoredGraph, Edge
from src.graph.paths import longest_blue_path, longest_path
from src.game.engine import GameTrace, run_game
from src.builder.path_builder import PathBuilder, game_config

logger = setup_logger('INTERACTIVE')

InputFn = Callable[[str], str]
OutputFn = Callable[[str], None]


def describe_board(board: ColoredGraph) -> str:
    blue_order, blue_path = longest_blue_path(board)
    red_order, _ = longest_path(board, Color.RED)
    red = ' '.join(f"{u}-{v}" for u, v in board.colored_edges(Color.RED)) or '-'
    blue = ' '.join(f"{u}-{v}" for u, v in board.colored_edges(Color.BLUE)) or '-'
    return (f"red:  {red}\nblue: {blue}\n"
            f"longest blue path P{blue_order} {blue_path}, longest red path P{red_order}")


class HumanPainter:
    """Asks a person for each color; anything but r/red/b/blue is asked again."""
    name = 'human'

    def __init__(self, input_fn: Optional[InputFn] = None, output_fn: Optional[OutputFn] = None) -> None:
        self.input_fn = input_fn or input
        self.output_fn = output_fn or print
        self.round = 0

    def reset(self) -> None:
        self.round = 0

    def color(self, board: ColoredGraph, edge: Edge) -> Color:
        self.round += 1
        self.output_fn(describe_board(board))
        while True:
            answer = self.input_fn(f"Round {self.round}: Builder draws {edge[0]}-{edge[1]}. Color [r/b]: ")
            try:
                return Color.parse(answer)
            except ValueError:
                self.output_fn(f"Please answer r or b, not {answer!r}")


def play_interactive(n: int, input_fn: Optional[InputFn] = None, output_fn: Optional[OutputFn] = None,
                     builder: Optional[PathBuilder] = None) -> GameTrace:
    output_fn = output_fn or print
    cfg = game_config(n)
    output_fn(f"You paint against a Builder aiming for blue P{n} within {cfg.budget} rounds "
              f"(or a red P{cfg.red_order}).")
    trace = run_game(builder or PathBuilder(n), HumanPainter(input_fn, output_fn), cfg)
    output_fn(describe_board(trace.board()))
    output_fn(f"Game over: {trace.status}")
    logger.info(f"Interactive game for P{n} ended {trace.status}")
    return trace
