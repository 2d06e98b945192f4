from typing import Generator, List, Optional, Tuple
from src.log.logger import setup_logger
from src.graph.colored_graph import Color, ColoredGraph, Edge
from src.graph.paths import would_create_red_p4
from src.utils.errors import PlanDesync

# a script yields the edges it draws and receives the color Painter chose
Script = Generator[Edge, Color, None]
Step = Generator[Edge, Color, Color]


class ScriptedBuilder:
    """
    Builder driven by a generator script. The engine-facing next_edge feeds the
    last color back into the script and returns the next edge it yields.

    Subclasses implement `_script()` and draw with `yield from self._draw(u, v)`
    or `yield from self._force(u, v)`.
    """

    def __init__(self, name: str = 'SCRIPTED BUILDER') -> None:
        self.logger = setup_logger(name)
        self.board = ColoredGraph.empty()
        self.forced: List[Tuple[Edge, bool]] = []
        self._next_id = 0
        self._script_gen: Optional[Script] = None

    def reset(self) -> None:
        self.board = ColoredGraph.empty()
        self.forced = []
        self._next_id = 0
        self._script_gen = None

    def _script(self) -> Script:
        raise NotImplementedError

    def next_edge(self, board: ColoredGraph, last_color: Optional[Color]) -> Edge:
        self.board = board
        try:
            if self._script_gen is None:
                self._script_gen = self._script()
                return next(self._script_gen)
            return self._script_gen.send(last_color)
        except StopIteration:
            self.logger.error(f"Script finished but the game goes on ({board.edge_count} edges)")
            raise PlanDesync("Builder script ran out of moves while the game is ongoing")

    # drawing helpers -------------------------------------------------------------

    def _fresh(self) -> int:
        vertex = self._next_id
        self._next_id += 1
        return vertex

    def _draw(self, u: int, v: int) -> Step:
        color = yield (u, v)
        return color

    def _force(self, u: int, v: int) -> Step:
        """Draws an edge that Painter can only color red by completing a red P4."""
        forced = would_create_red_p4(self.board, u, v)
        self.forced.append(((u, v), forced))
        if not forced:
            self.logger.error(f"Edge {u}-{v} is not forced on {self.board}")
            raise PlanDesync(f"Edge {u}-{v} was expected to be forced blue")
        color = yield (u, v)
        return color
