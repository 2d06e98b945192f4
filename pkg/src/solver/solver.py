from dataclasses import dataclass
from typing import Dict, List, Optional
from src.log.logger import setup_logger
from src.graph.colored_graph import Color, ColoredGraph, Edge, edge_key
from src.graph.canonical import CanonicalKey, canonical_form, canonical_key, pair_orbit_representatives, vertex_orbits
from src.graph.paths import has_blue_path_of_order, has_red_path_of_order
from src.solver.solver_config import SolverConfig
from src.solver.strategy_table import Move, StrategyTable, encode_move, resolve_move, verify_table
from src.utils.errors import BudgetTooLarge

logger = setup_logger('SOLVER')


@dataclass
class SolveResult:
    value: Optional[int]
    nodes_expanded: int
    table: Optional[StrategyTable] = None

    @property
    def solved(self) -> bool:
        return self.value is not None


def builder_moves_up_to_iso(g: ColoredGraph) -> List[Edge]:
    """
    One legal new edge per orbit under the color-preserving automorphisms of g:
    existing pairs first, then fresh-to-existing, then one fresh-fresh edge.
    Fresh vertices are the ids vertex_count and vertex_count + 1.
    """
    form = canonical_form(g)
    existing = form.order
    fresh = g.vertex_count
    pairs = [edge_key(a, b) for i, a in enumerate(existing) for b in existing[i + 1:]
             if not g.has_edge(a, b)]
    moves = pair_orbit_representatives(pairs, form.generators)
    moves.extend((orbit[0], fresh) for orbit in vertex_orbits(existing, form.generators))
    moves.append((fresh, fresh + 1))
    return moves


class ExactSolver:
    """
    Minimax over Builder moves (up to isomorphism) and Painter colors for the
    red P_m / blue P_n game, with a transposition memo keyed by canonical board.
    """

    def __init__(self, m: int, n: int, config: Optional[SolverConfig] = None) -> None:
        self.m = m
        self.n = n
        self.config = config or SolverConfig()
        self.nodes_expanded = 0
        self._win_at: Dict[CanonicalKey, int] = {}
        self._lose_at: Dict[CanonicalKey, int] = {}
        self._best: Dict[CanonicalKey, Move] = {}

    def is_terminal(self, g: ColoredGraph) -> bool:
        return has_red_path_of_order(g, self.m) or has_blue_path_of_order(g, self.n)

    def _check_size(self) -> None:
        if len(self._win_at) + len(self._lose_at) > self.config.max_states:
            logger.error(f"State limit {self.config.max_states} reached after {self.nodes_expanded} nodes")
            raise BudgetTooLarge(f"More than {self.config.max_states} states for P{self.m}/P{self.n}")

    def wins(self, g: ColoredGraph, depth: int) -> bool:
        """True iff Builder forces a target within `depth` more rounds from g."""
        if self.is_terminal(g):
            return True
        if depth <= 0:
            return False
        key = canonical_key(g, spare_isolated=0)
        if self.config.use_memo:
            if self._win_at.get(key, depth + 1) <= depth:
                return True
            if self._lose_at.get(key, -1) >= depth:
                return False
        self.nodes_expanded += 1
        for u, v in builder_moves_up_to_iso(g):
            grown = g.ensure_vertices(max(u, v))
            if all(self.wins(grown.add_edge(u, v, color), depth - 1) for color in (Color.RED, Color.BLUE)):
                if depth < self._win_at.get(key, depth + 1):
                    self._win_at[key] = depth
                    self._best[key] = encode_move(g, (u, v))
                self._check_size()
                return True
        if depth > self._lose_at.get(key, -1):
            self._lose_at[key] = depth
        self._check_size()
        return False

    def rounds_to_win(self, g: ColoredGraph, cap: Optional[int] = None) -> Optional[int]:
        """Least number of further rounds that Builder needs from g, None if above cap."""
        cap = self.config.max_budget if cap is None else cap
        for depth in range(cap + 1):
            if self.wins(g, depth):
                return depth
        return None

    def solve(self, max_budget: Optional[int] = None, with_table: bool = False) -> SolveResult:
        budget = self.config.max_budget if max_budget is None else max_budget
        if budget > self.config.max_budget:
            logger.error(f"Requested budget {budget} exceeds the configured {self.config.max_budget}")
            raise BudgetTooLarge(f"Budget {budget} above solver limit {self.config.max_budget}")
        value = self.rounds_to_win(ColoredGraph.empty(), budget)
        logger.info(f"P{self.m}/P{self.n}: value {value} after {self.nodes_expanded} nodes")
        table = self.strategy(value) if with_table and value is not None else None
        return SolveResult(value, self.nodes_expanded, table)

    def strategy(self, value: int) -> StrategyTable:
        """Collects the proven moves reachable from the empty board into a table."""
        table = StrategyTable(self.m, self.n, value)
        stack = [(ColoredGraph.empty(), value)]
        while stack:
            g, depth = stack.pop()
            if self.is_terminal(g):
                continue
            key = canonical_key(g, spare_isolated=0)
            if key in table.moves:
                continue
            if key not in self._best or self._win_at[key] > depth:
                self.wins(g, depth)
            move = self._best[key]
            table.moves[key] = move
            u, v = resolve_move(g, move)
            grown = g.ensure_vertices(max(u, v))
            for color in (Color.RED, Color.BLUE):
                stack.append((grown.add_edge(u, v, color), self._win_at[key] - 1))
        return table


def solve_value(m: int, n: int, max_budget: Optional[int] = None,
                config: Optional[SolverConfig] = None) -> SolveResult:
    """Exact online Ramsey number of red P_m against blue P_n, by iterative deepening."""
    return ExactSolver(m, n, config).solve(max_budget)


def extract_strategy(m: int, n: int, config: Optional[SolverConfig] = None) -> StrategyTable:
    """Optimal Builder table for the game, verified by exhaustive replay."""
    solver = ExactSolver(m, n, config)
    result = solver.solve(with_table=True)
    if result.table is None:
        raise BudgetTooLarge(f"P{m}/P{n} not solved within budget {solver.config.max_budget}")
    verify_table(result.table)
    return result.table
