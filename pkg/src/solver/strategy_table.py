from pathlib import Path
from dataclasses import dataclass, field
from typing import Dict, List, Tuple, Union
from src.log.logger import setup_logger
from src.graph.colored_graph import Color, ColoredGraph, Edge
from src.graph.canonical import CanonicalKey, canonical_form, canonical_key
from src.graph.paths import has_blue_path_of_order, has_red_path_of_order
from src.utils.errors import StrategyTableError

logger = setup_logger('STRATEGY TABLE')

FORMAT_VERSION = 1
# move endpoints: canonical index of an existing vertex, or one of two fresh vertices
FRESH_A = -1
FRESH_B = -2
Move = Tuple[int, int]


@dataclass
class StrategyTable:
    """Builder moves by canonical board key for the red P_m / blue P_n game, certified to `value` rounds."""
    m: int
    n: int
    value: int
    moves: Dict[CanonicalKey, Move] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.moves)


def resolve_move(board: ColoredGraph, move: Move) -> Edge:
    """Board vertices for a table move; fresh markers become the next unused ids."""
    order = canonical_form(board).order
    fresh = {FRESH_A: board.vertex_count, FRESH_B: board.vertex_count + 1}
    a, b = (fresh[i] if i < 0 else order[i] for i in move)
    return a, b


def encode_move(board: ColoredGraph, edge: Edge) -> Move:
    index = canonical_form(board).index_of()
    fresh = {board.vertex_count: FRESH_A, board.vertex_count + 1: FRESH_B}
    a, b = (index[v] if v in index else fresh[v] for v in edge)
    return a, b


def dumps(table: StrategyTable) -> str:
    lines = [f"version={FORMAT_VERSION} m={table.m} n={table.n} value={table.value}"]
    lines.extend(f"{key.hex()} {a} {b}" for key, (a, b) in sorted(table.moves.items()))
    return '\n'.join(lines) + '\n'


def loads(text: str) -> StrategyTable:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise StrategyTableError("Empty strategy table")
    try:
        header = dict(item.split('=', 1) for item in lines[0].split())
        version = int(header['version'])
        table = StrategyTable(int(header['m']), int(header['n']), int(header['value']))
    except (KeyError, ValueError) as exc:
        raise StrategyTableError(f"Bad table header: {lines[0]!r}") from exc
    if version != FORMAT_VERSION:
        raise StrategyTableError(f"Unsupported table version {version}")
    for line in lines[1:]:
        try:
            key, a, b = line.split()
            table.moves[bytes.fromhex(key)] = (int(a), int(b))
        except ValueError as exc:
            raise StrategyTableError(f"Bad table record: {line!r}") from exc
    return table


def save(table: StrategyTable, path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(table), encoding='utf-8')


def load(path: Union[str, Path]) -> StrategyTable:
    return loads(Path(path).read_text(encoding='utf-8'))


def verify_table(table: StrategyTable) -> Tuple[int, int]:
    """
    Replays the table against every Painter reply sequence from the empty board.

    Returns:
        Tuple[int, int]: (number of finished plays, most rounds used).

    Raises:
        StrategyTableError: A reachable board has no entry, a move is illegal, or
            some play is still undecided after `value` rounds.
    """
    leaves = 0
    deepest = 0
    stack: List[Tuple[ColoredGraph, int]] = [(ColoredGraph.empty(), 0)]
    while stack:
        board, rounds = stack.pop()
        if has_red_path_of_order(board, table.m) or has_blue_path_of_order(board, table.n):
            leaves += 1
            deepest = max(deepest, rounds)
            continue
        if rounds >= table.value:
            logger.error(f"Play undecided after {rounds} rounds: {board}")
            raise StrategyTableError(f"Table does not win within {table.value} rounds")
        move = table.moves.get(canonical_key(board, spare_isolated=0))
        if move is None:
            logger.error(f"No entry for reachable board {board}")
            raise StrategyTableError("Table is not closed under Painter replies")
        u, v = resolve_move(board, move)
        if u == v or board.has_edge(u, v):
            raise StrategyTableError(f"Table move {move} is illegal on {board}")
        grown = board.ensure_vertices(max(u, v))
        for color in (Color.BLUE, Color.RED):
            stack.append((grown.add_edge(u, v, color), rounds + 1))
    logger.info(f"Table P{table.m}/P{table.n} verified: {leaves} plays, at most {deepest} rounds")
    return leaves, deepest
