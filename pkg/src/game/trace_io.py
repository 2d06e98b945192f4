from pathlib import Path
from typing import List, Union
from src.graph.colored_graph import Color
from src.game.engine import GameConfig, GameStatus, GameTrace, RoundRecord
from src.utils.errors import CorruptTrace

# header:  red_order blue_order budget
# round:   index u v color
# footer:  status [round]


def dumps(trace: GameTrace) -> str:
    cfg = trace.config
    lines = [f"{cfg.red_order} {cfg.blue_order} {cfg.budget}"]
    lines.extend(f"{r.index} {r.u} {r.v} {r.color.letter}" for r in trace.rounds)
    lines.append(str(trace.status))
    return '\n'.join(lines) + '\n'


def loads(text: str) -> GameTrace:
    """Parses the line-delimited trace record written by `dumps`."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) < 2:
        raise CorruptTrace("A trace needs a header and a status line")
    try:
        red_order, blue_order, budget = (int(x) for x in lines[0].split())
        config = GameConfig(red_order=red_order, blue_order=blue_order, budget=budget)
    except ValueError as exc:
        raise CorruptTrace(f"Bad header: {lines[0]!r}") from exc
    rounds: List[RoundRecord] = []
    for line in lines[1:-1]:
        parts = line.split()
        try:
            index, u, v = (int(x) for x in parts[:3])
            color = Color.parse(parts[3])
        except (IndexError, ValueError) as exc:
            raise CorruptTrace(f"Bad round line: {line!r}") from exc
        if len(parts) != 4:
            raise CorruptTrace(f"Bad round line: {line!r}")
        rounds.append(RoundRecord(index, u, v, color))
    return GameTrace(config, rounds, GameStatus.parse(lines[-1]))


def save(trace: GameTrace, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(trace), encoding='utf-8')


def load(path: Union[str, Path]) -> GameTrace:
    return loads(Path(path).read_text(encoding='utf-8'))
