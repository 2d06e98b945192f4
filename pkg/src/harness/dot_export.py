import re
from typing import Dict, List, Optional
from graphviz import Graph
from src.log.logger import setup_logger
from src.graph.colored_graph import Color
from src.game.engine import GameConfig, GameStatus, GameTrace, RoundRecord, replay
from src.builder.plan import BuilderPlan
from src.utils.errors import CorruptTrace

logger = setup_logger('DOT EXPORT')

COMMENT_PREFIX = 'ramsey-trace'
EDGE_STYLE = {Color.RED: 'dashed', Color.BLUE: 'solid'}
EDGE_COLOR = {Color.RED: 'red', Color.BLUE: 'blue'}

_COMMENT_RE = re.compile(
    rf"//\s*{COMMENT_PREFIX}\s+red_order=(\d+)\s+blue_order=(\d+)\s+budget=(\d+)\s+status=(\S+)"
)
_EDGE_RE = re.compile(r'^\s*"?(\d+)"?\s*--\s*"?(\d+)"?\s*\[(.*)\]', re.MULTILINE)
_ATTR_RE = re.compile(r'(\w+)="?([^"\s\]]+)"?')


def roles_from_plan(plan: BuilderPlan) -> Dict[int, str]:
    """Vertex labels such as 'G7.w4' for every role of the recognized units and gadgets."""
    labels: Dict[int, str] = {}
    for gadget in list(plan.units) + list(plan.gadgets) + ([plan.bad] if plan.bad else []):
        for role, vertex in gadget.roles.items():
            labels[vertex] = f"{gadget.kind.name}.{role}"
    return labels


def export_dot(trace: GameTrace, roles: Optional[Dict[int, str]] = None) -> str:
    """
    Graphviz source for a played game: blue edges solid, red edges dashed, every
    edge labeled with its round.

    Raises:
        CorruptTrace: The trace does not replay to its recorded status.
    """
    replay(trace)

    cfg = trace.config
    status = str(trace.status).replace(' ', ':')
    dot = Graph(comment=f"{COMMENT_PREFIX} red_order={cfg.red_order} blue_order={cfg.blue_order} "
                        f"budget={cfg.budget} status={status}")
    dot.attr('node', shape='circle', fontsize='10')
    dot.attr('edge', fontsize='9')
    roles = roles or {}
    for v in sorted({x for r in trace.rounds for x in r.edge}):
        dot.node(str(v), f"{v} {roles[v]}" if v in roles else str(v))
    for r in trace.rounds:
        dot.edge(str(r.u), str(r.v), label=str(r.index),
                 color=EDGE_COLOR[r.color], style=EDGE_STYLE[r.color])
    return dot.source


def parse_dot(text: str) -> GameTrace:
    """Reads back a trace written by export_dot."""
    header = _COMMENT_RE.search(text)
    if header is None:
        raise CorruptTrace("Not an exported game trace: missing header comment")
    red_order, blue_order, budget = (int(x) for x in header.groups()[:3])
    config = GameConfig(red_order=red_order, blue_order=blue_order, budget=budget)
    status = GameStatus.parse(header.group(4).replace(':', ' '))

    rounds: List[RoundRecord] = []
    for u, v, attrs in _EDGE_RE.findall(text):
        values = dict(_ATTR_RE.findall(attrs))
        try:
            color = Color.parse(values['color'])
            rounds.append(RoundRecord(int(values['label']), int(u), int(v), color))
        except (KeyError, ValueError) as exc:
            raise CorruptTrace(f"Bad edge attributes: {attrs!r}") from exc
    rounds.sort(key=lambda r: r.index)
    return GameTrace(config, rounds, status)
