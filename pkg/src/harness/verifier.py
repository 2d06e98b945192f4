import asyncio
from itertools import product
from dataclasses import dataclass, field
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple
from src.log.logger import setup_logger
from src.graph.colored_graph import Color, ColoredGraph, Edge
from src.game.engine import Builder, GameConfig, GameTrace, Painter, run_game
from src.builder.plan import SmallBase, decompose_target
from src.builder.path_builder import PathBuilder, game_config
from src.builder.lemma import LemmaBuilder
from src.painter.painters import RandomPainter
from src.harness.report import VerificationReport
from src.harness.verifier_config import VerifierConfig
from src.utils.errors import IllegalBuilderMove, RamseyError, TooLarge

logger = setup_logger('VERIFIER')

Replies = Tuple[Color, ...]
LEMMA_ROUNDS = 6


class ReplayPainter:
    """
    Answers with a fixed color sequence, then with `fallback` (Blue when absent).
    Rounds answered by the Blue default are remembered as branch points.
    """

    def __init__(self, colors: Sequence[Color] = (), fallback: Optional[Painter] = None) -> None:
        self.colors = tuple(colors)
        self.fallback = fallback
        self.reset()

    def reset(self) -> None:
        self.played: List[Color] = []
        self.defaulted: List[int] = []
        if self.fallback is not None:
            self.fallback.reset()

    def color(self, board: ColoredGraph, edge: Edge) -> Color:
        index = len(self.played)
        if index < len(self.colors):
            chosen = self.colors[index]
        elif self.fallback is not None:
            chosen = self.fallback.color(board, edge)
        else:
            chosen = Color.BLUE
            self.defaulted.append(index)
        self.played.append(chosen)
        return chosen


@dataclass
class SubtreeResult:
    branches: int = 0
    max_rounds: int = 0
    worst: Optional[Replies] = None
    failures: List[Tuple[Replies, str]] = field(default_factory=list)

    def _consider(self, replies: Replies) -> None:
        rounds = len(replies)
        if self.worst is None or rounds > self.max_rounds or (rounds == self.max_rounds and replies < self.worst):
            self.worst = replies
            self.max_rounds = rounds

    def add_leaf(self, replies: Replies, failure: Optional[str]) -> None:
        self.branches += 1
        if failure is not None:
            self.failures.append((replies, failure))
        self._consider(replies)

    def merge(self, other: 'SubtreeResult') -> None:
        self.branches += other.branches
        self.failures.extend(other.failures)
        if other.worst is not None:
            self._consider(other.worst)


def _play_leaf(builder: Builder, painter: ReplayPainter, cfg: GameConfig,
               start: Optional[ColoredGraph]) -> Optional[str]:
    """Plays one game; returns a failure description or None when a target was reached."""
    try:
        trace = run_game(builder, painter, cfg, start)
    except RamseyError as e:
        return f"{type(e).__name__}: {e}"
    return None if trace.status.won else str(trace.status)


def _explore(make_builder: Callable[[], Builder], cfg: GameConfig, prefix: Replies,
             start: Optional[ColoredGraph] = None) -> SubtreeResult:
    """
    Depth-first walk of every Painter reply sequence that starts with `prefix`.
    Each game is replayed from the start, Blue by default, and every default-Blue
    round queues the same history with Red there instead.
    """
    builder = make_builder()
    result = SubtreeResult()
    stack: List[Replies] = [tuple(prefix)]
    while stack:
        replies = stack.pop()
        painter = ReplayPainter(replies)
        failure = _play_leaf(builder, painter, cfg, start)
        played = tuple(painter.played)
        # a game over before the prefix is used up is counted by the all-Blue tail prefix only
        if len(played) < len(prefix) and Color.RED in prefix[len(played):]:
            continue
        result.add_leaf(played, failure)
        stack.extend(played[:i] + (Color.RED,) for i in painter.defaulted)
    return result


def explore_subtree(n: int, prefix: Replies) -> SubtreeResult:
    """Worker entry point: explores the reply subtree under `prefix` for blue P_n."""
    return _explore(lambda: PathBuilder(n), game_config(n), prefix)


async def _fan_out(n: int, depth: int, workers: int) -> SubtreeResult:
    prefixes = list(product((Color.RED, Color.BLUE), repeat=depth))
    logger.info(f"Splitting P{n} reply tree into {len(prefixes)} subtrees over {workers} workers")
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = await asyncio.gather(
            *(loop.run_in_executor(pool, explore_subtree, n, prefix) for prefix in prefixes)
        )
    merged = SubtreeResult()
    for part in results:
        merged.merge(part)
    return merged


def _prepare_tables(n: int) -> None:
    base = decompose_target(n).base
    if isinstance(base, SmallBase):
        from src.solver.table_store import load_table
        load_table(base.n0)


def _worst_trace(builder: Builder, cfg: GameConfig, replies: Optional[Replies],
                 start: Optional[ColoredGraph] = None) -> Optional[GameTrace]:
    if replies is None:
        return None
    try:
        return run_game(builder, ReplayPainter(replies), cfg, start)
    except IllegalBuilderMove as e:
        return e.trace
    except RamseyError:
        return None


def _report(n: int, cfg: GameConfig, mode: str, result: SubtreeResult, worst: Optional[GameTrace],
            trials: Optional[int] = None, seed: Optional[int] = None) -> VerificationReport:
    failures = [f"{''.join(c.letter for c in replies) or '-'} {reason}"
                for replies, reason in sorted(result.failures)]
    report = VerificationReport(
        n=n, budget=cfg.budget, mode=mode, branches=result.branches, max_rounds=result.max_rounds,
        trials=trials, seed=seed, worst_trace=worst, failures=failures,
    )
    log = logger.info if report.passed else logger.warning
    log(f"{report.verdict} P{n} {mode}: {report.branches} branches, max {report.max_rounds}/{cfg.budget} rounds")
    return report


def verify_exhaustive(n: int, config: Optional[VerifierConfig] = None) -> VerificationReport:
    """
    Plays PathBuilder(n) against every Painter reply sequence.

    Raises:
        TooLarge: The budget exceeds the configured exhaustive limit; use verify_sampled.
    """
    config = config or VerifierConfig()
    cfg = game_config(n)
    if cfg.budget > config.max_budget:
        logger.error(f"Budget {cfg.budget} for P{n} exceeds exhaustive limit {config.max_budget}")
        raise TooLarge(f"2^{cfg.budget} reply sequences for P{n}; use sampled verification")
    _prepare_tables(n)
    if config.parallel_for(cfg.budget):
        result = asyncio.run(_fan_out(n, min(config.split_depth, cfg.budget), config.workers))
    else:
        result = explore_subtree(n, ())
    return _report(n, cfg, 'exhaustive', result, _worst_trace(PathBuilder(n), cfg, result.worst))


def verify_sampled(n: int, trials: int, seed: int,
                   painter_factory: Optional[Callable[[int], Painter]] = None) -> VerificationReport:
    """
    Plays PathBuilder(n) against `trials` Painters, seeded random ones unless
    `painter_factory(trial)` supplies them.
    """
    if trials < 1:
        raise ValueError(f"Need at least one trial, got {trials}")
    cfg = game_config(n)
    builder = PathBuilder(n)
    result = SubtreeResult()
    for trial in range(trials):
        source = painter_factory(trial) if painter_factory else RandomPainter([seed, trial])
        painter = ReplayPainter(fallback=source)
        failure = _play_leaf(builder, painter, cfg, None)
        result.add_leaf(tuple(painter.played), failure)
    return _report(n, cfg, 'sampled', result, _worst_trace(builder, cfg, result.worst), trials, seed)


def blue_path_board(order: int) -> ColoredGraph:
    board = ColoredGraph.empty().ensure_vertices(order - 1)
    for v in range(order - 1):
        board = board.add_edge(v, v + 1, Color.BLUE)
    return board


def verify_lemma(k: int) -> VerificationReport:
    """Every reply sequence to one extension of a blue P_k gives blue P_{k+4} or red P4 in six rounds."""
    start = blue_path_board(k)
    cfg = GameConfig(blue_order=k + 4, budget=LEMMA_ROUNDS)
    result = _explore(lambda: LemmaBuilder(start), cfg, (), start)
    worst = _worst_trace(LemmaBuilder(start), cfg, result.worst, start)
    return _report(k + 4, cfg, 'lemma', result, worst)
