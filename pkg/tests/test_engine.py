import pytest
from src.graph.colored_graph import Color, ColoredGraph
from src.game import trace_io
from src.game.engine import (
    GameConfig, GameStatus, GameTrace, RoundRecord, StatusKind, play_round, replay, run_game, status,
)
from src.builder.path_builder import PathBuilder, game_config
from src.painter.painters import BlockingPainter, ConstantPainter
from src.utils.errors import CorruptTrace, IllegalBuilderMove


class ListBuilder:
    """Draws a fixed list of edges."""

    def __init__(self, edges):
        self.edges = list(edges)

    def reset(self):
        self.index = 0

    def next_edge(self, board, last_color):
        edge = self.edges[self.index]
        self.index += 1
        return edge


PATH_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4)]


def test_status_prefers_red_win(board):
    cfg = GameConfig(blue_order=2, budget=5)
    g = board('0-1r 1-2r 2-3r 4-5b')
    assert status(g, cfg, 4) == GameStatus(StatusKind.RED_WIN, 4)


def test_status_budget_exceeded(board):
    cfg = GameConfig(blue_order=5, budget=2)
    assert status(board('0-1b 2-3b'), cfg, 2).kind is StatusKind.BUDGET_EXCEEDED
    assert status(board('0-1b'), cfg, 1).kind is StatusKind.ONGOING


def test_all_blue_game_wins_for_blue():
    cfg = GameConfig(blue_order=4, budget=5)
    trace = run_game(ListBuilder(PATH_EDGES), ConstantPainter(Color.BLUE), cfg)
    assert trace.status == GameStatus(StatusKind.BLUE_WIN, 3)
    assert [r.index for r in trace.rounds] == [1, 2, 3]


def test_all_red_game_wins_for_red():
    cfg = GameConfig(blue_order=4, budget=5)
    trace = run_game(ListBuilder(PATH_EDGES), ConstantPainter(Color.RED), cfg)
    assert trace.status == GameStatus(StatusKind.RED_WIN, 3)


def test_budget_runs_out():
    cfg = GameConfig(blue_order=4, budget=2)
    trace = run_game(ListBuilder([(0, 1), (2, 3), (4, 5)]), ConstantPainter(Color.BLUE), cfg)
    assert trace.status.kind is StatusKind.BUDGET_EXCEEDED
    assert len(trace.rounds) == 2


def test_illegal_move_carries_partial_trace():
    cfg = GameConfig(blue_order=6, budget=5)
    with pytest.raises(IllegalBuilderMove) as info:
        run_game(ListBuilder([(0, 1), (1, 0)]), ConstantPainter(Color.BLUE), cfg)
    assert len(info.value.trace.rounds) == 1


def test_game_on_given_start_board(board):
    start = board('0-1b 1-2b')
    cfg = GameConfig(blue_order=4, budget=1)
    trace = run_game(ListBuilder([(2, 3)]), ConstantPainter(Color.BLUE), cfg, start)
    assert trace.status == GameStatus(StatusKind.BLUE_WIN, 1)


def test_play_round_materializes_fresh_vertices():
    g = play_round(ColoredGraph.empty(), (0, 3), Color.RED)
    assert g.vertex_count == 4 and g.color(0, 3) is Color.RED


def test_replay_reproduces_status():
    cfg = GameConfig(blue_order=4, budget=5)
    trace = run_game(ListBuilder(PATH_EDGES), ConstantPainter(Color.BLUE), cfg)
    assert replay(trace) == trace.status
    assert trace.board().edge_count == 3


@pytest.mark.parametrize('rounds', [
    [RoundRecord(1, 0, 1, Color.BLUE), RoundRecord(3, 1, 2, Color.BLUE)],
    [RoundRecord(1, 0, 1, Color.BLUE), RoundRecord(2, 1, 0, Color.BLUE)],
    [RoundRecord(1, 0, 0, Color.BLUE)],
])
def test_replay_rejects_corrupt_rounds(rounds):
    with pytest.raises(CorruptTrace):
        replay(GameTrace(GameConfig(blue_order=4, budget=5), rounds))


def test_replay_rejects_rounds_after_the_end():
    cfg = GameConfig(blue_order=2, budget=5)
    rounds = [RoundRecord(1, 0, 1, Color.BLUE), RoundRecord(2, 1, 2, Color.BLUE)]
    with pytest.raises(CorruptTrace):
        replay(GameTrace(cfg, rounds))


def test_trace_text_format():
    cfg = GameConfig(blue_order=4, budget=5)
    trace = run_game(ListBuilder(PATH_EDGES), ConstantPainter(Color.BLUE), cfg)
    text = trace_io.dumps(trace)
    assert text.splitlines() == ['4 4 5', '1 0 1 b', '2 1 2 b', '3 2 3 b', 'blue-win 3']
    assert trace_io.loads(text) == trace


@pytest.mark.parametrize('text', ['', '4 4\nongoing', '4 4 5\n1 0 x b\nongoing', '4 4 5\n1 0 1 g\nongoing',
                                  '4 4 5\nfinished'])
def test_trace_parse_errors(text):
    with pytest.raises(CorruptTrace):
        trace_io.loads(text)


@pytest.mark.parametrize('recorded', [
    GameStatus(StatusKind.BLUE_WIN, 6),
    GameStatus(StatusKind.RED_WIN, 3),
    GameStatus(StatusKind.ONGOING),
])
def test_replay_rejects_a_wrong_recorded_status(recorded):
    cfg = GameConfig(blue_order=4, budget=5)
    trace = run_game(ListBuilder(PATH_EDGES), ConstantPainter(Color.BLUE), cfg)
    trace.status = recorded
    with pytest.raises(CorruptTrace):
        replay(trace)


def test_replay_rejects_a_tampered_path_builder_game():
    trace = run_game(PathBuilder(5), BlockingPainter(), game_config(5))
    replay(trace)
    trace.status = GameStatus(trace.status.kind, trace.status.round + 3)
    with pytest.raises(CorruptTrace):
        replay(trace)
