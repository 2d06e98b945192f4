import pytest
from src.graph.colored_graph import Color
from src.graph.paths import has_blue_path_of_order
from src.game.engine import GameConfig, GameStatus, StatusKind, run_game
from src.builder.lemma import LemmaBuilder
from src.harness.verifier import ReplayPainter, blue_path_board, verify_lemma


@pytest.mark.parametrize('k', range(2, 21))
def test_every_reply_sequence_extends_or_loses(k):
    report = verify_lemma(k)
    assert report.passed, report.to_text()
    assert report.max_rounds <= 6
    assert report.branches <= 2 ** 6


def test_all_blue_replies_finish_after_four_rounds():
    start = blue_path_board(5)
    builder = LemmaBuilder(start)
    trace = run_game(builder, ReplayPainter((Color.BLUE,) * 6), GameConfig(blue_order=9, budget=6), start)
    assert trace.status == GameStatus(StatusKind.BLUE_WIN, 4)
    board = start
    for r in trace.rounds:
        board = board.ensure_vertices(max(r.edge)).add_edge(*r.edge, r.color)
    assert has_blue_path_of_order(board, 9)
