from src.graph.colored_graph import Color, ColoredGraph
from src.game.engine import StatusKind
from src.harness.interactive import HumanPainter, describe_board, play_interactive


def test_invalid_answers_are_asked_again():
    answers = iter(['green', '', 'R'])
    shown = []
    painter = HumanPainter(lambda prompt: next(answers), shown.append)
    assert painter.color(ColoredGraph(2), (0, 1)) is Color.RED
    assert sum('Please answer' in line for line in shown) == 2


def test_game_ends_when_a_target_appears():
    prompts = []

    def answer(prompt):
        prompts.append(prompt)
        return 'red'

    trace = play_interactive(10, answer, lambda line: None)
    assert trace.status.kind is StatusKind.RED_WIN
    assert len(prompts) == len(trace.rounds)


def test_describe_board(board):
    text = describe_board(board('0-1b 1-2b 2-3r'))
    assert 'longest blue path P3' in text
    assert 'red:  2-3' in text
