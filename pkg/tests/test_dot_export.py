import pytest
from src.graph.colored_graph import Color
from src.game.engine import GameConfig, GameStatus, GameTrace, RoundRecord, StatusKind, replay, run_game
from src.builder.path_builder import PathBuilder, game_config
from src.builder.plan import GadgetKind
from src.painter.painters import BlockingPainter, ConstantPainter, RandomPainter
from src.harness.dot_export import export_dot, parse_dot, roles_from_plan
from src.utils.errors import CorruptTrace


def one_round_trace() -> GameTrace:
    cfg = GameConfig(blue_order=2, budget=3)
    return GameTrace(cfg, [RoundRecord(1, 0, 1, Color.BLUE)], GameStatus(StatusKind.BLUE_WIN, 1))


def test_one_round_trace():
    source = export_dot(one_round_trace())
    assert source.startswith('// ramsey-trace red_order=4 blue_order=2 budget=3 status=blue-win:1')
    assert source.count(' -- ') == 1
    assert 'style=solid' in source and 'color=blue' in source
    assert source.count('label=') == 3


def test_red_edges_are_dashed():
    cfg = GameConfig(blue_order=5, budget=4)
    trace = GameTrace(cfg, [RoundRecord(1, 0, 1, Color.RED)], GameStatus(StatusKind.ONGOING))
    source = export_dot(trace)
    assert 'style=dashed' in source and 'color=red' in source


def test_export_rejects_wrong_status():
    trace = one_round_trace()
    trace.status = GameStatus(StatusKind.RED_WIN, 1)
    with pytest.raises(CorruptTrace):
        export_dot(trace)


def test_parse_round_trip_on_random_games():
    cfg = game_config(10)
    builder = PathBuilder(10)
    for seed in range(100):
        trace = run_game(builder, RandomPainter(seed), cfg)
        parsed = parse_dot(export_dot(trace))
        assert parsed == trace
        assert replay(parsed) == trace.status


def test_roles_appear_in_labels():
    builder = PathBuilder(10)
    trace = run_game(builder, ConstantPainter(Color.BLUE), game_config(10))
    roles = roles_from_plan(builder.plan)
    assert roles
    source = export_dot(trace, roles)
    vertex, role = next(iter(roles.items()))
    assert f'"{vertex} {role}"' in source


def test_parse_requires_header():
    with pytest.raises(CorruptTrace):
        parse_dot('graph {\n\t0 -- 1 [label=1 color=blue]\n}')


def test_g7_construction_round_trip():
    cfg = GameConfig(blue_order=5, budget=6)
    rounds = [RoundRecord(1, 1, 2, Color.RED), RoundRecord(2, 2, 3, Color.RED),
              RoundRecord(3, 0, 1, Color.BLUE), RoundRecord(4, 1, 4, Color.BLUE),
              RoundRecord(5, 3, 4, Color.BLUE)]
    trace = GameTrace(cfg, rounds, GameStatus(StatusKind.ONGOING))
    roles = {v: f"G7.v{v}" for v in range(5)}
    source = export_dot(trace, roles)
    assert '"1 G7.v1"' in source
    assert source.count('style=dashed') == 2 and source.count('style=solid') == 3
    parsed = parse_dot(source)
    assert parsed == trace
    assert replay(parsed) == GameStatus(StatusKind.ONGOING)


def test_played_g7_gadgets_round_trip():
    builder = PathBuilder(10)
    trace = run_game(builder, BlockingPainter(), game_config(10))
    assert GadgetKind.G7 in {g.kind for g in builder.plan.gadgets}
    source = export_dot(trace, roles_from_plan(builder.plan))
    assert 'G7.' in source
    assert parse_dot(source) == trace
