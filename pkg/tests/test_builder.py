import pytest
from src.graph.colored_graph import Color, ColoredGraph
from src.graph.paths import is_red_star_forest, would_create_red_p4
from src.game.engine import GameStatus, StatusKind, play_round, run_game
from src.builder.plan import (
    ATTACH_KINDS, GadgetKind, Phase, SmallBase, UnitKind, closed_form_budget, connection_contract,
    extension_contract,
)
from src.builder.path_builder import PathBuilder, game_config
from src.painter.painters import BlockingPainter, ConstantPainter, RandomPainter
from src.harness.verifier import ReplayPainter

# targets whose base is played from the (4,6) or (4,7) strategy table
TABLE_HEAVY = {6, 7, 11}
FAST_TARGETS = [n for n in range(4, 61) if n not in TABLE_HEAVY]


def play(n: int, painter):
    builder = PathBuilder(n)
    return builder, run_game(builder, painter, game_config(n))


@pytest.mark.parametrize('n', FAST_TARGETS)
def test_blocking_painter_needs_the_whole_budget(n):
    builder, trace = play(n, BlockingPainter())
    assert trace.status == GameStatus(StatusKind.BLUE_WIN, closed_form_budget(n))
    d = builder.decomposition
    # the winning edge ends the game inside the last stage
    if d.lemma_count:
        assert builder.plan.phase is Phase.LEMMA_EXTENSION
        assert builder.plan.lemma_index == d.lemma_count - 1
    elif not isinstance(d.base, SmallBase):
        assert builder.plan.phase is Phase.CONNECTION


@pytest.mark.slow
@pytest.mark.parametrize('n', sorted(TABLE_HEAVY | set(range(61, 201))))
def test_blocking_painter_needs_the_whole_budget_large(n):
    _, trace = play(n, BlockingPainter())
    assert trace.status == GameStatus(StatusKind.BLUE_WIN, closed_form_budget(n))


@pytest.mark.parametrize('n', [5, 10, 12, 14, 17, 22])
def test_blocking_painter_red_graph_stays_star_forest(n):
    _, trace = play(n, BlockingPainter())
    g = ColoredGraph.empty()
    for r in trace.rounds:
        g = play_round(g, r.edge, r.color)
        assert is_red_star_forest(g)


@pytest.mark.parametrize('n', [10, 12, 14, 15, 16, 17, 19, 20, 22, 27])
def test_random_painters_lose_within_budget(n):
    cfg = game_config(n)
    for seed in range(40):
        builder, trace = play(n, RandomPainter(seed))
        assert trace.status.won, (seed, trace.status)
        assert len(trace.rounds) <= cfg.budget
        assert all(forced for _, forced in builder.forced)


@pytest.mark.parametrize('n', [10, 12, 14, 17])
def test_forced_edges_are_forced_when_drawn(n):
    for seed in range(20):
        builder, trace = play(n, RandomPainter(seed))
        forced = {edge for edge, _ in builder.forced}
        g = ColoredGraph.empty()
        for r in trace.rounds:
            if r.edge in forced:
                assert would_create_red_p4(g, *r.edge)
            g = play_round(g, r.edge, r.color)


def test_all_blue_painter_n10():
    _, trace = play(10, ConstantPainter(Color.BLUE))
    assert trace.status.kind is StatusKind.BLUE_WIN
    assert trace.status.round <= 13


def test_all_red_painter_loses_on_the_first_forced_edge():
    _, trace = play(10, ConstantPainter(Color.RED))
    assert trace.status == GameStatus(StatusKind.RED_WIN, 3)


def test_small_base_plays_from_table():
    _, trace = play(5, BlockingPainter())
    assert trace.status == GameStatus(StatusKind.BLUE_WIN, 6)


def test_builder_is_reusable_across_games():
    builder = PathBuilder(12)
    cfg = game_config(12)
    first = run_game(builder, RandomPainter(3), cfg)
    second = run_game(builder, RandomPainter(3), cfg)
    assert first == second


def colors(text: str):
    return [Color.parse(c) for c in text.split()]


def scripted(n: int, text: str):
    """Plays the given colors first, then Blue for the rest of the game."""
    return play(n, ReplayPainter(colors(text), ConstantPainter(Color.BLUE)))


def kinds(gadgets):
    return [g.kind for g in gadgets]


def test_all_blue_creates_type_i_units():
    builder, _ = play(10, ConstantPainter(Color.BLUE))
    assert builder.plan.k == 2
    assert kinds(builder.plan.units) == [UnitKind.I, UnitKind.I]
    assert builder.plan.bad is None


@pytest.mark.parametrize('n, count', [(10, 2), (15, 3), (20, 4)])
def test_blocking_painter_creates_red_p3_units(n, count):
    builder, _ = play(n, BlockingPainter())
    assert kinds(builder.plan.units) == [UnitKind.II] * count
    assert builder.plan.bad is None


def test_type_vi_merges_into_type_iv():
    builder, _ = scripted(15, 'b r r b b r b')
    plan = builder.plan
    assert kinds(plan.units) == [UnitKind.IV, UnitKind.I]
    assert len(plan.units[0].roles) == 10
    assert plan.unit_count == 3 and plan.bad is None


def test_type_v_becomes_type_vi():
    builder, _ = scripted(15, 'b r r r b r b')
    plan = builder.plan
    assert kinds(plan.units) == [UnitKind.II, UnitKind.I]
    assert plan.bad.kind is UnitKind.VI


@pytest.mark.parametrize('text, kind', [
    ('b b b r b b b', GadgetKind.G13),
    ('b b b b r b b', GadgetKind.G13),
    ('b b b r b b r', GadgetKind.G14),
    ('b b b r b r b b', GadgetKind.G15),
    ('b b b r b r b r', GadgetKind.G16),
    ('b b b r r r', GadgetKind.G17),
    ('b b b r r b', GadgetKind.G18),
])
def test_three_blue_opening_gadgets(text, kind):
    builder, trace = scripted(12, text)
    plan = builder.plan
    assert plan.preformed == 1
    assert plan.gadgets[0].kind is kind
    assert plan.red_edge is None
    assert trace.status.kind is StatusKind.BLUE_WIN


@pytest.mark.parametrize('text, red_edge, first_unit', [
    ('r', (0, 1), UnitKind.I),
    ('b r', (2, 3), UnitKind.I),
    ('b b r r', (4, 5), UnitKind.III),
    ('b b r b', (4, 5), UnitKind.I),
])
def test_opening_with_a_red_edge(text, red_edge, first_unit):
    builder, trace = scripted(12, text)
    plan = builder.plan
    assert plan.red_edge == red_edge
    assert plan.units[0].kind is first_unit
    assert plan.preformed == 0
    assert trace.status.kind is StatusKind.BLUE_WIN


def test_pending_blue_edge_is_reused():
    builder, _ = scripted(12, 'b r')
    assert builder.plan.units[0].path[:2] == (0, 1)


def test_three_blue_edges_shrink_into_type_i():
    builder, _ = scripted(12, 'b b b b b')
    unit = builder.plan.units[0]
    assert unit.kind is UnitKind.I
    assert unit.shrunk == (6, 2, 3)


@pytest.mark.parametrize('n', [10, 15, 20])
def test_contracts_hold_on_played_ledgers(n):
    painters = [ConstantPainter(Color.BLUE)] + [RandomPainter(seed) for seed in range(30)]
    checked = 0
    for painter in painters:
        builder, trace = play(n, painter)
        plan = builder.plan
        if plan.phase is not Phase.CONNECTION:
            continue
        extension_contract(plan)
        attached = any(g.kind in ATTACH_KINDS for g in plan.gadgets)
        if trace.status.kind is StatusKind.BLUE_WIN and not attached and plan.red_edge is None:
            assert plan.c_prime == plan.k
            connection_contract(len(trace.rounds), n, plan.c_prime)
            checked += 1
    assert checked
