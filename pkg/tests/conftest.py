import pytest
from src.graph.colored_graph import Color, ColoredGraph


def make_board(text: str, vertex_count: int = 0) -> ColoredGraph:
    """Board from tokens like '0-1r 1-2b'."""
    edges = {}
    for token in text.split():
        ends, color = token[:-1], Color.parse(token[-1])
        u, v = (int(x) for x in ends.split('-'))
        edges[(u, v)] = color
    top = max([max(e) for e in edges] + [vertex_count - 1])
    return ColoredGraph(top + 1, edges)


@pytest.fixture
def board():
    return make_board


@pytest.fixture(scope='session', autouse=True)
def table_dir(tmp_path_factory):
    """Strategy tables solved during the run go to a throwaway directory."""
    path = tmp_path_factory.mktemp('tables')
    with pytest.MonkeyPatch.context() as mp:
        mp.setattr('src.solver.solver_config.TABLE_DIR', str(path))
        yield path
