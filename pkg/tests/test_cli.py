from main import main
from src.game import trace_io
from src.harness.dot_export import parse_dot
from src.solver.strategy_table import load as load_table_file


def test_play_blocking(capsys):
    assert main(['play', '--n', '10', '--painter', 'blocking']) == 0
    out = capsys.readouterr().out
    assert 'blocking painter: blue-win 13 (budget 13)' in out
    assert out.rstrip().endswith('blue-win 13')


def test_play_saves_trace_and_dot(tmp_path):
    trace_file = tmp_path / 'game.trace'
    dot_file = tmp_path / 'game.dot'
    assert main(['play', '--n', '12', '--painter', 'random:4',
                 '--trace-out', str(trace_file), '--dot', str(dot_file)]) == 0
    trace = trace_io.load(trace_file)
    assert parse_dot(dot_file.read_text()) == trace


def test_play_interactive(monkeypatch, capsys):
    monkeypatch.setattr('builtins.input', lambda prompt: 'b')
    assert main(['play', '--n', '10', '--interactive']) == 0
    assert 'Game over: blue-win' in capsys.readouterr().out


def test_unknown_painter_exits_non_zero(capsys):
    assert main(['play', '--n', '10', '--painter', 'purple']) == 2
    assert 'Unknown painter' in capsys.readouterr().err


def test_verify_sampled(tmp_path, capsys):
    record = tmp_path / 'report.txt'
    assert main(['verify', '--n', '14', '--trials', '25', '--seed', '9', '--record', str(record)]) == 0
    assert capsys.readouterr().out.startswith('PASS')
    assert 'verdict=PASS' in record.read_text()


def test_verify_exhaustive(capsys):
    assert main(['verify', '--n', '10', '--exhaustive', '--workers', '1']) == 0
    assert 'most rounds used:  13' in capsys.readouterr().out


def test_verify_too_large(capsys):
    assert main(['verify', '--n', '50']) == 2


def test_solve_with_table(tmp_path, capsys):
    table_file = tmp_path / 'p3_p4.table'
    assert main(['solve', '--m', '3', '--n', '4', '--emit-table', str(table_file)]) == 0
    assert 'P3/P4: 4 rounds' in capsys.readouterr().out
    assert load_table_file(table_file).value == 4


def test_solve_undecided(capsys):
    assert main(['solve', '--m', '4', '--n', '5', '--max-budget', '4']) == 1


def test_export_formats(tmp_path, capsys):
    trace_file = tmp_path / 'game.trace'
    assert main(['play', '--n', '10', '--painter', 'red', '--trace-out', str(trace_file)]) == 0
    capsys.readouterr()
    assert main(['export', '--trace', str(trace_file), '--format', 'text']) == 0
    assert capsys.readouterr().out == trace_file.read_text()
    assert main(['export', '--trace', str(trace_file), '--format', 'dot']) == 0
    assert capsys.readouterr().out.startswith('// ramsey-trace')


def test_export_corrupt_trace(tmp_path):
    trace_file = tmp_path / 'bad.trace'
    trace_file.write_text('4 10 13\n1 0 1 b\n2 0 1 r\nongoing\n')
    assert main(['export', '--trace', str(trace_file)]) == 2
