import logging
import pytest
from main import main
from src.log.logger import ROOT_LOGGER, set_log_level, setup_logger


@pytest.fixture
def restore_level():
    root = logging.getLogger(ROOT_LOGGER)
    level = root.level
    yield root
    root.setLevel(level)


def test_components_share_one_handler():
    builder = setup_logger('PATH BUILDER')
    solver = setup_logger('EXACT SOLVER')
    assert builder.name == 'ramsey.PATH BUILDER'
    assert builder.parent is solver.parent is logging.getLogger(ROOT_LOGGER)
    assert not builder.handlers and not solver.handlers
    assert len(logging.getLogger(ROOT_LOGGER).handlers) == 1


def test_set_log_level_reaches_every_component(restore_level):
    builder = setup_logger('PATH BUILDER')
    set_log_level('debug')
    assert builder.getEffectiveLevel() == logging.DEBUG
    set_log_level(logging.ERROR)
    assert builder.getEffectiveLevel() == logging.ERROR


def test_unknown_level_is_rejected(restore_level):
    with pytest.raises(ValueError):
        set_log_level('chatty')


def test_cli_log_level_option(restore_level, capsys):
    assert main(['--log-level', 'ERROR', 'play', '--n', '10']) == 0
    assert restore_level.level == logging.ERROR
    assert main(['--log-level', 'chatty', 'play', '--n', '10']) == 2
    assert 'Unknown log level' in capsys.readouterr().err
