import logging
from typing import Optional, Union
from src.utils.config import LOG_LEVEL

ROOT_LOGGER = 'ramsey'
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def _level(level: Union[str, int]) -> int:
    if isinstance(level, int):
        return level
    value = logging.getLevelName(str(level).upper())
    if not isinstance(value, int):
        raise ValueError(f"Unknown log level {level!r}")
    return value


def _root() -> logging.Logger:
    root = logging.getLogger(ROOT_LOGGER)
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
        try:
            root.setLevel(_level(LOG_LEVEL))
        except ValueError:
            root.setLevel(logging.WARNING)
            root.warning(f"RAMSEY_LOG_LEVEL={LOG_LEVEL!r} is not a level, using WARNING")
    return root


def setup_logger(logger_name: Optional[str] = 'LOGGER') -> logging.Logger:
        """
        Sets up a component logger under the shared 'ramsey' logger. Only the
        shared logger owns a console handler and a level (RAMSEY_LOG_LEVEL), so
        every component follows set_log_level.

        Args:
            logger_name (Optional[str]): The component name. Defaults to LOGGER.

        Returns:
            logging.Logger: The component logger, e.g. 'ramsey.PATH BUILDER'.
        """
        _root()
        return logging.getLogger(f"{ROOT_LOGGER}.{logger_name}")


def set_log_level(level: Union[str, int]) -> None:
    """Changes the level of every component at once; raises ValueError for unknown names."""
    _root().setLevel(_level(level))
