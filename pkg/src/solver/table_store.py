from pathlib import Path
from functools import lru_cache
from src.log.logger import setup_logger
from src.solver.solver import extract_strategy
from src.solver.solver_config import SolverConfig
from src.solver.strategy_table import StrategyTable, load, save, verify_table
from src.utils.errors import StrategyTableError

logger = setup_logger('TABLE STORE')

RED_ORDER = 4


def table_path(n0: int, table_dir: str) -> Path:
    return Path(table_dir) / f"p{RED_ORDER}_p{n0}.table"


@lru_cache(maxsize=None)
def load_table(n0: int) -> StrategyTable:
    """
    Strategy table for red P4 against blue P_{n0}: read from the table directory when
    present and valid, otherwise solved, verified and written there.
    """
    config = SolverConfig()
    path = table_path(n0, config.table_dir)
    if path.exists():
        try:
            table = load(path)
            if (table.m, table.n) != (RED_ORDER, n0):
                raise StrategyTableError(f"{path} holds P{table.m}/P{table.n}")
            verify_table(table)
            logger.info(f"Loaded {len(table)} entries from {path}")
            return table
        except StrategyTableError as e:
            logger.warning(f"Discarding stored table {path}: {e}")

    logger.info(f"Solving P{RED_ORDER}/P{n0} for a strategy table")
    table = extract_strategy(RED_ORDER, n0, config)
    try:
        save(table, path)
        logger.info(f"Saved {len(table)} entries to {path}")
    except OSError as e:
        logger.warning(f"Could not write {path}: {e}")
    return table
