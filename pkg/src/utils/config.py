import os
from dotenv import load_dotenv

load_dotenv()

LOG_LEVEL=os.environ.get("RAMSEY_LOG_LEVEL", "WARNING")

TABLE_DIR=os.environ.get("RAMSEY_TABLE_DIR", "tables")
SPARE_ISOLATED=int(os.environ.get("RAMSEY_SPARE_ISOLATED", "1"))

SOLVER_MAX_STATES=int(os.environ.get("RAMSEY_SOLVER_MAX_STATES", "5000000"))
SOLVER_MAX_BUDGET=int(os.environ.get("RAMSEY_SOLVER_MAX_BUDGET", "14"))

WORKERS=int(os.environ.get("RAMSEY_WORKERS", str(os.cpu_count() or 1)))
SPLIT_DEPTH=int(os.environ.get("RAMSEY_SPLIT_DEPTH", "4"))
EXHAUSTIVE_MAX_BUDGET=int(os.environ.get("RAMSEY_EXHAUSTIVE_MAX_BUDGET", "24"))
