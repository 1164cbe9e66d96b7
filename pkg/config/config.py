import logging
import os
import sys

from dotenv import load_dotenv

load_dotenv()

# Logging Configuration
LOG_LEVEL = os.getenv('HBN_LOG_LEVEL', 'WARNING').upper()
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_DATEFMT = '%Y-%m-%d %H:%M:%S'

# Conversion Budgets
DECIMAL_BIT_BUDGET = int(os.getenv('HBN_DECIMAL_BIT_BUDGET', 1 << 20))  # Max bitsize materialized as an int
ITERATION_BUDGET = int(os.getenv('HBN_ITERATION_BUDGET', 1 << 26))      # Max loop count for iterate()

# Decimal text is bounded by DECIMAL_BIT_BUDGET, not by the interpreter's digit cap
if hasattr(sys, 'set_int_max_str_digits'):
    sys.set_int_max_str_digits(0)

# Output Configuration
OUTPUT_FORMATS = ("decimal", "tree", "stats")
DEFAULT_FORMAT = os.getenv('HBN_DEFAULT_FORMAT', 'stats')
STATS_DECIMAL_BITS = 64  # Stats fields past this bitsize print as trees

# Differential Testing
DIFFERENTIAL_BOUND = 64
DIFFERENTIAL_TRIALS = 0
DIFFERENTIAL_SEED = 42
RANDOM_OPERAND_BITS = 256
MUL_OPERAND_BITS = 128   # random mul operands are narrower
EXP2_ORACLE_LIMIT = 64   # exp2 is checked for k <= this
SHIFT_ORACLE_LIMIT = 64  # left_shift is checked for shifts <= this
DIFFERENTIAL_WORKERS = int(os.getenv('HBN_DIFFERENTIAL_WORKERS', 4))

if DEFAULT_FORMAT not in OUTPUT_FORMATS:
    logging.getLogger('hbn.config').warning(
        f"[boundary:error] Unknown HBN_DEFAULT_FORMAT {DEFAULT_FORMAT!r}, using stats")
    DEFAULT_FORMAT = "stats"
