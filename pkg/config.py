import os

# --- Environment ---

SKEWHOOK_THREADS = max(1, int(os.getenv("SKEWHOOK_THREADS", "1")))
SKEWHOOK_DEBUG = os.getenv("SKEWHOOK_DEBUG", "0") == "1"
SKEWHOOK_SEED = int(os.getenv("SKEWHOOK_SEED", "20240229"))
SKEWHOOK_OUTPUT_DIR = os.getenv("SKEWHOOK_OUTPUT_DIR", "output")

# --- Sweep Defaults ---

DEFAULT_SWEEP_MAX_SIZE = 7
FORMULA_SWEEP_MAX_SIZE = 8
Q_SWEEP_MAX_SIZE = 6
DEFAULT_Q_DEGREE = 12
LITTLEWOOD_Q_DEGREE = 15
HG_EXHAUSTIVE_MAX_SIZE = 5
HG_EXHAUSTIVE_MAX_ENTRY = 3
HG_RANDOM_COUNT = 10000
HG_RANDOM_MAX_SIZE = 10
HG_RANDOM_MAX_ENTRY = 6
RESTRICTED_MAX_SIZE = 6
RESTRICTED_MAX_ENTRY = 3
RESTRICTED_ARRAY_MAX_ENTRY = 2

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'
