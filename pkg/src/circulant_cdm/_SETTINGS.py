
_USE_LOGGING = True
_PRINT_DEBUG_LOG = not _USE_LOGGING  # stderr fallback when logging is off

# oracle guard: exhaustive search beyond this order is not desk-scale
ORACLE_MAX_N = 30

TIMEOUT_PER_INSTANCE = 60.0  # seconds
FAMILY_II_BUDGET = 60.0  # seconds

FAMILY_II_STRATEGY = "search"  # "search" | "additive"
FAMILY_II_FALLBACK = True  # additive construction after a search timeout

DEFAULT_WORKERS = 1
WORKERS_ENV = "CIRCULANT_CDM_WORKERS"

FLOAT_TOLERANCE = 1e-9

REPORT_SUFFIX = ".partial"
REPORT_PREFIX = "cdm_"
