"""
Configuration File for the Weyl-cells toolkit
Enumeration bounds, verification ranges, worker pool and logging settings
"""

import os

# ============================================
# ENUMERATION BOUNDS
# ============================================
# Largest n for which full enumerations are allowed (SYT lists, right cells,
# W_{p,q}, the good-full cell search). WEYL_CELLS_MAX_N overrides it.
DEFAULT_ENUMERATION_MAX_N = 12
ENUMERATION_MAX_N = int(os.environ.get("WEYL_CELLS_MAX_N", DEFAULT_ENUMERATION_MAX_N))

# Compact digit form ("4213") is only unambiguous while every value is one digit
COMPACT_PERM_MAX_N = 9

# ============================================
# VERIFY SETTINGS
# ============================================
VERIFY_DEFAULT_N = 7
VERIFY_MIN_N = 2
VERIFY_MAX_N = 9           # 9! = 362,880 permutations

# Checks that only evaluate formulas (or enumerate small objects) run on a
# fixed range of n, independent of --n
FORMULA_CHECK_MAX_N = 14   # cell-count identity, two-column hooks
WEIGHT_FORMULA_MAX_N = 12  # displayed -w_{p,q,m} rho
CELL_CHECK_MAX_N = 10      # cell sizes, sigma/w agreement, m uniqueness
HOOK_CHECK_MAX_N = 10      # hook formula vs SYT enumeration
PATTERN_ORACLE_MAX_N = 6   # DFS pattern search vs k-subset scan

# Upper caps on checks that sweep S_n (they never exceed --n either)
GROUP_ACTION_MAX_N = 8
WPQ_CENSUS_MAX_N = 8

# ============================================
# PERFORMANCE SETTINGS
# ============================================
MAX_WORKERS = 4            # Parallel threads per check
CHUNK_SIZE = 2520          # Cases handed to one worker at a time
RS_CACHE_SIZE = 1 << 16    # Memoised Robinson-Schensted pairs (covers S_8)
CELL_CACHE_SIZE = 1 << 14  # Memoised right cells (one entry per P-tableau)

# ============================================
# LOGGING
# ============================================
LOG_FILE = None            # e.g. "weyl_cells.log"; None disables the file handler
LOG_LEVEL = "WARNING"      # Console level; the CLI raises it with --verbose
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'
