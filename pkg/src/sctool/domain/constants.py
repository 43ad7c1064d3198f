"""
Domain constants for sctool.

Author: DmitrTRC
"""

# ═══════════════════════════════════════════════════════════
# Application
# ═══════════════════════════════════════════════════════════

APP_NAME = "sctool"
APP_VERSION = "1.0.0"

# ═══════════════════════════════════════════════════════════
# Input Format
# ═══════════════════════════════════════════════════════════

COMMENT_PREFIX = "#"
MULTIPLICITY_SUFFIX = "*"
EMPTY_APPROVAL_TOKEN = "-"

# ═══════════════════════════════════════════════════════════
# Oracle Guards
# ═══════════════════════════════════════════════════════════

MIN_ORACLE_VOTERS = 1
MAX_ORACLE_VOTERS = 8
MAX_BRUTE_FORCE_COMMITTEES = 1_000_000

# ═══════════════════════════════════════════════════════════
# Condorcet Sampling
# ═══════════════════════════════════════════════════════════

DEFAULT_TRIALS = 1000
DEFAULT_MAX_WEIGHT = 5

# ═══════════════════════════════════════════════════════════
# Generator
# ═══════════════════════════════════════════════════════════

GENERATED_CANDIDATE_PREFIX = "c"
MIN_GENERATOR_VERTICES = 2
