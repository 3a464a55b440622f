"""
Constants for braidfloer with dynamic configuration support.
"""

from typing import Union

# Static constants that don't change
APP_NAME = "braidfloer"
VERSION = "0.1.0"

# Exit codes of the command-line front end
EXIT_OK = 0
EXIT_PROPERTY_VIOLATED = 1
EXIT_USAGE = 2
EXIT_ABORTED = 3

# Handle reduction
DEFAULT_STEP_BUDGET = 1_000_000
DEFAULT_MAX_WORD_LENGTH = 1_000_000
DEFAULT_FDTC_DEPTH = 4

# Conjugator and spelling searches
DEFAULT_CONJUGATOR_RADIUS = 4
DEFAULT_ESCALATION_RADIUS = 6
DEFAULT_SPELLING_SEARCH_CAP = 5000

# Grid homology solver
DEFAULT_N_MAX = 11
DEFAULT_MAX_MATRIX_ENTRIES = 20_000_000

# Sweeps
DEFAULT_SEED = 0
DEFAULT_MAX_SWEEP_GRID = 10

# Grid layouts accepted by braid_to_grid
LAYOUT_ISOLATED = "isolated"
LAYOUT_COMPACT = "compact"
GRID_LAYOUTS = (LAYOUT_ISOLATED, LAYOUT_COMPACT)

# ASCII rendering glyphs
GLYPH_X = "X"
GLYPH_O = "O"
GLYPH_EMPTY = "."

# h = (s1 s2)^3, the positive full twist on three strands, in its three usual spellings
FULL_TWIST_3 = (1, 2, 1, 2, 1, 2)
FULL_TWIST_3_SPELLINGS = (
    (1, 2, 1, 2, 1, 2),
    (1, 2, 2, 1, 2, 2),
    (2, 1, 1, 2, 1, 1),
)


def get_config_value(key: str, default_value: Union[int, float, str, bool]) -> Union[int, float, str, bool]:
    """
    Get a configuration value with fallback to default.

    Args:
        key: Configuration key path (e.g., 'solver.n_max')
        default_value: Default value if config is not available

    Returns:
        Configuration value or default
    """
    try:
        from core.config import get_config
        config = get_config()

        value = config
        for k in key.split('.'):
            value = getattr(value, k)
        return value
    except Exception:
        return default_value


def get_default_step_budget() -> int:
    """Handle reduction step budget from configuration or fallback"""
    return int(get_config_value('dehornoy.step_budget', DEFAULT_STEP_BUDGET))


def get_default_max_word_length() -> int:
    """Handle reduction word-length cap from configuration or fallback"""
    return int(get_config_value('dehornoy.max_word_length', DEFAULT_MAX_WORD_LENGTH))


def get_default_radius() -> int:
    """Conjugator search radius from configuration or fallback"""
    return int(get_config_value('search.conjugator_radius', DEFAULT_CONJUGATOR_RADIUS))


def get_default_n_max() -> int:
    """Largest grid the full solver accepts"""
    return int(get_config_value('solver.n_max', DEFAULT_N_MAX))


def get_default_max_matrix_entries() -> int:
    """Boundary matrix entry cap"""
    return int(get_config_value('solver.max_matrix_entries', DEFAULT_MAX_MATRIX_ENTRIES))


def get_default_spelling_cap() -> int:
    """Number of closure spellings tried by the fast-path search"""
    return int(get_config_value('search.spelling_search_cap', DEFAULT_SPELLING_SEARCH_CAP))
