"""
Configuration management for braidfloer.
"""

import os
import json
import logging
from pathlib import Path
from typing import Optional
from dataclasses import dataclass, asdict, field

from core.constants import (
    VERSION, APP_NAME, DEFAULT_STEP_BUDGET, DEFAULT_MAX_WORD_LENGTH, DEFAULT_FDTC_DEPTH,
    DEFAULT_CONJUGATOR_RADIUS, DEFAULT_ESCALATION_RADIUS, DEFAULT_SPELLING_SEARCH_CAP,
    DEFAULT_N_MAX, DEFAULT_MAX_MATRIX_ENTRIES, DEFAULT_SEED, DEFAULT_MAX_SWEEP_GRID,
)

logger = logging.getLogger(__name__)


@dataclass
class PathConfig:
    """Path configuration settings"""
    app_data_dir: Path
    log_file: Optional[Path] = None

    def __post_init__(self):
        """Ensure the data directory exists"""
        try:
            self.app_data_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            logger.warning(f"Could not create {self.app_data_dir}: {e}")


@dataclass
class DehornoyConfig:
    """Handle reduction budgets"""
    step_budget: int = DEFAULT_STEP_BUDGET
    max_word_length: int = DEFAULT_MAX_WORD_LENGTH
    default_fdtc_depth: int = DEFAULT_FDTC_DEPTH


@dataclass
class SearchConfig:
    """Conjugator and spelling search settings"""
    conjugator_radius: int = DEFAULT_CONJUGATOR_RADIUS
    escalation_radius: int = DEFAULT_ESCALATION_RADIUS
    spelling_search_cap: int = DEFAULT_SPELLING_SEARCH_CAP


@dataclass
class SolverConfig:
    """Grid homology solver limits"""
    n_max: int = DEFAULT_N_MAX
    max_matrix_entries: int = DEFAULT_MAX_MATRIX_ENTRIES


@dataclass
class SweepConfig:
    """Batch sweep settings"""
    seed: int = DEFAULT_SEED
    floor_samples: int = 200
    floor_word_length: int = 8
    sigma1_samples: int = 100
    sigma1_word_length: int = 6
    functoriality_samples: int = 20
    max_grid_size: int = DEFAULT_MAX_SWEEP_GRID


@dataclass
class DevelopmentConfig:
    """Development and debugging configuration"""
    debug_mode: bool = False
    log_level: str = "WARNING"
    log_to_file: bool = False


_SECTIONS = {
    'dehornoy': DehornoyConfig,
    'search': SearchConfig,
    'solver': SolverConfig,
    'sweep': SweepConfig,
    'development': DevelopmentConfig,
}


def _env_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}")
        return None


@dataclass
class BraidFloerConfig:
    """Central configuration for braidfloer"""
    paths: PathConfig
    dehornoy: DehornoyConfig = field(default_factory=DehornoyConfig)
    search: SearchConfig = field(default_factory=SearchConfig)
    solver: SolverConfig = field(default_factory=SolverConfig)
    sweep: SweepConfig = field(default_factory=SweepConfig)
    development: DevelopmentConfig = field(default_factory=DevelopmentConfig)

    version: str = VERSION
    app_name: str = APP_NAME

    @classmethod
    def get_default_paths(cls) -> PathConfig:
        """Get default path configuration based on platform"""
        if os.name == 'nt':
            base_dir = Path.home() / "AppData" / "Local" / "braidfloer"
        elif os.name == 'posix' and os.uname().sysname == 'Darwin':
            base_dir = Path.home() / "Library" / "Application Support" / "braidfloer"
        elif os.name == 'posix':
            base_dir = Path.home() / ".config" / "braidfloer"
        else:
            base_dir = Path.home() / ".braidfloer"

        return PathConfig(app_data_dir=base_dir, log_file=base_dir / "braidfloer.log")

    @classmethod
    def create_default(cls) -> 'BraidFloerConfig':
        """Create default configuration"""
        return cls(paths=cls.get_default_paths())

    @classmethod
    def get_default_config_path(cls) -> Path:
        """Get the default configuration file path"""
        return cls.get_default_paths().app_data_dir / "config.json"

    @classmethod
    def load_from_file(cls, config_path: Optional[Path] = None) -> 'BraidFloerConfig':
        """Load configuration from file, falling back to defaults when absent"""
        if config_path is None:
            config_path = cls.get_default_config_path()

        if not config_path.exists():
            return cls.create_default()

        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                data = json.load(f)

            if 'paths' in data:
                paths_data = data['paths']
                for key, value in paths_data.items():
                    if value is not None:
                        paths_data[key] = Path(value)
                data['paths'] = PathConfig(**paths_data)
            else:
                data['paths'] = cls.get_default_paths()

            for name, section in _SECTIONS.items():
                if name in data:
                    data[name] = section(**data[name])

            return cls(**data)

        except (json.JSONDecodeError, TypeError, KeyError) as e:
            logger.warning(f"Corrupt configuration {config_path}: {e}; using defaults")
            backup_path = config_path.with_suffix('.backup')
            config_path.rename(backup_path)
            return cls.create_default()

    def save_to_file(self, config_path: Optional[Path] = None) -> None:
        """Save configuration to file"""
        if config_path is None:
            config_path = self.get_default_config_path()

        config_path.parent.mkdir(parents=True, exist_ok=True)

        data = asdict(self)
        paths_data = data['paths']
        for key, value in paths_data.items():
            if isinstance(value, Path):
                paths_data[key] = str(value)

        try:
            with open(config_path, 'w', encoding='utf-8') as f:
                json.dump(data, f, indent=2, ensure_ascii=False)
        except (IOError, OSError) as e:
            raise RuntimeError(f"Failed to save configuration: {e}")

    def update_from_env(self) -> None:
        """Update configuration from BRAIDFLOER_* environment variables"""
        n_max = _env_int("BRAIDFLOER_N_MAX")
        if n_max is not None:
            self.solver.n_max = n_max
        max_entries = _env_int("BRAIDFLOER_MAX_ENTRIES")
        if max_entries is not None:
            self.solver.max_matrix_entries = max_entries
        step_budget = _env_int("BRAIDFLOER_STEP_BUDGET")
        if step_budget is not None:
            self.dehornoy.step_budget = step_budget
        radius = _env_int("BRAIDFLOER_RADIUS")
        if radius is not None:
            self.search.conjugator_radius = radius
        seed = _env_int("BRAIDFLOER_SEED")
        if seed is not None:
            self.sweep.seed = seed

        if os.getenv("BRAIDFLOER_DEBUG"):
            self.development.debug_mode = os.getenv("BRAIDFLOER_DEBUG").lower() in ("true", "1", "yes")
        if os.getenv("BRAIDFLOER_LOG_LEVEL"):
            self.development.log_level = os.getenv("BRAIDFLOER_LOG_LEVEL").upper()

    def get_log_path(self) -> Optional[Path]:
        """Get the log file path"""
        return self.paths.log_file

    def validate(self) -> bool:
        """Validate configuration settings"""
        try:
            assert self.dehornoy.step_budget > 0
            assert self.dehornoy.max_word_length > 0
            assert self.dehornoy.default_fdtc_depth >= 1

            assert self.search.conjugator_radius >= 0
            assert self.search.escalation_radius >= self.search.conjugator_radius
            assert self.search.spelling_search_cap >= 1

            assert self.solver.n_max >= 2
            assert self.solver.max_matrix_entries > 0

            assert self.sweep.floor_samples >= 0
            assert self.sweep.sigma1_samples >= 0
            assert self.sweep.functoriality_samples >= 0
            assert self.sweep.max_grid_size >= 2

            assert self.development.log_level in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
            return True
        except AssertionError:
            return False


# Global configuration instance
_global_config: Optional[BraidFloerConfig] = None


def get_config() -> BraidFloerConfig:
    """Get the global configuration instance"""
    global _global_config
    if _global_config is None:
        _global_config = BraidFloerConfig.load_from_file()
        _global_config.update_from_env()
    return _global_config


def set_config(config: Optional[BraidFloerConfig]) -> None:
    """Set (or with None, reset) the global configuration instance"""
    global _global_config
    _global_config = config


def initialize_config(config_path: Optional[Path] = None) -> BraidFloerConfig:
    """Initialize the global configuration"""
    global _global_config
    _global_config = BraidFloerConfig.load_from_file(config_path)
    _global_config.update_from_env()

    if not _global_config.validate():
        raise RuntimeError("Configuration validation failed")

    return _global_config


def is_debug_mode() -> bool:
    """Check if debug mode is enabled"""
    return get_config().development.debug_mode
