#!/usr/bin/env python3
"""
braidfloer - Dehornoy's order, grid diagrams and the transverse invariant theta-hat.
Main entry point for the command-line tool.
"""

import sys
import os
from typing import List, Optional

# Add the project root to the Python path
project_root = os.path.dirname(os.path.abspath(__file__))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

# Import configuration and logging before other modules
from core.config import initialize_config
from core.logging_config import initialize_logging, get_logger


def setup_application() -> bool:
    """
    Initialize the application configuration and logging.

    Returns:
        True if setup was successful, False otherwise
    """
    try:
        config = initialize_config()
        initialize_logging()

        app_logger = get_logger('braidfloer.startup')
        app_logger.info(f"Starting braidfloer v{config.version}")
        app_logger.info(f"Application data directory: {config.paths.app_data_dir}")
        app_logger.info(f"Solver limits: n_max={config.solver.n_max}, "
                        f"max_matrix_entries={config.solver.max_matrix_entries}")
        return True

    except Exception as e:
        # Use stderr since logging might not be set up yet
        print(f"Error during application setup: {e}", file=sys.stderr)
        return False


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for braidfloer.

    Returns:
        Exit code (see cli.commands)
    """
    if not setup_application():
        print("Failed to initialize application", file=sys.stderr)
        return 1

    from cli.commands import run
    return run(argv)


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        sys.exit(130)
