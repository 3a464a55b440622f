"""
File I/O for grid diagrams and braid-word input.

A path of "-" means standard input (or standard output when saving).
"""

import sys
from pathlib import Path
from typing import Union
import logging

from core.grid import from_json, to_json
from core.models import GridDiagram
from core.validation import MalformedJson

# Get logger for this module
logger = logging.getLogger(__name__)

STDIO_PATH = "-"


def read_text_input(source: Union[str, Path]) -> str:
    """Read text from a file, or from standard input when source is "-" """
    source_str = str(source)
    if source_str == STDIO_PATH:
        logger.debug("Reading input from standard input")
        return sys.stdin.read()

    try:
        with open(source_str, 'r', encoding='utf-8') as f:
            return f.read()
    except FileNotFoundError:
        logger.error(f"File not found: '{source_str}'")
        raise FileNotFoundError(f"File not found: '{source_str}'")
    except (IOError, OSError) as e:
        logger.error(f"Failed to read file '{source_str}': {str(e)}")
        raise IOError(f"Failed to read file '{source_str}': {str(e)}")


class GridIO:
    """Input/output operations for grid diagrams."""

    @staticmethod
    def save_json(grid: GridDiagram, file_path: Union[str, Path]) -> None:
        """Save a grid as {"n": n, "X": [...], "O": [...]}"""
        file_path_str = str(file_path)
        text = to_json(grid)

        if file_path_str == STDIO_PATH:
            sys.stdout.write(text + "\n")
            return

        logger.info(f"Saving grid of size {grid.n} to {file_path_str}")
        try:
            with open(file_path_str, 'w', encoding='utf-8') as f:
                f.write(text + "\n")
            logger.info(f"Successfully saved grid to {file_path_str}")
        except (IOError, OSError) as e:
            logger.error(f"Failed to write to file '{file_path_str}': {str(e)}")
            raise IOError(f"Failed to write to file '{file_path_str}': {str(e)}")

    @staticmethod
    def load_json(file_path: Union[str, Path]) -> GridDiagram:
        """Load a grid; raises MalformedJson or InvalidGrid on bad content"""
        file_path_str = str(file_path)
        logger.info(f"Loading grid from {file_path_str}")

        text = read_text_input(file_path_str)
        try:
            grid = from_json(text)
        except MalformedJson as e:
            logger.error(f"Invalid grid JSON in '{file_path_str}': {str(e)}")
            raise
        logger.info(f"Successfully loaded grid of size {grid.n} from {file_path_str}")
        return grid
