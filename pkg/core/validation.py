"""
Error types and input validation utilities.
"""

from typing import Iterable, List, Sequence
import re
import logging

# Get logger for this module
logger = logging.getLogger(__name__)


class BraidFloerError(Exception):
    """Base class for all toolkit errors"""
    pass


class ValidationError(BraidFloerError):
    """Raised when input validation fails"""
    pass


class MalformedWord(ValidationError):
    """Raised when braid text or letters are not a valid braid word"""
    pass


class StrandMismatch(ValidationError):
    """Raised when braids with different strand counts are combined"""
    pass


class InvalidGrid(ValidationError):
    """Raised when X/O markings do not form a grid diagram"""
    pass


class MalformedJson(ValidationError):
    """Raised when grid JSON cannot be decoded"""
    pass


class LimitExceeded(BraidFloerError):
    """Raised when a configured computation limit fires"""

    def __init__(self, message: str, limit: str = ""):
        super().__init__(message)
        self.limit = limit


class BudgetExceeded(LimitExceeded):
    """Handle reduction step or word-length cap hit"""
    pass


class SizeLimitExceeded(LimitExceeded):
    """Grid larger than the solver's n_max"""
    pass


class MemoryBudgetExceeded(LimitExceeded):
    """Boundary matrix larger than the configured entry cap"""
    pass


_TOKEN_SPLIT = re.compile(r'[\s,]+')


class InputValidator:
    """Utility class for input validation"""

    @staticmethod
    def validate_strands(strands: int) -> int:
        """Validate a strand count"""
        if not isinstance(strands, int) or isinstance(strands, bool) or strands < 1:
            logger.warning(f"Validation failed: invalid strand count {strands!r}")
            raise MalformedWord(f"Strand count must be an integer >= 1, got {strands!r}")
        return strands

    @staticmethod
    def validate_letters(letters: Iterable[int], strands: int) -> List[int]:
        """Validate that every letter names a generator of B_strands"""
        checked = []
        for letter in letters:
            if not isinstance(letter, int) or isinstance(letter, bool):
                logger.warning(f"Non-integer letter: {letter!r}")
                raise MalformedWord(f"Letter {letter!r} is not an integer")
            if letter == 0:
                logger.warning("Zero letter in braid word")
                raise MalformedWord("Letter 0 does not name a generator")
            if abs(letter) > strands - 1:
                logger.warning(f"Letter {letter} out of range for {strands} strands")
                raise MalformedWord(
                    f"Letter {letter} needs |e| <= {strands - 1} on {strands} strands"
                )
            checked.append(letter)
        return checked

    @staticmethod
    def parse_letters(text: str) -> List[int]:
        """Split whitespace/comma-separated text into integer tokens"""
        cleaned = text.strip()
        if not cleaned:
            return []
        letters = []
        for token in _TOKEN_SPLIT.split(cleaned):
            if not token:
                continue
            try:
                letters.append(int(token))
            except ValueError:
                logger.warning(f"Invalid braid token: {token!r}")
                raise MalformedWord(f"Token {token!r} is not an integer")
        return letters

    @staticmethod
    def validate_same_strands(*strand_counts: int) -> int:
        """Validate that all strand counts agree"""
        distinct = set(strand_counts)
        if len(distinct) > 1:
            logger.warning(f"Strand mismatch: {sorted(distinct)}")
            raise StrandMismatch(f"Strand counts differ: {sorted(distinct)}")
        return strand_counts[0]

    @staticmethod
    def validate_permutation(images: Sequence[int], field_name: str) -> List[int]:
        """Validate that images is a bijection of range(len(images))"""
        size = len(images)
        values = list(images)
        if any(not isinstance(v, int) or isinstance(v, bool) for v in values):
            raise InvalidGrid(f"{field_name} must contain integers")
        if sorted(values) != list(range(size)):
            logger.warning(f"{field_name} is not a permutation: {values}")
            raise InvalidGrid(f"{field_name} is not a permutation of 0..{size - 1}")
        return values

    @staticmethod
    def validate_grid(n: int, xs: Sequence[int], os_: Sequence[int]) -> None:
        """Validate grid markings: two permutations of size n that never share a cell"""
        if not isinstance(n, int) or isinstance(n, bool) or n < 2:
            raise InvalidGrid(f"Grid size must be an integer >= 2, got {n!r}")
        if len(xs) != n or len(os_) != n:
            raise InvalidGrid(f"X and O must both have length {n}")
        InputValidator.validate_permutation(xs, "X")
        InputValidator.validate_permutation(os_, "O")
        for column, (x_row, o_row) in enumerate(zip(xs, os_)):
            if x_row == o_row:
                logger.warning(f"X and O share cell ({column}, {x_row})")
                raise InvalidGrid(f"Column {column} has X and O in the same row {x_row}")

    @staticmethod
    def validate_positive_int(value: int, field_name: str, minimum: int = 1) -> int:
        """Validate an integer parameter with a lower bound"""
        if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
            raise ValidationError(f"{field_name} must be an integer >= {minimum}, got {value!r}")
        return value
