"""
Dehornoy's order via handle reduction, Dehornoy floors and bounds on the
fractional Dehn twist coefficient.

A sigma_i-handle is a factor s_i^e v s_i^-e where v only uses generators of
index > i. Reducing it deletes the two end letters and replaces each letter
s_{i+1}^d of v by s_{i+1}^-e s_i^d s_{i+1}^e. We always reduce the handle
whose right end is leftmost; it contains no other handle, so the procedure
terminates and its output is handle-free.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple
import logging

from core.braid_core import (
    concat, cyclic_reduce, delta_sq, free_reduce, inverse, power,
)
from core.constants import get_default_max_word_length, get_default_step_budget
from core.logging_config import log_function_call
from core.models import BraidWord, FdtcBounds, OrderSign, ReducedWord, WordClass
from core.validation import BudgetExceeded, InputValidator, ValidationError

logger = logging.getLogger(__name__)


def _find_handle(letters: Sequence[int]) -> Optional[Tuple[int, int]]:
    """Handle (p, q) with the leftmost right end q, or None"""
    last: Dict[int, int] = {}
    for q, letter in enumerate(letters):
        index = abs(letter)
        p = -1
        for k, position in last.items():
            if k <= index and position > p:
                p = position
        if p >= 0 and abs(letters[p]) == index and (letters[p] > 0) != (letter > 0):
            return p, q
        last[index] = q
    return None


def _reduce_handle(letters: List[int], p: int, q: int) -> List[int]:
    index = abs(letters[p])
    e = 1 if letters[p] > 0 else -1
    middle: List[int] = []
    for letter in letters[p + 1:q]:
        if abs(letter) == index + 1:
            d = 1 if letter > 0 else -1
            middle.extend((-e * (index + 1), d * index, e * (index + 1)))
        else:
            middle.append(letter)
    return letters[:p] + middle + letters[q + 1:]


def _classify(word: BraidWord, steps: int) -> ReducedWord:
    if not word.letters:
        return ReducedWord(word, WordClass.EMPTY, None, steps)
    minimal = min(abs(letter) for letter in word.letters)
    first = next(letter for letter in word.letters if abs(letter) == minimal)
    classification = WordClass.SIGMA_POSITIVE if first > 0 else WordClass.SIGMA_NEGATIVE
    return ReducedWord(word, classification, minimal, steps)


def handle_reduce(
    w: BraidWord,
    budget: Optional[int] = None,
    max_length: Optional[int] = None,
) -> ReducedWord:
    """
    Reduce handles until none remain.

    Args:
        w: Word to reduce
        budget: Maximum number of handle reductions (config default if None)
        max_length: Word-length cap during reduction (config default if None)

    Returns:
        Handle-free word for the same braid with its classification

    Raises:
        BudgetExceeded: if either cap is hit
    """
    if budget is None:
        budget = get_default_step_budget()
    if max_length is None:
        max_length = get_default_max_word_length()
    InputValidator.validate_positive_int(budget, "budget")

    letters = list(free_reduce(w).letters)
    steps = 0
    while True:
        handle = _find_handle(letters)
        if handle is None:
            break
        if steps >= budget:
            logger.warning(f"Handle reduction budget {budget} exhausted on {w}")
            raise BudgetExceeded(f"Handle reduction exceeded {budget} steps", limit="step_budget")
        letters = _reduce_handle(letters, *handle)
        steps += 1
        if len(letters) > max_length:
            logger.warning(f"Handle reduction word length {len(letters)} over cap {max_length}")
            raise BudgetExceeded(
                f"Handle reduction word length exceeded {max_length}", limit="max_word_length"
            )

    logger.debug(f"Reduced {len(w)} letters in {steps} steps to {len(letters)} letters")
    return _classify(BraidWord(w.strands, tuple(letters)), steps)


def order_sign(w: BraidWord, budget: Optional[int] = None) -> OrderSign:
    return handle_reduce(w, budget).sign


def less(a: BraidWord, b: BraidWord, budget: Optional[int] = None) -> bool:
    """a < b in Dehornoy's order, i.e. a^-1 b > 1"""
    return order_sign(concat(inverse(a), b), budget) is OrderSign.POSITIVE


def equals(a: BraidWord, b: BraidWord, budget: Optional[int] = None) -> bool:
    """Word problem: a and b represent the same braid"""
    return order_sign(concat(inverse(a), b), budget) is OrderSign.ZERO


def _at_least_twists(w: BraidWord, m: int, budget: Optional[int]) -> bool:
    """Delta^{2m} <= w"""
    shifted = concat(power(delta_sq(w.strands), -m), w)
    return order_sign(shifted, budget) is not OrderSign.NEGATIVE


@log_function_call()
def dehornoy_floor(w: BraidWord, budget: Optional[int] = None) -> int:
    """The integer m with Delta^{2m} <= w < Delta^{2m+2}"""
    if w.strands < 2:
        raise ValidationError("Dehornoy floor needs at least 2 strands")

    if _at_least_twists(w, 0, budget):
        low, step = 0, 1
        while _at_least_twists(w, step, budget):
            low, step = step, step * 2
        high = step
    else:
        high, step = 0, -1
        while not _at_least_twists(w, step, budget):
            high, step = step, step * 2
        low = step

    # invariant: low satisfies, high does not
    while high - low > 1:
        middle = (low + high) // 2
        if _at_least_twists(w, middle, budget):
            low = middle
        else:
            high = middle
    return low


@log_function_call()
def fdtc_bounds(w: BraidWord, depth: int, budget: Optional[int] = None) -> FdtcBounds:
    """floor(w^depth)/depth <= C(w) <= (floor(w^depth) + 1)/depth"""
    InputValidator.validate_positive_int(depth, "depth")
    floor = dehornoy_floor(power(w, depth), budget)
    lower = Fraction(floor, depth)
    return FdtcBounds(lower=lower, upper=lower + Fraction(1, depth), depth=depth)


def shortest_spelling(w: BraidWord, extra: Sequence[BraidWord] = (),
                      budget: Optional[int] = None) -> BraidWord:
    """Shortest word with the same closed braid among cheap candidates.

    Candidates are w and each of extra (callers vouch for them), their free and
    cyclic reductions, and the handle-reduced form of each. Ties keep the
    earliest candidate.
    """
    candidates: List[BraidWord] = []
    for word in (w, *extra):
        candidates.append(free_reduce(word))
        candidates.append(cyclic_reduce(word))
        try:
            reduced = handle_reduce(word, budget).word
        except BudgetExceeded:
            continue
        candidates.append(reduced)
        candidates.append(cyclic_reduce(reduced))
    return min(candidates, key=len)
