"""
Golden checks: order signs, Dehornoy floors, the word problem for the model
3-braids and the fast path on the model families.
"""

from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple
import logging

from core.braid_core import concat, delta_sq, full_twist_3, inverse, model_braid, power, sigma_power
from core.dehornoy import dehornoy_floor, equals, order_sign
from core.gridhf import fast_path_fires
from core.models import BraidWord, OrderSign
from core.validation import BraidFloerError

logger = logging.getLogger(__name__)

SELFTEST_GROUPS = ('order', 'floor', 'word', 'fast')

# Words whose Dehornoy sign is known by hand
ORDER_GOLDENS: Tuple[Tuple[int, Tuple[int, ...]], ...] = (
    (4, (3, 1, 1, -2, -2, -2, -2, -2, -3)),
    (6, (2, 5, -3, -3, 2, 2)),
)

# (strands, letters, floor)
FLOOR_GOLDENS: Tuple[Tuple[int, Tuple[int, ...], int], ...] = (
    (3, (1, 2, 1, 1, 2, 1, 1, -2), 1),
    (3, (1, 2, 1, 1, 2, 1, 2, -1), 0),
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self) -> str:
        text = f"{'PASS' if self.passed else 'FAIL'} {self.name}"
        return f"{text}: {self.detail}" if self.detail else text


def twisted_family(k: int) -> BraidWord:
    """s1 s2 s2 s1 s2^-k"""
    return BraidWord(3, (1, 2, 2, 1) + sigma_power(2, -k, 3).letters)


def full_twist_family(k: int) -> BraidWord:
    """h s2^-k"""
    return BraidWord(3, full_twist_3().letters + sigma_power(2, -k, 3).letters)


def _check(name: str, test: Callable[[], bool]) -> CheckResult:
    try:
        passed = test()
    except BraidFloerError as e:
        logger.warning(f"Selftest {name} raised {type(e).__name__}: {e}")
        return CheckResult(name, False, f"{type(e).__name__}: {e}")
    return CheckResult(name, passed)


def order_checks() -> List[CheckResult]:
    results = []
    for strands, letters in ORDER_GOLDENS:
        word = BraidWord(strands, letters)
        results.append(_check(f"sign {word} positive",
                              lambda w=word: order_sign(w) is OrderSign.POSITIVE))
        results.append(_check(f"sign of inverse of {word} negative",
                              lambda w=word: order_sign(inverse(w)) is OrderSign.NEGATIVE))
    return results


def floor_checks() -> List[CheckResult]:
    results = []
    for strands, letters, expected in FLOOR_GOLDENS:
        word = BraidWord(strands, letters)
        results.append(_check(f"floor {word} = {expected}",
                              lambda w=word, e=expected: dehornoy_floor(w) == e))
    for strands in (2, 3, 4):
        for m in range(-2, 3):
            word = power(delta_sq(strands), m)
            results.append(_check(f"floor Delta^{2 * m} on {strands} strands = {m}",
                                  lambda w=word, e=m: dehornoy_floor(w) == e))
    return results


def word_problem_checks() -> List[CheckResult]:
    results = []
    for k in range(0, 9):
        left = full_twist_family(k)
        right = concat(BraidWord(3, (1, 2, 2, 1)), sigma_power(2, 2 - k, 3))
        results.append(_check(f"h s2^-{k} = s1 s2^2 s1 s2^{2 - k}",
                              lambda a=left, b=right: equals(a, b)))
    return results


def fast_path_checks() -> List[CheckResult]:
    words = [twisted_family(k) for k in range(1, 9)]
    words += [full_twist_family(k) for k in range(1, 6)]
    words += [model_braid(k, n) for n in (4, 5) for k in (1, 2, 3)]
    return [_check(f"fast path on {word}", lambda w=word: fast_path_fires(w)) for word in words]


def run_selftest(groups: Optional[List[str]] = None) -> List[CheckResult]:
    """Run the golden checks; groups picks among order, floor, word, fast"""
    available = {
        'order': order_checks,
        'floor': floor_checks,
        'word': word_problem_checks,
        'fast': fast_path_checks,
    }
    results: List[CheckResult] = []
    for name, checks in available.items():
        if groups is None or name in groups:
            results.extend(checks())
    failed = [result for result in results if not result.passed]
    logger.info(f"Selftest: {len(results) - len(failed)} of {len(results)} checks passed")
    return results

