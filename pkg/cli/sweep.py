"""
Batch sweeps cross-checking right-veering certificates against theta-hat.

Random choices come from random.Random (Mersenne Twister) seeded explicitly,
so a seed reproduces a sweep on every platform.
"""

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence
import logging

from core.braid_core import free_reduce, remove_letter
from core.constants import LAYOUT_COMPACT
from core.dehornoy import dehornoy_floor
from core.grid import braid_to_grid
from core.gridhf import SolverLimits, braid_theta_nonvanishing
from core.logging_config import LoggingContext
from core.models import BraidWord, MurasugiForm, MurasugiVariant, RvStatus, ThetaStatus
from core.rv import murasugi_classify_rv, murasugi_spellings, murasugi_word, sigma1_negative_witness
from core.validation import BudgetExceeded

logger = logging.getLogger(__name__)

SKIPPED_LIMIT = "max_grid_size"

MURASUGI_DEGREES = (-1, 0, 1)
MURASUGI_A_VECTORS = ((1,), (2,), (0, 1), (0, 2), (1, 0), (2, 0), (1, 1), (1, 2), (2, 1), (2, 2))
MURASUGI_B_EXPONENTS = tuple(range(-3, 4))
MURASUGI_C_EXPONENTS = (-1, -2, -3)

# sigma1 s2 s3 s3 s2 s1, the positive half of beta_{1,4}
FLOOR_TEMPLATE_CORE = (1, 2, 3, 3, 2, 1)
FLOOR_TEMPLATE_STRANDS = 4
SIGMA1_STRANDS = 3
MAX_DRAWS_PER_SAMPLE = 1000


@dataclass
class SweepReport:
    """Counts and verbatim counterexamples of one sweep"""
    name: str
    checked: int = 0
    mismatches: int = 0
    aborted: int = 0
    skipped: int = 0
    counterexamples: List[str] = field(default_factory=list)
    skipped_items: List[str] = field(default_factory=list)

    def record_mismatch(self, description: str) -> None:
        self.mismatches += 1
        self.counterexamples.append(description)
        logger.warning(f"{self.name} sweep counterexample: {description}")

    def record_skip(self, description: str) -> None:
        self.skipped += 1
        self.skipped_items.append(description)

    @property
    def passed(self) -> bool:
        return self.mismatches == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'checked': self.checked,
            'mismatches': self.mismatches,
            'aborted': self.aborted,
            'skipped': self.skipped,
            'counterexamples': list(self.counterexamples),
            'skipped_items': list(self.skipped_items),
        }

    def __str__(self) -> str:
        lines = [
            f"{self.name}: checked={self.checked} mismatches={self.mismatches} "
            f"aborted={self.aborted} skipped={self.skipped}"
        ]
        lines.extend(f"  counterexample: {example}" for example in self.counterexamples)
        lines.extend(f"  skipped: {item}" for item in self.skipped_items)
        return "\n".join(lines)


def murasugi_forms() -> Iterator[MurasugiForm]:
    """Every Murasugi form of the desk-scale sweep, in a fixed order"""
    for d in MURASUGI_DEGREES:
        for a in MURASUGI_A_VECTORS:
            yield MurasugiForm(MurasugiVariant.A, d, a=a)
        for m in MURASUGI_B_EXPONENTS:
            yield MurasugiForm(MurasugiVariant.B, d, m=m)
        for m in MURASUGI_C_EXPONENTS:
            yield MurasugiForm(MurasugiVariant.C, d, m=m)


def _tally(report: SweepReport, status: ThetaStatus, limit: Optional[str], item: str) -> bool:
    """Count skipped and aborted items; True when the item has a verdict"""
    if status is ThetaStatus.ABORTED:
        if limit == SKIPPED_LIMIT:
            report.record_skip(item)
        else:
            report.aborted += 1
        return False
    report.checked += 1
    return True


def murasugi_sweep(limits: Optional[SolverLimits] = None, max_grid_size: Optional[int] = None) -> SweepReport:
    """Right-veering exactly when theta-hat is nonzero, over the Murasugi forms"""
    report = SweepReport("murasugi")
    with LoggingContext("Murasugi sweep", logger):
        for form in murasugi_forms():
            verdict = murasugi_classify_rv(form)
            word = murasugi_word(form)
            theta = braid_theta_nonvanishing(
                word, limits, extra=murasugi_spellings(form), max_grid_size=max_grid_size
            )
            if not _tally(report, theta.status, theta.limit, f"{form.describe()} {word}"):
                continue
            right_veering = verdict.status is RvStatus.RIGHT_VEERING
            if right_veering != (theta.status is ThetaStatus.NONZERO):
                report.record_mismatch(f"{form.describe()} {word}: {verdict} but theta {theta}")
    return report


def sample_floor_word(rng: random.Random, max_length: int) -> BraidWord:
    """Rotated template word: the core with up to two random letters inserted"""
    letters = list(FLOOR_TEMPLATE_CORE)
    alphabet = [letter for index in range(1, FLOOR_TEMPLATE_STRANDS) for letter in (index, -index)]
    for _ in range(rng.randrange(3)):
        letters.insert(rng.randrange(len(letters) + 1), rng.choice(alphabet))
    shift = rng.randrange(len(letters))
    letters = letters[shift:] + letters[:shift]
    word = free_reduce(BraidWord(FLOOR_TEMPLATE_STRANDS, tuple(letters)))
    return BraidWord(word.strands, word.letters[:max_length])


def floor_words(seed: int, samples: int, max_length: int) -> List[BraidWord]:
    """Seeded sample (with replacement) of B4 words of bounded length with floor >= 1"""
    rng = random.Random(seed)
    words: List[BraidWord] = []
    for _ in range(MAX_DRAWS_PER_SAMPLE * samples):
        if len(words) == samples:
            break
        word = sample_floor_word(rng, max_length)
        if word.letters and dehornoy_floor(word) >= 1:
            words.append(word)
    if len(words) < samples:
        logger.warning(f"Only {len(words)} of {samples} floor words found")
    return words


def floor_sweep(seed: int, samples: int, max_length: int,
                limits: Optional[SolverLimits] = None,
                max_grid_size: Optional[int] = None) -> SweepReport:
    """A Dehornoy floor of at least one never meets a vanishing theta-hat"""
    report = SweepReport("floor")
    with LoggingContext(f"floor sweep ({samples} samples, seed {seed})", logger):
        for word in floor_words(seed, samples, max_length):
            theta = braid_theta_nonvanishing(word, limits, max_grid_size=max_grid_size)
            if not _tally(report, theta.status, theta.limit, str(word)):
                continue
            if theta.status is not ThetaStatus.NONZERO:
                report.record_mismatch(f"{word}: floor >= 1 but theta {theta}")
    return report


def _random_word(rng: random.Random, strands: int, max_length: int) -> BraidWord:
    length = rng.randint(1, max_length)
    letters = [rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)]
    return free_reduce(BraidWord(strands, tuple(letters)))


def sigma1_negative_words(seed: int, samples: int, max_length: int,
                          max_grid_size: int) -> List[BraidWord]:
    """Seeded random 3-braids certified non-right-veering by a sigma1-negative spelling"""
    rng = random.Random(seed)
    words: List[BraidWord] = []
    for _ in range(MAX_DRAWS_PER_SAMPLE * samples):
        if len(words) == samples:
            break
        word = _random_word(rng, SIGMA1_STRANDS, max_length)
        if not word.letters or braid_to_grid(word, LAYOUT_COMPACT).n > max_grid_size:
            continue
        try:
            if sigma1_negative_witness(word):
                words.append(word)
        except BudgetExceeded:
            continue
    if len(words) < samples:
        logger.warning(f"Only {len(words)} of {samples} sigma1-negative words found")
    return words


def sigma1_sweep(seed: int, samples: int, max_length: int,
                 limits: Optional[SolverLimits] = None,
                 max_grid_size: int = 9) -> SweepReport:
    """A sigma1-negative spelling forces theta-hat to vanish"""
    report = SweepReport("sigma1-negative")
    with LoggingContext(f"sigma1-negative sweep ({samples} samples, seed {seed})", logger):
        for word in sigma1_negative_words(seed, samples, max_length, max_grid_size):
            theta = braid_theta_nonvanishing(word, limits, max_grid_size=max_grid_size)
            if not _tally(report, theta.status, theta.limit, str(word)):
                continue
            if theta.status is not ThetaStatus.ZERO:
                report.record_mismatch(f"{word}: sigma1-negative but theta {theta}")
    return report


def functoriality_sweep(seed: int, samples: int, max_length: int = 5,
                        limits: Optional[SolverLimits] = None,
                        max_grid_size: Optional[int] = None) -> SweepReport:
    """Resolving a positive crossing keeps a vanishing theta-hat vanishing"""
    report = SweepReport("functoriality")
    rng = random.Random(seed)
    with LoggingContext(f"functoriality sweep ({samples} samples, seed {seed})", logger):
        for _ in range(samples):
            word = _random_word(rng, SIGMA1_STRANDS, max_length)
            positions = [i for i, letter in enumerate(word.letters) if letter > 0]
            if not positions:
                report.record_skip(f"{word}: no positive letter")
                continue
            resolved = remove_letter(word, rng.choice(positions))
            with_crossing = braid_theta_nonvanishing(word, limits, max_grid_size=max_grid_size)
            without = braid_theta_nonvanishing(resolved, limits, max_grid_size=max_grid_size)
            worst = without if without.status is ThetaStatus.ABORTED else with_crossing
            if not _tally(report, worst.status, worst.limit, f"{word} -> {resolved}"):
                continue
            if with_crossing.status is ThetaStatus.ZERO and without.status is ThetaStatus.NONZERO:
                report.record_mismatch(f"{word} -> {resolved}: theta {with_crossing} then {without}")
    return report


SWEEPS = ('murasugi', 'floor', 'sigma1', 'functoriality')


def run_sweeps(names: Sequence[str] = SWEEPS, seed: Optional[int] = None,
               progress: Optional[Callable[[SweepReport], None]] = None) -> List[SweepReport]:
    """Run the named sweeps with configured sizes; reports come back in SWEEPS order"""
    from core.config import get_config
    settings = get_config().sweep
    if seed is None:
        seed = settings.seed
    limits = SolverLimits.from_config()

    runners: Dict[str, Callable[[], SweepReport]] = {
        'murasugi': lambda: murasugi_sweep(limits, settings.max_grid_size),
        'floor': lambda: floor_sweep(seed, settings.floor_samples, settings.floor_word_length,
                                     limits, settings.max_grid_size),
        'sigma1': lambda: sigma1_sweep(seed, settings.sigma1_samples, settings.sigma1_word_length,
                                       limits, min(settings.max_grid_size, 9)),
        'functoriality': lambda: functoriality_sweep(seed, settings.functoriality_samples,
                                                     limits=limits,
                                                     max_grid_size=settings.max_grid_size),
    }
    reports = []
    for name in SWEEPS:
        if name not in names:
            continue
        report = runners[name]()
        reports.append(report)
        if progress is not None:
            progress(report)
    return reports
