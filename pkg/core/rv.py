"""
Right-veering certification.

Every verdict is backed by a sound implication:
  - positive and quasipositive braids are right-veering;
  - a Dehornoy floor of at least one forces theta-hat != 0, hence right-veering;
  - for 3-braids theta-hat != 0 exactly when the braid is right-veering;
  - a conjugate spelled with s1^-1 and no s1 is non-right-veering.
Anything else is reported as unknown.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple
import logging

from core.braid_core import (
    conjugate, delta, expand_quasipositive, full_twist_3, power, sigma_power,
)
from core.constants import (
    DEFAULT_CONJUGATOR_RADIUS, DEFAULT_ESCALATION_RADIUS, FULL_TWIST_3_SPELLINGS,
    get_default_radius,
)
from core.dehornoy import dehornoy_floor, handle_reduce
from core.gridhf import SolverLimits, braid_theta_nonvanishing
from core.models import (
    BraidWord, Certificate, MurasugiForm, MurasugiVariant, QuasipositiveForm,
    RvStatus, RvVerdict, ThetaStatus, WordClass,
)

logger = logging.getLogger(__name__)


def sigma1_negative_witness(w: BraidWord, budget: Optional[int] = None) -> bool:
    """True iff w is spelled by some word with s1^-1 and no s1"""
    reduced = handle_reduce(w, budget)
    return reduced.classification is WordClass.SIGMA_NEGATIVE and reduced.index == 1


def _letter_order(strands: int) -> List[int]:
    letters = []
    for index in range(1, strands):
        letters.extend((index, -index))
    return letters


def conjugators(strands: int, radius: int) -> Iterator[BraidWord]:
    """Freely reduced words of length <= radius, shortest first, then lexicographic"""
    alphabet = _letter_order(strands)
    level: List[Tuple[int, ...]] = [()]
    for length in range(radius + 1):
        for letters in level:
            yield BraidWord(strands, letters)
        if length == radius:
            break
        level = [
            letters + (letter,)
            for letters in level
            for letter in alphabet
            if not letters or letters[-1] != -letter
        ]


def nonrv_search(w: BraidWord, radius: Optional[int] = None,
                 budget: Optional[int] = None) -> RvVerdict:
    """Search conjugators gamma with gamma w gamma^-1 spelled s1-negatively"""
    if radius is None:
        radius = get_default_radius()
    examined = 0
    for gamma in conjugators(w.strands, radius):
        examined += 1
        if sigma1_negative_witness(conjugate(w, gamma), budget):
            logger.info(f"Non-right-veering witness for {w} after {examined} conjugators")
            if gamma.is_identity_word():
                return RvVerdict(RvStatus.NON_RIGHT_VEERING, Certificate.SIGMA1_NEGATIVE_WORD, word=w)
            return RvVerdict(RvStatus.NON_RIGHT_VEERING, Certificate.CONJUGATE_WITNESS,
                             witness=gamma, word=w)
    logger.debug(f"No witness for {w} within radius {radius} ({examined} conjugators)")
    return RvVerdict(RvStatus.UNKNOWN, Certificate.BUDGET, word=w)


def _murasugi_tail(f: MurasugiForm) -> Tuple[int, ...]:
    if f.variant is MurasugiVariant.A:
        letters: List[int] = []
        for exponent in f.a:
            letters.append(1)
            letters.extend(sigma_power(2, -exponent, 3).letters)
        return tuple(letters)
    if f.variant is MurasugiVariant.B:
        return sigma_power(2, f.m, 3).letters
    return sigma_power(1, f.m, 3).letters + (-2,)


def _murasugi_with(f: MurasugiForm, twist: Tuple[int, ...]) -> BraidWord:
    h_power = power(BraidWord(3, twist), f.d)
    return BraidWord(3, h_power.letters + _murasugi_tail(f))


def murasugi_word(f: MurasugiForm) -> BraidWord:
    """h^d followed by the variant letters, h spelled (s1 s2)^3"""
    return _murasugi_with(f, full_twist_3().letters)


def murasugi_spellings(f: MurasugiForm) -> List[BraidWord]:
    """The form with each standard spelling of h (equal braids)"""
    return [_murasugi_with(f, twist) for twist in FULL_TWIST_3_SPELLINGS]


def _murasugi_is_rv(f: MurasugiForm) -> bool:
    if f.variant is MurasugiVariant.B:
        return f.d > 0 or (f.d == 0 and f.m >= 0)
    return f.d > 0


def murasugi_classify_rv(f: MurasugiForm) -> RvVerdict:
    """Right-veering decision for a Murasugi normal form; never unknown"""
    word = murasugi_word(f)
    if _murasugi_is_rv(f):
        if word.is_positive():
            certificate = Certificate.POSITIVE_WORD
        elif f.variant is MurasugiVariant.C:
            certificate = Certificate.QUASIPOSITIVE_INPUT
        else:
            certificate = Certificate.THREE_BRAID_THETA
        return RvVerdict(RvStatus.RIGHT_VEERING, certificate, word=word)

    # the remaining forms have s1 or s2 with only negative exponents;
    # conjugating by Delta exchanges s1 and s2
    if sigma1_negative_witness(word):
        return RvVerdict(RvStatus.NON_RIGHT_VEERING, Certificate.SIGMA1_NEGATIVE_WORD, word=word)
    gamma = delta(3)
    if sigma1_negative_witness(conjugate(word, gamma)):
        return RvVerdict(RvStatus.NON_RIGHT_VEERING, Certificate.CONJUGATE_WITNESS,
                         witness=gamma, word=word)
    verdict = nonrv_search(word)
    if verdict.status is not RvStatus.NON_RIGHT_VEERING:
        raise AssertionError(f"No non-right-veering certificate for {f.describe()}")
    return verdict


@dataclass(frozen=True)
class SearchBudget:
    """Limits for rv_status"""
    radius: int = DEFAULT_CONJUGATOR_RADIUS
    escalation_radius: int = DEFAULT_ESCALATION_RADIUS
    step_budget: Optional[int] = None
    solver_limits: Optional[SolverLimits] = None

    @classmethod
    def from_config(cls) -> 'SearchBudget':
        from core.config import get_config
        config = get_config()
        return cls(
            radius=config.search.conjugator_radius,
            escalation_radius=config.search.escalation_radius,
            step_budget=config.dehornoy.step_budget,
            solver_limits=SolverLimits.from_config(),
        )


def rv_status(w: BraidWord, budget: Optional[SearchBudget] = None) -> RvVerdict:
    """Composite verdict: positive word, floor, 3-braid theta, conjugate search"""
    if budget is None:
        budget = SearchBudget.from_config()
    steps = budget.step_budget

    if w.is_positive():
        return RvVerdict(RvStatus.RIGHT_VEERING, Certificate.POSITIVE_WORD, word=w)

    if w.strands >= 2 and dehornoy_floor(w, steps) >= 1:
        return RvVerdict(RvStatus.RIGHT_VEERING, Certificate.FLOOR_AT_LEAST_ONE, word=w)

    if w.strands == 3:
        theta = braid_theta_nonvanishing(w, budget.solver_limits)
        if theta.status is ThetaStatus.NONZERO:
            return RvVerdict(RvStatus.RIGHT_VEERING, Certificate.THREE_BRAID_THETA, word=w)
        if theta.status is ThetaStatus.ZERO:
            # a vanishing theta-hat guarantees a witness exists; widen the search
            radius = max(budget.radius, budget.escalation_radius)
            verdict = nonrv_search(w, radius, steps)
            if verdict.status is RvStatus.NON_RIGHT_VEERING:
                return verdict
            logger.info(f"theta-hat vanishes for {w} but no witness within radius "
                        f"{budget.escalation_radius}")
            return RvVerdict(RvStatus.UNKNOWN, Certificate.BUDGET, word=w)
        logger.info(f"theta-hat computation aborted for {w} ({theta.limit})")

    return nonrv_search(w, budget.radius, steps)


def quasipositive_verdict(q: QuasipositiveForm) -> RvVerdict:
    """Quasipositive braids are right-veering; the verdict carries the expanded word"""
    return RvVerdict(RvStatus.RIGHT_VEERING, Certificate.QUASIPOSITIVE_INPUT,
                     word=expand_quasipositive(q))
