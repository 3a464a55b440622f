"""
Value types for braids, orders, verdicts and grid diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Tuple
import logging

from core.validation import InputValidator, ValidationError, InvalidGrid

# Get logger for this module
logger = logging.getLogger(__name__)


# ---------------------------------------------------------------- braids

@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators on a declared number of strands.

    Letter e > 0 is sigma_e, e < 0 is sigma_{-e}^-1.
    """
    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        InputValidator.validate_strands(self.strands)
        letters = tuple(InputValidator.validate_letters(self.letters, self.strands))
        object.__setattr__(self, 'letters', letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def is_identity_word(self) -> bool:
        return not self.letters

    def is_positive(self) -> bool:
        """True when every letter is a positive generator"""
        return all(letter > 0 for letter in self.letters)

    def to_text(self) -> str:
        return " ".join(str(letter) for letter in self.letters)

    def to_dict(self) -> Dict[str, Any]:
        return {'strands': self.strands, 'letters': list(self.letters)}

    def __str__(self) -> str:
        return f"B{self.strands}[{self.to_text()}]"


@dataclass(frozen=True)
class Permutation:
    """Bijection of range(size); images[p] is where p goes"""
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise ValidationError(f"Not a permutation: {list(images)}")
        object.__setattr__(self, 'images', images)

    @classmethod
    def identity(cls, size: int) -> 'Permutation':
        return cls(tuple(range(size)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __getitem__(self, position: int) -> int:
        return self.images[position]

    def then(self, other: 'Permutation') -> 'Permutation':
        """Apply self first, then other"""
        if other.size != self.size:
            raise ValidationError("Permutations of different sizes")
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self) -> 'Permutation':
        result = [0] * self.size
        for position, image in enumerate(self.images):
            result[image] = position
        return Permutation(tuple(result))

    def is_identity(self) -> bool:
        return all(position == image for position, image in enumerate(self.images))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest element"""
        seen = set()
        result = []
        for start in range(self.size):
            if start in seen:
                continue
            cycle = []
            current = start
            while current not in seen:
                seen.add(current)
                cycle.append(current)
                current = self.images[current]
            result.append(tuple(cycle))
        return result


@dataclass(frozen=True)
class QuasipositiveForm:
    """Product of conjugates w sigma_i w^-1"""
    strands: int
    factors: Tuple[Tuple[BraidWord, int], ...]

    def __post_init__(self):
        InputValidator.validate_strands(self.strands)
        factors = tuple((word, index) for word, index in self.factors)
        for word, index in factors:
            InputValidator.validate_same_strands(self.strands, word.strands)
            InputValidator.validate_letters([index], self.strands)
            if index < 0:
                raise ValidationError("Quasipositive factors use positive generators")
        object.__setattr__(self, 'factors', factors)


# ---------------------------------------------------------------- Dehornoy order

class OrderSign(Enum):
    """Position of a braid relative to the identity"""
    NEGATIVE = "negative"
    ZERO = "zero"
    POSITIVE = "positive"

    def opposite(self) -> 'OrderSign':
        if self is OrderSign.POSITIVE:
            return OrderSign.NEGATIVE
        if self is OrderSign.NEGATIVE:
            return OrderSign.POSITIVE
        return OrderSign.ZERO


class WordClass(Enum):
    """Classification of a handle-free word"""
    EMPTY = "empty"
    SIGMA_POSITIVE = "sigma_positive"
    SIGMA_NEGATIVE = "sigma_negative"


@dataclass(frozen=True)
class ReducedWord:
    """Handle-free word with its sigma_i classification at the minimal index"""
    word: BraidWord
    classification: WordClass
    index: Optional[int] = None
    steps: int = 0

    @property
    def sign(self) -> OrderSign:
        if self.classification is WordClass.SIGMA_POSITIVE:
            return OrderSign.POSITIVE
        if self.classification is WordClass.SIGMA_NEGATIVE:
            return OrderSign.NEGATIVE
        return OrderSign.ZERO


@dataclass(frozen=True)
class FdtcBounds:
    """Certified interval [lower, upper] containing the fractional Dehn twist coefficient"""
    lower: Fraction
    upper: Fraction
    depth: int

    def contains(self, value: Fraction) -> bool:
        return self.lower <= value <= self.upper

    def intersects(self, other: 'FdtcBounds') -> bool:
        return self.lower <= other.upper and other.lower <= self.upper

    def __str__(self) -> str:
        return f"{self.lower} {self.upper}"


# ---------------------------------------------------------------- right-veering

class MurasugiVariant(Enum):
    """Murasugi normal-form families of 3-braids"""
    A = "a"
    B = "b"
    C = "c"


@dataclass(frozen=True)
class MurasugiForm:
    """h^d followed by the variant letters"""
    variant: MurasugiVariant
    d: int
    a: Tuple[int, ...] = ()
    m: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'a', tuple(self.a))
        if self.variant is MurasugiVariant.A:
            if not self.a or any(value < 0 for value in self.a) or not any(self.a):
                raise ValidationError("Variant a needs exponents a_i >= 0 with some a_i > 0")
        elif self.variant is MurasugiVariant.C:
            if self.m not in (-1, -2, -3):
                raise ValidationError("Variant c needs m in {-1, -2, -3}")

    def describe(self) -> str:
        if self.variant is MurasugiVariant.A:
            return f"a(d={self.d}, a={list(self.a)})"
        return f"{self.variant.value}(d={self.d}, m={self.m})"


class RvStatus(Enum):
    RIGHT_VEERING = "right-veering"
    NON_RIGHT_VEERING = "non-right-veering"
    UNKNOWN = "unknown"


class Certificate(Enum):
    POSITIVE_WORD = "positive word"
    QUASIPOSITIVE_INPUT = "quasipositive input"
    FLOOR_AT_LEAST_ONE = "floor at least one"
    THREE_BRAID_THETA = "three-braid theta"
    SIGMA1_NEGATIVE_WORD = "sigma1-negative word"
    CONJUGATE_WITNESS = "conjugate witness"
    BUDGET = "budget"


_RV_CERTIFICATES = {
    RvStatus.RIGHT_VEERING: {
        Certificate.POSITIVE_WORD, Certificate.QUASIPOSITIVE_INPUT,
        Certificate.FLOOR_AT_LEAST_ONE, Certificate.THREE_BRAID_THETA,
    },
    RvStatus.NON_RIGHT_VEERING: {
        Certificate.SIGMA1_NEGATIVE_WORD, Certificate.CONJUGATE_WITNESS,
    },
    RvStatus.UNKNOWN: {Certificate.BUDGET},
}


@dataclass(frozen=True)
class RvVerdict:
    """Certified right-veering decision.

    witness is the conjugator for CONJUGATE_WITNESS; word is the braid the
    verdict was issued for (the expanded word for quasipositive input).
    """
    status: RvStatus
    certificate: Certificate
    witness: Optional[BraidWord] = None
    word: Optional[BraidWord] = None

    def __post_init__(self):
        if self.certificate not in _RV_CERTIFICATES[self.status]:
            raise ValidationError(f"{self.certificate.value} cannot certify {self.status.value}")
        if (self.certificate is Certificate.CONJUGATE_WITNESS) != (self.witness is not None):
            raise ValidationError("A conjugator is carried exactly by conjugate witnesses")

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {'status': self.status.value, 'certificate': self.certificate.value}
        if self.witness is not None:
            data['witness'] = list(self.witness.letters)
        return data

    def __str__(self) -> str:
        text = f"{self.status.value} ({self.certificate.value})"
        if self.witness is not None:
            text += f" gamma=[{self.witness.to_text()}]"
        return text


# ---------------------------------------------------------------- grids

@dataclass(frozen=True)
class GridDiagram:
    """n x n grid; X[c] and O[c] are the marking rows in column c, counted from the bottom"""
    n: int
    X: Tuple[int, ...]
    O: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'X', tuple(self.X))
        object.__setattr__(self, 'O', tuple(self.O))
        InputValidator.validate_grid(self.n, self.X, self.O)

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'X': list(self.X), 'O': list(self.O)}


@dataclass(frozen=True)
class GridState:
    """One intersection point per column: points[c] is its row on the torus"""
    points: Tuple[int, ...]

    def __post_init__(self):
        points = tuple(self.points)
        if sorted(points) != list(range(len(points))):
            raise InvalidGrid(f"Grid state is not a permutation: {list(points)}")
        object.__setattr__(self, 'points', points)

    @property
    def n(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class ChainF2:
    """F2 chain: a set of grid states"""
    states: FrozenSet[GridState] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, 'states', frozenset(self.states))

    def __add__(self, other: 'ChainF2') -> 'ChainF2':
        return ChainF2(self.states ^ other.states)

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[GridState]:
        return iter(sorted(self.states, key=lambda state: state.points))

    def is_zero(self) -> bool:
        return not self.states


@dataclass(frozen=True)
class Bigrading:
    maslov: int
    alexander2: int


class ThetaStatus(Enum):
    NONZERO = "nonzero"
    ZERO = "zero"
    ABORTED = "aborted"


class NonzeroReason(Enum):
    NO_INCOMING_RECTANGLE = "no incoming rectangles"
    SOLVER_NO_SOLUTION = "no solution"


@dataclass(frozen=True)
class NonvanishingResult:
    """Outcome of a theta-hat computation"""
    status: ThetaStatus
    reason: Optional[NonzeroReason] = None
    witness: Optional[ChainF2] = None
    limit: Optional[str] = None

    @classmethod
    def nonzero(cls, reason: NonzeroReason) -> 'NonvanishingResult':
        return cls(ThetaStatus.NONZERO, reason=reason)

    @classmethod
    def zero(cls, witness: ChainF2) -> 'NonvanishingResult':
        return cls(ThetaStatus.ZERO, witness=witness)

    @classmethod
    def aborted(cls, limit: str) -> 'NonvanishingResult':
        return cls(ThetaStatus.ABORTED, limit=limit)

    def __str__(self) -> str:
        if self.status is ThetaStatus.NONZERO:
            return f"nonzero ({self.reason.value})"
        if self.status is ThetaStatus.ZERO:
            return f"zero (witness of {len(self.witness)} states)"
        return f"aborted ({self.limit})"
