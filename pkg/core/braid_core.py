"""
Braid-word algebra: parsing, reduction, products, permutations, self-linking,
Markov moves and the distinguished braids Delta, Delta^2, h and beta_{k,n}.
"""

from __future__ import annotations

from typing import Iterable, Iterator, List, Sequence
import logging

import networkx as nx

from core.constants import FULL_TWIST_3
from core.models import BraidWord, Permutation, QuasipositiveForm
from core.validation import InputValidator, MalformedWord, ValidationError

logger = logging.getLogger(__name__)


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse whitespace/comma-separated signed generator indices"""
    InputValidator.validate_strands(strands)
    return BraidWord(strands, tuple(InputValidator.parse_letters(text)))


def _free_reduce_letters(letters: Iterable[int]) -> List[int]:
    stack: List[int] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return stack


def free_reduce(w: BraidWord) -> BraidWord:
    """Remove adjacent cancelling pairs until none remain"""
    return BraidWord(w.strands, tuple(_free_reduce_letters(w.letters)))


def product(a: BraidWord, b: BraidWord) -> BraidWord:
    strands = InputValidator.validate_same_strands(a.strands, b.strands)
    return BraidWord(strands, tuple(_free_reduce_letters(a.letters + b.letters)))


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-letter for letter in reversed(w.letters)))


def conjugate(w: BraidWord, g: BraidWord) -> BraidWord:
    """g w g^-1, freely reduced"""
    strands = InputValidator.validate_same_strands(w.strands, g.strands)
    letters = g.letters + w.letters + inverse(g).letters
    return BraidWord(strands, tuple(_free_reduce_letters(letters)))


def power(w: BraidWord, k: int) -> BraidWord:
    """w^k for any integer k, freely reduced"""
    base = w if k >= 0 else inverse(w)
    return BraidWord(w.strands, tuple(_free_reduce_letters(base.letters * abs(k))))


def concat(*words: BraidWord) -> BraidWord:
    """Literal concatenation without reduction"""
    strands = InputValidator.validate_same_strands(*(word.strands for word in words))
    letters: List[int] = []
    for word in words:
        letters.extend(word.letters)
    return BraidWord(strands, tuple(letters))


def embed(w: BraidWord, strands: int) -> BraidWord:
    """The same letters read in B_strands (strands >= w.strands)"""
    if strands < w.strands:
        raise ValidationError(f"Cannot embed B{w.strands} into B{strands}")
    return BraidWord(strands, w.letters)


def sigma_power(index: int, k: int, strands: int) -> BraidWord:
    """sigma_index^k"""
    letter = index if k >= 0 else -index
    return BraidWord(strands, (letter,) * abs(k))


def permutation(w: BraidWord) -> Permutation:
    """Where each bottom strand position ends at the top"""
    at_position = list(range(w.strands))
    for letter in w.letters:
        i = abs(letter) - 1
        at_position[i], at_position[i + 1] = at_position[i + 1], at_position[i]
    images = [0] * w.strands
    for top, start in enumerate(at_position):
        images[start] = top
    return Permutation(tuple(images))


def component_count(w: BraidWord) -> int:
    """Number of link components of the closure"""
    perm = permutation(w)
    graph = nx.Graph()
    graph.add_nodes_from(range(w.strands))
    graph.add_edges_from((position, perm[position]) for position in range(w.strands))
    return nx.number_connected_components(graph)


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if letter > 0 else -1 for letter in w.letters)


def self_linking(w: BraidWord) -> int:
    """sl = #positive - #negative - strands"""
    return exponent_sum(w) - w.strands


def markov_stab_pos(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands + 1, w.letters + (w.strands,))


def markov_stab_neg(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands + 1, w.letters + (-w.strands,))


def stabilize_along(w: BraidWord, gamma: BraidWord, sign: int) -> BraidWord:
    """Stabilization along the arc gamma: w * (gamma sigma_m^sign gamma^-1) in B_{m+1}"""
    if sign not in (1, -1):
        raise ValidationError(f"Stabilization sign must be +1 or -1, got {sign}")
    m = w.strands
    InputValidator.validate_same_strands(m + 1, gamma.strands)
    twist = conjugate(BraidWord(m + 1, (sign * m,)), gamma)
    return product(embed(w, m + 1), twist)


def delta(n: int) -> BraidWord:
    """Garside half twist (s1..s_{n-1})(s1..s_{n-2})...(s1 s2)s1"""
    InputValidator.validate_positive_int(n, "n", minimum=2)
    letters: List[int] = []
    for top in range(n - 1, 0, -1):
        letters.extend(range(1, top + 1))
    return BraidWord(n, tuple(letters))


def delta_sq(n: int) -> BraidWord:
    """The full twist Delta^2, spelled as two half twists"""
    half = delta(n)
    return BraidWord(n, half.letters * 2)


def full_twist_3() -> BraidWord:
    """h = (s1 s2)^3"""
    return BraidWord(3, FULL_TWIST_3)


def model_braid(k: int, n: int) -> BraidWord:
    """beta_{k,n} = (s1..s_{n-1})(s_{n-1}..s1)(s2..s_{n-1})^-k"""
    InputValidator.validate_positive_int(n, "n", minimum=2)
    InputValidator.validate_positive_int(k, "k", minimum=1)
    up = list(range(1, n))
    down = list(range(n - 1, 0, -1))
    tail = [-letter for letter in reversed(range(2, n))] * k
    return BraidWord(n, tuple(up + down + tail))


def expand_quasipositive(q: QuasipositiveForm) -> BraidWord:
    """Literal word of the product of w sigma_i w^-1 factors"""
    letters: List[int] = []
    for word, index in q.factors:
        letters.extend(word.letters)
        letters.append(index)
        letters.extend(inverse(word).letters)
    return BraidWord(q.strands, tuple(letters))


def cyclic_reduce(w: BraidWord) -> BraidWord:
    """Freely reduce, then cancel letters across the closure seam (a conjugate of w)"""
    letters = _free_reduce_letters(w.letters)
    start, end = 0, len(letters)
    while end - start >= 2 and letters[start] == -letters[end - 1]:
        start += 1
        end -= 1
    return BraidWord(w.strands, tuple(letters[start:end]))


def remove_letter(w: BraidWord, position: int) -> BraidWord:
    """Resolve the crossing at position (drop one letter)"""
    if not 0 <= position < len(w):
        raise MalformedWord(f"No letter at position {position}")
    return BraidWord(w.strands, w.letters[:position] + w.letters[position + 1:])


def _relation_rewrites(letters: Sequence[int]) -> Iterator[List[int]]:
    n = len(letters)
    for i in range(n - 1):
        a, b = letters[i], letters[i + 1]
        if abs(abs(a) - abs(b)) >= 2:
            rewritten = list(letters)
            rewritten[i], rewritten[i + 1] = b, a
            yield rewritten
    # s_i s_j s_i = s_j s_i s_j, and its inverse
    for i in range(n - 2):
        a, b, c = letters[i], letters[i + 1], letters[i + 2]
        if a == c and abs(abs(a) - abs(b)) == 1 and (a > 0) == (b > 0):
            rewritten = list(letters)
            rewritten[i:i + 3] = [b, a, b]
            yield rewritten
    # s_i^e s_j^d s_i^-e = s_j^-e s_i^d s_j^e
    for i in range(n - 2):
        a, b, c = letters[i], letters[i + 1], letters[i + 2]
        if a == -c and abs(abs(a) - abs(b)) == 1:
            e = 1 if a > 0 else -1
            d = 1 if b > 0 else -1
            rewritten = list(letters)
            rewritten[i:i + 3] = [-e * abs(b), d * abs(a), e * abs(b)]
            yield rewritten


def closure_neighbours(w: BraidWord) -> Iterator[BraidWord]:
    """Same-length words with the same closed braid: rotations, then relation rewrites"""
    letters = w.letters
    for shift in range(1, len(letters)):
        yield BraidWord(w.strands, letters[shift:] + letters[:shift])
    for rewritten in _relation_rewrites(letters):
        yield BraidWord(w.strands, tuple(rewritten))
