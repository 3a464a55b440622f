"""
Unit tests for core.dehornoy module
"""

import unittest
import sys
import os
import random
from fractions import Fraction

# Add the project root to the path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.braid_core import (
    concat, conjugate, cyclic_reduce, delta_sq, full_twist_3, inverse, power, sigma_power,
)
from core.dehornoy import (
    dehornoy_floor, equals, fdtc_bounds, handle_reduce, less, order_sign, shortest_spelling,
)
from core.models import BraidWord, OrderSign, WordClass
from core.validation import BudgetExceeded, ValidationError


def B(strands, *letters):
    return BraidWord(strands, letters)


def with_full_twist(strands, *letters):
    return concat(delta_sq(strands), BraidWord(strands, letters))


class TestHandleReduce(unittest.TestCase):
    """Test cases for handle_reduce"""

    def test_classifications(self):
        """Test the classified outputs of known words"""
        cases = [
            (B(4, 3, 1, 1, -2, -2, -2, -2, -2, -3), WordClass.SIGMA_POSITIVE, 1),
            (B(6, 2, 5, -3, -3, 2, 2), WordClass.SIGMA_POSITIVE, 2),
            (B(2, 1, -1), WordClass.EMPTY, None),
            (B(2, -1), WordClass.SIGMA_NEGATIVE, 1),
        ]
        for word, classification, index in cases:
            with self.subTest(word=str(word)):
                reduced = handle_reduce(word)
                self.assertIs(reduced.classification, classification)
                self.assertEqual(reduced.index, index)

    def test_output_is_handle_free_and_equal(self):
        """Test the reduced word represents the same braid"""
        word = B(3, 1, 2, -1, -2, 1, -2)
        reduced = handle_reduce(word)
        self.assertTrue(equals(word, reduced.word))
        self.assertEqual(handle_reduce(reduced.word).steps, 0)

    def test_single_handle(self):
        """Test one reduction step on s1 s2 s1^-1"""
        reduced = handle_reduce(B(3, 1, 2, -1))
        self.assertEqual(reduced.word, B(3, -2, 1, 2))
        self.assertEqual(reduced.steps, 1)

    def test_budget_exceeded(self):
        """Test the step budget and word-length cap"""
        with self.assertRaises(BudgetExceeded) as context:
            handle_reduce(B(3, 1, 2, -1, -2), budget=1)
        self.assertEqual(context.exception.limit, "step_budget")
        with self.assertRaises(BudgetExceeded) as context:
            handle_reduce(B(3, 1, 2, -1, -2), max_length=2)
        self.assertEqual(context.exception.limit, "max_word_length")

    def test_invalid_budget(self):
        """Test a non-positive budget is rejected"""
        with self.assertRaises(ValidationError):
            handle_reduce(B(2, 1), budget=0)


class TestOrder(unittest.TestCase):
    """Test cases for order_sign, less and equals"""

    def test_order_sign(self):
        """Test signs of known words"""
        self.assertIs(order_sign(B(4, 3, 1, 1, -2, -2, -2, -2, -2, -3)), OrderSign.POSITIVE)
        self.assertIs(order_sign(B(6, 2, 5, -3, -3, 2, 2)), OrderSign.POSITIVE)
        self.assertIs(order_sign(B(2, 1, -1)), OrderSign.ZERO)
        self.assertIs(order_sign(B(2, -1)), OrderSign.NEGATIVE)

    def test_inverse_has_opposite_sign(self):
        """Test the inverses of positive words are negative"""
        for word in (B(4, 3, 1, 1, -2, -2, -2, -2, -2, -3), B(6, 2, 5, -3, -3, 2, 2)):
            with self.subTest(word=str(word)):
                self.assertIs(order_sign(inverse(word)), OrderSign.NEGATIVE)

    def test_less(self):
        """Test comparisons with the identity"""
        identity, s1_inverse = B(3), B(3, -1)
        self.assertFalse(less(identity, s1_inverse))
        self.assertTrue(less(s1_inverse, identity))
        self.assertFalse(less(B(3, 1, -2), B(3, 1, -2)))

    def test_word_problem_family(self):
        """Test h s2^-k = s1 s2^2 s1 s2^(2-k) for k = 0..8"""
        for k in range(0, 9):
            with self.subTest(k=k):
                left = concat(full_twist_3(), sigma_power(2, -k, 3))
                right = concat(B(3, 1, 2, 2, 1), sigma_power(2, 2 - k, 3))
                self.assertTrue(equals(left, right))

    def test_braid_relation(self):
        """Test s1 s2 s1 = s2 s1 s2 and s1 s2 != s2 s1"""
        self.assertTrue(equals(B(3, 1, 2, 1), B(3, 2, 1, 2)))
        self.assertFalse(equals(B(3, 1, 2), B(3, 2, 1)))

    def test_full_twist_is_central(self):
        """Test Delta^2 commutes with a generator"""
        self.assertTrue(equals(with_full_twist(3, 1), concat(B(3, 1), delta_sq(3))))


class TestFloor(unittest.TestCase):
    """Test cases for dehornoy_floor"""

    def test_known_floors(self):
        """Test floors of known 3- and 4-braids"""
        self.assertEqual(dehornoy_floor(with_full_twist(3, 1, -2)), 1)
        self.assertEqual(dehornoy_floor(with_full_twist(3, 2, -1)), 0)
        self.assertEqual(dehornoy_floor(with_full_twist(4, 1, 3, -2)), 1)

    def test_floor_of_twist_powers(self):
        """Test the floor of Delta^{2m} is m"""
        for strands in (2, 3, 4):
            for m in range(-2, 3):
                with self.subTest(strands=strands, m=m):
                    self.assertEqual(dehornoy_floor(power(delta_sq(strands), m)), m)

    def test_floor_brackets_the_word(self):
        """Test Delta^{2m} <= w < Delta^{2m+2}"""
        for word in (B(3, 1, 2, -1), with_full_twist(3, 1, -2), B(4, -3, -2, -1, -1)):
            with self.subTest(word=str(word)):
                m = dehornoy_floor(word)
                below = concat(power(delta_sq(word.strands), -m), word)
                above = concat(power(delta_sq(word.strands), -m - 1), word)
                self.assertIn(order_sign(below), (OrderSign.ZERO, OrderSign.POSITIVE))
                self.assertIs(order_sign(above), OrderSign.NEGATIVE)

    def test_floor_is_not_conjugacy_invariant(self):
        """Test two conjugate words with different floors"""
        first = with_full_twist(3, 1, -2)
        second = with_full_twist(3, 2, -1)
        gamma = B(3, 1, 2, 1)
        self.assertTrue(equals(conjugate(first, gamma), second))
        self.assertNotEqual(dehornoy_floor(first), dehornoy_floor(second))

    def test_floor_needs_two_strands(self):
        """Test B1 is rejected"""
        with self.assertRaises(ValidationError):
            dehornoy_floor(B(1))


class TestFdtcBounds(unittest.TestCase):
    """Test cases for fdtc_bounds"""

    def test_full_twist_bounds(self):
        """Test Delta^2 in B3 at depth 4"""
        bounds = fdtc_bounds(delta_sq(3), 4)
        self.assertEqual((bounds.lower, bounds.upper), (Fraction(1), Fraction(5, 4)))
        self.assertTrue(bounds.contains(Fraction(1)))

    def test_sigma1_bounds(self):
        """Test s1 in B2 at depth 8"""
        bounds = fdtc_bounds(B(2, 1), 8)
        self.assertEqual((bounds.lower, bounds.upper), (Fraction(1, 2), Fraction(5, 8)))

    def test_depth_one_is_the_floor(self):
        """Test depth 1 gives [floor, floor + 1]"""
        word = with_full_twist(3, 1, -2)
        bounds = fdtc_bounds(word, 1)
        self.assertEqual((bounds.lower, bounds.upper), (Fraction(1), Fraction(2)))

    def test_intervals_intersect(self):
        """Test intervals at every depth overlap and contain 1 for Delta^2"""
        intervals = [fdtc_bounds(delta_sq(3), depth) for depth in range(1, 7)]
        for bounds in intervals:
            self.assertTrue(bounds.contains(Fraction(1)))
            for other in intervals:
                self.assertTrue(bounds.intersects(other))

    def test_random_intervals_intersect(self):
        """Test bounds at depths 1 to 6 overlap for seeded random braids"""
        rng = random.Random(7)
        checked = 0
        for _ in range(30):
            strands = rng.randint(2, 4)
            letters = tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1)
                            for _ in range(rng.randint(1, 4)))
            word = BraidWord(strands, letters)
            try:
                intervals = [fdtc_bounds(word, depth) for depth in range(1, 7)]
            except BudgetExceeded:
                continue
            checked += 1
            for first in intervals:
                for second in intervals:
                    with self.subTest(word=str(word), depths=(first.depth, second.depth)):
                        self.assertTrue(first.intersects(second))
        self.assertGreaterEqual(checked, 25)

    def test_invalid_depth(self):
        """Test depth must be positive"""
        with self.assertRaises(ValidationError):
            fdtc_bounds(B(2, 1), 0)


class TestShortestSpelling(unittest.TestCase):
    """Test cases for shortest_spelling"""

    def test_cyclic_reduction_wins(self):
        """Test a conjugated word shrinks"""
        self.assertEqual(shortest_spelling(B(3, 1, 2, -1)), B(3, 2))

    def test_extra_candidates(self):
        """Test caller-supplied spellings are considered"""
        word = B(3, 1, 2, 1, 2, 1, 2, -2, -2)
        result = shortest_spelling(word, extra=[B(3, 1, 2, 2, 1)])
        self.assertLessEqual(len(result), 4)

    def test_never_longer(self):
        """Test the result is never longer than the reduced input"""
        word = B(4, 3, 1, -3, 2)
        self.assertLessEqual(len(shortest_spelling(word)), len(cyclic_reduce(word)))


if __name__ == '__main__':
    unittest.main()
