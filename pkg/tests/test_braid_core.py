"""
Unit tests for core.braid_core module
"""

import unittest
import sys
import os

# Add the project root to the path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.braid_core import (
    closure_neighbours, component_count, concat, conjugate, cyclic_reduce, delta, delta_sq, embed,
    expand_quasipositive, exponent_sum, free_reduce, full_twist_3, inverse, markov_stab_neg,
    markov_stab_pos, model_braid, parse_braid, permutation, power, product, remove_letter,
    self_linking, sigma_power, stabilize_along,
)
from core.models import BraidWord, QuasipositiveForm
from core.validation import MalformedWord, StrandMismatch, ValidationError


def B(strands, *letters):
    return BraidWord(strands, letters)


class TestParsing(unittest.TestCase):
    """Test cases for parse_braid"""

    def test_parse_braid(self):
        """Test parsing words"""
        self.assertEqual(parse_braid("1 2 2 1 -2", 3), B(3, 1, 2, 2, 1, -2))
        self.assertEqual(parse_braid("", 4), B(4))
        self.assertEqual(parse_braid("1,-1", 2), B(2, 1, -1))

    def test_parse_braid_errors(self):
        """Test malformed words"""
        with self.assertRaises(MalformedWord):
            parse_braid("3", 3)
        with self.assertRaises(MalformedWord):
            parse_braid("1 x", 3)
        with self.assertRaises(MalformedWord):
            parse_braid("1", 0)


class TestGroupOperations(unittest.TestCase):
    """Test cases for reduction, products and inverses"""

    def test_free_reduce(self):
        """Test cancellation of adjacent pairs"""
        self.assertEqual(free_reduce(B(2, 1, -1)), B(2))
        self.assertEqual(free_reduce(B(3, 1, 2, -2, -1)), B(3))
        self.assertEqual(free_reduce(B(3, 1, 2, 1)), B(3, 1, 2, 1))
        self.assertEqual(free_reduce(B(3, 1, -2, 2, 2)), B(3, 1, 2))

    def test_inverse_product_conjugate(self):
        """Test the group operations"""
        self.assertEqual(inverse(B(3, 1, -2)), B(3, 2, -1))
        self.assertEqual(conjugate(B(3, 2), B(3, 1)), B(3, 1, 2, -1))
        self.assertEqual(product(B(2, 1), B(2, -1)), B(2))
        with self.assertRaises(StrandMismatch):
            product(B(2, 1), B(3, 1))

    def test_power(self):
        """Test integer powers"""
        self.assertEqual(power(B(3, 1, 2), 2), B(3, 1, 2, 1, 2))
        self.assertEqual(power(B(3, 1, 2), -1), B(3, -2, -1))
        self.assertEqual(power(B(3, 1, 2), 0), B(3))

    def test_concat_keeps_letters(self):
        """Test that concat does not reduce"""
        self.assertEqual(concat(B(2, 1), B(2, -1)), B(2, 1, -1))

    def test_embed_and_sigma_power(self):
        """Test embed and sigma_power"""
        self.assertEqual(embed(B(2, 1), 4), B(4, 1))
        with self.assertRaises(ValidationError):
            embed(B(3, 1), 2)
        self.assertEqual(sigma_power(2, -3, 3), B(3, -2, -2, -2))

    def test_cyclic_reduce(self):
        """Test cancellation across the closure seam"""
        self.assertEqual(cyclic_reduce(B(3, 1, 2, -1)), B(3, 2))
        self.assertEqual(cyclic_reduce(B(3, 1, 2, 2, -1, 1)), B(3, 1, 2, 2))

    def test_remove_letter(self):
        """Test crossing resolution"""
        self.assertEqual(remove_letter(B(3, 1, 2, -1), 1), B(3, 1, -1))
        with self.assertRaises(MalformedWord):
            remove_letter(B(3, 1), 1)


class TestPermutations(unittest.TestCase):
    """Test cases for permutation and component_count"""

    def test_permutation(self):
        """Test strand permutations"""
        self.assertTrue(permutation(B(3)).is_identity())
        self.assertEqual(permutation(B(3, 1)).images, (1, 0, 2))
        cycles = permutation(B(3, 1, 2)).cycles()
        self.assertEqual(len(cycles), 1)
        self.assertEqual(len(cycles[0]), 3)

    def test_component_count(self):
        """Test link component counts"""
        self.assertEqual(component_count(B(3)), 3)
        self.assertEqual(component_count(B(2, 1, 1, 1)), 1)
        self.assertEqual(component_count(B(3, 2, 2, 2)), 2)
        self.assertEqual(component_count(B(2, 1, 1)), 2)


class TestSelfLinking(unittest.TestCase):
    """Test cases for exponent_sum and self_linking"""

    def test_self_linking(self):
        """Test sl = exponent sum - strands"""
        self.assertEqual(self_linking(B(2, 1, 1, 1)), 1)
        word = concat(full_twist_3(), sigma_power(2, -6, 3))
        self.assertEqual(exponent_sum(word), 0)
        self.assertEqual(self_linking(word), -3)

    def test_stabilization_changes_sl(self):
        """Test Markov stabilizations move sl by 0 and -2"""
        word = B(2, 1, 1, 1)
        self.assertEqual(self_linking(markov_stab_pos(word)), self_linking(word))
        self.assertEqual(self_linking(markov_stab_neg(word)), self_linking(word) - 2)


class TestStabilization(unittest.TestCase):
    """Test cases for Markov stabilizations"""

    def test_markov_stabilizations(self):
        """Test positive and negative stabilization"""
        self.assertEqual(markov_stab_pos(B(2, 1)), B(3, 1, 2))
        self.assertEqual(markov_stab_neg(B(1)), B(2, -1))

    def test_stabilize_along_identity_arc(self):
        """Test that the trivial arc gives the standard stabilizations"""
        word = B(3, 1, -2, 1)
        self.assertEqual(stabilize_along(word, B(4), 1), markov_stab_pos(word))
        self.assertEqual(stabilize_along(word, B(4), -1), markov_stab_neg(word))

    def test_stabilize_along_arc(self):
        """Test conjugation by the arc"""
        self.assertEqual(stabilize_along(B(2, 1), B(3, 1), 1), B(3, 1, 1, 2, -1))

    def test_stabilize_along_errors(self):
        """Test bad signs and arcs"""
        with self.assertRaises(ValidationError):
            stabilize_along(B(2, 1), B(3), 0)
        with self.assertRaises(StrandMismatch):
            stabilize_along(B(2, 1), B(2), 1)


class TestDistinguishedBraids(unittest.TestCase):
    """Test cases for Delta, h and beta_{k,n}"""

    def test_delta(self):
        """Test half and full twists"""
        self.assertEqual(delta(3), B(3, 1, 2, 1))
        self.assertEqual(delta(4), B(4, 1, 2, 3, 1, 2, 1))
        self.assertEqual(delta_sq(2), B(2, 1, 1))
        self.assertEqual(len(delta_sq(4)), 12)
        self.assertTrue(permutation(delta_sq(4)).is_identity())
        with self.assertRaises(ValidationError):
            delta(1)

    def test_full_twist_3(self):
        """Test h = (s1 s2)^3"""
        self.assertEqual(full_twist_3(), B(3, 1, 2, 1, 2, 1, 2))

    def test_model_braid(self):
        """Test beta_{k,n}"""
        self.assertEqual(model_braid(1, 3), B(3, 1, 2, 2, 1, -2))
        self.assertEqual(model_braid(2, 3), B(3, 1, 2, 2, 1, -2, -2))
        self.assertEqual(model_braid(1, 4), B(4, 1, 2, 3, 3, 2, 1, -3, -2))
        with self.assertRaises(ValidationError):
            model_braid(0, 3)

    def test_expand_quasipositive(self):
        """Test the product of conjugated generators"""
        self.assertEqual(expand_quasipositive(QuasipositiveForm(2, [(B(2), 1)])), B(2, 1))
        form = QuasipositiveForm(3, [(B(3, 2), 1), (B(3), 2)])
        self.assertEqual(expand_quasipositive(form), B(3, 2, 1, -2, 2))


class TestClosureNeighbours(unittest.TestCase):
    """Test cases for closure_neighbours"""

    def test_rotations_come_first(self):
        """Test rotations precede relation rewrites"""
        neighbours = list(closure_neighbours(B(3, 1, 2, 1)))
        self.assertEqual(neighbours[:2], [B(3, 2, 1, 1), B(3, 1, 1, 2)])
        self.assertIn(B(3, 2, 1, 2), neighbours)

    def test_far_commutation(self):
        """Test distant generators commute"""
        self.assertIn(B(4, 3, 1), list(closure_neighbours(B(4, 1, 3))))

    def test_mixed_relation(self):
        """Test s1 s2^-1 s1^-1 = s2^-1 s1^-1 s2"""
        self.assertIn(B(3, -2, -1, 2), list(closure_neighbours(B(3, 1, -2, -1))))

    def test_neighbours_keep_length_and_components(self):
        """Test every neighbour has the same length and closure components"""
        word = B(4, 1, -2, 3, 2, 2, -1)
        for neighbour in closure_neighbours(word):
            with self.subTest(neighbour=str(neighbour)):
                self.assertEqual(len(neighbour), len(word))
                self.assertEqual(component_count(neighbour), component_count(word))
                self.assertEqual(exponent_sum(neighbour), exponent_sum(word))


if __name__ == '__main__':
    unittest.main()
