"""
Unit tests for core.constants module
"""

import unittest
import sys
import os

# Add the project root to the path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.constants import (
    APP_NAME, VERSION, EXIT_OK, EXIT_PROPERTY_VIOLATED, EXIT_USAGE, EXIT_ABORTED,
    GRID_LAYOUTS, LAYOUT_COMPACT, LAYOUT_ISOLATED, GLYPH_X, GLYPH_O, GLYPH_EMPTY,
    FULL_TWIST_3, FULL_TWIST_3_SPELLINGS, DEFAULT_CONJUGATOR_RADIUS, DEFAULT_ESCALATION_RADIUS,
    DEFAULT_N_MAX
)


class TestConstants(unittest.TestCase):
    """Test cases for the constants module"""

    def test_app_constants(self):
        """Test application identity"""
        self.assertEqual(APP_NAME, "braidfloer")
        self.assertRegex(VERSION, r"^\d+\.\d+\.\d+$")

    def test_exit_codes(self):
        """Test the exit code table"""
        self.assertEqual((EXIT_OK, EXIT_PROPERTY_VIOLATED, EXIT_USAGE, EXIT_ABORTED), (0, 1, 2, 3))

    def test_layouts(self):
        """Test layout names"""
        self.assertEqual(GRID_LAYOUTS, (LAYOUT_ISOLATED, LAYOUT_COMPACT))

    def test_glyphs_are_distinct(self):
        """Test ASCII glyphs"""
        self.assertEqual(len({GLYPH_X, GLYPH_O, GLYPH_EMPTY}), 3)
        for glyph in (GLYPH_X, GLYPH_O, GLYPH_EMPTY):
            self.assertEqual(len(glyph), 1)

    def test_full_twist_spellings(self):
        """Test the full twist spellings are positive words of the same length"""
        self.assertIn(FULL_TWIST_3, FULL_TWIST_3_SPELLINGS)
        for spelling in FULL_TWIST_3_SPELLINGS:
            with self.subTest(spelling=spelling):
                self.assertEqual(len(spelling), 6)
                self.assertTrue(all(letter in (1, 2) for letter in spelling))

    def test_search_defaults(self):
        """Test search and solver defaults are consistent"""
        self.assertGreaterEqual(DEFAULT_ESCALATION_RADIUS, DEFAULT_CONJUGATOR_RADIUS)
        self.assertGreaterEqual(DEFAULT_N_MAX, 2)


if __name__ == '__main__':
    unittest.main()
