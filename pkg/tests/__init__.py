"""
Test suite for braidfloer
"""

# This file makes the tests directory a Python package
