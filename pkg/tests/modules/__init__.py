"""
Tests for the bundled l1lab modules.
"""
