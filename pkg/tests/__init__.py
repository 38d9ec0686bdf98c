# l1lab test suite
"""
Unit, module and integration tests for l1lab.
"""
