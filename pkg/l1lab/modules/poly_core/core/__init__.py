"""
Core functionality for the poly_core module.
"""
