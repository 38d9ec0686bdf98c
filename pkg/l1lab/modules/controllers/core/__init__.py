"""
Core functionality for the controllers module.
"""
