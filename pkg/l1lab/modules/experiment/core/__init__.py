"""
Core functionality for the experiment module.
"""
