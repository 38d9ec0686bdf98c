"""
Core functionality for the set_estimator module.
"""
