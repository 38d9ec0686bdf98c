"""
Core functionality for the lfp_solver module.
"""
