"""
Core functionality for the plant_sim module.
"""
