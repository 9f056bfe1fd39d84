"""
Utility functions and classes
"""
