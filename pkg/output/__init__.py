"""
Output processing utilities
"""
