"""
Exact H T = T H check
"""
