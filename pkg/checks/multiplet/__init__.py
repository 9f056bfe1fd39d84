"""
Zero modes and the beta = 0 dimension count
"""
