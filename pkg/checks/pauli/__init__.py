"""
Spin form and swap form of H agree
"""
