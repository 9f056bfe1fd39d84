"""
Verification suite: one sub-package per identity
"""
