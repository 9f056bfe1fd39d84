"""
Tr2(V, beta, i) = Tr(V, beta, i - k)
"""
