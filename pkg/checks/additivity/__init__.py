"""
Tr1 + Tr2 = Tr(V, beta, i)
"""
