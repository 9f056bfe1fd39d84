"""
T^{s,t} T^{r,s} = C(r-t, s-t) T^{r,t}
"""
