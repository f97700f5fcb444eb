"""
Gauss sums and square roots in cyclotomic fields
================================================
"""
from quadbench import gauss_sum, embed_sqrt
from quadbench.cyclotomic import verify_gauss_square

for p in (3, 5, 7, 11, 13):
    g = gauss_sum(p)
    print(f"p = {p:2}: g = {g}")
    print(f"        g^2 = {'-' if p % 4 == 3 else ''}{p}: {verify_gauss_square(p)}")

# every quadratic field sits inside Q(zeta_|D|)
for d in (2, 3, 5, 7, -1, -2, -15, 6):
    n, w = embed_sqrt(d)
    print(f"sqrt({d}) in Q(zeta_{n}): {w}   squared: {w * w}")
