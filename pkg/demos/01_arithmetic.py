"""
Arithmetic in quadratic fields
==============================

Elements live in the integral basis (1, w). Everything is exact.
"""
from quadbench import QuadraticField, fundamental_unit, is_irreducible

K = QuadraticField(-5)
x = K(1, 1)          # 1 + sqrt(-5)
print("x =", x, " N(x) =", x.norm(), " Tr(x) =", x.trace())
print("x * conj(x) =", x * x.conjugate())
print("1/x =", 1 / x)

# 2, 3 and 1 +- sqrt(-5) are irreducible, yet 6 has two factorizations
for y in (K(2), K(3), K(1, 1), K(1, -1)):
    print(f"{str(y):>8} irreducible: {is_irreducible(y)}")
print("2*3 == (1+√-5)(1-√-5):", K(6) == K(1, 1) * K(1, -1))

# half-integral basis when d = 1 mod 4
L = QuadraticField(-23)
print("\nw in Q(√-23) is", L.w, "with w^2 =", L.w * L.w)

# real fields have a fundamental unit
for d in (2, 3, 5, 10, 13, 94):
    eps = fundamental_unit(QuadraticField(d))
    print(f"d = {d:3}: eps = {eps}, N(eps) = {eps.norm()}")
