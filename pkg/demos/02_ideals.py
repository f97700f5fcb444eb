"""
Fractional ideals and their duals
=================================

Ideals are stored in Hermite normal form, so equality is exact.
"""
from quadbench import QuadraticField, from_generators, mul, dual, is_principal, class_order
from quadbench.ideals import FractionalIdeal, galois_conjugate

K = QuadraticField(-5)
P = from_generators(K, [K(2), K(1, 1)])
print("P =", P, "  ", P.to_text())
print("N(P) =", P.norm())

# the dual (O_K : P) is the inverse
Pd = dual(P)
print("dual(P) =", Pd, "  ", Pd.to_text())
print("P * dual(P) == O_K:", mul(P, Pd) == FractionalIdeal.unit(K))

# P is not principal but P^2 = (2)
print("P principal?", is_principal(P))
print("P^2 =", mul(P, P), " generated by", is_principal(mul(P, P)))
print("class order of P:", class_order(P))

# conjugate times ideal is the norm
Q = from_generators(K, [K(3), K(1, 1)])
print("\nQ =", Q, " Q * conj(Q) =", mul(Q, galois_conjugate(Q)))
print("PQ =", mul(P, Q), " principal, generator", is_principal(mul(P, Q)))
