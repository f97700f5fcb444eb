"""
Splitting of primes and non-unique factorization
================================================
"""
from quadbench import QuadraticField, splitting_type, nonufd_witness

K = QuadraticField(-5)
for p in (2, 3, 5, 7, 11, 13):
    rep = splitting_type(K, p)
    print(f"{p:3} {rep.kind:9} " + " ".join(str(P) for P in rep.primes_above))

# a witness p1 p2 = q1 q2 from two non-principal primes whose product is principal
for d in (-5, -23, -14, 10, -1, 2):
    w = nonufd_witness(QuadraticField(d))
    if w is None:
        print(f"d = {d}: no witness (class number 1)")
    else:
        print(f"d = {d}: {w.p1} * {w.p2} = ({w.q1}) * ({w.q2})")
