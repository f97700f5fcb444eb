"""
Class groups
============

Integral ideals up to the Minkowski bound, sorted into classes; the
structure comes from a Smith normal form.
"""
from quadbench import QuadraticField, class_group, s_class_group
from quadbench.classgroup import reduced_forms

for d in (-1, -5, -14, -21, -23, -47, -105, 10, 79, 82):
    K = QuadraticField(d)
    C = class_group(K)
    print(f"d = {d:5}  h = {C.h:2}  {C.structure_str():12}  gens {', '.join(map(str, C.generators))}")

# independent check: reduced binary quadratic forms of discriminant D
K = QuadraticField(-47)
print("\nforms of discriminant -47:", reduced_forms(-47))

# inverting the primes above S kills their classes
K = QuadraticField(-23)
for S in (set(), {23}, {2}):
    print(f"S = {sorted(S)}: h_S = {s_class_group(K, S).h}")
