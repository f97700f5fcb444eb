"""
Capitulation
============

A class of order n becomes principal in the cyclic extension obtained by
adjoining x with x^n = alpha, where (alpha) = I^n. The order used is the
graded ring O_K + I^-1 x + ... + I^-(n-1) x^(n-1), in which x generates I.
"""
from quadbench import QuadraticField, class_group, composite_report
from quadbench.capitulation import capitulate, verify_by_hnf, verify_certificate

for d in (-5, -23, -14, 10):
    K = QuadraticField(d)
    for R in class_group(K).reps[1:]:
        cert = capitulate(K, R)
        coords, den = cert.gamma_coords()
        print(f"d = {d:4}  {str(R):24} n = {cert.order.n}  alpha = {str(cert.order.alpha):12}"
              f" gamma = {coords}/{den}  {cert.status}"
              f"  checks {verify_certificate(cert)}/{verify_by_hnf(cert)}")

# one extension per cyclic factor; degrees multiply to h
for d in (-5, -23, -21):
    rep = composite_report(QuadraticField(d))
    print(f"d = {d}: degrees {[c.order.n for c in rep.certificates]}, product {rep.degree_product}, h = {rep.h}")
