"""
Cumulants, R-transforms and free independence of type B
========================================================

A space with two freely independent pairs (a1, x1), (a2, x2) is built from
prescribed R-transforms.  Sums and linking products of the pairs then have
R-transforms R1 + R2 and R1 [*] R2.
"""

import random

from ncbfree.freeprob import (
    MatrixSpaceA,
    cumulant_a,
    free_independence_moment_check,
    make_free_pair,
    mixed_cumulant_check,
    moment_series_b,
    r_sum_product,
    r_transform_b,
)
from ncbfree.series import boxconv_b, format_series, random_series_b, zeta_b

# A warm-up in 2x2 matrices with the normalised trace.
M = MatrixSpaceA(2)
d = M.diag([1, -1])
print("cumulants of diag(1,-1):", [str(cumulant_a(M, [d] * k)) for k in range(1, 7)])

N = 4
rng = random.Random(7)
R1, R2 = random_series_b(N, rng), random_series_b(N, rng)
fp = make_free_pair(R1, R2, N)
p1, p2 = fp.marked["1"], fp.marked["2"]
print("\nR1 =", format_series(R1))
print("R2 =", format_series(R2))
print("recovered R1 =", format_series(r_transform_b(fp.space, p1, N)))

# moments are R [*] zeta'
M1 = moment_series_b(fp.space, p1, N)
print("M1 == R1 [*] zeta':", M1 == boxconv_b(R1, zeta_b(N)))

cert = mixed_cumulant_check(fp.space, fp.labels, N)
mom = free_independence_moment_check(fp.space, fp.labels, N)
print(f"\nmixed cumulants vanish: {cert.passed} ({cert.checked} checked)")
print(f"moment conditions hold: {mom.passed} ({mom.checked} checked)")

r_sum, r_prod = r_sum_product(fp.space, p1, p2, N, cert)
print("R of sum     == R1 + R2:    ", r_sum == R1 + R2)
print("R of product == R1 [*] R2:  ", r_prod == boxconv_b(R1, R2))

# Break freeness with one moment and both testers notice.
bad = fp.space.perturbed("a1 x2", 1)
print("\nafter perturbing f(a1 x2):")
print("  cumulant witness:", mixed_cumulant_check(bad, fp.labels, N).witness)
print("  moment witness:  ", free_independence_moment_check(bad, fp.labels, N).witness)
