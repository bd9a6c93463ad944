"""
Non-crossing partitions of types A and B
========================================

Enumerate both lattices, take Kreweras complements and look at how the
absolute-value map folds NC^(B)(n) onto NC^(A)(n).
"""

from math import comb

from ncbfree.partitions import (
    abs_fiber,
    abs_map,
    catalan,
    enumerate_nca,
    enumerate_ncb,
    kreweras,
    parse_partition,
    zero_block,
)

# Catalan numbers count type A, central binomials count type B.
for n in range(1, 7):
    a = sum(1 for _ in enumerate_nca(n))
    b = sum(1 for _ in enumerate_ncb(n))
    print(f"n={n}: |NC^A| = {a:4d} (Catalan {catalan(n)}), |NC^B| = {b:4d} (binomial {comb(2 * n, n)})")

# Kreweras complement, both flavours
p = parse_partition("{(1,2),(3,4)}")
print("\nKr", p, "=", kreweras(p))
pi = parse_partition("{(1,-2),(-1,2),(3,4),(-3,-4)}")
print("Kr", pi, "=", kreweras(pi))
print("Kr' Kr pi == pi:", kreweras(kreweras(pi), side="left") == pi)

# Abs forgets signs; every fiber has n+1 points.
print("\nAbs", pi, "=", abs_map(pi))
print("fiber over", p)
for sigma in abs_fiber(p):
    z = zero_block(sigma)
    print("  ", sigma, "  zero-block:", z if z else "-")

# Kr and Abs commute
n = 4
ok = all(kreweras(abs_map(s)) == abs_map(kreweras(s)) for s in enumerate_ncb(n))
print(f"\nKr(Abs(pi)) == Abs(Kr(pi)) on all of NC^B({n}):", ok)
