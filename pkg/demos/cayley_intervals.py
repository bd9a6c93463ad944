"""
Intervals in the Cayley graphs of S_n and W_n
=============================================

The absolute order on a permutation group is read off the word length in
reflections.  Below the long cycle of S_n sits a copy of NC(n); below
omega in the hyperoctahedral group sits NC^(B)(n).
"""

from ncbfree.cayley import (
    cayley_distances,
    cover_case,
    interval,
    interval_factorize,
    long_cycle,
    omega,
    parse_permutation,
    predicted_interval_size,
    word_length,
)
from ncbfree.embed import iota, iota_inverse
from ncbfree.partitions import enumerate_ncb, kreweras

# word length agrees with graph distance
for group, n in (("S", 4), ("W", 3)):
    dist = cayley_distances(group, n)
    same = all(word_length(x) == d for x, d in dist.items())
    print(f"{group}_{n}: {len(dist)} elements, length == BFS distance: {same}")

c, w = long_cycle(4), omega(3)
print("\n|[e, c]| in S_4 =", sum(1 for _ in interval(c)))
print("|[eps, omega]| in W_3 =", sum(1 for _ in interval(w)))

# iota turns blocks into cycles; Kr becomes a left quotient
for pi in list(enumerate_ncb(3))[:5]:
    s = iota(pi)
    print(f"  {str(pi):32s} -> {str(s):22s} Kr via omega ok: {iota(kreweras(pi)) == s.inverse() * w}")

print("\ninverse of (1,2)(-1,-2):", iota_inverse(parse_permutation("(1,2)(-1,-2)", n=3)))

# the four kinds of covering steps in W_n
a = parse_permutation("(1,-2)(-1,2)", n=2)
b = parse_permutation("(1,-1)(2,-2)", n=2)
print("cover case from", a, "to", b, ":", cover_case(a, b))

# lower intervals factor into type A and type B pieces
tau = parse_permutation("(1,2)(-1,-2)(3,-3)", n=4)
facs = interval_factorize(tau)
print("\n", tau, "factors as", facs)
print("predicted size", predicted_interval_size(facs), "actual", sum(1 for _ in interval(tau)))
