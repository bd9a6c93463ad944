"""
Boxed convolution over the dual numbers
=======================================

Type-B boxed convolution summed directly over NC^(B)(n) agrees with the
type-A formula evaluated in C = {(a', a'')} with (0,1)^2 = 0.
"""

import random

from ncbfree.cayley import GroupFunction, restricted_convolution
from ncbfree.series import (
    DualScalar,
    SeriesA,
    boxconv_a,
    boxconv_a_dual,
    boxconv_b,
    boxconv_b_inverse,
    bridge_check_b,
    format_series,
    random_series_b,
    u_alpha_b,
    w2_obstruction,
    zeta_b,
)

ones = SeriesA([1] * 6)
print("ones [*] ones =", format_series(boxconv_a(ones, ones)), " (Catalan numbers)")

rng = random.Random(2024)
f, g = random_series_b(5, rng), random_series_b(5, rng)
print("\nf =", format_series(f))
print("g =", format_series(g))
direct = boxconv_b(f, g)
print("type B, direct sum:   ", format_series(direct))
print("type A over C:        ", format_series(boxconv_a_dual(f, g)))

# zeta' = sum (1,0) z^n can be cancelled
z = zeta_b(5)
print("\nzeta'^{-1} =", format_series(boxconv_b_inverse(z)))

# The u-functions on W_n turn convolution of series into convolution of
# functions, but only on the interval below omega.
print("\nbridge on [eps, omega] of W_3:", bridge_check_b(f, g, 3).holds)
print("bridge on all of W_2:        ", bridge_check_b(f, g, 2, on="group").holds)

ua = GroupFunction.lazy("W", 2, lambda x: u_alpha_b(f, x))
ub = GroupFunction.lazy("W", 2, lambda x: u_alpha_b(g, x))
print("obstruction for u_f:       ", w2_obstruction(ua))
print("obstruction for u_f * u_g: ", w2_obstruction(restricted_convolution(ua, ub)))

print("\n(2,3)(4,5) =", DualScalar(2, 3) * DualScalar(4, 5))
