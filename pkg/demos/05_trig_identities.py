"""The trigonometric backbone: closed sums, sign identities, paired zeros.

These identities are what make the chain Green's function collapse to
0/+-1: finite cosine/sine sums have product closed forms, a sine ratio
reduces to a sign, and same-parity entries cancel pair by pair.
"""

import math

from hueckel_green import (harmonic_sum_identity_check, kahan_sum,
                           parity_zero_sum, sine_ratio_sign, sum_cos, sum_sin)

theta = 0.7
for nprime in (0, 1, 5, 12):
    direct = kahan_sum(math.cos(k * theta) for k in range(nprime + 1))
    print(f"sum_cos(N'={nprime:2d}) closed={sum_cos(nprime, theta):+.12f}"
          f"  direct={direct:+.12f}")
for nprime in (1, 7):
    direct = kahan_sum(math.sin(k * theta) for k in range(nprime + 1))
    print(f"sum_sin(N'={nprime:2d}) closed={sum_sin(nprime, theta):+.12f}"
          f"  direct={direct:+.12f}")

print("\nsine ratio sin(pi N k/(N+1)) / sin(pi k/(N+1)) is just -(-1)^k:")
print("  N=6:", [sine_ratio_sign(6, k) for k in range(1, 7)])

print("\nsame-parity zeros cancel in pairs (k with N+1-k):")
for n, q in ((6, 1), (10, 3)):
    print(f"  N={n}, q={q}: residual {parity_zero_sum(n, q):.2e}")

print("\nthe harmonic-sum identity, float sum vs exact pattern:")
for n, r, s in ((2, 1, 2), (6, 4, 1), (6, 2, 4)):
    float_side, exact_side = harmonic_sum_identity_check(n, r, s)
    print(f"  N={n}, (r,s)=({r},{s}): sum={float_side:+.12f}, exact={exact_side}")
