"""Planar count variance, two independent ways.

The variance of the number of particles of the planar determinantal process
inside a centred disc can be computed either from the weighted Laguerre
integral with a closed-form angular factor, or by exploiting translation
invariance, which reduces everything to the Euclidean area of the lens
D_r^c cap D_r(z).  The two evaluations share nothing numerically, so their
agreement is a strong correctness check.  The variance grows linearly in r
for large radii, in contrast with the r^2 growth a Poisson process of the
same intensity would show.

Run:  python demos/euclidean_variance_routes.py
"""

import numpy as np

from dppstats import (EuclideanLevel, variance_euclidean_geometric,
                      variance_euclidean_shirai)

print("route agreement")
print(f"{'n':>3} {'r':>5} {'laguerre-route':>18} {'lens-route':>18} {'rel diff':>10}")
for n in (0, 1, 2):
    level = EuclideanLevel(n)
    for r in (0.5, 1.0, 2.0):
        a = variance_euclidean_shirai(level, r).value
        b = variance_euclidean_geometric(level, r).value
        print(f"{n:>3} {r:>5.2f} {a:>18.12f} {b:>18.12f} {abs(a - b) / b:>10.2e}")

print()
print("linear growth of the variance (V/r stabilises)")
print(f"{'n':>3}" + "".join(f"{f'V/r at r={r:g}':>16}" for r in (5, 10, 20, 40)))
for n in (0, 1):
    level = EuclideanLevel(n)
    ratios = [variance_euclidean_shirai(level, r).value / r for r in (5.0, 10.0, 20.0, 40.0)]
    print(f"{n:>3}" + "".join(f"{v:>16.6f}" for v in ratios))

print()
print("small discs are Poisson-like: V ~ mean ~ r^2")
for r in (0.05, 0.1, 0.2):
    v = variance_euclidean_shirai(EuclideanLevel(0), r).value
    print(f"  r={r:<5g} V={v:.8f}   r^2={r * r:.8f}   V/r^2={v / r ** 2:.4f}")
