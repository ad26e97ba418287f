"""Flattening the disc: the curvature-rescaling limit.

Taking the magnetic-strength parameter nu = R^2/2 and shrinking the
observation disc to radius r/R flattens the hyperbolic geometry as R grows;
the count statistics of the disc process then converge to those of the
planar process at the same level index.  The table below shows the
convergence of the variances.  Note the slow, monotone approach: the limit
is O(1/R^2) accurate, so quadrupling R buys roughly a factor 16.

Run:  python demos/contraction_to_euclidean.py
"""

from dppstats import contraction_check

for m in (0, 1):
    print(f"level m = {m}, planar radius r = 1")
    rows = contraction_check(m, 1.0, (2.0, 4.0, 8.0, 16.0))
    print(f"{'R':>6} {'disc-process V':>18} {'planar target':>16} {'ratio':>10}")
    for row in rows:
        print(f"{row.scale:>6.1f} {row.scaled_variance:>18.10f} "
              f"{row.euclidean_target:>16.10f} {row.ratio:>10.6f}")
    print()

print("the rescaled parameters behind the table: nu = R^2/2, radius = r/R,")
print("so e.g. R = 16 probes nu = 128 with Jacobi parameter 2 nu - 1 = 255,")
print("a regime that exercises the stability of the polynomial recurrences.")
