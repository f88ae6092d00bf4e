"""
The maximal lcm over partitions, tabulated
==========================================

g(n) is the largest lcm of any partition of n: the maximal order of a
permutation on n letters.  The table below is built by a dynamic program
over prime powers; for tiny n we cross-check against brute-force
enumeration of all partitions.
"""

from landau import (
    brute_force_g,
    gamma,
    gap_statistics,
    increase_points,
    landau_g,
    sieve_primes,
)

ctx = sieve_primes(2100)
table = landau_g(ctx, 2000)

# the first rows of the table, with the partition oracle alongside
print("first values, DP vs. brute force over all partitions:")
for n in range(1, 16):
    fi = table.g(n)
    body = "·".join(f"{p}^{a}" if a > 1 else str(p) for p, a in fi.factors) or "1"
    print(f"  g({n:2d}) = {fi.value():>4d} = {body:<12s} oracle {brute_force_g(n).value()}")

# g increases only at certain n; everything between is a plateau
pts = increase_points(table)
print(f"\nincrease points up to 2000: {len(pts.points)}")
print("  first twelve:", pts.points[:12])

# consecutive increase points can be very close together ...
stats = gap_statistics(pts)
print(f"  smallest gap between increase points: {stats.min_gap}")
print(f"  gaps of 2 occur {stats.histogram.get(2, 0)} times")
print(f"  mean gap: {stats.mean_gap:.3f}")

# ... and gamma(n) counts the increase points up to n.  Its growth is
# noticeably slower than n; the ratio against n^(3/4) drifts slowly,
# which is why n^(3/4) is the natural yardstick here.
print("\ngamma(n) and gamma(n)/n^(3/4):")
for n in (100, 250, 500, 1000, 2000):
    gn = gamma(table, n)
    print(f"  gamma({n:4d}) = {gn:3d}   ratio {gn / n**0.75:.4f}")
