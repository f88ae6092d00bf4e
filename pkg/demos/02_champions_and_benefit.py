"""
Champions: where the cost-vs-size tradeoff is optimal
=====================================================

For a slope rho > 0, the champion N_rho minimizes ell(M) - rho·log M over
all positive integers; with rho = x/log x each prime p enters with the
largest exponent whose marginal slope still clears rho.  Champions are
always values of g, and every other M pays a nonnegative "benefit" penalty
relative to the champion.
"""

import math

from landau import (
    FactoredInteger,
    benefit,
    benefit_by_prime,
    build_champion,
    landau_g,
    sieve_primes,
    verify_membership_in_G,
)

ctx = sieve_primes(10**4)

# the champion at x = 13: every prime up to 13, with 2 squared
champ = build_champion(ctx, 13)
print(f"x = 13, rho = {champ.rho:.5f}")
print(f"  N = {champ.N.value()} = {champ.N.factors}")
print(f"  ell(N) = {champ.n}")
print(f"  ties at primes {champ.tie_flags}: x itself always sits on the boundary")

# benefit of nearby integers: zero at the champion, positive elsewhere
print("\nbenefit of neighbours of N:")
for M in (champ.N, FactoredInteger([(2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1)]),
          FactoredInteger([(2, 2), (3, 2), (5, 1), (7, 1), (11, 1), (13, 1)]),
          FactoredInteger([(2, 2), (3, 1), (5, 1), (7, 1), (11, 1)])):
    print(f"  ben({M.value()}) = {benefit(champ, M):.6f}")

# the benefit splits into independent per-prime terms; the two evaluation
# paths agree to floating-point accuracy
M = FactoredInteger([(2, 5), (3, 2), (17, 1)])
terms = benefit_by_prime(champ, M)
print(f"\nben({M.value()}) = {benefit(champ, M):.6f}")
print("  per-prime terms:", {p: round(t, 6) for p, t in terms.items()})
print(f"  sum of terms:    {sum(terms.values()):.6f}")

# champions really are values of g: g(ell(N)) recovers N exactly
print("\nmembership g(ell(N)) = N along a sweep of prime x:")
sweep = [build_champion(ctx, x) for x in ctx.primes if 5 <= x <= 60]
table = landau_g(ctx, max(c.n for c in sweep))
for c in sweep:
    assert verify_membership_in_G(c, table)
    print(f"  x = {int(c.x):2d}: ell(N) = {c.n:4d}, N = {c.N.value()}")

# exponents never push a prime power past x
print("\nlargest prime powers inside each champion stay at or below x:")
for c in sweep[-3:]:
    top = max((p**a for p, a in c.N.factors))
    print(f"  x = {int(c.x)}: max p^a = {top} <= {int(c.x)}: {top <= int(c.x)}")
print(f"\nslope at the boundary: 13/log 13 = {13 / math.log(13):.5f} = rho, "
      "so 13 joins N with a tie")
