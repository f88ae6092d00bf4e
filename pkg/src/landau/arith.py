"""Prime sieving, Möbius, the additive cost ℓ, and exact factored arithmetic.

ℓ is additive with ℓ(p^k) = p^k for k ≥ 1 and ℓ(1) = 0.  Everything downstream
(g(n) tables, champions, swap neighborhoods) keeps integers in factored form:
values overflow 64 bits near n ≈ 90, so sizes are compared through cached
natural logs with an exact big-integer fallback when the logs nearly tie.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

import numpy as np

# Below this log gap a comparison is decided by exact expansion; safe margin
# above the rounding accumulated by products of <= 10^4 float logs.
LOG_TIE_EPS = 1e-9


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class OutOfRangeError(ValueError):
    """Query beyond the range a context or table was built for."""


class BudgetError(RuntimeError):
    """Enumeration would exceed its configured work budget."""


class FactoredInteger:
    """A positive integer as a tuple of (prime, exponent) pairs.

    Immutable; primes strictly increasing, exponents ≥ 1, the integer 1 is the
    empty tuple.  The plain value is only materialized on demand.
    """

    __slots__ = ("factors", "log_value", "_value")

    def __init__(self, factors=()):
        fs = tuple((int(p), int(e)) for p, e in factors)
        prev = 1
        for p, e in fs:
            if p < 2 or e < 1:
                raise DomainError(f"bad factor {p}^{e}")
            if p <= prev:
                raise DomainError("primes must be strictly increasing")
            prev = p
        self.factors = fs
        self.log_value = math.fsum(e * math.log(p) for p, e in fs)
        self._value = None

    def value(self) -> int:
        """Exact integer value (arbitrary precision, cached)."""
        if self._value is None:
            v = 1
            for p, e in self.factors:
                v *= p**e
            self._value = v
        return self._value

    def exponent_of(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def multiply(self, other: "FactoredInteger") -> "FactoredInteger":
        merged = dict(self.factors)
        for p, e in other.factors:
            merged[p] = merged.get(p, 0) + e
        return FactoredInteger(sorted(merged.items()))

    def with_exponent(self, p: int, e: int) -> "FactoredInteger":
        """Copy with the exponent of p set to e; e = 0 drops the prime."""
        if e < 0:
            raise DomainError(f"exponent must be >= 0, got {e}")
        merged = dict(self.factors)
        if e == 0:
            merged.pop(p, None)
        else:
            merged[p] = e
        return FactoredInteger(sorted(merged.items()))

    def __eq__(self, other):
        return isinstance(other, FactoredInteger) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return "·".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)

    def __repr__(self):
        return f"FactoredInteger({self})"


ONE = FactoredInteger()


@dataclass(frozen=True)
class PrimeContext:
    """All primes ≤ limit, increasing."""

    limit: int
    primes: list[int]


def sieve_primes(limit: int) -> PrimeContext:
    """Segmented sieve of Eratosthenes: every prime ≤ limit, increasing."""
    if limit < 2:
        raise DomainError(f"no primes below 2 (limit={limit})")
    root = math.isqrt(limit)
    base = np.ones(root + 1, dtype=bool)
    base[: min(2, root + 1)] = False
    for p in range(2, math.isqrt(root) + 1):
        if base[p]:
            base[p * p :: p] = False
    base_primes = [int(p) for p in np.flatnonzero(base)]

    primes: list[int] = []
    seg = 1 << 20
    for lo in range(2, limit + 1, seg):
        hi = min(lo + seg, limit + 1)
        mask = np.ones(hi - lo, dtype=bool)
        for p in base_primes:
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start < hi:
                mask[start - lo :: p] = False
        primes.extend((np.flatnonzero(mask) + lo).tolist())
    return PrimeContext(limit=limit, primes=primes)


def prime_count(ctx: PrimeContext, x) -> int:
    """π(x) = #{p ≤ x}; x may be real but must not exceed the sieve limit."""
    if x > ctx.limit:
        raise OutOfRangeError(f"x={x} exceeds sieve limit {ctx.limit}")
    return bisect_right(ctx.primes, x)


def moebius(n: int) -> int:
    """μ(n): 0 on a squared factor, else (−1)^(number of prime factors)."""
    if n < 1:
        raise DomainError(f"moebius undefined for n={n}")
    sign = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            sign = -sign
        d += 1 if d == 2 else 2
    return -sign if n > 1 else sign


def ell(M: FactoredInteger) -> int:
    """ℓ(M) = Σ p^e over the factorization of M; ℓ(1) = 0."""
    return sum(p**e for p, e in M.factors)


def compare_factored(A: FactoredInteger, B: FactoredInteger) -> int:
    """Exact ordering of two factored integers: −1, 0, or 1.

    Logs decide unless they agree within LOG_TIE_EPS, where arbitrary
    precision takes over — near-ties are real once values clear 64 bits.
    """
    d = A.log_value - B.log_value
    if abs(d) >= LOG_TIE_EPS:
        return -1 if d < 0 else 1
    a, b = A.value(), B.value()
    return (a > b) - (a < b)
