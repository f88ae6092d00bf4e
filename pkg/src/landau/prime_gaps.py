"""Prime-difference sets E(x, α), the sieve factors f and h, and the constants
around the lower bound |E| ≥ C₂·x^α.

E collects P − Q over primes Q ∈ (x − x^α, x] and P ∈ (x, x + x^α]; r(d)
counts the pairs at each difference.  f(d) = ∏_{p|d, p>2} (p−1)/(p−2) and its
Möbius companion h(n) = Σ_{a|n} μ(a) f²(n/a) are kept as exact rationals —
Σ_{n≤x} f²(n) ≤ (8/3)x is checked with no floating point at all.  The Selberg
condition predicates and the short-interval hypothesis flags are exact
inequalities on sieved prime counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from .arith import (
    DomainError,
    OutOfRangeError,
    PrimeContext,
    prime_count,
)

C1_EXACT = Fraction(27, 16384)  # ≥ the published safe constant 0.00164
C1_SAFE = 0.00164


@dataclass(frozen=True)
class GapReport:
    """One (x, α, ε) run: the difference set with its counts and predicates."""

    x: float
    alpha: float
    epsilon: float
    E: tuple[int, ...]
    r: dict[int, int]
    hyp31: bool
    hyp32: bool
    selberg21: bool
    selberg22: bool
    selberg23: bool
    c2: float

    @property
    def lower_bound_holds(self) -> bool:
        return len(self.E) >= self.c2 * self.x**self.alpha

    def payload(self) -> dict:
        return {
            "x": self.x,
            "alpha": self.alpha,
            "epsilon": self.epsilon,
            "E": list(self.E),
            "r": {str(d): self.r[d] for d in sorted(self.r)},
            "hyp31": self.hyp31,
            "hyp32": self.hyp32,
            "selberg": [self.selberg21, self.selberg22, self.selberg23],
            "c2": self.c2,
            "lower_bound_holds": self.lower_bound_holds,
        }


def _window_primes(ctx: PrimeContext, lo: float, hi: float) -> list[int]:
    # primes p with lo < p ≤ hi
    from bisect import bisect_right

    return ctx.primes[bisect_right(ctx.primes, lo) : bisect_right(ctx.primes, hi)]


def difference_set(ctx: PrimeContext, x: float, alpha: float) -> tuple[list[int], dict[int, int]]:
    """Exact E and r(d) by double loop over the two prime windows."""
    w = x**alpha
    if x - w <= 1:
        raise DomainError(f"x − x^α = {x - w} must exceed 1")
    if ctx.limit < x + w:
        raise OutOfRangeError(f"sieve limit {ctx.limit} < x + x^α = {x + w}")
    qs = _window_primes(ctx, x - w, x)
    ps = _window_primes(ctx, x, x + w)
    r: dict[int, int] = {}
    for p in ps:
        for q in qs:
            r[p - q] = r.get(p - q, 0) + 1
    return sorted(r), dict(sorted(r.items()))


@lru_cache(maxsize=None)
def f_factor(d: int) -> Fraction:
    """f(d) = ∏_{p|d, p>2} (p−1)/(p−2), exact."""
    if d < 1:
        raise DomainError(f"f undefined for d={d}")
    out = Fraction(1)
    n = d
    while n % 2 == 0:
        n //= 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            out *= Fraction(p - 1, p - 2)
            while n % p == 0:
                n //= p
        p += 2
    if n > 1:
        out *= Fraction(n - 1, n - 2)
    return out


def _distinct_primes(n: int) -> list[int]:
    ps = []
    if n % 2 == 0:
        ps.append(2)
        while n % 2 == 0:
            n //= 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            ps.append(p)
            while n % p == 0:
                n //= p
        p += 2
    if n > 1:
        ps.append(n)
    return ps


@lru_cache(maxsize=None)
def h_convolution(n: int) -> Fraction:
    """h(n) = Σ_{a|n} μ(a) f²(n/a), exact; vanishes unless n is odd squarefree.

    Only squarefree divisors a contribute, so the sum runs over subsets of the
    distinct primes of n with sign (−1)^|subset|.
    """
    if n < 1:
        raise DomainError(f"h undefined for n={n}")
    ps = _distinct_primes(n)
    total = Fraction(0)
    for r in range(len(ps) + 1):
        sign = -1 if r % 2 else 1
        for sub in combinations(ps, r):
            a = math.prod(sub)
            total += sign * f_factor(n // a) ** 2
    return total


def _spf_array(limit: int) -> np.ndarray:
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if spf[p] == 0:
            sl = spf[p::p]
            sl[sl == 0] = p
    return spf


def sum_f_squared_check(limit: int) -> tuple[Fraction, bool, float]:
    """Σ_{n≤limit} f²(n) exactly, the ≤ (8/3)·limit verdict, and the ratio.

    Individual f²(n) come from a smallest-prime-factor table; the exact sum is
    merged pairwise (divide and conquer) because a linear accumulation drags a
    denominator with thousands of digits through every step.
    """
    if limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit}")
    spf = _spf_array(limit)
    terms = []
    for n in range(1, limit + 1):
        num = den = 1
        m = n
        while m > 1:
            p = int(spf[m])
            if p > 2:
                num *= p - 1
                den *= p - 2
            while m % p == 0:
                m //= p
        terms.append(Fraction(num * num, den * den))
    while len(terms) > 1:
        paired = [terms[i] + terms[i + 1] for i in range(0, len(terms) - 1, 2)]
        if len(terms) % 2:
            paired.append(terms[-1])
        terms = paired
    total = terms[0]
    return total, total <= Fraction(8, 3) * limit, float(total / limit)


def euler_products(ctx: PrimeContext, limit: int) -> tuple[float, float]:
    """Partial products over odd primes ≤ limit, ascending:
    ∏(1 − 1/(p−1)²)  and  ∏(1 + (2p−3)/(p(p−2)²))."""
    if limit < 3:
        raise DomainError(f"limit must be >= 3, got {limit}")
    if limit > ctx.limit:
        raise OutOfRangeError(f"limit {limit} exceeds sieve limit {ctx.limit}")
    twin_style = 1.0
    fsq_density = 1.0
    for p in ctx.primes:
        if p > limit:
            break
        if p == 2:
            continue
        twin_style *= 1 - 1 / (p - 1) ** 2
        fsq_density *= 1 + (2 * p - 3) / (p * (p - 2) ** 2)
    return twin_style, fsq_density


def hypothesis_31_32(
    ctx: PrimeContext, x: float, alpha: float, epsilon: float
) -> tuple[bool, bool]:
    """π(x+x^α) − π(x) ≥ (1−ε)x^α/log x, and the mirror below x."""
    w = x**alpha
    expected = (1 - epsilon) * w / math.log(x)
    upper = prime_count(ctx, x + w) - prime_count(ctx, x)
    lower = prime_count(ctx, x) - prime_count(ctx, x - w)
    return upper >= expected, lower >= expected


def nearest_slope(x: float) -> tuple[int, int, float]:
    """The prime power Q^k (k ≥ 2) whose corner slope (Q^k − Q^{k−1})/log Q is
    closest to x/log x; returns (Q, k, distance).

    Only slopes ≤ x/log x + √x matter: beyond that the distance already
    exceeds √x ≥ the slope-separation margin √x/log⁴x.
    """
    rho = x / math.log(x)
    bound = rho + math.sqrt(x)
    best = (0, 0, math.inf)
    q = 2
    while True:
        lq = math.log(q)
        if (q * q - q) / lq > bound:
            break
        if all(q % d for d in range(2, math.isqrt(q) + 1)):
            k = 2
            while True:
                s = (q**k - q ** (k - 1)) / lq
                if s > bound:
                    break
                if abs(rho - s) < best[2]:
                    best = (q, k, abs(rho - s))
                k += 1
        q += 1
    return best


def selberg_conditions(
    ctx: PrimeContext, x: float, alpha: float, epsilon: float
) -> tuple[bool, bool, bool]:
    """The three Selberg condition predicates at (x, α, ε):

    c21: |π(x+x^α) − π(x) − x^α/log x| ≤ ε·x^α/log x
    c22: the mirror below x
    c23: |x/log x − (Q^k − Q^{k−1})/log Q| ≥ √x/log⁴x over all Q^k, k ≥ 2
    """
    w = x**alpha
    expected = w / math.log(x)
    upper = prime_count(ctx, x + w) - prime_count(ctx, x)
    lower = prime_count(ctx, x) - prime_count(ctx, x - w)
    c21 = abs(upper - expected) <= epsilon * expected
    c22 = abs(lower - expected) <= epsilon * expected
    margin = math.sqrt(x) / math.log(x) ** 4
    c23 = nearest_slope(x)[2] >= margin
    return c21, c22, c23


def exceptional_measure_scan(
    ctx: PrimeContext, xi: float, alpha: float, epsilon: float, samples: int
) -> float:
    """Fraction of an even grid on [ξ, ξ + ξ/log ξ] where the conjunction of
    the three Selberg conditions fails — reported, never asserted against the
    asymptotic measure bound."""
    if samples < 10:
        raise DomainError(f"samples must be >= 10, got {samples}")
    xi_hi = xi + xi / math.log(xi)
    if ctx.limit < xi_hi + xi_hi**alpha:
        raise OutOfRangeError(
            f"sieve limit {ctx.limit} < {xi_hi + xi_hi ** alpha:.0f} needed for the scan"
        )
    failures = 0
    for i in range(samples):
        t = xi + (xi_hi - xi) * i / (samples - 1)
        if not all(selberg_conditions(ctx, t, alpha, epsilon)):
            failures += 1
    return failures / samples


def lower_bound_constant(alpha: float, epsilon: float) -> tuple[Fraction, float]:
    """C₁ = 27/16384 exactly, and C₂ = 0.00164·α⁴(1−ε)⁴ with the published
    safe constant."""
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must be in (0, 1], got {alpha}")
    if not 0 <= epsilon < 1:
        raise DomainError(f"epsilon must be in [0, 1), got {epsilon}")
    return C1_EXACT, C1_SAFE * alpha**4 * (1 - epsilon) ** 4


def sieve_bound_report(
    ctx: PrimeContext, x: float, alpha: float
) -> list[tuple[int, int, float, bool]]:
    """Per-d rows (d, r(d), (32/(3α²))·(|A|/log²x)·f(d), holds) over E(x, α);
    |A| is the exact count of integers in (x − x^α, x]."""
    E, r = difference_set(ctx, x, alpha)
    size_A = math.floor(x) - math.floor(x - x**alpha)
    scale = (32 / (3 * alpha**2)) * size_A / math.log(x) ** 2
    rows = []
    for d in E:
        bound = scale * float(f_factor(d))
        rows.append((d, r[d], bound, r[d] <= bound))
    return rows


def build_gap_report(
    ctx: PrimeContext, x: float, alpha: float, epsilon: float
) -> GapReport:
    E, r = difference_set(ctx, x, alpha)
    hyp31, hyp32 = hypothesis_31_32(ctx, x, alpha, epsilon)
    c21, c22, c23 = selberg_conditions(ctx, x, alpha, epsilon)
    c2 = lower_bound_constant(alpha, epsilon)[1]
    return GapReport(
        x=float(x),
        alpha=alpha,
        epsilon=epsilon,
        E=tuple(E),
        r=r,
        hyp31=hyp31,
        hyp32=hyp32,
        selberg21=c21,
        selberg22=c22,
        selberg23=c23,
        c2=c2,
    )
