"""Champions N_ρ for the cost ℓ, and the benefit functional around them.

For x > 4 put ρ = x/log x.  The champion N_ρ = ∏_{p ≤ x} p^{α_p} takes each
exponent as large as the corner slopes allow: raising p^{k−1} to p^k pays
ℓ-cost p^k − p^{k−1} (just p for k = 1, as ℓ(p⁰) = 0) and gains log p, so
α_p = max{ k : slope(p, k) ≤ ρ }.  Setting n = ℓ(N) gives g(n) = N, and
ben(M) = ℓ(M) − ℓ(N) − ρ·log(M/N) ≥ 0 measures how far any M is from
champion-hood, prime by prime.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field

from .arith import (
    DomainError,
    FactoredInteger,
    OutOfRangeError,
    PrimeContext,
    ell,
)
from .gtable import LandauTable

RHO_MIN = 2 / math.log(2)  # = 4/log 4, the x = 4 corner
TIE_EPS = 1e-9


@dataclass(frozen=True)
class ChampionRecord:
    """N_ρ with its defining x, ρ = x/log x, n = ℓ(N), and boundary-tie audit."""

    x: float
    rho: float
    N: FactoredInteger
    n: int
    tie_flags: tuple[int, ...] = field(default=())

    def payload(self) -> dict:
        return {
            "x": self.x,
            "rho": self.rho,
            "n": self.n,
            "factors": [[p, a] for p, a in self.N.factors],
            "tie_flags": list(self.tie_flags),
        }


def _corner_slope(p: int, k: int, lp: float) -> float:
    # (ℓ(p^k) − ℓ(p^{k−1})) / log p, with ℓ(p⁰) = 0
    return p / lp if k == 1 else (p**k - p ** (k - 1)) / lp


def _exponent_with_tie(p: int, rho: float) -> tuple[int, bool]:
    lp = math.log(p)
    k, tie = 0, False
    while True:
        s = _corner_slope(p, k + 1, lp)
        if s <= rho - TIE_EPS:
            k += 1
        elif s < rho + TIE_EPS:
            k += 1  # boundary tie: larger exponent wins
            tie = True
        else:
            return k, tie


def champion_exponent(p: int, rho: float) -> int:
    """Largest k ≥ 0 whose corner slope stays ≤ ρ; ties take the larger k."""
    if rho <= RHO_MIN:
        raise DomainError(f"rho must exceed 2/log 2 ≈ {RHO_MIN:.4f}, got {rho}")
    return _exponent_with_tie(p, rho)[0]


def build_champion(ctx: PrimeContext, x: float) -> ChampionRecord:
    """N_ρ at ρ = x/log x, over all primes p ≤ x."""
    if x <= 4:
        raise DomainError(f"x must exceed 4, got {x}")
    if ctx.limit < x:
        raise OutOfRangeError(f"prime context limit {ctx.limit} < x = {x}")
    rho = x / math.log(x)
    fs, ties = [], []
    for p in ctx.primes[: bisect_right(ctx.primes, x)]:
        e, tie = _exponent_with_tie(p, rho)
        if tie:
            ties.append(p)
        if e:
            fs.append((p, e))
    N = FactoredInteger(fs)
    return ChampionRecord(x=float(x), rho=rho, N=N, n=ell(N), tie_flags=tuple(ties))


def benefit(champ: ChampionRecord, M: FactoredInteger) -> float:
    """ben(M) = ℓ(M) − ℓ(N) − ρ·log(M/N); 0 at M = N, else ≥ 0."""
    return ell(M) - champ.n - champ.rho * (M.log_value - champ.N.log_value)


def benefit_by_prime(champ: ChampionRecord, M: FactoredInteger) -> dict[int, float]:
    """Per-prime decomposition of ben(M); every term is ≥ 0 and they sum to ben(M).

    Term at p with exponents α in N and β in M:
    ℓ(p^β) − ℓ(p^α) − ρ(β − α)·log p, where ℓ(p⁰) = 0.
    """
    alphas = dict(champ.N.factors)
    betas = dict(M.factors)
    terms = {}
    for p in sorted(alphas.keys() | betas.keys()):
        a, b = alphas.get(p, 0), betas.get(p, 0)
        la = p**a if a else 0
        lb = p**b if b else 0
        terms[p] = (lb - la) - champ.rho * (b - a) * math.log(p)
    return terms


def verify_membership_in_G(champ: ChampionRecord, table: LandauTable) -> bool:
    """True iff g(n) = N at n = ℓ(N) — the computable face of champion-hood."""
    if table.n_max < champ.n:
        raise OutOfRangeError(f"table n_max={table.n_max} < champion n={champ.n}")
    return table.g(champ.n) == champ.N


def convexity_checks(champ: ChampionRecord, p: int, t_max: int) -> bool:
    """ben(N·p^t) ≥ t·ben(N·p) for t ≤ t_max, and ben(N·p^{−t}) ≥ t·ben(N·p^{−1})
    for t ≤ α_p; t = 1 is equality by construction."""
    if t_max < 1:
        raise DomainError(f"t_max must be >= 1, got {t_max}")
    a = champ.N.exponent_of(p)
    up1 = benefit(champ, champ.N.with_exponent(p, a + 1))
    for t in range(1, t_max + 1):
        if benefit(champ, champ.N.with_exponent(p, a + t)) < t * up1 - TIE_EPS:
            return False
    if a:
        down1 = benefit(champ, champ.N.with_exponent(p, a - 1))
        for t in range(1, a + 1):
            if benefit(champ, champ.N.with_exponent(p, a - t)) < t * down1 - TIE_EPS:
                return False
    return True


def attain_largest_prime_factor(ctx: PrimeContext, p: int, table: LandauTable) -> int:
    """An n whose g(n) has largest prime factor exactly p.

    For p ≥ 5 the champion at x = p does it (its top prime is p and champions
    are g-values); g(2) = 2 and g(3) = 3 settle p ∈ {2, 3}.
    """
    if p > ctx.limit:
        raise OutOfRangeError(f"p={p} exceeds prime context limit {ctx.limit}")
    i = bisect_left(ctx.primes, p)
    if i == len(ctx.primes) or ctx.primes[i] != p:
        raise DomainError(f"p={p} is not prime")
    if p in (2, 3):
        n = p
    else:
        n = build_champion(ctx, p).n
    if table.n_max < n:
        raise OutOfRangeError(f"table n_max={table.n_max} < required n={n}")
    return n
