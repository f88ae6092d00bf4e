"""Landau's g(n) by exact DP over prime powers, plus oracle and derived sequences.

g(n) = max lcm of the partitions of n = max{ M : ℓ(M) ≤ n }.  The DP walks the
primes in increasing order; for every budget j it keeps the best factored value
using only the primes seen so far.  best[i][j] = max over e ≥ 0 with
ℓ(p_i^e) ≤ j of p_i^e · best[i−1][j − ℓ(p_i^e)]; rows stay monotone in j, so
budget slack never needs a separate pass.  Cells hold (log, chain) where a
chain is a linked ((p, e), parent) tuple — O(1) to extend, expanded to a
FactoredInteger only when the table is materialized.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .arith import (
    LOG_TIE_EPS,
    ONE,
    BudgetError,
    DomainError,
    FactoredInteger,
    OutOfRangeError,
    PrimeContext,
    compare_factored,
)

BRUTE_FORCE_LIMIT = 35
TABLE_GUARD = 200_000  # memory guard on n_max; override with allow_large


class CacheParseError(ValueError):
    """A table cache file failed to parse; the message names the line."""


@dataclass(frozen=True)
class LandauTable:
    """g(1..n_max) as FactoredIntegers; values[n-1] = g(n)."""

    n_max: int
    values: list[FactoredInteger]

    def g(self, n: int) -> FactoredInteger:
        if n == 0:
            return ONE  # convention g(0) = 1
        if not 1 <= n <= self.n_max:
            raise OutOfRangeError(f"n={n} outside table range [1, {self.n_max}]")
        return self.values[n - 1]

    def truncate(self, m: int) -> "LandauTable":
        if not 1 <= m <= self.n_max:
            raise OutOfRangeError(f"cannot truncate to m={m} (n_max={self.n_max})")
        return LandauTable(n_max=m, values=self.values[:m])


@dataclass(frozen=True)
class IncreasePoints:
    """The n_k with g(n_k) > g(n_k − 1), plus consecutive gaps."""

    points: list[int]
    gaps: list[int]


@dataclass(frozen=True)
class GapStatistics:
    histogram: dict[int, int]
    min_gap: int
    mean_gap: float


def _chain_factors(chain) -> tuple:
    fs = []
    while chain is not None:
        fs.append(chain[0])
        chain = chain[1]
    fs.reverse()  # chains grow largest-prime-first
    return tuple(fs)


def _chain_value(chain) -> int:
    v = 1
    while chain is not None:
        (p, e), chain = chain
        v *= p**e
    return v


def brute_force_g(n: int) -> FactoredInteger:
    """Maximum lcm over all partitions of n, by exhaustive enumeration.

    Parts equal to 1 never change an lcm, so only parts ≥ 2 are enumerated,
    in non-increasing order.
    """
    if n < 1:
        raise DomainError(f"g undefined for n={n}")
    if n > BRUTE_FORCE_LIMIT:
        raise OutOfRangeError(
            f"brute force capped at n={BRUTE_FORCE_LIMIT}; partition count explodes"
        )
    best = 1

    def rec(remaining: int, max_part: int, acc: int) -> None:
        nonlocal best
        if acc > best:
            best = acc
        for m in range(min(max_part, remaining), 1, -1):
            rec(remaining - m, m, math.lcm(acc, m))

    rec(n, n, 1)

    fs = []
    v, d = best, 2
    while d * d <= v:
        if v % d == 0:
            e = 0
            while v % d == 0:
                v //= d
                e += 1
            fs.append((d, e))
        d += 1
    if v > 1:
        fs.append((v, 1))
    return FactoredInteger(fs)


def landau_g(ctx: PrimeContext, n_max: int, *, allow_large: bool = False) -> LandauTable:
    """Exact table of g(1..n_max) by DP over prime powers.

    Requires ctx.limit ≥ n_max: any prime p in an optimal M has ℓ(p^k) = p^k ≤ n.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    if ctx.limit < n_max:
        raise OutOfRangeError(f"prime context limit {ctx.limit} < n_max {n_max}")
    if n_max > TABLE_GUARD and not allow_large:
        raise BudgetError(f"n_max={n_max} exceeds guard {TABLE_GUARD}; pass allow_large")

    logs = [0.0] * (n_max + 1)
    chains: list = [None] * (n_max + 1)
    eps = LOG_TIE_EPS

    for p in ctx.primes[: bisect_right(ctx.primes, n_max)]:
        lp = math.log(p)
        powers = []
        c, e = p, 1
        while c <= n_max:
            powers.append((c, e * lp, e))
            c *= p
            e += 1
        # descending j: every read at j - c is still the previous prime's row
        if len(powers) == 1:
            for j in range(n_max, p - 1, -1):
                cand = logs[j - p] + lp
                if cand > logs[j] + eps:
                    logs[j] = cand
                    chains[j] = ((p, 1), chains[j - p])
                elif cand > logs[j] - eps:
                    if _chain_value(chains[j - p]) * p > _chain_value(chains[j]):
                        logs[j] = cand
                        chains[j] = ((p, 1), chains[j - p])
        else:
            for j in range(n_max, p - 1, -1):
                best = logs[j]
                bchain = chains[j]
                changed = False
                for c, lpe, e in powers:
                    if c > j:
                        break
                    cand = logs[j - c] + lpe
                    if cand > best + eps:
                        best, bchain, changed = cand, ((p, e), chains[j - c]), True
                    elif cand > best - eps:
                        if _chain_value(chains[j - c]) * p**e > _chain_value(bchain):
                            best, bchain, changed = cand, ((p, e), chains[j - c]), True
                if changed:
                    logs[j] = best
                    chains[j] = bchain

    values = []
    prev_fs, prev_fi = None, None
    for n in range(1, n_max + 1):
        fs = _chain_factors(chains[n])
        if fs != prev_fs:
            prev_fs, prev_fi = fs, FactoredInteger(fs)
        values.append(prev_fi)
    return LandauTable(n_max=n_max, values=values)


def increase_points(table: LandauTable) -> IncreasePoints:
    """n_1 = 1 by convention, then every n ≥ 2 with g(n) > g(n−1)."""
    pts = [1]
    for n in range(2, table.n_max + 1):
        if compare_factored(table.g(n), table.g(n - 1)) > 0:
            pts.append(n)
    return IncreasePoints(points=pts, gaps=[b - a for a, b in zip(pts, pts[1:])])


def gamma(table: LandauTable, n: int) -> int:
    """γ(n) = number of increase points ≤ n (n_1 = 1 counted)."""
    if n < 1:
        raise DomainError(f"gamma undefined for n={n}")
    if n > table.n_max:
        raise OutOfRangeError(f"n={n} beyond table n_max={table.n_max}")
    return bisect_right(increase_points(table).points, n)


def gap_statistics(points: IncreasePoints) -> GapStatistics:
    """Exact histogram of consecutive n_{k+1} − n_k, with min and mean."""
    if len(points.points) < 2:
        raise DomainError("need at least two increase points")
    gaps = points.gaps
    hist = dict(sorted(Counter(gaps).items()))
    return GapStatistics(histogram=hist, min_gap=min(gaps), mean_gap=sum(gaps) / len(gaps))


# ---------------------------------------------------------------------------
# table cache: one line per n, `n,p1^e1 p2^e2 ...` (primes ascending), `n,1`
# for g(n) = 1; UTF-8, LF.  Round-trips byte-exact.


def write_table_cache(table: LandauTable, path) -> None:
    lines = []
    for n in range(1, table.n_max + 1):
        fi = table.g(n)
        body = " ".join(f"{p}^{e}" for p, e in fi.factors) if fi.factors else "1"
        lines.append(f"{n},{body}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def read_table_cache(path) -> LandauTable:
    values = []
    for i, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        try:
            head, _, body = line.partition(",")
            if int(head) != i:
                raise ValueError(f"expected n={i}, got {head!r}")
            if body == "1":
                values.append(ONE)
                continue
            fs = []
            for tok in body.split(" "):
                ps, sep, es = tok.partition("^")
                if not sep:
                    raise ValueError(f"malformed prime power {tok!r}")
                fs.append((int(ps), int(es)))
            values.append(FactoredInteger(fs))
        except ValueError as exc:
            raise CacheParseError(f"line {i}: {exc}") from exc
    if not values:
        raise CacheParseError("line 1: cache file is empty")
    return LandauTable(n_max=len(values), values=values)
