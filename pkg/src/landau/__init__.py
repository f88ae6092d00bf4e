"""Landau's function g(n), champion numbers, swap neighborhoods, and
prime-gap sieve bounds, all in exact factored arithmetic."""

from .arith import (
    BudgetError,
    DomainError,
    FactoredInteger,
    OutOfRangeError,
    PrimeContext,
    compare_factored,
    ell,
    moebius,
    prime_count,
    sieve_primes,
)
from .champions import (
    ChampionRecord,
    attain_largest_prime_factor,
    benefit,
    benefit_by_prime,
    build_champion,
    champion_exponent,
    convexity_checks,
    verify_membership_in_G,
)
from .gtable import (
    CacheParseError,
    GapStatistics,
    IncreasePoints,
    LandauTable,
    brute_force_g,
    gamma,
    gap_statistics,
    increase_points,
    landau_g,
    read_table_cache,
    write_table_cache,
)
from .prime_gaps import (
    GapReport,
    build_gap_report,
    difference_set,
    euler_products,
    exceptional_measure_scan,
    f_factor,
    h_convolution,
    hypothesis_31_32,
    lower_bound_constant,
    nearest_slope,
    selberg_conditions,
    sieve_bound_report,
    sum_f_squared_check,
)
from .windows import (
    SwapCandidate,
    WindowReport,
    check_ordering_by_d,
    enumerate_B,
    eq52_bound_holds,
    lemma51_bounds,
    surrounding_primes,
    verify_window_against_dp,
    window_checks,
    window_g,
)

__all__ = [
    "BudgetError",
    "CacheParseError",
    "ChampionRecord",
    "DomainError",
    "FactoredInteger",
    "GapReport",
    "GapStatistics",
    "IncreasePoints",
    "LandauTable",
    "OutOfRangeError",
    "PrimeContext",
    "SwapCandidate",
    "WindowReport",
    "attain_largest_prime_factor",
    "benefit",
    "benefit_by_prime",
    "brute_force_g",
    "build_champion",
    "build_gap_report",
    "champion_exponent",
    "check_ordering_by_d",
    "compare_factored",
    "convexity_checks",
    "difference_set",
    "ell",
    "enumerate_B",
    "eq52_bound_holds",
    "euler_products",
    "exceptional_measure_scan",
    "f_factor",
    "gamma",
    "gap_statistics",
    "h_convolution",
    "hypothesis_31_32",
    "increase_points",
    "landau_g",
    "lemma51_bounds",
    "lower_bound_constant",
    "moebius",
    "nearest_slope",
    "prime_count",
    "read_table_cache",
    "selberg_conditions",
    "sieve_bound_report",
    "sieve_primes",
    "sum_f_squared_check",
    "surrounding_primes",
    "verify_membership_in_G",
    "verify_window_against_dp",
    "window_checks",
    "window_g",
    "write_table_cache",
]
