import math
import random
from fractions import Fraction

import pytest

from landau.arith import DomainError, OutOfRangeError, prime_count, sieve_primes
from landau.prime_gaps import (
    C1_EXACT,
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

# ---------------------------------------------------------------- E(x, α)


def test_difference_set_example(ctx_million):
    E, r = difference_set(ctx_million, 100, 0.5)
    assert E == [4, 6, 10, 12]
    assert r == {4: 1, 6: 1, 10: 1, 12: 1}
    # pair count factors as the product of the two window counts
    assert sum(r.values()) == (prime_count(ctx_million, 110) - prime_count(ctx_million, 100)) * (
        prime_count(ctx_million, 100) - prime_count(ctx_million, 90)
    )


def test_difference_set_empty_window(ctx_million):
    # (114.1, 120] and (120, 125.9] contain no primes at all
    E, r = difference_set(ctx_million, 120, 0.37)
    assert E == [] and r == {}


def test_difference_set_guards(ctx_small):
    with pytest.raises(OutOfRangeError):
        difference_set(ctx_small, 10**4, 0.5)
    with pytest.raises(DomainError):
        difference_set(ctx_small, 2, 0.9)


def test_difference_set_context_independent(ctx_million):
    other = sieve_primes(150_000)
    assert difference_set(ctx_million, 10**5, 0.45) == difference_set(other, 10**5, 0.45)


def test_difference_set_bounds(ctx_million):
    E, r = difference_set(ctx_million, 10**5, 0.45)
    assert E == sorted(r)
    assert all(r[d] >= 1 for d in E)
    assert all(0 < d <= 2 * (10**5) ** 0.45 for d in E)


# ---------------------------------------------------------------- f and h


def test_f_examples():
    assert f_factor(1) == 1
    assert f_factor(3) == 2
    assert f_factor(15) == Fraction(8, 3)
    assert f_factor(7) == Fraction(6, 5)
    assert f_factor(12) == 2  # only the odd prime 3 counts


def test_h_examples():
    assert h_convolution(3) == 3
    assert h_convolution(2) == 0
    assert h_convolution(9) == 0
    for k in range(1, 8):
        assert h_convolution(2**k) == 0
    for p in (3, 5, 7, 11, 13):
        assert h_convolution(p) == Fraction(2 * p - 3, (p - 2) ** 2)
        assert h_convolution(p**2) == 0


def test_h_multiplicative():
    rng = random.Random(42)
    pairs = 0
    while pairs < 200:
        m, n = rng.randint(1, 1000), rng.randint(1, 1000)
        if math.gcd(m, n) == 1:
            assert h_convolution(m * n) == h_convolution(m) * h_convolution(n)
            pairs += 1


def test_h_inverts_to_f_squared():
    for n in range(1, 2001):
        total = sum(h_convolution(a) for a in range(1, n + 1) if n % a == 0)
        assert total == f_factor(n) ** 2


# ---------------------------------------------------------------- Σ f²


def test_sum_f_squared_small():
    s, holds, ratio = sum_f_squared_check(1)
    assert s == 1 and holds
    s, holds, _ = sum_f_squared_check(10)
    # 16 + 2·(4/3)² + (6/5)² with f(5)=f(10)=4/3, f(7)=6/5
    assert s == Fraction(4724, 225)
    assert holds


def test_sum_f_squared_matches_f_factor():
    s, _, _ = sum_f_squared_check(500)
    assert s == sum(f_factor(n) ** 2 for n in range(1, 501))


def test_sum_f_squared_large():
    for limit in (10**3, 10**4):
        s, holds, ratio = sum_f_squared_check(limit)
        assert holds
        assert 2.4 <= ratio <= 8 / 3


# ---------------------------------------------------------------- Euler products


def test_euler_products_tiny(ctx_small):
    assert euler_products(ctx_small, 3) == (0.75, 2.0)


def test_euler_products_million(ctx_million):
    twin_style, fsq_density = euler_products(ctx_million, 10**6)
    assert twin_style == pytest.approx(0.6602, abs=1e-3)
    assert twin_style < 2 / 3
    assert fsq_density == pytest.approx(2.63985, abs=1e-3)


def test_euler_products_guards(ctx_small):
    with pytest.raises(DomainError):
        euler_products(ctx_small, 2)
    with pytest.raises(OutOfRangeError):
        euler_products(ctx_small, 10**5)


# ---------------------------------------------------------------- predicates


def test_hypothesis_31_32_example(ctx_million):
    assert hypothesis_31_32(ctx_million, 100, 0.5, 0.5) == (True, False)
    # ε ≥ 1 makes the threshold nonpositive
    assert hypothesis_31_32(ctx_million, 100, 0.5, 1.5) == (True, True)


def test_selberg_example(ctx_million):
    assert selberg_conditions(ctx_million, 100, 0.5, 0.5) == (False, False, True)
    assert selberg_conditions(ctx_million, 100, 0.5, 10)[:2] == (True, True)


def test_nearest_slope_at_100():
    q, k, dist = nearest_slope(100)
    # 42/log 7 ≈ 21.584 sits 0.131 from ρ = 21.715; the margin is ≈ 0.0222
    assert (q, k) == (7, 2)
    assert dist == pytest.approx(0.131, abs=1e-3)
    assert dist >= math.sqrt(100) / math.log(100) ** 4


def test_scan_deterministic(ctx_million):
    a = exceptional_measure_scan(ctx_million, 10**5, 0.4, 0.9, 100)
    b = exceptional_measure_scan(ctx_million, 10**5, 0.4, 0.9, 100)
    assert a == b
    assert 0.0 <= a <= 1.0


def test_scan_trivial_epsilon(ctx_million):
    # with ε = 10 the two count predicates hold at every grid point
    xi = 10**5
    xi_hi = xi + xi / math.log(xi)
    for i in range(10):
        t = xi + (xi_hi - xi) * i / 9
        c21, c22, _ = selberg_conditions(ctx_million, t, 0.8, 10)
        assert c21 and c22


def test_scan_guards(ctx_million, ctx_small):
    with pytest.raises(DomainError):
        exceptional_measure_scan(ctx_million, 10**5, 0.4, 0.9, 9)
    with pytest.raises(OutOfRangeError):
        exceptional_measure_scan(ctx_small, 10**4, 0.4, 0.9, 10)


# ---------------------------------------------------------------- constants


def test_c1_exact_exceeds_published():
    assert C1_EXACT == Fraction(27, 16384)
    assert C1_EXACT >= Fraction(164, 100000)


def test_lower_bound_constant_examples():
    c1, c2 = lower_bound_constant(1, 0)
    assert c1 == Fraction(27, 16384)
    assert c2 == 0.00164
    assert lower_bound_constant(0.5, 0.5)[1] == pytest.approx(6.40625e-6, rel=1e-12)
    with pytest.raises(DomainError):
        lower_bound_constant(0, 0)
    with pytest.raises(DomainError):
        lower_bound_constant(0.5, 1)


# ---------------------------------------------------------------- sieve bound / report


def test_sieve_bound_example(ctx_million):
    rows = sieve_bound_report(ctx_million, 100, 0.5)
    assert [d for d, *_ in rows] == [4, 6, 10, 12]
    d, rd, bound, holds = rows[0]
    assert (d, rd, holds) == (4, 1, True)
    assert bound == pytest.approx(20.1186, abs=1e-3)


def test_sieve_bound_full_scan(ctx_million):
    assert all(holds for *_, holds in sieve_bound_report(ctx_million, 10**5, 0.45))


def test_gap_report(ctx_million):
    rep = build_gap_report(ctx_million, 10**5, 0.45, 0.5)
    assert rep.E == tuple(sorted(rep.r))
    assert all(rep.r[d] >= 1 for d in rep.E)
    assert rep.hyp31 and rep.hyp32
    assert rep.lower_bound_holds  # |E| ≥ C₂·x^α given the hypotheses
    payload = rep.payload()
    assert set(payload) == {
        "x",
        "alpha",
        "epsilon",
        "E",
        "r",
        "hyp31",
        "hyp32",
        "selberg",
        "c2",
        "lower_bound_holds",
    }
    assert payload["selberg"] == [True, True, True]
    assert payload["r"] == {str(d): rep.r[d] for d in rep.E}
