from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import draw, nonzero_fractions
from oracles import (
    complete_brute,
    elem_brute,
    expand_linear_factors,
    gauss_binomial_brute,
    series_ratio,
)
from qid.errors import DegenerateQError
from qid.exactcore import (
    SeededSampler,
    cauchy_poly,
    complete_sym,
    derive_seed,
    elem_sym,
    from_str,
    gauss_binomial,
    qpochhammer,
    sample_scalar,
    supersym_complete,
    to_str,
)

F = Fraction
fractions = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 100)


def test_qpochhammer_examples():
    assert qpochhammer(F(17, 3), F(5), 0) == 1
    a = F(-2, 7)
    assert qpochhammer(a, F(3), 1) == 1 - a
    assert qpochhammer(3, 2, 2) == 10


@given(fractions, fractions, st.integers(1, 8))
def test_qpochhammer_recursion(a, q, n):
    assert qpochhammer(a, q, n) == (1 - a) * qpochhammer(a * q, q, n - 1)


def test_cauchy_examples():
    assert cauchy_poly(F(2), F(5), F(3), 0) == 1
    assert cauchy_poly(F(4, 3), F(4, 3), F(7), 3) == 0
    assert cauchy_poly(3, 1, 2, 2) == 2


@given(nonzero_fractions(), fractions, fractions, st.integers(0, 6))
def test_cauchy_matches_defining_form(a, b, q, n):
    assert cauchy_poly(a, b, q, n) == a**n * qpochhammer(b / a, q, n)


def test_cauchy_total_at_zero():
    assert cauchy_poly(0, F(2), F(3), 2) == (0 - 2) * (0 - 6)


def test_gauss_binomial_examples():
    q = F(5, 3)
    assert gauss_binomial(6, 0, q) == 1
    assert gauss_binomial(2, 1, q) == 1 + q
    assert gauss_binomial(4, 2, 2) == 35
    assert gauss_binomial(4, 5, q) == 0
    assert gauss_binomial(4, -1, q) == 0


@pytest.mark.parametrize("q", [F(1), F(-1)])
def test_gauss_binomial_degenerate_q(q):
    with pytest.raises(DegenerateQError):
        gauss_binomial(3, 1, q)


@pytest.mark.parametrize("n", range(0, 8))
def test_gauss_binomial_brute_force(n):
    q = F(-3, 4)
    for k in range(-1, n + 2):
        assert gauss_binomial(n, k, q) == gauss_binomial_brute(n, k, q)


@given(nonzero_fractions().filter(lambda q: abs(q) != 1), st.integers(1, 9), st.data())
def test_gauss_pascal_rules(q, n, data):
    k = data.draw(st.integers(1, n))
    g = lambda m, j: gauss_binomial(m, j, q)  # noqa: E731
    assert g(n, k) == g(n - 1, k) + q ** (n - k) * g(n - 1, k - 1)
    assert g(n, k) == q**k * g(n - 1, k) + g(n - 1, k - 1)
    # the shifted form used for [n, k-1]
    assert g(n, k - 1) == g(n - 1, k - 1) + q ** (n - k + 1) * g(n - 1, k - 2)
    assert g(n, k - 1) == q ** (k - 1) * g(n - 1, k - 1) + g(n - 1, k - 2)


def test_symmetric_function_examples():
    x = F(7, 2)
    assert elem_sym([x], 1) == x
    assert elem_sym([F(1), F(2)], 3) == 0
    assert elem_sym([1, 2, 3], 2) == 11
    assert elem_sym([1, 2], -1) == 0
    assert complete_sym([F(3), F(5)], 0) == 1
    assert complete_sym([x], 4) == x**4
    assert complete_sym([1, 2], 2) == 7
    assert supersym_complete([F(2)], [F(9)], 0) == 1
    assert supersym_complete([2], [1, 3], 2) == -1
    assert supersym_complete([2], [1, 3], -2) == 0


@given(st.lists(fractions, max_size=5), st.integers(0, 6))
def test_symmetric_functions_match_brute_force(X, i):
    assert elem_sym(X, i) == elem_brute(X, i)
    assert complete_sym(X, i) == complete_brute(X, i)


@given(st.lists(fractions, min_size=1, max_size=4), st.integers(1, 6))
def test_supersym_of_equal_sets_vanishes(X, i):
    assert supersym_complete(X, X, i) == 0


@given(st.lists(fractions, max_size=5), st.lists(fractions, max_size=5), st.integers(0, 7), st.randoms())
def test_symmetric_functions_permutation_invariant(X, Y, i, rnd):
    Xp, Yp = X[:], Y[:]
    rnd.shuffle(Xp)
    rnd.shuffle(Yp)
    assert elem_sym(X, i) == elem_sym(Xp, i)
    assert complete_sym(X, i) == complete_sym(Xp, i)
    assert supersym_complete(X, Y, i) == supersym_complete(Xp, Yp, i)


@given(st.lists(fractions, max_size=4), st.lists(fractions, max_size=4), fractions)
def test_supersym_generating_function(X, Y, t):
    N = 8
    num = expand_linear_factors([-y for y in Y])
    den = expand_linear_factors([-x for x in X])
    series = series_ratio(num, den, N)
    assert [supersym_complete(X, Y, i) for i in range(N + 1)] == series
    assert sum(supersym_complete(X, Y, i) * t**i for i in range(N + 1)) == sum(
        s * t**i for i, s in enumerate(series)
    )


@given(st.fractions())
def test_serialization_round_trip(x):
    s = to_str(x)
    assert from_str(s) == x
    p, q = s.split("/")
    assert int(q) > 0
    assert to_str(from_str(s)) == s


@given(st.fractions(max_denominator=100), st.fractions(max_denominator=100))
def test_arithmetic_round_trips(x, y):
    for v in (x + y, x - y, x * y):
        assert from_str(to_str(v)) == v


def test_sampler_deterministic():
    a = [sample_scalar(SeededSampler(7)) for _ in range(20)]
    b = [sample_scalar(SeededSampler(7)) for _ in range(20)]
    s = SeededSampler(7)
    c = [sample_scalar(s) for _ in range(20)]
    d = SeededSampler(7)
    e = [sample_scalar(d) for _ in range(20)]
    assert a == b
    assert c == e
    assert s.position == d.position > 0


def test_sampler_frozen_first_draws():
    # cross-platform determinism: the stream is a pure function of the seed
    s = SeededSampler(7)
    first = [to_str(sample_scalar(s)) for _ in range(3)]
    assert first == FROZEN_SEED7


# recorded from the reference run; any change means the stream changed
FROZEN_SEED7 = ["9/8", "-2/1", "-3/2"]


@given(st.integers(0, 2**64 - 1))
def test_sampler_bounds(seed):
    s = SeededSampler(seed)
    for _ in range(10):
        x = sample_scalar(s, (1, 10), (1, 10))
        assert F(1, 10) <= x <= 10


def test_derive_seed_is_stable_and_separates_keys():
    assert derive_seed(0, "kara", 1, 0) == derive_seed(0, "kara", 1, 0)
    assert derive_seed(0, "kara", 1, 0) != derive_seed(0, "kara", 1, 1)
    assert derive_seed(0, "kara", 1, 0) != derive_seed(1, "kara", 1, 0)


def test_draw_helper_nonzero(sampler):
    assert all(v != 0 for v in draw(sampler, 50))
