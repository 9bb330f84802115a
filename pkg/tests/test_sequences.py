import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seqid.sequences import (
    FIBONACCI,
    PELL,
    QuadraticInteger,
    SequenceSpec,
    companion,
    matrix_term,
    silver_power,
    term,
    term_naive,
    term_pair,
)

from conftest import iterate


@pytest.mark.parametrize(
    "s, n, expected",
    [(2, 0, 0), (2, 1, 1), (2, 5, 29), (1, 10, 55), (2, 7, 169), (3, 4, 33), (2, 2, 2)],
)
def test_term_values(s, n, expected):
    assert term(s, n) == expected
    assert term_naive(s, n) == expected


@pytest.mark.parametrize("n, expected", [(0, 2), (1, 2), (3, 14), (5, 82)])
def test_pell_lucas_values(n, expected):
    assert companion(PELL, n) == expected


@pytest.mark.parametrize("s, n, expected", [(2, 0, (0, 1)), (2, 4, (12, 29)), (1, 6, (8, 13))])
def test_term_pair(s, n, expected):
    assert term_pair(s, n) == expected


@pytest.mark.parametrize("n, expected", [(1, 1), (6, 70), (10, 2378)])
def test_matrix_term(n, expected):
    assert matrix_term(PELL, n) == expected


def test_matrix_term_rejects_zero():
    with pytest.raises(ValueError):
        matrix_term(PELL, 0)


@pytest.mark.parametrize("bad", [-1, -100])
def test_negative_index_rejected(bad):
    for f in (term, term_naive, companion, term_pair):
        with pytest.raises(ValueError):
            f(PELL, bad)


def test_spec_validation():
    with pytest.raises(ValueError):
        SequenceSpec(0)
    with pytest.raises(TypeError):
        SequenceSpec(2.0)
    assert SequenceSpec(3).discriminant == 13


def test_fast_paths_match_iteration_table():
    for s in range(1, 9):
        table = iterate(s, 2001)
        for n in range(0, 2001):
            assert term(s, n) == table[n]
            assert term_pair(s, n) == (table[n], table[n + 1])
            if n:
                assert matrix_term(s, n) == table[n]
        # term_naive is quadratic over the range; spot check it
        for n in (0, 1, 2, 17, 512, 2000):
            assert term_naive(s, n) == table[n]


def test_companion_against_own_recurrence(pell_lucas):
    for n in range(200):
        assert companion(PELL, n) == pell_lucas[n]
    lucas = iterate(1, 100, 2, 1)
    for n in range(100):
        assert companion(FIBONACCI, n) == lucas[n]


@pytest.mark.parametrize(
    "s, n, a, b",
    [(2, 2, 6, 2), (2, 1, 2, 1), (1, 3, 4, 2), (2, 0, 2, 0)],
)
def test_silver_power_examples(s, n, a, b):
    w = silver_power(s, n)
    assert (w.a, w.b) == (a, b)
    assert w.D == s * s + 4


def test_cassini_and_norm():
    for s in range(1, 9):
        t = iterate(s, 501)
        for n in range(1, 501):
            assert t[n - 1] * t[n + 1] - t[n] ** 2 == (-1) ** n
        for n in range(0, 501):
            b = companion(s, n)
            assert b * b - (s * s + 4) * t[n] ** 2 == 4 * (-1) ** n


def test_pell_equation_solutions(pell, pell_lucas):
    for n in range(1001):
        assert (pell_lucas[n] // 2) ** 2 - 2 * pell[n] ** 2 == (-1) ** n


def test_addition_formula():
    for s in range(1, 6):
        t = iterate(s, 125)
        for m in range(1, 61):
            for n in range(0, 61):
                assert t[m + n] == t[m - 1] * t[n] + t[m] * t[n + 1]


def test_quadratic_integer_closure_is_enforced():
    with pytest.raises(ArithmeticError):
        QuadraticInteger(1, 0, 8)  # s even: a must be even
    with pytest.raises(ArithmeticError):
        QuadraticInteger(1, 0, 5)  # s odd: a, b same parity
    with pytest.raises(ValueError):
        QuadraticInteger(2, 0, 6)
    with pytest.raises(ValueError):
        QuadraticInteger(2, 0, 5) + QuadraticInteger(2, 0, 8)


def test_quadratic_integer_norm_and_conjugate():
    g = QuadraticInteger.alpha(PELL)
    assert g.norm() == -1
    assert g * g.conjugate() == QuadraticInteger(-2, 0, 8)  # gamma * delta = -1
    assert g - g == QuadraticInteger(0, 0, 8)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 8), st.integers(0, 300), st.integers(0, 300))
def test_silver_power_multiplicative(s, m, n):
    assert silver_power(s, m + n) == silver_power(s, m) * silver_power(s, n)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 8), st.integers(0, 500))
def test_binet_exactness(s, n):
    w = silver_power(s, n)
    assert w.b == term(s, n)
    assert w.a == companion(s, n)


def test_large_index_agreement():
    n = 54321
    assert term(PELL, n) == matrix_term(PELL, n) == term_naive(PELL, n)
