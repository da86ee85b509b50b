import pickle
from fractions import Fraction

import pytest

from src.characters import enumerate_characters, is_primitive, principal_character
from src.divisor_sets import NON_ONE, ONE, PRIMES, SQUARES
from src.errors import NotPrimitiveProduct, SetExcludesOne
from src.identities import checks
from src.identities.reports import STATUS_FAIL
from src.numtheory import euler_phi, tau
from src.polynomials.cyclotomic import cyclotomic
from src.polynomials.generalized import phi_A
from src.polynomials.intpoly import X, poly_product
from src.regular_systems import BUILTIN_SYSTEMS, D, E, U, a_divisors, mobius_A

SYSTEMS = list(BUILTIN_SYSTEMS.values())
SETS = [ONE, NON_ONE, SQUARES, PRIMES]


def assert_pass(report):
    assert report.passed, report.to_line()


def test_random_function_is_deterministic_and_picklable():
    f = checks.RandomIntFunction(5)
    g = pickle.loads(pickle.dumps(f))
    assert [f(m) for m in range(1, 50)] == [g(m) for m in range(1, 50)]
    assert repr(f) == "random[5]"
    assert set(checks.sample_functions(3)) == {"id", "one", "square", "random[3]"}


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
@pytest.mark.parametrize("S", SETS, ids=lambda S: S.name)
def test_construction(A, S):
    for n in (1, 2, 12, 16, 30, 36):
        assert_pass(checks.verify_construction(A, S, n, 128))


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
def test_system_identities(A):
    for n in range(1, 40):
        assert_pass(checks.verify_product_xn_minus_1(A, n))
        assert_pass(checks.verify_kappa(A, n))
        assert_pass(checks.verify_gamma_lift(A, n, seed=1))
        assert_pass(checks.verify_ramanujan(A, n))
        assert_pass(checks.verify_menon_poly(A, n))
        for f in checks.sample_functions(n).values():
            assert_pass(checks.verify_menon_sum(A, f, n))
        if n >= 2:
            assert_pass(checks.verify_cos_product(A, n))
        if mobius_A(A, n) != 0:
            assert_pass(checks.verify_recursion(A, n))


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
@pytest.mark.parametrize("S", SETS, ids=lambda S: S.name)
def test_set_identities(A, S):
    for n in range(1, 30):
        assert_pass(checks.verify_gen3(A, S, n))
        assert_pass(checks.verify_ramanujan_AS(A, S, n))
        assert_pass(checks.verify_coefficients(A, S, n))
        assert_pass(checks.verify_hurwitz(A, S, n, seed=2))
        if S.member(1):
            assert_pass(checks.verify_xn_via_h(A, S, n))


def test_xn_via_h_needs_one_in_S():
    with pytest.raises(SetExcludesOne):
        checks.verify_xn_via_h(D, NON_ONE, 6)


def test_gen3_example():
    # d in D(4) with 4/d a square: d in {1, 4}
    left = poly_product(checks.phi_AS(D, SQUARES, d) for d in a_divisors(D, 4))
    assert left == (X**4 - 1) * (X - 1)


def test_product_xn_for_E_at_16():
    assert poly_product(phi_A(E, d) for d in a_divisors(E, 16)) == X**16 - 1


def test_dft_hand_example():
    f = checks.RandomIntFunction(11)
    assert_pass(checks.verify_dft(D, f, 4, 2))
    for A in SYSTEMS:
        for n in range(1, 25):
            for k in range(n):
                assert_pass(checks.verify_dft(A, checks.f_square, n, k))


def test_menon_sum_reproduces_tau_phi():
    for n in range(1, 101):
        left = sum(checks.gcd_A(D, j - 1, n) for j in range(1, n + 1) if checks.gcd_A(D, j, n) == 1)
        assert left == tau(n) * euler_phi(n)
        assert_pass(checks.verify_menon_sum(D, checks.f_id, n))


@pytest.mark.slow
def test_menon_sum_full_range():
    for n in range(101, 501):
        assert_pass(checks.verify_menon_sum(D, checks.f_id, n))


def test_menon_char():
    for A in SYSTEMS:
        for n in range(1, 25):
            assert_pass(checks.verify_menon_char(A, n, seed=4))


def test_menon_char_product_mod_4():
    (chi,) = [c for c in enumerate_characters(4) if not c.is_principal()]
    assert checks.menon_char_rhs_poly(D, 4, chi) == cyclotomic(4)
    assert_pass(checks.verify_menon_char_product(D, 4, chi))


def test_menon_char_product_principal_matches_menon_poly():
    for n in range(1, 30):
        rhs = checks.menon_char_rhs_poly(D, n, principal_character(n))
        expected = poly_product(phi_A(D, e) ** (euler_phi(n) // euler_phi(e)) for e in a_divisors(D, n))
        assert rhs == expected


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
def test_menon_char_product_all_characters(A):
    for n in range(1, 25):
        for chi in enumerate_characters(n):
            report = checks.verify_menon_char_product(A, n, chi)
            assert_pass(report)
            if is_primitive(chi):
                assert checks.menon_char_rhs_poly(A, n, chi) == phi_A(A, n)


def test_exp_series():
    assert_pass(checks.verify_exp_series(D, 6, Fraction(1, 2), 200))
    assert_pass(checks.verify_exp_series(U, 12, Fraction(1, 3), 150))
    assert_pass(checks.verify_exp_series(E, 16, Fraction(-1, 2), 120))
    report = checks.verify_exp_series(D, 6, Fraction(1, 2), 200)
    assert float(report.params["error"]) < 1e-40


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
@pytest.mark.parametrize("x", [Fraction(1, 2), Fraction(1, 3)], ids=str)
def test_exp_series_within_bound_at_working_precision(A, x):
    for n in range(2, 51):
        assert_pass(checks.verify_exp_series(A, n, x, 200))


def test_exp_series_error_ceiling():
    short = checks.verify_exp_series(D, 6, Fraction(1, 2), 5)
    assert short.status == STATUS_FAIL
    assert_pass(checks.verify_exp_series(D, 6, Fraction(1, 2), 5, max_error=None))


@pytest.mark.parametrize(
    "n, x, K", [(1, Fraction(1, 2), 10), (6, Fraction(0), 10), (6, Fraction(1), 10), (6, Fraction(1, 2), 0)]
)
def test_exp_series_preconditions(n, x, K):
    with pytest.raises(ValueError):
        checks.verify_exp_series(D, n, x, K)


def test_cos_product_needs_n_at_least_two():
    with pytest.raises(ValueError):
        checks.verify_cos_product(D, 1)


def test_recursion_rejects_non_primitive_products():
    with pytest.raises(NotPrimitiveProduct):
        checks.verify_recursion(D, 4)


def test_exponentially_odd():
    for n in range(1, 121):
        assert_pass(checks.verify_exponentially_odd(n))


def test_characters():
    for n in range(1, 31):
        assert_pass(checks.verify_characters(n))


def test_failed_check_carries_counterexample(monkeypatch):
    monkeypatch.setattr(checks, "phi_A", lambda A, n: X)
    report = checks.verify_product_xn_minus_1(D, 6)
    assert report.status == STATUS_FAIL
    assert report.counterexample.n == 6
    assert set(report.counterexample.details) == {"product", "expected"}
    assert report.counterexample.details["expected"] == "x^6 - 1"


def test_construction_compares_against_classical_forms(monkeypatch):
    monkeypatch.setitem(checks.CLASSICAL_FORMS, (D, SQUARES), lambda n: X)
    report = checks.verify_construction(D, SQUARES, 12)
    assert report.status == STATUS_FAIL
    assert set(report.counterexample.details) == {"exact", "classical"}
    assert report.counterexample.details["classical"] == "x"
    assert_pass(checks.verify_construction(D, ONE, 12))
