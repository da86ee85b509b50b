import math
from fractions import Fraction

import pytest

from src.divisor_sets import (
    NON_ONE,
    ONE,
    PRIMES,
    SQUARES,
    DivisorValueSet,
    euler_phi_AS,
    euler_phi_AS_count,
    explicit_set,
    h_AS,
    hurwitz_mobius_side,
    hurwitz_sum,
    mobius_AS,
    ramanujan_A_holder,
    ramanujan_AS,
    ramanujan_classical,
    ramanujan_via_gamma,
    resolve_set,
    validate_set,
)
from src.errors import SetExcludesOne
from src.numtheory import (
    euler_phi,
    is_exponentially_odd,
    is_prime,
    is_square,
    is_squarefree,
    liouville,
    mobius_unitary,
    primes_up_to,
)
from src.regular_systems import BUILTIN_SYSTEMS, D, E, U, a_divisors, euler_phi_A, is_A_primitive, mobius_A

SYSTEMS = list(BUILTIN_SYSTEMS.values())
SETS = [ONE, NON_ONE, SQUARES, PRIMES, explicit_set([1, 2, 6])]


def test_resolve_set():
    assert resolve_set("Squares") is SQUARES
    assert resolve_set("list:1,4,9").name == "list:1,4,9"
    assert resolve_set("list:1,4,9") == explicit_set([1, 4, 9])
    with pytest.raises(ValueError, match="Unknown set"):
        resolve_set("cubes")
    with pytest.raises(ValueError, match="integers"):
        resolve_set("list:1,a")


@pytest.mark.parametrize("values", [[], [0, 1], [3, 2], [2, 2]])
def test_explicit_set_rejects_bad_lists(values):
    with pytest.raises(ValueError):
        explicit_set(values)


def test_validate_set():
    assert validate_set(SQUARES, 200) is None
    assert validate_set(ONE, 200) is None
    fake = DivisorValueSet(name="fake", member=is_prime, claims_multiplicative=True)
    assert "1 is not a member" in validate_set(fake, 50)
    squarefree_plus_eight = DivisorValueSet(
        name="sf8", member=lambda m: is_squarefree(m) or m == 8, claims_multiplicative=True
    )
    assert validate_set(squarefree_plus_eight, 100) is not None


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
@pytest.mark.parametrize("S", SETS, ids=lambda S: S.name)
def test_mobius_AS_sums_to_rho(A, S):
    for n in range(1, 300):
        assert sum(mobius_AS(A, S, d) for d in a_divisors(A, n)) == S.rho(n)


def test_mobius_AS_examples():
    assert all(mobius_AS(A, ONE, n) == mobius_A(A, n) for A in SYSTEMS for n in range(1, 300))
    assert mobius_AS(D, PRIMES, 30) == 3
    assert mobius_AS(U, SQUARES, 2) == -1
    assert mobius_AS(U, SQUARES, 4) == 0
    assert all(mobius_AS(D, SQUARES, n) == liouville(n) for n in range(1, 300))
    assert all(mobius_AS(U, ONE, n) == mobius_unitary(n) for n in range(1, 300))


def test_mobius_D_primes_on_squarefree():
    # p1...pk -> (-1)^(k-1) k
    assert mobius_AS(D, PRIMES, 2) == 1
    assert mobius_AS(D, PRIMES, 6) == -2
    assert mobius_AS(D, PRIMES, 2 * 3 * 5 * 7) == -4


def test_h_AS():
    assert all(h_AS(A, ONE, n) == 1 for A in SYSTEMS for n in range(1, 200))
    assert all(h_AS(U, SQUARES, n) == (1 if is_exponentially_odd(n) else 0) for n in range(1, 500))
    assert (h_AS(D, SQUARES, 1), h_AS(D, SQUARES, 2), h_AS(D, SQUARES, 4)) == (1, 1, 0)
    assert all(h_AS(D, SQUARES, n) == (1 if is_squarefree(n) else 0) for n in range(1, 200))


def test_h_AS_needs_one_in_S():
    with pytest.raises(SetExcludesOne):
        h_AS(D, NON_ONE, 6)


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
@pytest.mark.parametrize("S", SETS, ids=lambda S: S.name)
def test_h_AS_inverts_mobius_AS(A, S):
    if not S.member(1):
        pytest.skip("no inverse when 1 is not in S")
    for n in range(1, 150):
        total = sum(h_AS(A, S, d) * mobius_AS(A, S, n // d) for d in a_divisors(A, n))
        assert total == (1 if n == 1 else 0)


def test_euler_phi_AS_examples():
    assert euler_phi_AS(D, SQUARES, 4) == 3
    assert all(euler_phi_AS(A, ONE, n) == euler_phi_A(A, n) for A in SYSTEMS for n in range(1, 300))
    assert all(euler_phi_AS(D, NON_ONE, n) == n - euler_phi(n) for n in range(1, 300))


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
@pytest.mark.parametrize("S", SETS, ids=lambda S: S.name)
def test_euler_phi_AS_matches_count(A, S):
    for n in range(1, 200):
        assert euler_phi_AS(A, S, n) == euler_phi_AS_count(A, S, n)


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
@pytest.mark.parametrize("S", SETS, ids=lambda S: S.name)
def test_ramanujan_AS_laws(A, S):
    for n in range(1, 60):
        assert ramanujan_AS(A, S, n, 0) == euler_phi_AS(A, S, n)
        assert ramanujan_AS(A, S, n, 1) == mobius_AS(A, S, n)
        for k in range(n + 1):
            assert ramanujan_AS(A, S, n, k) == ramanujan_AS(A, S, n, k + n)
            assert ramanujan_AS(A, S, n, (n - k) % n) == ramanujan_AS(A, S, n, k)


def test_ramanujan_examples():
    assert ramanujan_AS(U, ONE, 4, 1) == -1
    assert ramanujan_A_holder(U, 4, 1) == -1
    assert ramanujan_A_holder(D, 6, 2) == -1
    assert ramanujan_via_gamma(U, 12, 1) == 1
    assert ramanujan_classical(12, 12) == euler_phi(12)
    assert ramanujan_A_holder(E, 16, 16) == euler_phi_A(E, 16)
    with pytest.raises(ValueError):
        ramanujan_AS(D, ONE, 6, -1)


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
def test_ramanujan_forms_agree(A):
    for n in range(1, 100):
        for k in range(0, 100, 3):
            holder = ramanujan_A_holder(A, n, k)
            assert holder == ramanujan_via_gamma(A, n, k) == ramanujan_AS(A, ONE, n, k)


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
@pytest.mark.parametrize("S", SETS, ids=lambda S: S.name)
def test_hurwitz_lemma(A, S):
    for n in range(1, 60):
        for f in (lambda q: q, lambda q: q * q, lambda q: Fraction(1, q.denominator)):
            assert hurwitz_sum(A, S, f, n) == hurwitz_mobius_side(A, S, f, n)


def test_sets_sharing_a_name_are_not_confused():
    first = DivisorValueSet(name="custom", member=is_square)
    second = DivisorValueSet(name="custom", member=is_prime)
    assert first != second
    assert euler_phi_AS(D, first, 12) == euler_phi_AS_count(D, first, 12) == 6
    assert euler_phi_AS(D, second, 12) == euler_phi_AS_count(D, second, 12) == 4
    assert ramanujan_AS(D, second, 12, 0) == 4


MULTIPLICATIVE_SETS = [ONE, SQUARES]


def coprime_pairs(limit):
    return [(m, n) for m in range(2, limit) for n in range(m + 1, limit) if math.gcd(m, n) == 1]


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
@pytest.mark.parametrize("S", MULTIPLICATIVE_SETS, ids=lambda S: S.name)
def test_mobius_AS_is_multiplicative(A, S):
    for m, n in coprime_pairs(60):
        assert mobius_AS(A, S, m * n) == mobius_AS(A, S, m) * mobius_AS(A, S, n)


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
@pytest.mark.parametrize("S", MULTIPLICATIVE_SETS, ids=lambda S: S.name)
def test_ramanujan_AS_is_multiplicative_in_n(A, S):
    for m, n in coprime_pairs(30):
        for k in range(0, 60):
            assert ramanujan_AS(A, S, m * n, k) == ramanujan_AS(A, S, m, k) * ramanujan_AS(A, S, n, k)


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
@pytest.mark.parametrize("S", MULTIPLICATIVE_SETS, ids=lambda S: S.name)
def test_mobius_AS_on_prime_powers_is_bounded(A, S):
    for p in primes_up_to(30):
        for a in range(1, 12):
            assert abs(mobius_AS(A, S, p**a)) <= 1


@pytest.mark.parametrize("A", SYSTEMS, ids=lambda A: A.name)
def test_ramanujan_at_primitive_prime_powers(A):
    for p in primes_up_to(12):
        for a in range(1, 8):
            q = p**a
            if not is_A_primitive(A, q):
                continue
            for k in range(0, 3 * q + 1):
                assert ramanujan_AS(A, ONE, q, k) == (q - 1 if k % q == 0 else -1)
