import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from moonshine.supersingular import (
    MONSTER_ORDER,
    PrimeField,
    hasse_polynomial,
    is_prime,
    legendre_j,
    ogg_scan,
    prime_divisors,
    primes_up_to,
    supersingular_j_set,
)

OGG = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71]


def supersingular_count(p: int) -> int:
    """Number of supersingular j-invariants in characteristic p >= 5."""
    return p // 12 + {1: 0, 5: 1, 7: 1, 11: 2}[p % 12]


def curve_with_j(p: int, j: int) -> tuple[int, int]:
    if j == 0:
        return 0, 1
    if j == 1728 % p:
        return 1, 0
    c = j * (1728 - j) % p
    return 3 * c % p, 2 * c * (1728 - j) % p


def trace_of_frobenius(p: int, A: int, B: int) -> int:
    squares = [0] * p
    for y in range(p):
        squares[y * y % p] += 1
    points = 1 + sum(squares[(x * x * x + A * x + B) % p] for x in range(p))
    return p + 1 - points


def supersingular_in_prime_field(p: int) -> set[int]:
    """Point-counting oracle: j in F_p is supersingular iff a_p = 0."""
    return {j for j in range(p) if trace_of_frobenius(p, *curve_with_j(p, j)) == 0}


@pytest.mark.parametrize("p", [q for q in primes_up_to(100) if q >= 5])
def test_against_point_counting(p):
    r = supersingular_j_set(p)
    assert len(r.j_set) == supersingular_count(p)
    in_fp = {a for a, b in r.j_set if b == 0}
    assert in_fp == supersingular_in_prime_field(p)
    assert r.all_in_prime_field == (len(supersingular_in_prime_field(p)) == supersingular_count(p))


@pytest.mark.parametrize("p", [5, 7, 11, 13, 37, 101])
def test_frobenius_closure(p):
    r = supersingular_j_set(p)
    F = PrimeField(p)
    assert {F.frobenius(j) for j in r.j_set} == set(r.j_set)


def test_small_examples():
    assert hasse_polynomial(5) == [1, 4, 1]
    assert supersingular_j_set(5).sorted_j() == [(0, 0)]
    assert supersingular_j_set(7).sorted_j() == [(6, 0)]  # 1728 = 6 mod 7
    assert supersingular_j_set(11).sorted_j() == [(0, 0), (1, 0)]
    assert supersingular_j_set(13).sorted_j() == [(5, 0)]
    assert not supersingular_j_set(37).all_in_prime_field
    for p in (2, 3):
        assert supersingular_j_set(p).sorted_j() == [(0, 0)]


def test_hasse_roots_are_distinct_count():
    # H_p has (p-1)/2 distinct roots, none of them 0 or 1
    for p in (5, 7, 11, 13, 17, 19, 23):
        assert supersingular_j_set(p).n_lambda_roots == (p - 1) // 2


@pytest.mark.parametrize("p", primes_up_to(60))
def test_delta_is_least_non_residue(p):
    F = PrimeField(p)
    if p == 2:
        return
    assert F.is_non_residue(F.delta)
    assert all(not F.is_non_residue(d) for d in range(1, F.delta))


elems = st.tuples(st.integers(0, 12), st.integers(0, 12))


@settings(max_examples=100, deadline=None)
@given(elems, elems, elems)
def test_field_axioms(x, y, z):
    F = PrimeField(13)
    assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
    assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
    if x != (0, 0):
        assert F.mul(x, F.inv(x)) == (1, 0)
    assert F.pow(x, 13) == F.frobenius(x)


def test_legendre_j_known_values():
    F = PrimeField(101)
    assert legendre_j(F, (2, 0)) == (1728 % 101, 0)  # lambda = -1, 2, 1/2 give 1728
    assert legendre_j(F, (F.p - 1, 0)) == (1728 % 101, 0)


def test_ogg_scan_and_monster_fixture():
    r = ogg_scan(100)
    assert r.passing == OGG
    assert r.failing == [p for p in primes_up_to(100) if p not in OGG]
    assert prime_divisors(MONSTER_ORDER) == OGG


def test_ogg_deterministic():
    assert ogg_scan(50).passing == ogg_scan(50).passing


def test_prime_helpers():
    assert [n for n in range(30) if is_prime(n)] == primes_up_to(29)
    with pytest.raises(ValueError):
        PrimeField(15)


def test_prime_bound(monkeypatch):
    monkeypatch.setenv("MOONSHINE_MAX_PRIME", "50")
    with pytest.raises(ValueError):
        ogg_scan(100)
