from fractions import Fraction

import pytest

from moonshine.modular import (
    delta,
    delta_product,
    divisor_sigma,
    eisenstein,
    j_invariant,
    moonshine_J,
    named_forms,
)
from moonshine.qseries import SeriesError


def sigma_oracle(n, m):
    return sum(d**m for d in range(1, n + 1) if n % d == 0)


@pytest.mark.parametrize("n", range(1, 60))
def test_divisor_sigma(n):
    assert divisor_sigma(n, 3) == sigma_oracle(n, 3)
    assert divisor_sigma(n, 5) == sigma_oracle(n, 5)


def test_eisenstein_coefficients():
    E4, E6 = eisenstein(4, 5), eisenstein(6, 5)
    assert E4.coefficient(0) == 1 and E4.coefficient(1) == 240
    assert E6.coefficient(2) == -504 * 33 == -16632
    assert E4.coefficient(2) == 240 * 9
    with pytest.raises(SeriesError):
        eisenstein(8, 5)


def test_delta_two_routes():
    assert delta(1).coefficient(1) == 1
    assert delta(2).coefficient(2) == -24
    d1, d2 = delta(50), delta_product(50)
    assert d1.identical(d2)
    # Ramanujan tau values
    assert [d1.coefficient(n) for n in range(1, 8)] == [1, -24, 252, -1472, 4830, -6048, -16744]


def test_j_and_J():
    j = j_invariant(10)
    assert j.coefficient(-1) == 1 and j.coefficient(0) == 744
    assert j.coefficient(1) == 196884
    assert j.is_integral()
    J = moonshine_J(10)
    assert J.coefficient(0) == 0 and J.coefficient(-1) == 1
    assert J.coefficient(2) == 21493760


def test_j_routes_agree():
    assert j_invariant(40).identical(j_invariant(40, method="product"))


def test_j_via_E6():
    # j - 1728 = E6^2 / Delta is a second exact quotient
    N = 30
    E6 = eisenstein(6, N + 1)
    j2 = (E6 * E6 * delta(N + 2).inv()).truncate(N) + 1728
    assert j2.identical(j_invariant(N))


def test_j_by_long_division_oracle():
    # 1/Delta by naive long division over integers, then multiply by E4^3
    N = 12
    d = [int(delta(N + 2).coefficient(n)) for n in range(1, N + 3)]
    inv = [1]
    for k in range(1, N + 2):
        inv.append(-sum(d[i] * inv[k - i] for i in range(1, k + 1)))
    e4 = [int(eisenstein(4, N + 1).coefficient(n)) for n in range(N + 2)]
    e4cubed = [sum(e4[a] * e4[b] * e4[n - a - b] for a in range(n + 1) for b in range(n + 1 - a)) for n in range(N + 2)]
    j = [sum(e4cubed[i] * inv[n - i] for i in range(n + 1)) for n in range(N + 2)]
    assert j == [int(j_invariant(N).coefficient(n - 1)) for n in range(N + 2)]


def test_named_forms_weights():
    forms = named_forms(5)
    assert {k: f.weight for k, f in forms.items()} == {"E4": 4, "E6": 6, "Delta": 12, "j": 0, "J": 0}
    assert forms["Delta"].expansion.valuation == 1
    assert forms["j"].expansion.valuation == -1


def test_J_integral_order_100():
    J = moonshine_J(100)
    assert J.is_integral() and J.order == 100
    assert all(isinstance(c, Fraction) and c.denominator == 1 for c in J.coeffs)
