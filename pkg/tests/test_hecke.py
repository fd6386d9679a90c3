from fractions import Fraction

import pytest
import sympy

from moonshine.hecke import HeckeImage, adams_on_series, hecke, scaled_hecke
from moonshine.modular import eisenstein, moonshine_J
from moonshine.qseries import LaurentSeries, PrecisionError


def brute_hecke(f: LaurentSeries, k: int) -> dict[Fraction, Fraction]:
    """T_k f by summing f((a tau + b)/d) term by term.

    Each coefficient of f((a tau + b)/d) lives in Q(zeta_d); we accumulate it
    as a vector over the powers of zeta_d and reduce modulo the cyclotomic
    polynomial at the end. Exponents may be fractional.
    """
    x = sympy.Symbol("x")
    acc: dict[Fraction, dict[int, list[Fraction]]] = {}
    for a in range(1, k + 1):
        if k % a:
            continue
        d = k // a
        for b in range(d):
            for n, c in f.items():
                e = Fraction(n * a, d)
                vec = acc.setdefault(e, {}).setdefault(d, [Fraction(0)] * d)
                vec[(n * b) % d] += c
    out = {}
    for e, by_d in acc.items():
        total = Fraction(0)
        for d, vec in by_d.items():
            poly = sum(sympy.Rational(v.numerator, v.denominator) * x**r for r, v in enumerate(vec))
            red = sympy.rem(sympy.expand(poly), sympy.cyclotomic_poly(d, x), x)
            red = sympy.nsimplify(red)
            assert red.is_Rational, "non-rational remainder"
            total += Fraction(int(red.p), int(red.q))
        out[e] = total / k
    return out


@pytest.mark.parametrize("k", range(1, 7))
def test_closed_form_matches_definition(k):
    N = 20
    J = moonshine_J(k * N)
    brute = brute_hecke(J.truncate(k * N), k)
    fast = hecke(J, k, order=N)
    for e, c in brute.items():
        if e.denominator != 1:
            assert c == 0
        elif e <= N:
            assert fast.coefficient(int(e)) == c, (k, e)


def test_closed_form_on_rational_series():
    f = LaurentSeries(-1, [Fraction(1, 3), 2, Fraction(-5, 7), 4, 1, 0, 3, 9, Fraction(1, 2)] + [1] * 20, 27)
    for k in (2, 3, 4):
        brute = brute_hecke(f, k)
        fast = hecke(f, k)
        for e, c in brute.items():
            if e.denominator == 1 and e <= fast.order:
                assert fast.coefficient(int(e)) == c


def test_T1_is_identity():
    J = moonshine_J(15)
    assert hecke(J, 1).identical(J)


def test_2T2J_examples():
    J = moonshine_J(20)
    img = scaled_hecke(J, 2)
    assert img.coefficient(-2) == 1
    assert img.coefficient(0) == 0
    assert img.coefficient(-1) == 0


@pytest.mark.parametrize("k", range(1, 13))
def test_principal_part_law(k):
    J = moonshine_J(3 * k)
    img = scaled_hecke(J, k, order=3)
    assert img.valuation == -k and img.coefficient(-k) == 1
    assert all(img.coefficient(n) == 0 for n in range(-k + 1, 1))
    assert img.is_integral()


def test_constant_term_is_sigma_times_c0():
    f = moonshine_J(30) + 5
    assert scaled_hecke(f, 6, order=2).coefficient(0) == (1 + 2 + 3 + 6) * 5


@pytest.mark.parametrize("m,n", [(2, 3), (2, 5), (3, 4)])
def test_hecke_multiplicative_on_coprime(m, n):
    N = 20
    J = moonshine_J(m * n * N)
    lhs = hecke(hecke(J, n), m, order=N)
    rhs = hecke(J, m * n, order=N)
    assert lhs.identical(rhs)


def test_precision_contract():
    J = moonshine_J(20)
    assert scaled_hecke(J, 2).order == 10
    with pytest.raises(PrecisionError, match="precision too low"):
        scaled_hecke(J, 3, order=7)


def test_adams_is_identity():
    J = moonshine_J(5)
    assert adams_on_series(J, 2) is J
    z = LaurentSeries.zero(5)
    assert adams_on_series(z, 5).is_zero()
    E4 = eisenstein(4, 6)
    assert adams_on_series(E4, 3).identical(E4)


def test_hecke_image_record():
    J = moonshine_J(40)
    rec = HeckeImage.of(J, 4, order=10)
    assert rec.k == 4 and rec.scaled_image.is_integral()
    assert rec.scaled_image.principal_part().identical(LaurentSeries.monomial(-4, -1))
