import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from moonshine import lambda_ops as lam
from moonshine.hecke import hecke
from moonshine.modular import moonshine_J
from moonshine.qseries import LaurentSeries, PrecisionError
from moonshine.verify import lambda_case

x, y = (1, 0), (0, 1)


def poly(*terms):
    return {m: Fraction(c) for m, c in terms}


def test_lambda_t_small():
    assert lam.lambda_t(lam.VirtualBundle((), 2), 3) == [poly(((0, 0), 1)), {}, {}, {}]
    V = lam.VirtualBundle((x, y), 2)
    assert lam.lambda_t(V, 3) == [poly(((0, 0), 1)), poly((x, 1), (y, 1)), poly(((1, 1), 1)), {}]


def test_symmetric_t_small():
    V = lam.VirtualBundle(((1,),), 1)
    assert lam.symmetric_t(V, 4) == [poly(((m,), 1)) for m in range(5)]
    assert lam.symmetric_t(lam.VirtualBundle((), 1), 2) == [poly(((0,), 1)), {}, {}]


def test_adams_psi_small():
    V = lam.VirtualBundle((x, y), 2)
    assert lam.adams_psi(V, 1) == poly((x, 1), (y, 1))
    assert lam.adams_psi(V, 2) == poly(((2, 0), 1), ((0, 2), 1))


def test_trivial_bundle_rank_counts():
    V = lam.VirtualBundle.trivial(3)
    # Lambda_t of a trivial rank-3 bundle is (1 + t)^3
    assert [p.get((0,), 0) for p in lam.lambda_t(V, 4)] == [1, 3, 3, 1, 0]


bundles = st.integers(0, 4).flatmap(
    lambda r: st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=r, max_size=r)
).map(lambda eig: lam.VirtualBundle(tuple(eig), 2))


@settings(max_examples=50, deadline=None)
@given(bundles, bundles, st.integers(1, 8))
def test_lambda_ring_axioms(V, W, order):
    assert lambda_case(V, W, order) == []


def test_newton_identities_explicit():
    V = lam.VirtualBundle((x, y, (1, 1)), 2)
    assert all(lam.newton_identity_holds(V, k) for k in range(1, 9))


# -- q-series exponential operations ------------------------------------------


def test_ganter_S_small_coefficients():
    J = moonshine_J(lam.ganter_precision(3, 6))
    S = lam.ganter_S(J, 3, 6)
    assert S.kind == "SymmetricS"
    assert S[0] == LaurentSeries.one(6)
    assert S[1] == J
    expected = (J * J).scale(Fraction(1, 2)) + hecke(J, 2, order=8)
    assert S[2] == expected


def test_ganter_of_zero():
    z = LaurentSeries.zero(200)
    S = lam.ganter_S(z, 4, 6)
    L = lam.ganter_Lambda(z, 4, 6)
    assert S[0] == LaurentSeries.one(6) and L[0] == LaurentSeries.one(6)
    for m in range(1, 5):
        assert S[m] == LaurentSeries.zero(6) and L[m] == LaurentSeries.zero(6)


def test_ganter_Lambda_inverse_of_S():
    J = moonshine_J(lam.ganter_precision(10, 20))
    S = lam.ganter_S(J, 10, 20).body
    L = lam.ganter_Lambda(J, 10, 20).body
    assert L[1] == -J
    prod = S * L
    assert prod[0] == LaurentSeries.one(20)
    for m in range(1, 11):
        assert prod[m] == LaurentSeries.zero(20)
        assert prod[m].order >= 20


def test_ganter_precision_failure():
    with pytest.raises(PrecisionError):
        lam.ganter_S(moonshine_J(10), 5, 5)


def test_faber_form_small():
    r = lam.replicability_check_faber_form(5, 30)
    assert r.ok and set(r.mismatches) == {1, 2, 3, 4, 5}


def test_theorem_form_first_rows():
    J = moonshine_J(lam.ganter_precision(4, 6))
    L = lam.ganter_Lambda(J, 4, 6).body
    assert L.coefficient(0, 0) == 1
    for n in range(1, 7):
        assert L.coefficient(1, n) == -J.coefficient(n)
    assert lam.replicability_check_theorem_form(4, 6).ok


def non_replicable(order):
    return LaurentSeries.from_dict({-1: 1, 1: 2, 2: 1}, order)


def test_forms_fail_together_for_non_replicable():
    f = non_replicable(400)
    faber = lam.replicability_check_faber_form(4, 12, f)
    theorem = lam.replicability_check_theorem_form(4, 12, f)
    assert not faber.ok and not theorem.ok
    assert theorem.first_mismatch is not None


def test_forms_pass_together_for_replicable_toy():
    f = LaurentSeries.from_dict({-1: 1, 1: 1}, 400)
    assert lam.replicability_check_faber_form(6, 12, f).ok
    assert lam.replicability_check_theorem_form(6, 12, f).ok
    assert lam.symmetry_check(6, 6, f).ok


def test_symmetry_sign_rule():
    r = lam.symmetry_check(6, 6)
    g = r.grid
    assert g[2, 3] == -g[3, 2]
    assert g[0, 1] == 1 and g[1, 0] == -1
    assert g[1, 2] == -196884 and g[2, 1] == 196884
    assert all(c.denominator == 1 for c in g.values())
