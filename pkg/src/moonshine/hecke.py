"""Weight-zero Hecke operators on q-expansions at the cusp.

For ``f = sum c_n q^n`` the operator

    T_k f(tau) = (1/k) sum_{ad=k, 0<=b<d} psi^a(f)((a tau + b)/d)

has the closed form

    [q^M] k T_k f = sum_{a | gcd(k, M)} (k/a) c_{k M / a^2},

since summing over ``b`` keeps exactly the exponents divisible by ``d`` and
multiplies them by ``d``. We use ``gcd(k, 0) = k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .qseries import LaurentSeries, PrecisionError


def adams_on_series(f: LaurentSeries, a: int) -> LaurentSeries:
    """Adams operation psi^a applied to the coefficients of ``f``.

    Rational coefficients form a lambda-ring on which every psi^a is the
    identity, so this returns ``f``. Coefficient rings with nontrivial
    Adams operations would hook in here.
    """
    if a < 1:
        raise ValueError("Adams index must be >= 1")
    return f


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _hecke_indices(k: int, M: int) -> list[tuple[int, int]]:
    """Pairs (a, source index) contributing to the q^M coefficient."""
    g = k if M == 0 else gcd(k, M)
    return [(a, k * M // (a * a)) for a in _divisors(g)]


def _output_window(f: LaurentSeries, k: int) -> tuple[int, int]:
    v, N = f.valuation, f.order
    # a = k reaches index M/k, the lowest; a = 1 reaches k*M, the highest
    lo = k * min(v, 0) if v <= 0 else -((-v) // k)
    hi = lo - 1
    while all(idx <= N for _, idx in _hecke_indices(k, hi + 1)):
        hi += 1
    return lo, hi


def scaled_hecke(f: LaurentSeries, k: int, order: int | None = None) -> LaurentSeries:
    """``k * T_k f``, integral whenever ``f`` is.

    Without ``order``, returns as many coefficients as ``f`` determines.
    Asking for more raises :class:`PrecisionError`.
    """
    if k < 1:
        raise ValueError("Hecke index must be >= 1")
    lo, hi = _output_window(f, k)
    if order is not None:
        if order > hi:
            raise PrecisionError(
                f"precision too low for T_{k}: need f to q^{k * order}, have q^{f.order}"
            )
        hi = order
    if hi < lo:
        return LaurentSeries.zero(hi)
    out = []
    for M in range(lo, hi + 1):
        s = Fraction(0)
        for a, idx in _hecke_indices(k, M):
            c = adams_on_series(f, a).coefficient(idx)
            if c:
                s += (k // a) * c
        out.append(s)
    return LaurentSeries(lo, out, hi)


def hecke(f: LaurentSeries, k: int, order: int | None = None) -> LaurentSeries:
    """The Hecke operator ``T_k f`` (with the 1/k normalization)."""
    return scaled_hecke(f, k, order).scale(Fraction(1, k))


@dataclass(frozen=True, eq=False)
class HeckeImage:
    k: int
    source: LaurentSeries
    scaled_image: LaurentSeries

    @classmethod
    def of(cls, f: LaurentSeries, k: int, order: int | None = None) -> HeckeImage:
        return cls(k, f, scaled_hecke(f, k, order))


def hecke_precision_needed(k: int, order: int) -> int:
    """Order of ``f`` required for ``T_k f`` to ``q**order`` (order >= 0)."""
    return k * order
