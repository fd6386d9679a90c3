"""q-expansions of E4, E6, Delta, j and J = j - 744.

Delta is available from two unrelated constructions: the Eisenstein
combination ``(E4^3 - E6^2) / 1728`` and the product ``q prod (1 - q^n)^24``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .qseries import LaurentSeries, SeriesError


@dataclass(frozen=True, eq=False)
class NamedForm:
    name: str
    weight: int
    expansion: LaurentSeries


def divisor_sigma(n: int, m: int) -> int:
    """``sum(d**m for d | n)`` by trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError("divisor_sigma needs n >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**m
            e = n // d
            if e != d:
                total += e**m
        d += 1
    return total


_EISENSTEIN = {4: (240, 3), 6: (-504, 5)}


def eisenstein(k: int, order: int) -> LaurentSeries:
    """E_k normalized to constant term 1, for k in {4, 6}."""
    if k not in _EISENSTEIN:
        raise SeriesError(f"unsupported Eisenstein weight {k}")
    if order < 0:
        raise SeriesError("order must be >= 0")
    c, m = _EISENSTEIN[k]
    return LaurentSeries(0, [1] + [c * divisor_sigma(n, m) for n in range(1, order + 1)], order)


def _exact_div(f: LaurentSeries, d: int) -> LaurentSeries:
    for n, c in f.items():
        if c % d != 0:
            raise ArithmeticError(f"coefficient of q^{n} not divisible by {d}")
    return f.scale(Fraction(1, d))


@lru_cache(maxsize=None)
def delta(order: int) -> LaurentSeries:
    """Delta = (E4^3 - E6^2) / 1728."""
    if order < 1:
        raise SeriesError("delta needs order >= 1")
    e4, e6 = eisenstein(4, order), eisenstein(6, order)
    return _exact_div(e4**3 - e6**2, 1728)


@lru_cache(maxsize=None)
def delta_product(order: int) -> LaurentSeries:
    """Delta = q * prod_{n>=1} (1 - q^n)^24, multiplied out factor by factor."""
    if order < 1:
        raise SeriesError("delta needs order >= 1")
    N = order - 1  # the product is needed to q^(order-1)
    a = [0] * (N + 1)
    a[0] = 1
    for n in range(1, N + 1):
        for _ in range(24):
            for i in range(N, n - 1, -1):
                a[i] -= a[i - n]
    return LaurentSeries(1, a, order)


@lru_cache(maxsize=None)
def j_invariant(order: int, method: str = "eisenstein") -> LaurentSeries:
    """j = E4^3 / Delta to ``q**order``.

    ``method="product"`` divides by the product-formula Delta instead.
    """
    if order < -1:
        raise SeriesError("j needs order >= -1")
    e4 = eisenstein(4, order + 1)
    if method == "eisenstein":
        d = delta(order + 2)
    elif method == "product":
        d = delta_product(order + 2)
    else:
        raise ValueError(f"unknown method {method!r}")
    j = (e4**3 * d.inv()).truncate(order)
    if not j.is_integral():
        raise ArithmeticError("j has a non-integral coefficient")
    return j


@lru_cache(maxsize=None)
def moonshine_J(order: int, method: str = "eisenstein") -> LaurentSeries:
    """The normalized Hauptmodul J = j - 744 = q^-1 + 196884 q + ..."""
    return j_invariant(order, method) - 744


def named_forms(order: int) -> dict[str, NamedForm]:
    return {
        "E4": NamedForm("E4", 4, eisenstein(4, order)),
        "E6": NamedForm("E6", 6, eisenstein(6, order)),
        "Delta": NamedForm("Delta", 12, delta(max(order, 1))),
        "j": NamedForm("j", 0, j_invariant(order)),
        "J": NamedForm("J", 0, moonshine_J(order)),
    }
