"""Faber polynomials of a normalized Laurent series ``f = q^-1 + c_0 + c_1 q + ...``.

``P_{n,f}`` is the monic degree-``n`` polynomial for which
``q^-n - P_{n,f}(f(q))`` has no terms of exponent <= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from .qseries import BiSeries, LaurentSeries, PrecisionError, SeriesError


@dataclass(frozen=True)
class DensePolynomial:
    """Polynomial in one variable, ``coeffs[i]`` multiplying ``X**i``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = list(self.coeffs)
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if any(self.coeffs) else -1

    def __call__(self, x):
        # Horner; works for numbers and LaurentSeries alike
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"{c}*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


@dataclass(frozen=True)
class FaberPolynomial(DensePolynomial):
    n: int = 0


def _check_normalized(f: LaurentSeries) -> None:
    if f.valuation != -1 or f.coeffs[0] != 1:
        raise SeriesError("series not normalized: expected q^-1 + O(1)")


def faber_poly(f: LaurentSeries, n: int) -> FaberPolynomial:
    """Faber polynomial ``P_{n,f}`` by elimination against the powers of ``f``.

    ``f**m = q**-m + (higher terms)``, so the principal and constant parts of
    ``f**0 .. f**n`` form a triangular system in the exponents ``-n .. 0``.
    """
    if n < 1:
        raise ValueError("Faber index must be >= 1")
    _check_normalized(f)
    if f.order < n - 1:
        raise PrecisionError(f"f known to q^{f.order}; P_{n} needs q^{n - 1}")
    powers = [LaurentSeries.one(f.order + 1)]
    for _ in range(n):
        powers.append(powers[-1] * f)
    b = [Fraction(0)] * (n + 1)
    b[n] = Fraction(1)
    # residual q^-n - f^n restricted to exponents <= 0
    resid = {e: -powers[n].coefficient(e) for e in range(-n, 1)}
    resid[-n] += 1
    for i in range(n - 1, -1, -1):
        c = resid[-i]
        b[i] = c
        for e in range(-i, 1):
            resid[e] -= c * powers[i].coefficient(e)
    assert all(v == 0 for v in resid.values())
    return FaberPolynomial(tuple(b), n=n)


def faber_residual(f: LaurentSeries, P: DensePolynomial, n: int) -> LaurentSeries:
    """``q**-n - P(f(q))``; the defining property asks for valuation >= 1."""
    value = P(f)
    return LaurentSeries.monomial(-n, value.order) - value


@dataclass(frozen=True)
class NewtonLogReport:
    minus_holds: bool
    plus_holds: bool
    first_mismatch_minus: tuple[int, int] | None
    first_mismatch_plus: tuple[int, int] | None

    @property
    def sign(self) -> str:
        if self.minus_holds and not self.plus_holds:
            return "-"
        if self.plus_holds and not self.minus_holds:
            return "+"
        return "both" if self.plus_holds else "none"


def first_difference(a: BiSeries, b: BiSeries, t_order: int, q_order: int) -> tuple[int, int] | None:
    """First cell ``(m, n)`` with m <= t_order, n <= q_order where a and b differ."""
    for m in range(t_order + 1):
        x, y = a[m], b[m]
        if x.order < q_order or y.order < q_order:
            raise PrecisionError(
                f"t^{m} coefficient known to q^{min(x.order, y.order)}, need q^{q_order}"
            )
        lo = min(x.valuation, y.valuation)
        for n in range(lo, q_order + 1):
            if x.coefficient(n) != y.coefficient(n):
                return m, n
    return None


def newton_log_sides(f: LaurentSeries, order_q: int, order_p: int) -> tuple[BiSeries, BiSeries]:
    """``log[q (f(q) - f(p))]`` and ``sum_n P_{n,f}(f(p)) q^n / n``.

    Both are series in ``q`` (outer) with Laurent coefficients in ``p``.
    """
    _check_normalized(f)
    if f.order < order_q - 1:
        raise PrecisionError(f"f known to q^{f.order}; need q^{order_q - 1}")
    W = f.order
    fp = f
    outer = [LaurentSeries.one(W)]
    for m in range(1, order_q + 1):
        c = LaurentSeries.constant(f.coefficient(m - 1), W)
        outer.append(c - fp if m == 1 else c)
    lhs = BiSeries(outer).log()
    rhs = [LaurentSeries.zero(W)]
    for n in range(1, order_q + 1):
        rhs.append(faber_poly(f, n)(fp).scale(Fraction(1, n)))
    return lhs, BiSeries(rhs)


def newton_log_identity_check(f: LaurentSeries, order_q: int, order_p: int) -> NewtonLogReport:
    """Test both signs of the Newton-log identity to ``q**order_q p**order_p``."""
    lhs, rhs = newton_log_sides(f, order_q, order_p)
    minus = first_difference(lhs, -rhs, order_q, order_p)
    plus = first_difference(lhs, rhs, order_q, order_p)
    return NewtonLogReport(minus is None, plus is None, minus, plus)


def newton_log_precision(order_q: int, order_p: int) -> int:
    """Order of ``f`` sufficient for :func:`newton_log_identity_check`."""
    return order_p + 2 * order_q + 1
