"""Exact truncated Laurent series over the rationals.

A :class:`LaurentSeries` knows its coefficients for exponents
``valuation .. order`` inclusive; everything above ``order`` is unknown.
Every operation reports the tightest truncation order it can justify, so a
coefficient is never returned unless it is exact.

:class:`BiSeries` is a truncated power series in an outer variable ``t``
whose coefficients are Laurent series in ``q``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

Number = Union[int, Fraction]


class SeriesError(ValueError):
    """Raised for operations that are undefined on the given series."""


class PrecisionError(SeriesError):
    """Raised when a requested coefficient lies beyond the known window."""


def _all_integral(coeffs: Sequence[Fraction]) -> bool:
    return all(c.denominator == 1 for c in coeffs)


def _convolve(a: Sequence[Fraction], b: Sequence[Fraction], length: int) -> list[Fraction]:
    """First ``length`` terms of the Cauchy product of two coefficient lists."""
    la, lb = min(len(a), length), min(len(b), length)
    if _all_integral(a[:la]) and _all_integral(b[:lb]):
        ai = [int(c) for c in a[:la]]
        bi = [int(c) for c in b[:lb]]
        out = [0] * length
        for i, x in enumerate(ai):
            if x == 0:
                continue
            for j in range(min(lb, length - i)):
                out[i + j] += x * bi[j]
        return [Fraction(c) for c in out]
    out_f = [Fraction(0)] * length
    for i in range(la):
        x = a[i]
        if x == 0:
            continue
        for j in range(min(lb, length - i)):
            out_f[i + j] += x * b[j]
    return out_f


class LaurentSeries:
    """Immutable truncated Laurent series ``sum c_n q^n`` with ``n <= order``.

    The coefficient tuple is normalized: its first and last entries are
    nonzero. The zero series has no coefficients and ``valuation == order + 1``.
    """

    __slots__ = ("valuation", "order", "coeffs")

    valuation: int
    order: int
    coeffs: tuple[Fraction, ...]

    def __init__(self, valuation: int, coeffs: Iterable[Number], order: int):
        cs = [Fraction(c) for c in coeffs]
        # drop anything past the truncation order
        cs = cs[: max(0, order - valuation + 1)]
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        cs = cs[lead:]
        while cs and cs[-1] == 0:
            cs.pop()
        if cs:
            valuation += lead
        else:
            valuation = order + 1
        object.__setattr__(self, "valuation", valuation)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> LaurentSeries:
        return cls(order + 1, (), order)

    @classmethod
    def constant(cls, c: Number, order: int) -> LaurentSeries:
        return cls(0, [c], order)

    @classmethod
    def one(cls, order: int) -> LaurentSeries:
        return cls(0, [1], order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: Number = 1) -> LaurentSeries:
        return cls(exponent, [coeff], order)

    @classmethod
    def from_dict(cls, terms: dict[int, Number], order: int) -> LaurentSeries:
        """Build from ``{exponent: coefficient}``; missing exponents are zero."""
        terms = {e: c for e, c in terms.items() if e <= order}
        if not terms:
            return cls.zero(order)
        lo = min(terms)
        return cls(lo, [terms.get(e, 0) for e in range(lo, order + 1)], order)

    # -- access -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, n: int) -> Fraction:
        """Exact coefficient of ``q**n``; exponents below the valuation are 0."""
        if n > self.order:
            raise PrecisionError(
                f"coefficient beyond truncation: q^{n} requested, known to q^{self.order}"
            )
        i = n - self.valuation
        if i < 0 or i >= len(self.coeffs):
            return Fraction(0)
        return self.coeffs[i]

    __getitem__ = coefficient

    def items(self) -> Iterator[tuple[int, Fraction]]:
        for i, c in enumerate(self.coeffs):
            yield self.valuation + i, c

    def dense(self, start: int, stop: int | None = None) -> list[Fraction]:
        """Coefficients for exponents ``start .. stop`` (default: the order)."""
        stop = self.order if stop is None else stop
        return [self.coefficient(n) for n in range(start, stop + 1)]

    def _rel(self) -> list[Fraction]:
        # coefficients from the valuation to the order, zero padded
        return list(self.coeffs) + [Fraction(0)] * (self.order - self.valuation + 1 - len(self.coeffs))

    def truncate(self, order: int) -> LaurentSeries:
        if order > self.order:
            raise PrecisionError(f"cannot raise order {self.order} to {order}")
        return LaurentSeries(self.valuation, self.coeffs, order)

    def principal_part(self) -> LaurentSeries:
        """Terms with negative exponent, as an exact series known to order -1."""
        return LaurentSeries(self.valuation, self.coeffs, min(-1, self.order))

    def is_integral(self) -> bool:
        return _all_integral(self.coeffs)

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> LaurentSeries:
        return LaurentSeries(self.valuation, [-c for c in self.coeffs], self.order)

    def __add__(self, other) -> LaurentSeries:
        if isinstance(other, (int, Fraction)):
            other = LaurentSeries.constant(other, self.order)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        order = min(self.order, other.order)
        lo = min(self.valuation, other.valuation)
        if lo > order:
            return LaurentSeries.zero(order)
        out = [Fraction(0)] * (order - lo + 1)
        for s in (self, other):
            for n, c in s.items():
                if n > order:
                    break
                out[n - lo] += c
        return LaurentSeries(lo, out, order)

    __radd__ = __add__

    def __sub__(self, other) -> LaurentSeries:
        if isinstance(other, (int, Fraction)):
            return self + (-Fraction(other))
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentSeries:
        return (-self) + other

    def scale(self, c: Number) -> LaurentSeries:
        c = Fraction(c)
        return LaurentSeries(self.valuation, [c * x for x in self.coeffs], self.order)

    def shift(self, k: int) -> LaurentSeries:
        """Multiply by ``q**k`` exactly."""
        return LaurentSeries(self.valuation + k, self.coeffs, self.order + k)

    def __mul__(self, other) -> LaurentSeries:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        order = min(self.order + other.valuation, other.order + self.valuation)
        val = self.valuation + other.valuation
        if self.is_zero() or other.is_zero() or val > order:
            return LaurentSeries.zero(order)
        length = order - val + 1
        return LaurentSeries(val, _convolve(self.coeffs, other.coeffs, length), order)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentSeries:
        if n < 0:
            return self.inv() ** (-n)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        if result is None:
            # f^0 = 1, known as far as f's relative precision allows
            return LaurentSeries.one(self.order - self.valuation)
        return result

    def inv(self) -> LaurentSeries:
        """Multiplicative inverse; requires a nonzero leading coefficient."""
        if self.is_zero():
            raise SeriesError("non-invertible series")
        rel = self._rel()
        n = len(rel)
        c0 = rel[0]
        if _all_integral(rel) and abs(c0) == 1:
            ri = [int(c) for c in rel]
            u = int(c0)
            g = [0] * n
            g[0] = u
            for k in range(1, n):
                s = 0
                for i in range(1, k + 1):
                    if ri[i]:
                        s += ri[i] * g[k - i]
                g[k] = -u * s
            out = [Fraction(x) for x in g]
        else:
            inv0 = 1 / c0
            out = [inv0] + [Fraction(0)] * (n - 1)
            for k in range(1, n):
                s = Fraction(0)
                for i in range(1, k + 1):
                    if rel[i]:
                        s += rel[i] * out[k - i]
                out[k] = -inv0 * s
        v = -self.valuation
        return LaurentSeries(v, out, v + n - 1)

    def __truediv__(self, other) -> LaurentSeries:
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self * other.inv()

    def exp(self) -> LaurentSeries:
        """Formal exponential of a series with positive valuation."""
        if self.valuation < 1:
            raise SeriesError("exp of non-positive-valuation series")
        N = self.order
        if N < 0:
            return LaurentSeries.one(N)
        f = [self.coefficient(k) if k >= 1 else Fraction(0) for k in range(N + 1)]
        e = [Fraction(1)] + [Fraction(0)] * N
        for n in range(1, N + 1):
            s = Fraction(0)
            for k in range(1, n + 1):
                if f[k]:
                    s += k * f[k] * e[n - k]
            e[n] = s / n
        return LaurentSeries(0, e, N)

    def log(self) -> LaurentSeries:
        """Formal logarithm of a series ``1 + O(q)``."""
        if self.valuation != 0 or self.coeffs[0] != 1:
            raise SeriesError("log requires constant term 1 and no principal part")
        N = self.order
        f = self._rel()
        lg = [Fraction(0)] * (N + 1)
        for n in range(1, N + 1):
            s = n * f[n]
            for k in range(1, n):
                if lg[k] and f[n - k]:
                    s -= k * lg[k] * f[n - k]
            lg[n] = s / n
        return LaurentSeries(0, lg, N)

    def substitute_power(self, m: int) -> LaurentSeries:
        """Apply ``q -> q**m``."""
        if m < 1:
            raise SeriesError("substitute_power needs m >= 1")
        # the first unknown term q^(order+1) moves to q^(m*(order+1))
        order = m * (self.order + 1) - 1
        if self.is_zero():
            return LaurentSeries.zero(order)
        out = [Fraction(0)] * (m * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            out[m * i] = c
        return LaurentSeries(m * self.valuation, out, order)

    def derivative(self) -> LaurentSeries:
        """``q d/dq``, which keeps exponents in place."""
        return LaurentSeries(self.valuation, [n * c for n, c in self.items()], self.order)

    # -- comparison & display ---------------------------------------------

    def __eq__(self, other) -> bool:
        """Coefficientwise equality up to the common truncation order."""
        if isinstance(other, (int, Fraction)):
            other = LaurentSeries.constant(other, self.order)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        order = min(self.order, other.order)
        lo = min(self.valuation, other.valuation)
        return all(self.coefficient(n) == other.coefficient(n) for n in range(lo, order + 1))

    __hash__ = None  # equality is precision-relative, hence not transitive

    def identical(self, other: LaurentSeries) -> bool:
        return (self.valuation, self.order, self.coeffs) == (other.valuation, other.order, other.coeffs)

    def __repr__(self) -> str:
        return f"LaurentSeries({self.valuation}, {list(map(str, self.coeffs))}, order={self.order})"

    def __str__(self) -> str:
        terms = []
        for n, c in self.items():
            if c == 0:
                continue
            mono = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            elif mono:
                terms.append(f"{c}*{mono}")
            else:
                terms.append(str(c))
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(q^{self.order + 1})"

    # -- serialization ----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "valuation": self.valuation,
            "order": self.order,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> LaurentSeries:
        coeffs = [Fraction(int(n), int(d)) for n, d in obj["coeffs"]]
        return cls(int(obj["valuation"]), coeffs, int(obj["order"]))

    @classmethod
    def from_json(cls, text: str) -> LaurentSeries:
        return cls.from_json_obj(json.loads(text))


def q(order: int) -> LaurentSeries:
    """The series variable itself."""
    return LaurentSeries.monomial(1, order)


# Module-level spellings of the series operations.


def add(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    return f + g


def mul(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    return f * g


def inv(f: LaurentSeries) -> LaurentSeries:
    return f.inv()


def exp(f: LaurentSeries) -> LaurentSeries:
    return f.exp()


def log(f: LaurentSeries) -> LaurentSeries:
    return f.log()


def substitute_power(f: LaurentSeries, m: int) -> LaurentSeries:
    return f.substitute_power(m)


def coefficient(f: LaurentSeries, n: int) -> Fraction:
    return f.coefficient(n)


class BiSeries:
    """Truncated power series in ``t`` with :class:`LaurentSeries` coefficients.

    ``coeffs[m]`` is the coefficient of ``t**m`` for ``m = 0 .. t_order``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[LaurentSeries]):
        if not coeffs:
            raise SeriesError("BiSeries needs at least the t^0 coefficient")
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("BiSeries is immutable")

    @property
    def t_order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def q_order(self) -> int:
        """Common floor of the coefficient truncation orders."""
        return min(c.order for c in self.coeffs)

    def __getitem__(self, m: int) -> LaurentSeries:
        if m > self.t_order:
            raise PrecisionError(f"t^{m} beyond t-truncation {self.t_order}")
        return self.coeffs[m]

    def coefficient(self, m: int, n: int) -> Fraction:
        """Coefficient of ``t**m q**n``."""
        return self[m].coefficient(n)

    def truncate_t(self, t_order: int) -> BiSeries:
        if t_order > self.t_order:
            raise PrecisionError(f"cannot raise t-order {self.t_order} to {t_order}")
        return BiSeries(self.coeffs[: t_order + 1])

    def __neg__(self) -> BiSeries:
        return BiSeries([-c for c in self.coeffs])

    def __add__(self, other: BiSeries) -> BiSeries:
        T = min(self.t_order, other.t_order)
        return BiSeries([self.coeffs[m] + other.coeffs[m] for m in range(T + 1)])

    def __sub__(self, other: BiSeries) -> BiSeries:
        return self + (-other)

    def scale(self, c: Number | LaurentSeries) -> BiSeries:
        return BiSeries([x * c for x in self.coeffs])

    def shift_t(self, k: int = 1) -> BiSeries:
        """Multiply by ``t**k``; the t-order grows by ``k`` exactly."""
        pad = [LaurentSeries.zero(self.q_order)] * k
        return BiSeries(pad + list(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentSeries)):
            return self.scale(other)
        if not isinstance(other, BiSeries):
            return NotImplemented
        T = min(self.t_order, other.t_order)
        out = []
        for m in range(T + 1):
            acc = self.coeffs[0] * other.coeffs[m]
            for k in range(1, m + 1):
                acc = acc + self.coeffs[k] * other.coeffs[m - k]
            out.append(acc)
        return BiSeries(out)

    __rmul__ = __mul__

    def inv(self) -> BiSeries:
        """Inverse in ``t``; the ``t**0`` coefficient must be invertible."""
        c0_inv = self.coeffs[0].inv()
        out = [c0_inv]
        for m in range(1, self.t_order + 1):
            acc = self.coeffs[1] * out[m - 1]
            for k in range(2, m + 1):
                acc = acc + self.coeffs[k] * out[m - k]
            out.append(-(acc * c0_inv))
        return BiSeries(out)

    def exp(self) -> BiSeries:
        """``exp`` of a series whose ``t**0`` coefficient vanishes."""
        if not self.coeffs[0].is_zero():
            raise SeriesError("exp of BiSeries with nonzero t^0 coefficient")
        F = self.coeffs
        # an exact 1 whose order never binds in the products below
        one_order = max([c.order - min(c.valuation, 0) for c in F[1:]] + [self.q_order])
        E = [LaurentSeries.one(one_order)]
        for m in range(1, self.t_order + 1):
            acc = F[1] * E[m - 1]
            for k in range(2, m + 1):
                acc = acc + (F[k] * E[m - k]).scale(k)
            E.append(acc.scale(Fraction(1, m)))
        return BiSeries(E)

    def log(self) -> BiSeries:
        """``log`` of a series whose ``t**0`` coefficient is 1."""
        c0 = self.coeffs[0]
        if c0.valuation != 0 or c0.coeffs != (Fraction(1),):
            raise SeriesError("log of BiSeries needs t^0 coefficient exactly 1")
        F = self.coeffs
        L = [LaurentSeries.zero(c0.order)]
        for m in range(1, self.t_order + 1):
            acc = F[m].scale(m)
            for k in range(1, m):
                acc = acc - (L[k] * F[m - k]).scale(k)
            L.append(acc.scale(Fraction(1, m)))
        return BiSeries(L)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        T = min(self.t_order, other.t_order)
        return all(self.coeffs[m] == other.coeffs[m] for m in range(T + 1))

    __hash__ = None

    def __repr__(self) -> str:
        return f"BiSeries(t_order={self.t_order}, q_order={self.q_order})"
