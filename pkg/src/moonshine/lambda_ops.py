"""Exponential operations: exterior and symmetric powers, Adams operations.

Two settings live here.

* Finite-rank bundles, modelled by their multiset of eigenvalue monomials
  ``x^e`` in a few commuting indeterminates. Lambda_t, S_t and psi^k become
  elementary, complete and power-sum symmetric polynomials.
* q-series, where the Hecke operators play the part of Adams operations:
  ``S_t(x) = exp(sum_k T_k(x) t^k)`` and ``Lambda_{-t}(x) = S_t(x)^{-1}``.
  ``T_k`` here is the 1/k-normalized Hecke operator, so each exponent term
  equals ``(k T_k x) t^k / k``.

The replicability checks for J sit on top of the second setting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from .faber import faber_poly, first_difference
from .hecke import hecke, scaled_hecke
from .modular import moonshine_J
from .qseries import BiSeries, LaurentSeries, PrecisionError, SeriesError

# -- polynomials in the eigenvalue indeterminates -----------------------------

Monomial = tuple[int, ...]
Poly = dict[Monomial, Fraction]


def _padd(a: Poly, b: Poly, s: Fraction | int = 1) -> Poly:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + s * c
        if v:
            out[m] = Fraction(v)
        else:
            out.pop(m, None)
    return out


def _pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            v = out.get(m, 0) + ca * cb
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def _pscale(a: Poly, s) -> Poly:
    return {m: c * s for m, c in a.items() if c * s}


# A truncated series in t with Poly coefficients.
TSeries = list[Poly]


def tseries_mul(a: TSeries, b: TSeries) -> TSeries:
    T = min(len(a), len(b))
    out: TSeries = []
    for m in range(T):
        acc: Poly = {}
        for k in range(m + 1):
            acc = _padd(acc, _pmul(a[k], b[m - k]))
        out.append(acc)
    return out


def tseries_exp(f: TSeries) -> TSeries:
    """exp of a t-series without constant term, via m E_m = sum k f_k E_{m-k}."""
    if f[0]:
        raise SeriesError("exp needs zero t^0 coefficient")
    nvars = next((len(m) for p in f for m in p), 0)
    E: TSeries = [{(0,) * nvars: Fraction(1)}]
    for m in range(1, len(f)):
        acc: Poly = {}
        for k in range(1, m + 1):
            acc = _padd(acc, _pmul(f[k], E[m - k]), k)
        E.append(_pscale(acc, Fraction(1, m)))
    return E


def twist(f: TSeries) -> TSeries:
    """t -> -t."""
    return [p if m % 2 == 0 else _pscale(p, -1) for m, p in enumerate(f)]


@dataclass(frozen=True)
class VirtualBundle:
    """Honest bundle given by eigenvalue monomials over ``nvars`` indeterminates."""

    eigenvalues: tuple[Monomial, ...]
    nvars: int

    def __post_init__(self):
        if any(len(e) != self.nvars for e in self.eigenvalues):
            raise ValueError("eigenvalue exponent vectors must have length nvars")

    @classmethod
    def trivial(cls, rank: int, nvars: int = 1) -> VirtualBundle:
        return cls(((0,) * nvars,) * rank, nvars)

    @property
    def rank(self) -> int:
        return len(self.eigenvalues)

    def __add__(self, other: VirtualBundle) -> VirtualBundle:
        if self.nvars != other.nvars:
            raise ValueError("bundles over different alphabets")
        return VirtualBundle(self.eigenvalues + other.eigenvalues, self.nvars)

    def _one(self) -> Poly:
        return {(0,) * self.nvars: Fraction(1)}


def lambda_t(V: VirtualBundle, t_order: int) -> TSeries:
    """Total exterior power: elementary symmetric polynomials e_k of the eigenvalues."""
    out: TSeries = [V._one()] + [{} for _ in range(t_order)]
    for x in V.eigenvalues:
        out = tseries_mul(out, [V._one(), {x: Fraction(1)}] + [{} for _ in range(t_order - 1)])
    return out


def symmetric_t(V: VirtualBundle, t_order: int) -> TSeries:
    """Total symmetric power: complete homogeneous polynomials h_k."""
    out: TSeries = [V._one()] + [{} for _ in range(t_order)]
    for x in V.eigenvalues:
        geom = [{tuple(m * e for e in x): Fraction(1)} for m in range(t_order + 1)]
        out = tseries_mul(out, geom)
    return out


def adams_psi(V: VirtualBundle, k: int) -> Poly:
    """psi^k(V): the k-th power sum of the eigenvalues."""
    if k < 1:
        raise ValueError("Adams index must be >= 1")
    out: Poly = {}
    for x in V.eigenvalues:
        out = _padd(out, {tuple(k * e for e in x): Fraction(1)})
    return out


def adams_exponential(V: VirtualBundle, t_order: int) -> TSeries:
    """exp(sum_{k>=1} psi^k(V) t^k / k)."""
    f: TSeries = [{}] + [_pscale(adams_psi(V, k), Fraction(1, k)) for k in range(1, t_order + 1)]
    if not V.eigenvalues:
        return [V._one()] + [{} for _ in range(t_order)]
    return tseries_exp(f)


def newton_identity_holds(V: VirtualBundle, k: int) -> bool:
    """k e_k = sum_{i=1}^k (-1)^(i-1) e_{k-i} p_i."""
    e = lambda_t(V, k)
    rhs: Poly = {}
    for i in range(1, k + 1):
        rhs = _padd(rhs, _pmul(e[k - i], adams_psi(V, i)), (-1) ** (i - 1))
    return _pscale(e[k], k) == rhs


# -- Hecke-built exponential operations on q-series ---------------------------


def ganter_precision(t_order: int, q_order: int) -> int:
    """q-order of the input needed by :func:`ganter_S` / :func:`ganter_Lambda`."""
    return t_order * (q_order + 2 * t_order)


@dataclass(frozen=True, eq=False)
class ExponentialSeries:
    kind: str  # "SymmetricS" or "ExteriorLambda"
    body: BiSeries

    def __getitem__(self, m: int) -> LaurentSeries:
        return self.body[m]


def _hecke_exponent(x: LaurentSeries, t_order: int, q_order: int) -> BiSeries:
    if x.valuation < -1:
        raise SeriesError("Hecke exponential needs valuation >= -1")
    need = ganter_precision(t_order, q_order)
    if x.order < need:
        raise PrecisionError(f"input known to q^{x.order}; need q^{need} for (t^{t_order}, q^{q_order})")
    W = q_order + 2 * t_order
    terms = [LaurentSeries.zero(W)]
    for k in range(1, t_order + 1):
        terms.append(hecke(x, k, order=W))
    return BiSeries(terms)


def _require(body: BiSeries, q_order: int) -> BiSeries:
    if body.q_order < q_order:
        raise PrecisionError(f"result known to q^{body.q_order}, need q^{q_order}")
    return body


def ganter_S(x: LaurentSeries, t_order: int, q_order: int) -> ExponentialSeries:
    """S_t(x) = exp(sum_{k=1}^{t_order} T_k(x) t^k)."""
    body = _hecke_exponent(x, t_order, q_order).exp()
    return ExponentialSeries("SymmetricS", _require(body, q_order))


def ganter_Lambda(x: LaurentSeries, t_order: int, q_order: int) -> ExponentialSeries:
    """Lambda_{-t}(x), the inverse of S_t(x) in the t-variable."""
    body = _hecke_exponent(x, t_order, q_order).exp().inv()
    return ExponentialSeries("ExteriorLambda", _require(body, q_order))


# -- replicability ------------------------------------------------------------


def _J_for(precision: int) -> LaurentSeries:
    return moonshine_J(precision)


@dataclass
class FaberFormReport:
    q_order: int
    mismatches: dict[int, int | None] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v is None for v in self.mismatches.values())

    def first_failure(self) -> tuple[int, int] | None:
        for k, n in sorted(self.mismatches.items()):
            if n is not None:
                return k, n
        return None


def replicability_check_faber_form(
    k_max: int, q_order: int, f: LaurentSeries | None = None
) -> FaberFormReport:
    """Compare P_{k,f}(f) with k T_k f for k = 1..k_max through q^q_order.

    The left side comes from Faber elimination, the right side from the
    Hecke coefficient formula.
    """
    if k_max < 1 or q_order < 0:
        raise ValueError("need k_max >= 1 and q_order >= 0")
    need = max(k_max * q_order, q_order + k_max)
    if f is None:
        f = _J_for(need)
    elif f.order < need:
        raise PrecisionError(f"f known to q^{f.order}; need q^{need}")
    report = FaberFormReport(q_order)
    for k in range(1, k_max + 1):
        lhs = faber_poly(f, k)(f)
        rhs = scaled_hecke(f, k, order=q_order)
        if lhs.order < q_order:
            raise PrecisionError(f"P_{k}(f) known to q^{lhs.order}")
        lo = min(lhs.valuation, rhs.valuation)
        report.mismatches[k] = next(
            (n for n in range(lo, q_order + 1) if lhs.coefficient(n) != rhs.coefficient(n)), None
        )
    return report


def theorem_lhs(f: LaurentSeries, t_order: int, q_order: int) -> BiSeries:
    """t (f(t) - f(q)) as a series in t with q-Laurent coefficients."""
    rows = [LaurentSeries.one(q_order)]
    for m in range(1, t_order + 1):
        c = LaurentSeries.constant(f.coefficient(m - 1), q_order)
        rows.append(c - f.truncate(q_order) if m == 1 else c)
    return BiSeries(rows)


@dataclass(frozen=True)
class GridReport:
    ok: bool
    first_mismatch: tuple[int, int] | None  # (t exponent, q exponent)


def replicability_check_theorem_form(
    t_order: int, q_order: int, f: LaurentSeries | None = None
) -> GridReport:
    """Check t (f(t) - f(q)) = Lambda_{-t}(f(q)) on the (t, q) grid."""
    need = ganter_precision(t_order, q_order)
    if f is None:
        f = _J_for(need)
    lam = ganter_Lambda(f, t_order, q_order).body
    bad = first_difference(theorem_lhs(f, t_order, q_order), lam, t_order, q_order)
    return GridReport(bad is None, bad)


@dataclass(frozen=True)
class SymmetryReport:
    equal: bool
    integral: bool
    no_poles: bool
    first_mismatch: tuple[int, int] | None
    grid: dict[tuple[int, int], Fraction]  # (t exponent, q exponent) of q Lambda_{-t}(f(q))

    @property
    def ok(self) -> bool:
        return self.equal and self.integral and self.no_poles


def symmetry_check(t_order: int, q_order: int, f: LaurentSeries | None = None) -> SymmetryReport:
    """Check q Lambda_{-t}(f(q)) = -t Lambda_{-q}(f(t)) on the grid.

    The right side is the left side with the variables exchanged, so one
    table L[m][n] = [t^m q^n] Lambda_{-t}(f(q)) serves both:
    [t^m q^n] of the left is L[m][n-1], of the right -L[n][m-1].
    """
    size = max(t_order, q_order)
    need = ganter_precision(size, size)
    if f is None:
        f = _J_for(need)
    L = ganter_Lambda(f, size, size).body
    no_poles = all(L[m].valuation >= -1 for m in range(size + 1))

    def left(m: int, n: int) -> Fraction:
        return L.coefficient(m, n - 1)

    def right(m: int, n: int) -> Fraction:
        return -L.coefficient(n, m - 1)

    grid: dict[tuple[int, int], Fraction] = {}
    bad = None
    for m in range(t_order + 1):
        for n in range(q_order + 1):
            a, b = left(m, n), right(m, n)
            grid[m, n] = a
            if bad is None and a != b:
                bad = (m, n)
    integral = all(c.denominator == 1 for c in grid.values())
    return SymmetryReport(bad is None, integral, no_poles, bad, grid)
