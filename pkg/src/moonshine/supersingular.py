"""Supersingular j-invariants and Ogg's prime criterion.

A Legendre curve ``y^2 = x(x-1)(x-lambda)`` over F_p (p >= 5) is
supersingular iff ``H_p(lambda) = sum_i C(m,i)^2 lambda^i = 0`` with
``m = (p-1)/2``. All supersingular lambdas lie in F_{p^2}; mapping them
through ``j = 256 (l^2 - l + 1)^3 / (l^2 (l-1)^2)`` gives every supersingular
j-invariant in characteristic p.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import comb

import numpy as np

# Monster order as published; its prime divisors are the reference fixture.
MONSTER_ORDER = 808017424794512875886459904961710757005754368000000000


def max_prime() -> int:
    return int(os.environ.get("MOONSHINE_MAX_PRIME", 1000))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def primes_up_to(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime(p)]


def prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class PrimeField:
    """F_p together with F_{p^2} = F_p(sqrt(delta)), elements as pairs (a, b)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.delta = self._non_residue() if p > 2 else 1

    def _non_residue(self) -> int:
        p = self.p
        for d in range(2, p):
            if pow(d, (p - 1) // 2, p) == p - 1:
                return d
        raise AssertionError("no quadratic non-residue found")

    def is_non_residue(self, d: int) -> bool:
        return pow(d % self.p, (self.p - 1) // 2, self.p) == self.p - 1

    def add(self, x, y):
        p = self.p
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p)

    def sub(self, x, y):
        p = self.p
        return ((x[0] - y[0]) % p, (x[1] - y[1]) % p)

    def mul(self, x, y):
        p = self.p
        return ((x[0] * y[0] + self.delta * x[1] * y[1]) % p, (x[0] * y[1] + x[1] * y[0]) % p)

    def pow(self, x, n: int):
        result = (1, 0)
        while n:
            if n & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            n >>= 1
        return result

    def inv(self, x):
        if x == (0, 0):
            raise ZeroDivisionError("inverse of 0 in F_p^2")
        return self.pow(x, self.p * self.p - 2)

    def frobenius(self, x):
        # x -> x^p fixes F_p and negates sqrt(delta)
        return (x[0], (-x[1]) % self.p)

    def elements(self):
        return ((a, b) for a in range(self.p) for b in range(self.p))


def hasse_polynomial(p: int) -> list[int]:
    """Coefficients of H_p(lambda), lowest degree first, reduced mod p."""
    if p < 5:
        raise ValueError("Hasse polynomial on the Legendre family needs p >= 5")
    m = (p - 1) // 2
    return [comb(m, i) ** 2 % p for i in range(m + 1)]


def hasse_roots(F: PrimeField) -> list[tuple[int, int]]:
    """All roots of H_p in F_{p^2}, by evaluating at every one of the p^2 elements."""
    p, delta = F.p, F.delta
    coeffs = hasse_polynomial(p)
    a = np.repeat(np.arange(p, dtype=np.int64), p)
    b = np.tile(np.arange(p, dtype=np.int64), p)
    x = np.full(p * p, coeffs[-1], dtype=np.int64)
    y = np.zeros(p * p, dtype=np.int64)
    for c in reversed(coeffs[:-1]):
        x, y = (x * a + delta * ((y * b) % p) + c) % p, (x * b + y * a) % p
    hits = np.nonzero((x == 0) & (y == 0))[0]
    return [(int(a[i]), int(b[i])) for i in hits]


def legendre_j(F: PrimeField, lam) -> tuple[int, int]:
    l2 = F.mul(lam, lam)
    num = F.add(F.sub(l2, lam), (1, 0))
    num = F.mul((256 % F.p, 0), F.pow(num, 3))
    lm1 = F.sub(lam, (1, 0))
    den = F.mul(l2, F.mul(lm1, lm1))
    return F.mul(num, F.inv(den))


@dataclass(frozen=True)
class SupersingularReport:
    p: int
    delta: int
    j_set: frozenset
    all_in_prime_field: bool
    n_lambda_roots: int = 0

    def sorted_j(self) -> list[tuple[int, int]]:
        return sorted(self.j_set)


def supersingular_j_set(p: int) -> SupersingularReport:
    if p > max_prime():
        raise ValueError(f"p = {p} exceeds the prime bound {max_prime()}")
    F = PrimeField(p)
    if p in (2, 3):
        # only j = 0 = 1728 is supersingular in characteristic 2 and 3
        return SupersingularReport(p, F.delta, frozenset({(0, 0)}), True, 0)
    H = hasse_polynomial(p)
    if H[0] % p == 0 or sum(H) % p == 0:
        raise ArithmeticError(f"lambda = 0 or 1 is a root of H_{p}")
    roots = hasse_roots(F)
    js = frozenset(legendre_j(F, lam) for lam in roots)
    return SupersingularReport(p, F.delta, js, all(b == 0 for _, b in js), len(roots))


@dataclass
class OggReport:
    bound: int
    passing: list[int] = field(default_factory=list)
    failing: list[int] = field(default_factory=list)
    reports: dict[int, SupersingularReport] = field(default_factory=dict)


def ogg_scan(bound: int) -> OggReport:
    """Primes p <= bound whose supersingular j-invariants all lie in F_p."""
    if bound > max_prime():
        raise ValueError(f"bound {bound} exceeds the prime bound {max_prime()}")
    out = OggReport(bound)
    for p in primes_up_to(bound):
        r = supersingular_j_set(p)
        out.reports[p] = r
        (out.passing if r.all_in_prime_field else out.failing).append(p)
    return out
