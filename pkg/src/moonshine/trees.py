"""Rooted unlabelled trees from ``T(z) = z exp(sum_{k>=1} T(z^k) / k)``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .qseries import LaurentSeries


@dataclass(frozen=True)
class TreeSeries:
    order: int
    counts: tuple[int, ...]  # counts[n-1] is the coefficient of z^n

    def __getitem__(self, n: int) -> int:
        return self.counts[n - 1]


def tree_rhs(T: LaurentSeries, order: int) -> LaurentSeries:
    """z * exp(sum_k T(z^k)/k), known to z^order."""
    # the exponent is needed to z^(order-1); terms with k > order-1 vanish there
    inner = LaurentSeries.zero(order - 1)
    for k in range(1, order):
        inner = inner + T.substitute_power(k).truncate(order - 1).scale(Fraction(1, k))
    return inner.exp().shift(1)


def solve_tree_equation(order: int) -> TreeSeries:
    """Fixed-point iteration from T = z; coefficient n settles after n passes."""
    if order < 1:
        raise ValueError("order must be >= 1")
    T = LaurentSeries.monomial(1, order)
    for _ in range(order):
        nxt = tree_rhs(T, order)
        if nxt.identical(T):
            break
        T = nxt
    counts = [T.coefficient(n) for n in range(1, order + 1)]
    if any(c.denominator != 1 or c < 0 for c in counts):
        raise ArithmeticError("tree equation integrality violated")
    return TreeSeries(order, tuple(int(c) for c in counts))


def _canonical(children: list[str]) -> str:
    return "(" + "".join(sorted(children)) + ")"


def _trees_by_adding_leaf(code: str) -> set[str]:
    """All canonical trees obtained from ``code`` by attaching one leaf somewhere."""
    kids = _split(code)
    out = {_canonical(kids + ["()"])}
    for i, kid in enumerate(kids):
        for grown in _trees_by_adding_leaf(kid):
            out.add(_canonical(kids[:i] + [grown] + kids[i + 1 :]))
    return out


def _split(code: str) -> list[str]:
    """Child encodings of a tree encoding ``(c1 c2 ...)``."""
    kids, depth, start = [], 0, 1
    for i, ch in enumerate(code[1:-1], start=1):
        depth += 1 if ch == "(" else -1
        if depth == 0:
            kids.append(code[start : i + 1])
            start = i + 1
    return kids


def brute_force_rooted_trees(n_max: int) -> list[int]:
    """Counts of rooted unlabelled trees with 1..n_max nodes, by explicit generation."""
    if n_max > 10:
        raise ValueError("brute force limited to n_max <= 10")
    level = {"()"}
    counts = [1]
    for _ in range(n_max - 1):
        level = set().union(*(_trees_by_adding_leaf(c) for c in level))
        counts.append(len(level))
    return counts[:n_max]
