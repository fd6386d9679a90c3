"""Commuting pairs in small permutation groups.

``Pairs_G`` is the set of simultaneous-conjugacy classes of commuting pairs
``(h, g)``. SL2(Z) acts by ``[h, g] -> [h^a g^b, h^c g^d]``, integers act by
Adams operations ``[h, g] -> [h^n, g^n]``, and for each ``g`` the conjugacy
classes of the centralizer ``C_G(g)`` chart the pairs ``[h, g]``.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

Perm = tuple[int, ...]


class GroupTooLarge(ValueError):
    pass


def max_group_order() -> int:
    return int(os.environ.get("MOONSHINE_MAX_GROUP", 10_000))


def compose(p: Perm, q: Perm) -> Perm:
    """``p o q``: apply ``q`` first."""
    return tuple(p[i] for i in q)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def power(p: Perm, n: int) -> Perm:
    if n < 0:
        p, n = invert(p), -n
    result = tuple(range(len(p)))
    while n:
        if n & 1:
            result = compose(result, p)
        p = compose(p, p)
        n >>= 1
    return result


def perm_order(p: Perm) -> int:
    e = tuple(range(len(p)))
    k, x = 1, p
    while x != e:
        x = compose(x, p)
        k += 1
    return k


def from_cycles(cycles: list[list[int]], degree: int) -> Perm:
    img = list(range(degree))
    for cyc in cycles:
        if len(set(cyc)) != len(cyc):
            raise ValueError(f"cycle {tuple(cyc)} repeats a point")
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
    if sorted(img) != list(range(degree)):
        raise ValueError("cycles do not define a permutation")
    return tuple(img)


class PermGroup:
    """A permutation group with all elements materialized."""

    def __init__(self, degree: int, generators: list[Perm], name: str = ""):
        self.degree = degree
        self.name = name
        self.generators = [tuple(g) for g in generators]
        for g in self.generators:
            if sorted(g) != list(range(degree)):
                raise ValueError(f"{g} is not a permutation of {degree} points")
        self.elements = self._closure()
        self.index = {x: i for i, x in enumerate(self.elements)}

    def _closure(self) -> tuple[Perm, ...]:
        bound = max_group_order()
        e = tuple(range(self.degree))
        seen = {e}
        frontier = [e]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.generators:
                    y = compose(g, x)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
                        if len(seen) > bound:
                            raise GroupTooLarge(f"group order exceeds {bound}")
            frontier = nxt
        return tuple(sorted(seen))

    @property
    def identity(self) -> Perm:
        return tuple(range(self.degree))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return tuple(x) in self.index

    def __repr__(self) -> str:
        return f"PermGroup({self.name or self.degree}, order={self.order})"

    def centralizer(self, g: Perm) -> list[Perm]:
        return [h for h in self.elements if compose(h, g) == compose(g, h)]

    def conjugate(self, x: Perm, by: Perm) -> Perm:
        return compose(compose(by, x), invert(by))

    def conjugacy_classes(self, within: list[Perm] | None = None) -> list[list[Perm]]:
        """Conjugacy classes of the subgroup ``within`` (default: the group)."""
        elems = self.elements if within is None else sorted(within)
        seen: set[Perm] = set()
        classes = []
        for x in elems:
            if x in seen:
                continue
            cls = sorted({self.conjugate(x, y) for y in elems})
            seen.update(cls)
            classes.append(cls)
        return classes

    def commuting_pairs(self) -> list[tuple[Perm, Perm]]:
        return [(h, g) for h in self.elements for g in self.centralizer(h)]

    # -- pair classes -------------------------------------------------------

    @cached_property
    def _pair_table(self) -> dict[tuple[Perm, Perm], PairClass]:
        table: dict[tuple[Perm, Perm], PairClass] = {}
        for pair in self.commuting_pairs():
            if pair in table:
                continue
            h, g = pair
            orbit = frozenset((self.conjugate(h, x), self.conjugate(g, x)) for x in self.elements)
            pc = PairClass(min(orbit), orbit)
            for member in orbit:
                table[member] = pc
        return table

    def pair_class(self, h: Perm, g: Perm) -> PairClass:
        if compose(h, g) != compose(g, h):
            raise ValueError("elements do not commute")
        return self._pair_table[(tuple(h), tuple(g))]


@dataclass(frozen=True)
class PairClass:
    representative: tuple[Perm, Perm]
    orbit: frozenset

    def __eq__(self, other) -> bool:
        return isinstance(other, PairClass) and self.representative == other.representative

    def __hash__(self) -> int:
        return hash(self.representative)

    def __lt__(self, other: PairClass) -> bool:
        return self.representative < other.representative

    @property
    def size(self) -> int:
        return len(self.orbit)


@dataclass(frozen=True)
class SL2Matrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("determinant must be 1")

    def __matmul__(self, o: SL2Matrix) -> SL2Matrix:
        return SL2Matrix(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def inverse(self) -> SL2Matrix:
        return SL2Matrix(self.d, -self.b, -self.c, self.a)


IDENTITY = SL2Matrix(1, 0, 0, 1)
S = SL2Matrix(0, -1, 1, 0)
T = SL2Matrix(1, 1, 0, 1)
MINUS_ONE = SL2Matrix(-1, 0, 0, -1)


def enumerate_pairs(G: PermGroup) -> list[PairClass]:
    """All classes in Pairs_G, sorted by representative."""
    return sorted(set(G._pair_table.values()))


def act_on_pair(m: SL2Matrix, h: Perm, g: Perm) -> tuple[Perm, Perm]:
    return (
        compose(power(h, m.a), power(g, m.b)),
        compose(power(h, m.c), power(g, m.d)),
    )


def sl2_act(G: PermGroup, m: SL2Matrix, p: PairClass) -> PairClass:
    """``[h, g] -> [h^a g^b, h^c g^d]`` on classes."""
    return G.pair_class(*act_on_pair(m, *p.representative))


def adams_on_pairs(G: PermGroup, n: int, p: PairClass) -> PairClass:
    """``[h, g] -> [h^n, g^n]``."""
    h, g = p.representative
    return G.pair_class(power(h, n), power(g, n))


def cusp_chart(G: PermGroup, g: Perm) -> dict[Perm, PairClass]:
    """Map each conjugacy class of C_G(g), keyed by its least element, to [h, g]."""
    g = tuple(g)
    if g not in G:
        raise ValueError("g is not in the group")
    C = G.centralizer(g)
    return {cls[0]: G.pair_class(cls[0], g) for cls in G.conjugacy_classes(within=C)}


def chart_atlas(G: PermGroup) -> dict[Perm, dict[Perm, PairClass]]:
    """One chart per conjugacy class of G, keyed by the least class element."""
    return {cls[0]: cusp_chart(G, cls[0]) for cls in G.conjugacy_classes()}


def sl2_orbits(G: PermGroup) -> list[list[PairClass]]:
    """Partition of Pairs_G into orbits of the group generated by S and T."""
    remaining = set(enumerate_pairs(G))
    orbits = []
    while remaining:
        start = min(remaining)
        orbit = {start}
        stack = [start]
        while stack:
            p = stack.pop()
            for m in (S, T):
                r = sl2_act(G, m, p)
                if r not in orbit:
                    orbit.add(r)
                    stack.append(r)
        remaining -= orbit
        orbits.append(sorted(orbit))
    return orbits


# -- Devoto projections ---------------------------------------------------------


def regular_representation(elements: list[Perm], x: Perm) -> np.ndarray:
    """Matrix of left multiplication by ``x`` on the group algebra basis ``elements``."""
    idx = {y: i for i, y in enumerate(elements)}
    M = np.zeros((len(elements), len(elements)), dtype=complex)
    for j, y in enumerate(elements):
        M[idx[compose(x, y)], j] = 1
    return M


def devoto_projections(G: PermGroup, g: Perm) -> list[np.ndarray]:
    """P_k = |g|^-1 sum_{n=1}^{|g|} exp(-2 pi i n k / |g|) g^n, k = 0 .. |g|-1.

    Realized on the regular representation of C_G(g).
    """
    g = tuple(g)
    C = sorted(G.centralizer(g))
    N = perm_order(g)
    Lg = regular_representation(C, g)
    powers = [np.linalg.matrix_power(Lg, n) for n in range(1, N + 1)]
    out = []
    for k in range(N):
        P = sum(np.exp(-2j * np.pi * n * k / N) * powers[n - 1] for n in range(1, N + 1)) / N
        out.append(P)
    return out


def projection_report(G: PermGroup, g: Perm) -> dict[str, float]:
    """Largest deviation in each of the four projection identities."""
    g = tuple(g)
    C = sorted(G.centralizer(g))
    N = perm_order(g)
    Ps = devoto_projections(G, g)
    Lg = regular_representation(C, g)
    eye = np.eye(len(C))
    err = lambda A: float(np.max(np.abs(A))) if A.size else 0.0
    idem = max(err(P @ P - P) for P in Ps)
    orth = max([err(Ps[i] @ Ps[j]) for i in range(N) for j in range(N) if i != j] + [0.0])
    complete = err(sum(Ps) - eye)
    eig = max(err(Lg @ P - np.exp(2j * np.pi * k / N) * P) for k, P in enumerate(Ps))
    return {"idempotent": idem, "orthogonal": orth, "complete": complete, "eigenvalue": eig}


# -- named groups -----------------------------------------------------------------


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup(1, [(0,)], "sym:1")
    gens = [from_cycles([[0, 1]], n), from_cycles([list(range(n))], n)]
    return PermGroup(n, gens, f"sym:{n}")


def alternating_group(n: int) -> PermGroup:
    if n < 3:
        return PermGroup(max(n, 1), [tuple(range(max(n, 1)))], f"alt:{n}")
    gens = [from_cycles([[0, 1, i]], n) for i in range(2, n)]
    return PermGroup(n, gens, f"alt:{n}")


def cyclic_group(n: int) -> PermGroup:
    return PermGroup(n, [from_cycles([list(range(n))], n)], f"cyclic:{n}")


def dihedral_group(n: int) -> PermGroup:
    """Symmetries of the n-gon, order 2n (n >= 3)."""
    if n < 3:
        raise ValueError("dihedral:N needs N >= 3")
    rot = from_cycles([list(range(n))], n)
    refl = tuple((-i) % n for i in range(n))
    return PermGroup(n, [rot, refl], f"dihedral:{n}")


def quaternion_group() -> PermGroup:
    """Q8 in its regular representation on 8 points."""
    # elements as (sign, unit) with unit in 1, i, j, k
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for s in (1, -1) for u in "1ijk"]
    pos = {x: i for i, x in enumerate(elems)}

    def left(x):
        out = []
        for s, u in elems:
            t, w = table[(x[1], u)]
            out.append(pos[(x[0] * s * t, w)])
        return tuple(out)

    return PermGroup(8, [left((1, "i")), left((1, "j"))], "quaternion8")


def parse_group(spec: str) -> PermGroup:
    """Parse ``sym:N``, ``alt:N``, ``cyclic:N``, ``dihedral:N``, ``quaternion8``
    or ``perm:(0,1,2)(3,4);(0,1)`` (generators separated by ``;``)."""
    spec = spec.strip()
    if spec == "quaternion8":
        return quaternion_group()
    kind, _, arg = spec.partition(":")
    if kind == "sym":
        return symmetric_group(int(arg))
    if kind == "alt":
        return alternating_group(int(arg))
    if kind == "cyclic":
        return cyclic_group(int(arg))
    if kind == "dihedral":
        return dihedral_group(int(arg))
    if kind == "perm":
        gens_cycles = []
        for gen in arg.split(";"):
            cycles = [[int(x) for x in re.split(r"[,\s]+", c.strip()) if x] for c in re.findall(r"\(([^)]*)\)", gen)]
            gens_cycles.append(cycles)
        degree = 1 + max((x for cs in gens_cycles for c in cs for x in c), default=0)
        return PermGroup(degree, [from_cycles(cs, degree) for cs in gens_cycles], spec)
    raise ValueError(f"unknown group spec {spec!r}")
