"""The end-to-end verification suite shared by ``moonshine verify-all`` and the tests.

Each ``check_*`` function returns a :class:`CheckResult`; none of them raise
on a failed identity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import lambda_ops as lam
from .faber import newton_log_identity_check, newton_log_precision
from .modular import delta, delta_product, j_invariant, moonshine_J
from .pairs import (
    IDENTITY,
    S,
    T,
    SL2Matrix,
    act_on_pair,
    chart_atlas,
    enumerate_pairs,
    parse_group,
    projection_report,
    sl2_act,
)
from .qseries import LaurentSeries
from .supersingular import MONSTER_ORDER, ogg_scan, prime_divisors
from .trees import brute_force_rooted_trees, solve_tree_equation

DEFAULT_SEED = 20071122


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.name}"


def check_replicability(k_max: int = 10, q_order: int = 50) -> CheckResult:
    r = lam.replicability_check_faber_form(k_max, q_order)
    return CheckResult(
        "replicability (Faber form)",
        r.ok,
        {"k_max": k_max, "q_order": q_order, "first_failure": r.first_failure()},
    )


def check_theorem(t_order: int = 12, q_order: int = 12) -> CheckResult:
    r = lam.replicability_check_theorem_form(t_order, q_order)
    return CheckResult(
        "replicability (exterior power form)",
        r.ok,
        {"t_order": t_order, "q_order": q_order, "first_failure": r.first_mismatch},
    )


def check_symmetry(t_order: int = 10, q_order: int = 10) -> CheckResult:
    r = lam.symmetry_check(t_order, q_order)
    return CheckResult(
        "two-variable symmetry",
        r.ok,
        {
            "t_order": t_order,
            "q_order": q_order,
            "equal": r.equal,
            "integral": r.integral,
            "no_poles": r.no_poles,
            "first_failure": r.first_mismatch,
        },
    )


def check_modular(order: int = 100) -> CheckResult:
    d1, d2 = delta(order), delta_product(order)
    same = all(d1.coefficient(n) == d2.coefficient(n) for n in range(1, order + 1))
    j = j_invariant(order)
    J = moonshine_J(order)
    ok = same and j.is_integral() and J.coefficient(0) == 0 and J.coefficient(-1) == 1
    return CheckResult(
        "modular kernel",
        ok,
        {
            "order": order,
            "delta_routes_agree": same,
            "j_integral": j.is_integral(),
            "J_constant_term": str(J.coefficient(0)),
        },
    )


def check_newton(order_q: int = 12, order_p: int = 12) -> CheckResult:
    J = moonshine_J(newton_log_precision(order_q, order_p))
    forcing = newton_log_identity_check(LaurentSeries.monomial(-1, newton_log_precision(order_q, order_p)), order_q, order_p)
    r = newton_log_identity_check(J, order_q, order_p)
    ok = r.sign == forcing.sign == "-"
    return CheckResult(
        "Newton-log identity",
        ok,
        {"order_q": order_q, "order_p": order_p, "sign_for_q^-1": forcing.sign, "sign_for_J": r.sign},
    )


def random_bundle(rng: random.Random, max_rank: int = 4, nvars: int = 2) -> lam.VirtualBundle:
    rank = rng.randint(0, max_rank)
    eig = tuple(tuple(rng.randint(0, 3) for _ in range(nvars)) for _ in range(rank))
    return lam.VirtualBundle(eig, nvars)


def lambda_case(V: lam.VirtualBundle, W: lam.VirtualBundle, order: int) -> list[str]:
    """Names of the lambda-ring identities that fail for this case."""
    failures = []
    if lam.lambda_t(V + W, order) != lam.tseries_mul(lam.lambda_t(V, order), lam.lambda_t(W, order)):
        failures.append("exterior multiplicativity")
    prod = lam.tseries_mul(lam.twist(lam.lambda_t(V, order)), lam.symmetric_t(V, order))
    if prod != [V._one()] + [{} for _ in range(order)]:
        failures.append("Lambda_-t S_t = 1")
    if lam.adams_exponential(V, order) != lam.symmetric_t(V, order):
        failures.append("Adams exponential")
    if not all(lam.newton_identity_holds(V, k) for k in range(1, order + 1)):
        failures.append("Newton identities")
    return failures


def check_lambda_suite(cases: int = 500, seed: int = DEFAULT_SEED) -> CheckResult:
    rng = random.Random(seed)
    first = None
    for i in range(cases):
        V, W = random_bundle(rng), random_bundle(rng)
        order = rng.randint(1, 8)
        bad = lambda_case(V, W, order)
        if bad and first is None:
            first = {"case": i, "failed": bad}
    return CheckResult("lambda-ring suite", first is None, {"cases": cases, "seed": seed, "first_failure": first})


PAIR_GROUPS = ("sym:3", "dihedral:4", "quaternion8", "alt:4")


def pairs_group_failures(spec: str) -> list[str]:
    G = parse_group(spec)
    classes = enumerate_pairs(G)
    failures = []
    if sum(p.size for p in classes) != sum(len(G.centralizer(g)) for g in G.elements):
        failures.append("orbit count")
    for p in classes:
        for h, g in p.orbit:
            # well-definedness and commutation for every representative
            for m in (S, T, IDENTITY, S @ T, T @ S):
                a, b = act_on_pair(m, h, g)
                if G.pair_class(a, b) != sl2_act(G, m, p):
                    failures.append("well-defined")
        for m1 in (S, T):
            for m2 in (S, T):
                if sl2_act(G, m1, sl2_act(G, m2, p)) != sl2_act(G, m1 @ m2, p):
                    failures.append("composition")
        if sl2_act(G, IDENTITY, p) != p:
            failures.append("identity")
    covered = {pc for chart in chart_atlas(G).values() for pc in chart.values()}
    if covered != set(classes):
        failures.append("atlas surjective")
    for g in G.elements:
        rep = projection_report(G, g)
        if max(rep.values()) > 1e-10:
            failures.append(f"projections at {g}")
    return sorted(set(failures))


def check_pairs() -> CheckResult:
    counts = {spec: len(enumerate_pairs(parse_group(spec))) for spec in ("sym:3", "cyclic:2")}
    failures = {spec: pairs_group_failures(spec) for spec in PAIR_GROUPS}
    ok = counts == {"sym:3": 8, "cyclic:2": 4} and not any(failures.values())
    return CheckResult("pairs orbifold", ok, {"class_counts": counts, "failures": failures})


def monster_primes(bound: int) -> list[int]:
    return [p for p in prime_divisors(MONSTER_ORDER) if p <= bound]


def check_ogg(bound: int = 100) -> CheckResult:
    r = ogg_scan(bound)
    expected = monster_primes(bound)
    return CheckResult(
        "Ogg supersingular primes",
        r.passing == expected,
        {"bound": bound, "passing": r.passing, "monster_primes": expected},
    )


def check_trees(order: int = 20, oracle_n: int = 8) -> CheckResult:
    ts = solve_tree_equation(order)
    brute = brute_force_rooted_trees(oracle_n)
    agree = list(ts.counts[:oracle_n]) == brute
    ok = agree and all(c >= 0 for c in ts.counts)
    return CheckResult("rooted trees", ok, {"order": order, "counts": list(ts.counts), "oracle": brute})


def random_series(rng: random.Random, max_order: int = 30, positive: bool = False) -> LaurentSeries:
    v = rng.randint(1, 3) if positive else rng.randint(-3, 3)
    order = rng.randint(max(v, 0), max_order)
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(order - v + 1)]
    if not positive:
        coeffs[0] = coeffs[0] or Fraction(1)
    return LaurentSeries(v, coeffs, order)


def kernel_case(rng: random.Random) -> list[str]:
    f, g, h = (random_series(rng) for _ in range(3))
    failures = []
    if not ((f * g) * h == f * (g * h)):
        failures.append("associativity")
    if not (f * g == g * f):
        failures.append("commutativity")
    if not (f * (g + h) == f * g + f * h):
        failures.append("distributivity")
    one = f * f.inv()
    if not (one == LaurentSeries.one(one.order)):
        failures.append("inverse")
    a, b = random_series(rng, positive=True), random_series(rng, positive=True)
    if not (a.exp().log() == a):
        failures.append("log(exp)")
    if not ((a + b).exp() == a.exp() * b.exp()):
        failures.append("exp additivity")
    return failures


def check_kernel(cases: int = 1000, seed: int = DEFAULT_SEED) -> CheckResult:
    rng = random.Random(seed)
    first = None
    for i in range(cases):
        bad = kernel_case(rng)
        if bad and first is None:
            first = {"case": i, "failed": bad}
    return CheckResult("series kernel properties", first is None, {"cases": cases, "seed": seed, "first_failure": first})


ALL_CHECKS: list[tuple[str, Callable[[], CheckResult]]] = [
    ("replicability", check_replicability),
    ("theorem", check_theorem),
    ("symmetry", check_symmetry),
    ("modular", check_modular),
    ("newton", check_newton),
    ("lambda", check_lambda_suite),
    ("pairs", check_pairs),
    ("ogg", check_ogg),
    ("trees", check_trees),
    ("kernel", check_kernel),
]


def verify_all(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    out = []
    for name, fn in ALL_CHECKS:
        if name in ("lambda", "kernel"):
            out.append(fn(seed=seed))
        else:
            out.append(fn())
    return out
