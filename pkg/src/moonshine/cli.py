"""Command-line front end.

Exit status: 0 when every checked identity holds, 1 on an identity failure,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from dataclasses import dataclass
from fractions import Fraction

from . import verify
from .faber import faber_poly, faber_residual, newton_log_identity_check, newton_log_precision
from .hecke import scaled_hecke
from .lambda_ops import (
    replicability_check_faber_form,
    replicability_check_theorem_form,
    symmetry_check,
)
from .modular import moonshine_J
from .pairs import chart_atlas, enumerate_pairs, parse_group, projection_report, sl2_orbits
from .supersingular import ogg_scan
from .trees import brute_force_rooted_trees, solve_tree_equation

COMMANDS = (
    "jseries", "hecke", "faber", "replicate", "theorem33", "symmetry",
    "pairs", "ogg", "trees", "verify-all",
)


@dataclass
class RunConfig:
    command: str
    output_format: str = "text"
    seed: int = verify.DEFAULT_SEED
    order: int | None = None
    k: int | None = None
    n: int | None = None
    k_max: int = 10
    t_order: int = 12
    q_order: int = 12
    bound: int = 100
    group: str | None = None
    check_newton: bool = False
    oracle: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        for name in ("order", "k", "n", "k_max", "t_order", "q_order", "bound"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise ValueError(f"--{name.replace('_', '-')} must be >= 1")


def _series_lines(f) -> list[str]:
    return [f"q^{n}: {c}" for n, c in f.items()]


def _cell(c) -> list[int] | None:
    return list(c) if c is not None else None


def _perm(p) -> list[int]:
    return list(p)


def run_jseries(cfg: RunConfig) -> dict:
    order = 20 if cfg.order is None else cfg.order
    J = moonshine_J(order)
    ok = J.is_integral() and J.coefficient(0) == 0
    return {"command": "jseries", "ok": ok, "series": J.to_json_obj(), "_text": _series_lines(J)}


def run_hecke(cfg: RunConfig) -> dict:
    k = cfg.k or 2
    order = 10 if cfg.order is None else cfg.order
    J = moonshine_J(max(k * order, 1))
    img = scaled_hecke(J, k, order=order)
    return {
        "command": "hecke",
        "ok": img.is_integral(),
        "k": k,
        "series": img.to_json_obj(),
        "_text": [f"{k}*T_{k} J:"] + _series_lines(img),
    }


def run_faber(cfg: RunConfig) -> dict:
    if cfg.check_newton:
        J = moonshine_J(newton_log_precision(cfg.t_order, cfg.q_order))
        r = newton_log_identity_check(J, cfg.t_order, cfg.q_order)
        return {
            "command": "faber",
            "ok": r.minus_holds,
            "newton_sign": r.sign,
            "first_failure": _cell(r.first_mismatch_minus),
            "_text": [f"Newton-log identity for J to (q^{cfg.t_order}, p^{cfg.q_order}): sign {r.sign}"],
        }
    n = cfg.n or 2
    order = 10 if cfg.order is None else cfg.order
    J = moonshine_J(max(order, n) + n)
    P = faber_poly(J, n)
    resid = faber_residual(J, P, n).truncate(order)
    ok = resid.valuation >= 1
    return {
        "command": "faber",
        "ok": ok,
        "n": n,
        "coeffs": [str(c) for c in P.coeffs],
        "_text": [f"P_{n},J(X) = {P}", f"q^-{n} - P(J(q)) = {resid}"],
    }


def run_replicate(cfg: RunConfig) -> dict:
    order = 50 if cfg.order is None else cfg.order
    r = replicability_check_faber_form(cfg.k_max, order)
    bad = r.first_failure()
    text = [f"k={k}: {'ok' if v is None else f'mismatch at q^{v}'}" for k, v in sorted(r.mismatches.items())]
    return {"command": "replicate", "ok": r.ok, "k_max": cfg.k_max, "q_order": order,
            "first_failure": _cell(bad), "_text": text}


def run_theorem33(cfg: RunConfig) -> dict:
    r = replicability_check_theorem_form(cfg.t_order, cfg.q_order)
    msg = "t(J(t) - J(q)) = Lambda_{-t}(J(q))"
    text = [f"{msg} on t<={cfg.t_order}, q<={cfg.q_order}: {'holds' if r.ok else 'FAILS'}"]
    if not r.ok:
        text.append(f"first offending cell (t^{r.first_mismatch[0]}, q^{r.first_mismatch[1]})")
    return {"command": "theorem33", "ok": r.ok, "t_order": cfg.t_order, "q_order": cfg.q_order,
            "first_failure": _cell(r.first_mismatch), "_text": text}


def run_symmetry(cfg: RunConfig) -> dict:
    t_order, q_order = cfg.t_order, cfg.q_order
    r = symmetry_check(t_order, q_order)
    text = [
        f"q Lambda_{{-t}}(J(q)) = -t Lambda_{{-q}}(J(t)) on t<={t_order}, q<={q_order}: "
        f"{'holds' if r.equal else 'FAILS'}",
        f"integral: {r.integral}, no poles: {r.no_poles}",
    ]
    if r.first_mismatch:
        text.append(f"first offending cell (t^{r.first_mismatch[0]}, q^{r.first_mismatch[1]})")
    return {"command": "symmetry", "ok": r.ok, "t_order": t_order, "q_order": q_order,
            "integral": r.integral, "no_poles": r.no_poles,
            "first_failure": _cell(r.first_mismatch), "_text": text}


def run_pairs(cfg: RunConfig) -> dict:
    G = parse_group(cfg.group or "sym:3")
    classes = enumerate_pairs(G)
    label = {p: i for i, p in enumerate(classes)}
    orbits = [[label[p] for p in orb] for orb in sl2_orbits(G)]
    atlas = {
        ",".join(map(str, g)): {",".join(map(str, h)): label[pc] for h, pc in chart.items()}
        for g, chart in chart_atlas(G).items()
    }
    reports = {",".join(map(str, g)): projection_report(G, g) for g in G.elements}
    worst = max(max(r.values()) for r in reports.values())
    counted = sum(p.size for p in classes) == sum(len(G.centralizer(g)) for g in G.elements)
    covered = {v for chart in atlas.values() for v in chart.values()} == set(range(len(classes)))
    ok = counted and covered and worst <= 1e-10
    table = [
        {"class": i, "h": _perm(p.representative[0]), "g": _perm(p.representative[1]), "orbit_size": p.size}
        for i, p in enumerate(classes)
    ]
    text = [f"group {G.name}, order {G.order}: {len(classes)} classes of commuting pairs"]
    text += [f"  [{t['class']}] h={t['h']} g={t['g']} size={t['orbit_size']}" for t in table]
    text.append(f"SL2(Z) orbits: {orbits}")
    text.append(f"chart atlas covers Pairs_G: {covered}")
    text.append(f"projection checks, worst deviation: {worst:.1e}")
    return {"command": "pairs", "ok": ok, "group": G.name, "order": G.order, "class_count": len(classes),
            "classes": table, "sl2_orbits": orbits, "atlas": atlas,
            "projection_max_error": worst, "_text": text}


def run_ogg(cfg: RunConfig) -> dict:
    r = ogg_scan(cfg.bound)
    expected = verify.monster_primes(cfg.bound)
    per_prime = {
        str(p): {"delta": rep.delta, "j_set": [list(j) for j in rep.sorted_j()],
                 "all_in_prime_field": rep.all_in_prime_field}
        for p, rep in r.reports.items()
    }
    text = [
        "{" + ", ".join(map(str, r.passing)) + "}",
        f"failing: {r.failing}",
        f"matches prime divisors of |M| up to {cfg.bound}: {r.passing == expected}",
    ]
    return {"command": "ogg", "ok": r.passing == expected, "bound": cfg.bound, "passing": r.passing,
            "failing": r.failing, "primes": per_prime, "_text": text}


def run_trees(cfg: RunConfig) -> dict:
    order = 20 if cfg.order is None else cfg.order
    ts = solve_tree_equation(order)
    out = {"command": "trees", "ok": True, "order": order, "counts": list(ts.counts)}
    text = [", ".join(map(str, ts.counts))]
    if cfg.oracle:
        m = min(order, 8)
        brute = brute_force_rooted_trees(m)
        out["oracle"] = brute
        out["ok"] = list(ts.counts[:m]) == brute
        text.append(f"brute force to n={m}: {'agrees' if out['ok'] else 'DISAGREES'}")
    out["_text"] = text
    return out


def run_verify_all(cfg: RunConfig) -> dict:
    results = verify.verify_all(seed=cfg.seed)
    first = next((r.name for r in results if not r.ok), None)
    return {
        "command": "verify-all",
        "ok": first is None,
        "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
        "first_failure": first,
        "_text": [r.line() for r in results],
    }


RUNNERS = {
    "jseries": run_jseries, "hecke": run_hecke, "faber": run_faber, "replicate": run_replicate,
    "theorem33": run_theorem33, "symmetry": run_symmetry, "pairs": run_pairs, "ogg": run_ogg,
    "trees": run_trees, "verify-all": run_verify_all,
}


def dispatch(cfg: RunConfig) -> tuple[int, str]:
    """Run one subcommand; returns (exit status, rendered report)."""
    report = RUNNERS[cfg.command](cfg)
    text = report.pop("_text")
    if cfg.output_format == "json":
        rendered = json.dumps(report, sort_keys=True, indent=2, default=_json_default)
    else:
        rendered = "\n".join(text)
    return (0 if report["ok"] else 1), rendered


def load_schema() -> dict:
    return json.loads(resources.files("moonshine").joinpath("schemas/report.schema.json").read_text())


def _json_default(x):
    if isinstance(x, Fraction):
        return str(x)
    raise TypeError(type(x))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)

    p = argparse.ArgumentParser(prog="moonshine", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("jseries", parents=[common], help="q-expansion of J = j - 744")
    s.add_argument("--order", type=int)
    s = sub.add_parser("hecke", parents=[common], help="k T_k J")
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--order", type=int)
    s = sub.add_parser("faber", parents=[common], help="Faber polynomial P_{n,J}")
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--order", type=int)
    s.add_argument("--check-newton", action="store_true")
    s.add_argument("--t-order", type=int, default=12, help="q-order of the Newton check")
    s.add_argument("--q-order", type=int, default=12, help="p-order of the Newton check")
    s = sub.add_parser("replicate", parents=[common], help="P_{k,J}(J) = k T_k J")
    s.add_argument("--k-max", type=int, default=10)
    s.add_argument("--order", type=int)
    for name, t_def, q_def, hlp in (
        ("theorem33", 12, 12, "t(J(t) - J(q)) = Lambda_{-t}(J(q)) on a grid"),
        ("symmetry", 10, 10, "q Lambda_{-t}(J(q)) = -t Lambda_{-q}(J(t)) on a grid"),
    ):
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("--t-order", type=int, default=t_def)
        s.add_argument("--q-order", type=int, default=q_def)
    s = sub.add_parser("pairs", parents=[common], help="commuting-pair orbifold of a group")
    s.add_argument("--group", default="sym:3")
    s = sub.add_parser("ogg", parents=[common], help="supersingular prime scan")
    s.add_argument("--bound", type=int, default=100)
    s = sub.add_parser("trees", parents=[common], help="rooted unlabelled tree counts")
    s.add_argument("--order", type=int)
    s.add_argument("--oracle", action="store_true")
    sub.add_parser("verify-all", parents=[common], help="run every verification")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    kw = {k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__ and v is not None}
    kw["output_format"] = "json" if ns.json else "text"
    return RunConfig(**kw)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        cfg = config_from_args(ns)
    except SystemExit as e:
        return 2 if e.code else 0
    except ValueError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    try:
        status, rendered = dispatch(cfg)
    except ValueError as e:  # bad group spec, oversized input, precision too low
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except ArithmeticError as e:
        print(f"identity failure: {e}", file=sys.stderr)
        return 1
    print(rendered)
    return status


if __name__ == "__main__":
    sys.exit(main())
