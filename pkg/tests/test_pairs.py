import itertools

import numpy as np
import pytest

from moonshine.pairs import (
    IDENTITY,
    MINUS_ONE,
    S,
    T,
    GroupTooLarge,
    PermGroup,
    SL2Matrix,
    adams_on_pairs,
    chart_atlas,
    compose,
    cusp_chart,
    devoto_projections,
    enumerate_pairs,
    invert,
    parse_group,
    power,
    projection_report,
    sl2_act,
    sl2_orbits,
)
from moonshine.verify import pairs_group_failures

GROUPS = ("sym:3", "dihedral:4", "quaternion8", "alt:4", "cyclic:2", "cyclic:5")


def brute_pair_classes(G: PermGroup) -> int:
    """Count orbits on commuting pairs by union-find over simultaneous conjugation."""
    elems = G.elements
    pairs = [(h, g) for h in elems for g in elems if compose(h, g) == compose(g, h)]
    parent = {p: p for p in pairs}

    def find(p):
        while parent[p] != p:
            p = parent[p]
        return p

    for (h, g), x in itertools.product(pairs, elems):
        xi = invert(x)
        other = (compose(compose(x, h), xi), compose(compose(x, g), xi))
        parent[find((h, g))] = find(other)
    return len({find(p) for p in pairs})


@pytest.mark.parametrize("spec", GROUPS)
def test_class_count_matches_brute_force(spec):
    G = parse_group(spec)
    assert len(enumerate_pairs(G)) == brute_pair_classes(G)


def test_known_counts():
    assert len(enumerate_pairs(parse_group("sym:3"))) == 8
    assert len(enumerate_pairs(parse_group("cyclic:2"))) == 4
    # abelian groups: every pair commutes and conjugation is trivial
    assert len(enumerate_pairs(parse_group("cyclic:5"))) == 25


@pytest.mark.parametrize("spec", ("sym:3", "dihedral:4", "quaternion8", "alt:4"))
def test_pairs_axioms_exhaustive(spec):
    assert pairs_group_failures(spec) == []


@pytest.mark.parametrize("spec", GROUPS)
def test_minus_identity_inverts(spec):
    G = parse_group(spec)
    for p in enumerate_pairs(G):
        h, g = p.representative
        assert sl2_act(G, MINUS_ONE, p) == G.pair_class(invert(h), invert(g))
        assert sl2_act(G, S @ S, p) == sl2_act(G, MINUS_ONE, p)


@pytest.mark.parametrize("spec", GROUPS)
def test_adams_on_pairs(spec):
    G = parse_group(spec)
    for p in enumerate_pairs(G):
        assert adams_on_pairs(G, 1, p) == p
        e = G.identity
        assert adams_on_pairs(G, 0, p) == G.pair_class(e, e)
        assert adams_on_pairs(G, 2, adams_on_pairs(G, 3, p)) == adams_on_pairs(G, 6, p)


def test_orbits_partition():
    G = parse_group("sym:3")
    orbits = sl2_orbits(G)
    flat = [p for orb in orbits for p in orb]
    assert sorted(flat) == enumerate_pairs(G)
    assert len(flat) == len(set(flat))
    # the trivial pair is a singleton orbit
    e = G.identity
    assert [G.pair_class(e, e)] in orbits


def test_cusp_chart_identity_is_conjugacy_classes():
    G = parse_group("sym:3")
    chart = cusp_chart(G, G.identity)
    assert len(chart) == 3
    with pytest.raises(ValueError):
        cusp_chart(G, (1, 0, 2, 3))


def test_chart_atlas_surjective():
    G = parse_group("dihedral:4")
    covered = {pc for chart in chart_atlas(G).values() for pc in chart.values()}
    assert covered == set(enumerate_pairs(G))


def test_projection_examples():
    G = parse_group("cyclic:5")
    g = G.elements[1]
    Ps = devoto_projections(G, g)
    assert len(Ps) == 5
    # regular rep of Z/5: every eigenspace is one-dimensional
    assert all(abs(np.trace(P) - 1) < 1e-12 for P in Ps)
    assert max(projection_report(G, g).values()) < 1e-10
    e_proj = devoto_projections(G, G.identity)
    assert len(e_proj) == 1 and np.allclose(e_proj[0], np.eye(5))


def test_sl2_matrix():
    assert (S @ S @ S @ S) == IDENTITY
    assert (S @ T).inverse() @ (S @ T) == IDENTITY
    with pytest.raises(ValueError):
        SL2Matrix(2, 0, 0, 1)


def test_power_and_group_basics():
    G = parse_group("sym:4")
    assert G.order == 24
    assert parse_group("alt:4").order == 12
    assert parse_group("quaternion8").order == 8
    x = (1, 2, 3, 0)
    assert power(x, 4) == G.identity and power(x, -1) == invert(x)
    assert parse_group("perm:(0,1,2);(0,1)").order == 6


@pytest.mark.parametrize("bad", ["sym:x", "foo:3", "perm:(0,0)", "dihedral:2", ""])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_group(bad)


def test_group_size_bound(monkeypatch):
    monkeypatch.setenv("MOONSHINE_MAX_GROUP", "100")
    with pytest.raises(GroupTooLarge):
        parse_group("sym:5")
