"""Fractional matching number: two routes, certificates, matching number."""

import pytest

from fracmatch.graphs import (
    Graph,
    all_labeled_graphs,
    complete_graph,
    cycle_graph,
    delete_edges,
    disjoint_union,
    empty_graph,
    join,
)
from fracmatch.matching import (
    HalfInt,
    fractional_certificate,
    matching_number,
    nu_star_deficiency,
    nu_star_fast,
)

from conftest import random_graph


def check_certificate(g: Graph) -> int:
    """Feasibility of the certificate; returns its doubled total."""
    cert = fractional_certificate(g)
    load = [0] * g.n
    for u, v, w in cert.edges:
        assert g.has_edge(u, v)
        assert w in (0, 1, 2)
        load[u] += w
        load[v] += w
    assert all(x <= 2 for x in load)
    assert sum(w for _, _, w in cert.edges) == cert.total_doubled
    return cert.total_doubled


def test_halfint_formatting():
    assert str(HalfInt(4)) == "2"
    assert str(HalfInt(5)) == "5/2"
    assert HalfInt(4).is_integer and not HalfInt(5).is_integer
    with pytest.raises(ValueError):
        HalfInt(-1)


def test_k4_perfect_matching():
    nu, wit = nu_star_deficiency(complete_graph(4))
    assert nu == HalfInt(4)
    assert wit.T == () and wit.deficiency == 0


def test_star_deficiency_witness():
    star = join(complete_graph(1), empty_graph(3))
    nu, wit = nu_star_deficiency(star)
    assert nu == HalfInt(2)
    assert wit.T == (0,) and wit.isolated == 3


def test_c5_half_integral():
    nu, wit = nu_star_deficiency(cycle_graph(5))
    assert nu == HalfInt(5)
    assert wit.deficiency == 0
    assert nu_star_fast(cycle_graph(5)) == HalfInt(5)


def test_k5_odd_clique():
    assert nu_star_fast(complete_graph(5)) == HalfInt(5)


def test_extremal_construction_value():
    # the base construction at (n=7, s2=4, t=1, delta=1) has nu* = 2
    g = join(complete_graph(1), disjoint_union(complete_graph(2), empty_graph(4)))
    assert nu_star_fast(g) == HalfInt(4)
    assert nu_star_deficiency(g)[0] == HalfInt(4)


def test_deficiency_size_guard():
    with pytest.raises(ValueError, match="n <= 24"):
        nu_star_deficiency(empty_graph(25))


def test_witness_tie_break_is_lexicographic():
    # K_2 + K_2: deficiency 0 at T = {} but also at every singleton;
    # the empty set is the lexicographically smallest maximizer
    g = disjoint_union(complete_graph(2), complete_graph(2))
    _, wit = nu_star_deficiency(g)
    assert wit.T == ()
    star = join(complete_graph(1), empty_graph(3))
    two = disjoint_union(star, star)
    _, wit = nu_star_deficiency(two)
    assert wit.T == (0, 4)


def test_oracle_agreement_exhaustive_n4():
    for g in all_labeled_graphs(4):
        assert nu_star_fast(g).doubled == nu_star_deficiency(g)[0].doubled


def test_oracle_agreement_random(rng):
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 10))
        fast = nu_star_fast(g).doubled
        slow = nu_star_deficiency(g)[0].doubled
        assert fast == slow
        assert check_certificate(g) == fast


def test_certificates():
    assert check_certificate(complete_graph(2)) == 2
    assert check_certificate(cycle_graph(5)) == 5
    assert check_certificate(empty_graph(4)) == 0


def test_monotone_under_edge_addition(rng):
    for _ in range(60):
        n = rng.randint(2, 9)
        g = random_graph(rng, n)
        non_edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if not g.has_edge(u, v)]
        if not non_edges:
            continue
        u, v = rng.choice(non_edges)
        bigger = Graph.from_edges(n, g.edges() + [(u, v)])
        assert nu_star_fast(bigger).doubled >= nu_star_fast(g).doubled


def test_matching_number_examples():
    assert matching_number(cycle_graph(5)) == 2
    assert matching_number(join(complete_graph(1), empty_graph(3))) == 1
    assert matching_number(disjoint_union(complete_graph(5), empty_graph(1))) == 2


def test_matching_number_guard():
    with pytest.raises(ValueError, match="n <= 16"):
        matching_number(empty_graph(17))


def test_nu_vs_nu_star_relations(rng):
    # nu <= nu* <= 3 nu / 2 always; integrality of nu* does NOT force
    # nu = nu* (two disjoint triangles: nu = 2 but nu* = 3)
    tt = disjoint_union(complete_graph(3), complete_graph(3))
    assert matching_number(tt) == 2
    assert nu_star_fast(tt) == HalfInt(6)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 9))
        nu = matching_number(g)
        nu2 = nu_star_fast(g).doubled
        assert 2 * nu <= nu2 <= 3 * nu


def test_agrees_with_lp_relaxation(rng):
    # third route: solve the fractional matching LP directly
    from scipy.optimize import linprog

    for _ in range(150):
        n = rng.randint(2, 9)
        g = random_graph(rng, n)
        edges = g.edges()
        if not edges:
            continue
        rows = []
        for v in range(n):
            rows.append([1.0 if v in e else 0.0 for e in edges])
        res = linprog(c=[-1.0] * len(edges), A_ub=rows, b_ub=[1.0] * n,
                      bounds=[(0.0, 1.0)] * len(edges), method="highs")
        assert res.status == 0
        assert abs(-2.0 * res.fun - nu_star_fast(g).doubled) < 1e-7


def test_delete_edge_never_increases(rng):
    for _ in range(40):
        g = random_graph(rng, 8)
        if not g.edges():
            continue
        e = rng.choice(g.edges())
        smaller = delete_edges(g, [e])
        assert nu_star_fast(smaller).doubled <= nu_star_fast(g).doubled
