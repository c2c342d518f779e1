from itertools import permutations
from math import comb

import pytest

from chromsym.chromatic import (
    chromatic_polynomial_value,
    cqf_fundamental_via_orientations,
    cqf_monomial,
    csf_monomial,
    csf_monomial_by_colorings,
    csf_schur,
    dual_linear_extensions,
    hook_coefficient_via_orientations_t,
    hook_coefficient_via_sinks,
    sink_minimal_increasing_labeling,
    sink_profile,
    verify_e_sink_identity,
)
from chromsym.graphs import (
    Graph,
    Labeling,
    Orientation,
    acyclic_orientations,
    complete_graph,
    edgeless_graph,
    path_graph,
    star_graph,
)
from chromsym.partitions import composition_from_descents, hook_partition
from chromsym.symfunc import (
    QuasisymmetricF,
    collapse_t,
    hook_coefficient_of_F,
    is_symmetric,
    monomial_to_quasi,
    qsym_M_to_F,
)
from chromsym.tableaux import descent_set
from chromsym.tpoly import TPoly
from oracles import all_graphs, count_colorings_brute

CLAW = star_graph(3)


def test_csf_monomial_golden_values():
    assert csf_monomial(CLAW).coeffs == {(3, 1): 1, (2, 1, 1): 6, (1, 1, 1, 1): 24}
    assert csf_monomial(edgeless_graph(3)).coeffs == {(3,): 1, (2, 1): 3, (1, 1, 1): 6}
    assert csf_monomial(Graph(1)).coeffs == {(1,): 1}


@pytest.mark.parametrize("n", range(1, 6))
def test_csf_monomial_agrees_with_direct_coloring_sum(n):
    for g in all_graphs(n):
        assert csf_monomial(g) == csf_monomial_by_colorings(g)


def test_csf_schur_golden_values():
    assert csf_schur(CLAW) == {(3, 1): 1, (2, 2): -1, (2, 1, 1): 5, (1, 1, 1, 1): 8}
    assert csf_schur(edgeless_graph(3)) == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
    assert csf_schur(Graph(1)) == {(1,): 1}


def test_sink_profile_examples():
    claw = sink_profile(CLAW)
    assert (claw[1], claw[2], claw[3]) == (4, 3, 1)
    assert claw.total == 8
    assert sink_profile(edgeless_graph(3)).counts == ((3, 1),)
    p3 = sink_profile(path_graph(3))
    assert (p3[1], p3[2]) == (3, 1)
    assert p3[3] == 0


@pytest.mark.parametrize("n", range(1, 5))
def test_sink_profile_matches_orientation_objects(n):
    for g in all_graphs(n):
        histogram: dict[int, int] = {}
        for o in acyclic_orientations(g):
            histogram[o.sinks()] = histogram.get(o.sinks(), 0) + 1
        assert dict(sink_profile(g).counts) == histogram


def test_hook_coefficient_via_sinks_examples():
    assert hook_coefficient_via_sinks(CLAW, 2) == 5
    assert hook_coefficient_via_sinks(CLAW, 3) == 1
    assert hook_coefficient_via_sinks(edgeless_graph(3), 2) == 2
    with pytest.raises(ValueError):
        hook_coefficient_via_sinks(CLAW, 5)
    with pytest.raises(ValueError):
        hook_coefficient_via_sinks(CLAW, 0)


def test_chromatic_polynomial_values():
    p3 = path_graph(3)
    assert [chromatic_polynomial_value(p3, k) for k in range(4)] == [0, 0, 2, 12]
    assert chromatic_polynomial_value(path_graph(4), 3) == 3 * 2 * 2 * 2
    with pytest.raises(ValueError):
        chromatic_polynomial_value(p3, -1)


@pytest.mark.parametrize("n", range(1, 5))
def test_chromatic_polynomial_matches_enumeration(n):
    for g in all_graphs(n):
        for k in range(5):
            assert chromatic_polynomial_value(g, k) == count_colorings_brute(g, k)


def test_cqf_monomial_examples():
    k2 = complete_graph(2)
    assert cqf_monomial(k2).coeffs == {(1, 1): TPoly((1, 1))}
    assert cqf_monomial(edgeless_graph(2)).coeffs == {
        (2,): TPoly((1,)),
        (1, 1): TPoly((2,)),
    }


def test_cqf_monomial_collapses_to_symmetric():
    for g in (CLAW, path_graph(4), complete_graph(3)):
        for zeta in (None, Labeling((2, 1) + tuple(range(3, g.n + 1)))):
            assert is_symmetric(collapse_t(cqf_monomial(g, zeta)))


def test_sink_minimal_labeling_on_the_oriented_4_path():
    o = Orientation(path_graph(4), [(2, 1), (2, 3), (3, 4)])
    assert sink_minimal_increasing_labeling(o).labels == (1, 4, 3, 2)


def test_sink_minimal_labeling_degenerate_cases():
    (empty,) = acyclic_orientations(edgeless_graph(4))
    assert sink_minimal_increasing_labeling(empty) == Labeling.identity(4)
    k2 = complete_graph(2)
    assert sink_minimal_increasing_labeling(Orientation(k2, [(1, 2)])).labels == (2, 1)
    assert sink_minimal_increasing_labeling(Orientation(k2, [(2, 1)])).labels == (1, 2)
    cycle = Orientation(complete_graph(3), [(1, 2), (2, 3), (3, 1)])
    with pytest.raises(ValueError):
        sink_minimal_increasing_labeling(cycle)


@pytest.mark.parametrize("n", range(1, 5))
def test_sink_minimal_labeling_is_valid_everywhere(n):
    for g in all_graphs(n):
        for o in acyclic_orientations(g):
            omega = sink_minimal_increasing_labeling(o)
            s = o.sinks()
            out = o.out_masks()
            for v in range(1, n + 1):
                if out[v - 1] == 0:
                    assert omega.label(v) <= s
            for u, v in o.arcs:
                assert omega.label(u) > omega.label(v)


def test_dual_linear_extensions_of_the_oriented_4_path():
    o = Orientation(path_graph(4), [(2, 1), (2, 3), (3, 4)])
    omega = sink_minimal_increasing_labeling(o)
    assert dual_linear_extensions(o, omega) == (
        (4, 1, 3, 2),
        (4, 3, 1, 2),
        (4, 3, 2, 1),
    )


def test_dual_linear_extensions_degenerate_cases():
    (empty,) = acyclic_orientations(edgeless_graph(3))
    assert len(dual_linear_extensions(empty, Labeling.identity(3))) == 6
    chain = Orientation(path_graph(3), [(1, 2), (2, 3)])
    assert dual_linear_extensions(chain, Labeling.identity(3)) == ((1, 2, 3),)
    cycle = Orientation(complete_graph(3), [(1, 2), (2, 3), (3, 1)])
    with pytest.raises(ValueError):
        dual_linear_extensions(cycle, Labeling.identity(3))


def test_cqf_fundamental_examples():
    k2 = complete_graph(2)
    assert cqf_fundamental_via_orientations(k2).coeffs == {(1, 1): TPoly((1, 1))}
    assert cqf_fundamental_via_orientations(edgeless_graph(2)).coeffs == {
        (2,): TPoly((1,)),
        (1, 1): TPoly((1,)),
    }


@pytest.mark.parametrize("n", range(1, 5))
def test_route_equivalence_all_labelings(n):
    for g in all_graphs(n):
        for perm in permutations(range(1, n + 1)):
            zeta = Labeling(perm)
            assert qsym_M_to_F(cqf_monomial(g, zeta)) == cqf_fundamental_via_orientations(
                g, zeta
            )


def test_route_equivalence_on_5_vertices():
    import random

    rng = random.Random(5)
    labelings = list(permutations(range(1, 6)))
    for g in all_graphs(5):
        zetas = [Labeling.identity(5)] + [Labeling(rng.choice(labelings))]
        for zeta in zetas:
            assert qsym_M_to_F(cqf_monomial(g, zeta)) == cqf_fundamental_via_orientations(
                g, zeta
            )


def test_route_equivalence_on_random_6_vertex_graphs():
    import random

    rng = random.Random(6)
    pairs = [(u, v) for u in range(1, 7) for v in range(u + 1, 7)]
    for _ in range(8):
        mask = rng.getrandbits(15)
        g = Graph(6, [pairs[i] for i in range(15) if mask >> i & 1])
        perm = list(range(1, 7))
        rng.shuffle(perm)
        zeta = Labeling(perm)
        assert qsym_M_to_F(cqf_monomial(g, zeta)) == cqf_fundamental_via_orientations(
            g, zeta
        )


def _alternative_sink_labeling(o: Orientation) -> Labeling:
    """A different valid choice: ties broken by descending vertex index."""
    n = o.graph.n
    out = o.out_masks()
    labels = [0] * n
    labeled = 0
    next_label = 1
    for v in reversed(range(n)):
        if out[v] == 0:
            labels[v] = next_label
            next_label += 1
            labeled |= 1 << v
    while next_label <= n:
        for v in reversed(range(n)):
            if labeled >> v & 1 or out[v] & ~labeled:
                continue
            labels[v] = next_label
            next_label += 1
            labeled |= 1 << v
            break
    return Labeling(labels)


@pytest.mark.parametrize("n", range(1, 5))
def test_any_valid_sink_minimal_labeling_gives_the_same_expansion(n):
    for g in all_graphs(n):
        acc: dict = {}
        for o in acyclic_orientations(g):
            omega = _alternative_sink_labeling(o)
            s = o.sinks()
            for u, v in o.arcs:
                assert omega.label(u) > omega.label(v)
            out = o.out_masks()
            assert all(
                omega.label(v) <= s for v in range(1, n + 1) if out[v - 1] == 0
            )
            des = sum(1 for u, v in o.arcs if u > v)
            for word in dual_linear_extensions(o, omega):
                reflected = {n - i for i in descent_set(word)}
                alpha = composition_from_descents(reflected, n)
                arr = acc.setdefault(alpha, [0] * (g.m + 1))
                arr[des] += 1
        rebuilt = QuasisymmetricF(n, {a: TPoly(c) for a, c in acc.items()})
        assert rebuilt == cqf_fundamental_via_orientations(g)


@pytest.mark.parametrize("n", range(1, 5))
def test_extension_descent_counts_match_binomials(n):
    for g in all_graphs(n):
        for o in acyclic_orientations(g):
            omega = sink_minimal_increasing_labeling(o)
            words = dual_linear_extensions(o, omega)
            s = o.sinks()
            for k in range(1, n + 1):
                target = tuple(range(1, n - k + 1))
                hits = sum(1 for w in words if descent_set(w) == target)
                assert hits == comb(s - 1, k - 1)


def test_hook_coefficient_via_orientations_t_examples():
    k2 = complete_graph(2)
    assert hook_coefficient_via_orientations_t(k2, None, 1) == TPoly((1, 1))
    assert hook_coefficient_via_orientations_t(k2, None, 2) == TPoly()
    assert hook_coefficient_via_orientations_t(CLAW, None, 2).subs(1) == 5
    with pytest.raises(ValueError):
        hook_coefficient_via_orientations_t(k2, None, 3)


@pytest.mark.parametrize("n", range(1, 5))
def test_hook_routes_agree_with_identity_labeling(n):
    for g in all_graphs(n):
        direct = cqf_fundamental_via_orientations(g)
        for k in range(1, n + 1):
            assert hook_coefficient_of_F(direct, k) == hook_coefficient_via_orientations_t(
                g, None, k
            )


@pytest.mark.parametrize("n", range(1, 5))
def test_labeling_independence_at_t_equal_1(n):
    for g in all_graphs(n):
        reference = monomial_to_quasi(csf_monomial(g))
        for perm in permutations(range(1, n + 1)):
            assert collapse_t(cqf_monomial(g, Labeling(perm))) == reference


def test_verify_e_sink_identity_examples():
    report = verify_e_sink_identity(path_graph(3))
    assert report.per_k == {1: (3, 3), 2: (1, 1), 3: (0, 0)}
    assert report.ok
    report = verify_e_sink_identity(edgeless_graph(3))
    assert report.per_k[3] == (1, 1)
    assert report.ok


@pytest.mark.parametrize("n", range(1, 5))
def test_schur_hooks_match_sink_formula_small(n):
    for g in all_graphs(n):
        schur = csf_schur(g)
        for k in range(1, n + 1):
            assert schur.get(hook_partition(n, k), 0) == hook_coefficient_via_sinks(g, k)


@pytest.mark.parametrize("n", range(1, 5))
def test_schur_hook_equals_fundamental_hook_at_t_1(n):
    # Schur coefficients via stable partitions and Kostka solves; the
    # fundamental coefficient via colorings and refinement inversion.
    for g in all_graphs(n):
        schur = csf_schur(g)
        f = qsym_M_to_F(cqf_monomial(g))
        for k in range(1, n + 1):
            assert schur.get(hook_partition(n, k), 0) == hook_coefficient_of_F(f, k).subs(1)
