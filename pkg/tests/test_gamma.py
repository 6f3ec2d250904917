import itertools

import pytest

from bip.errors import CyclicInput, NotInInterval
from bip.gamma import (
    LabeledDag,
    edge_list_to_masks,
    gamma,
    gamma_tilde,
    is_tree,
    linear_extensions,
    reaches,
    to_dot,
    transitive_reduction,
    undirected_profile,
)
from bip.order import bruhat_leq
from bip.perm import all_permutations, identity, longest, parse

from conftest import bruhat_interval_elements


def dag(n, edges):
    return LabeledDag(n, frozenset(edges))


def test_gamma_tilde_examples():
    w = parse("231")
    assert gamma_tilde(w, identity(3)).edges == {(1, 2), (2, 3)}
    assert gamma_tilde(w, parse("132")).edges == {(1, 2), (3, 2)}
    assert gamma_tilde(identity(3), identity(3)).edges == frozenset()


def test_gamma_tilde_requires_membership():
    with pytest.raises(NotInInterval):
        gamma_tilde(parse("231"), parse("312"))


def test_transitive_reduction_examples():
    assert transitive_reduction(dag(3, [(1, 2), (2, 3), (1, 3)])).edges == {(1, 2), (2, 3)}
    assert transitive_reduction(dag(3, [(1, 2), (2, 3)])).edges == {(1, 2), (2, 3)}
    assert transitive_reduction(dag(3, [])).edges == frozenset()


def test_transitive_reduction_rejects_cycles():
    with pytest.raises(CyclicInput):
        transitive_reduction(dag(3, [(1, 2), (2, 1)]))


def test_reaches_examples():
    g = dag(3, [(1, 2), (2, 3)])
    assert reaches(g, 1, 3)
    assert not reaches(g, 3, 1)
    assert not reaches(g, 1, 1)  # zero-length paths do not count


def test_linear_extensions_examples():
    chain = dag(3, [(1, 2), (2, 3)])
    assert linear_extensions(chain) == {identity(3)}
    vee = dag(3, [(1, 2), (3, 2)])
    assert linear_extensions(vee) == {parse("132"), parse("312")}
    assert len(linear_extensions(dag(3, []))) == 6
    with pytest.raises(CyclicInput):
        linear_extensions(dag(2, [(1, 2), (2, 1)]))


def test_is_tree_examples():
    w = parse("231")
    assert gamma(w, w).edges == {(2, 1), (3, 1)}
    assert is_tree(gamma(w, w))
    assert not is_tree(dag(4, [(1, 2), (3, 4)]))
    assert is_tree(dag(1, []))
    assert not is_tree(dag(3, [(1, 2), (2, 3), (1, 3)]))  # undirected triangle


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_move_graphs_acyclic_and_reductions_triangle_free(n):
    for w in all_permutations(n):
        for u in bruhat_interval_elements(w):
            g = gamma_tilde(w, u)
            masks = edge_list_to_masks(n, g.edges)  # raises on a directed cycle
            r = transitive_reduction(g)
            und = {frozenset(e) for e in r.edges}
            for a, b, c in itertools.combinations(range(1, n + 1), 3):
                tri = [frozenset((a, b)), frozenset((b, c)), frozenset((a, c))]
                assert not all(t in und for t in tri), (w, u)
            # reduction preserves reachability exactly
            assert edge_list_to_masks(n, r.edges) == masks


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_admissible_reflections_give_paths(n):
    for w in all_permutations(n):
        for u in bruhat_interval_elements(w):
            masks = edge_list_to_masks(n, gamma_tilde(w, u).edges)
            for a in range(1, n + 1):
                for b in range(1, n + 1):
                    if a == b or u.position(a) >= u.position(b):
                        continue
                    if bruhat_leq(u.swap_values(a, b), w):
                        assert masks[a] >> (b - 1) & 1, (w, u, a, b)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_extensions_of_full_and_reduced_graphs_agree(n):
    for w in all_permutations(n):
        for u in bruhat_interval_elements(w):
            g = gamma_tilde(w, u)
            assert linear_extensions(g) == linear_extensions(transitive_reduction(g))


def test_undirected_profile_counts():
    assert undirected_profile(dag(4, [(1, 2), (3, 4)])) == (2, False)
    assert undirected_profile(dag(3, [(1, 2), (2, 3), (1, 3)])) == (1, True)
    assert undirected_profile(dag(3, [])) == (3, False)


def test_dot_rendering():
    g = dag(3, [(1, 2), (3, 2)])
    text = to_dot(g, "Gamma_2,3,1(1,3,2)")
    assert text.splitlines()[0] == 'digraph "Gamma_2,3,1(1,3,2)" {'
    assert "  1 -> 2;" in text and "  3 -> 2;" in text


def test_longest_element_graph_is_a_path():
    w0 = longest(5)
    g = gamma(w0, w0)
    assert g.edges == {(k + 1, k) for k in range(1, 5)}
    assert is_tree(g)
