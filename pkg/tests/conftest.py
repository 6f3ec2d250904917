"""Shared helpers: independent brute-force oracles the tests check against."""

from __future__ import annotations

import itertools

import pytest

from bip.order import bruhat_leq
from bip.perm import Permutation, all_permutations
from bip.skeleton import skeleton_poset


def perms_sorted(n: int) -> list[Permutation]:
    return sorted(all_permutations(n), key=Permutation.sort_key)


def poset_relation(w: Permutation) -> dict[Permutation, set[Permutation]]:
    """Reflexive 'everything above' map of the skeleton poset, by plain DFS.

    Kept deliberately independent of the bitmask closure inside the package.
    """
    poset = skeleton_poset(w)
    up = poset.up_adjacency()
    above: dict[Permutation, set[Permutation]] = {}
    order = sorted(range(len(poset.elements)), key=lambda i: -poset.elements[i].length)
    for i in order:
        acc = {poset.elements[i]}
        for j in up[i]:
            acc |= above[poset.elements[j]]
        above[poset.elements[i]] = acc
    return above


def brute_least_upper_bound(w: Permutation, u: Permutation, v: Permutation) -> Permutation | None:
    """Unique minimal common upper bound in the skeleton poset, or None."""
    above = poset_relation(w)
    common = above[u] & above[v]
    mins = [x for x in common if not any(y is not x and x in above[y] for y in common)]
    return mins[0] if len(mins) == 1 else None


def brute_greatest_lower_bound(w: Permutation, u: Permutation, v: Permutation) -> Permutation | None:
    above = poset_relation(w)
    common = [x for x in above if u in above[x] and v in above[x]]
    maxes = [x for x in common if not any(y is not x and y in above[x] for y in common)]
    return maxes[0] if len(maxes) == 1 else None


def brute_maximal_chain_count(w: Permutation) -> int:
    """Count maximal chains by explicit depth-first path enumeration."""
    poset = skeleton_poset(w)
    up = poset.up_adjacency()
    start = poset.index(poset.bottom)
    goal = poset.index(poset.top)

    def walk(i: int) -> int:
        if i == goal:
            return 1
        return sum(walk(j) for j in up[i])

    return walk(start)


def bruhat_interval_elements(w: Permutation) -> set[Permutation]:
    return {u for u in all_permutations(w.n) if bruhat_leq(u, w)}


@pytest.fixture(scope="session")
def s4() -> list[Permutation]:
    return perms_sorted(4)


@pytest.fixture(scope="session")
def s5() -> list[Permutation]:
    return perms_sorted(5)
