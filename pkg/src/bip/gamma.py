"""Directed graphs of admissible transposition moves inside a Bruhat interval.

For u <= w, the graph has vertex set 1..n and an edge (u(i), u(j)) for every
pair of positions i < j whose swap changes length by exactly one and stays
below w.  Edges are stored as value pairs, never as position pairs.  The
transitively reduced graph carries the polytope's edge data: its edges at u
are exactly the polytope edges at the vertex realizing u.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CyclicInput, NotInInterval
from .order import bruhat_leq
from .perm import Permutation, swap_length_delta


@dataclass(frozen=True)
class LabeledDag:
    """A directed graph on the labels 1..n (acyclic in all uses here)."""

    n: int
    edges: frozenset[tuple[int, int]]
    reduced: bool = False

    def __post_init__(self) -> None:
        for a, b in self.edges:
            if a == b or not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ValueError(f"bad edge ({a}, {b}) for n={self.n}")

    def out_neighbors(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {a: [] for a in range(1, self.n + 1)}
        for a, b in sorted(self.edges):
            adj[a].append(b)
        return adj

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def edge_list_to_masks(n: int, edges: frozenset[tuple[int, int]]) -> tuple[int, ...]:
    """Strict reachability bitmasks: entry a has bit (b-1) set iff a reaches b.

    Raises CyclicInput if some label can reach itself.
    """
    out = [0] * (n + 1)
    for a, b in edges:
        out[a] |= 1 << (b - 1)
    masks = list(out)
    changed = True
    while changed:
        changed = False
        for a in range(1, n + 1):
            m = masks[a]
            extra = 0
            bits = m
            while bits:
                low = bits & -bits
                extra |= masks[low.bit_length()]
                bits ^= low
            if extra | m != m:
                masks[a] = extra | m
                changed = True
    for a in range(1, n + 1):
        if masks[a] >> (a - 1) & 1:
            raise CyclicInput(f"label {a} lies on a directed cycle")
    return tuple(masks)


def gamma_tilde_edges(w: Permutation, u: Permutation) -> frozenset[tuple[int, int]]:
    """Edge set of the unreduced move graph at u inside [e, w]."""
    n = u.n
    edges = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if abs(swap_length_delta(u.word, i, j)) != 1:
                continue
            if bruhat_leq(u.swap_positions(i, j), w):
                edges.add((u.word[i - 1], u.word[j - 1]))
    return frozenset(edges)


def gamma_tilde(w: Permutation, u: Permutation) -> LabeledDag:
    """The unreduced move graph at u; requires u <= w."""
    if not bruhat_leq(u, w):
        raise NotInInterval(f"{u} is not Bruhat-below {w}")
    return LabeledDag(u.n, gamma_tilde_edges(w, u))


def reduce_edges(
    n: int, edges: frozenset[tuple[int, int]], masks: tuple[int, ...] | None = None
) -> frozenset[tuple[int, int]]:
    """Drop every edge implied by a two-or-more-step path (unique for a DAG)."""
    if masks is None:
        masks = edge_list_to_masks(n, edges)
    kept = set()
    for a, b in edges:
        via = masks[a] & ~(1 << (b - 1))
        redundant = False
        bits = via
        while bits:
            low = bits & -bits
            c = low.bit_length()
            bits ^= low
            if masks[c] >> (b - 1) & 1:
                redundant = True
                break
        if not redundant:
            kept.add((a, b))
    return frozenset(kept)


def transitive_reduction(g: LabeledDag) -> LabeledDag:
    """The unique minimal graph with the same reachability as ``g``."""
    return LabeledDag(g.n, reduce_edges(g.n, g.edges), reduced=True)


def gamma(w: Permutation, u: Permutation) -> LabeledDag:
    """The transitively reduced move graph at u inside [e, w]."""
    return transitive_reduction(gamma_tilde(w, u))


def reaches(g: LabeledDag, a: int, b: int) -> bool:
    """Is there a directed path (of length >= 1) from a to b?

    Paths of length zero do not count: reaches(g, a, a) is False unless a lies
    on a directed cycle.
    """
    seen = set()
    stack = [a]
    adj = g.out_neighbors()
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y == b:
                return True
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def linear_extensions(g: LabeledDag) -> frozenset[Permutation]:
    """All y placing i before j whenever i has a path to j.

    Enumerates S_n and filters; intended for n <= 7.  Checking the edges alone
    suffices because position order is transitive.
    """
    edge_list = sorted(g.edges)
    edge_list_to_masks(g.n, g.edges)  # raises CyclicInput on a cycle
    found = []
    for word in itertools.permutations(range(1, g.n + 1)):
        pos = [0] * (g.n + 1)
        for p, v in enumerate(word):
            pos[v] = p
        if all(pos[a] < pos[b] for a, b in edge_list):
            found.append(Permutation(word))
    return frozenset(found)


def extends(x: Permutation, edges: frozenset[tuple[int, int]]) -> bool:
    """Does x place a before b for every edge (a, b)?"""
    pos = x._inverse_word
    return all(pos[a - 1] < pos[b - 1] for a, b in edges)


def undirected_profile(g: LabeledDag) -> tuple[int, bool]:
    """(number of connected components, has the underlying graph a cycle)."""
    adj: dict[int, set[int]] = {a: set() for a in range(1, g.n + 1)}
    undirected = {frozenset(e) for e in g.edges}
    for e in undirected:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    seen: set[int] = set()
    components = 0
    for start in range(1, g.n + 1):
        if start in seen:
            continue
        components += 1
        seen.add(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    has_cycle = len(undirected) > g.n - components
    return components, has_cycle


def is_tree(g: LabeledDag) -> bool:
    """Is the underlying undirected graph connected and acyclic?"""
    components, has_cycle = undirected_profile(g)
    return components == 1 and not has_cycle


def to_dot(g: LabeledDag, name: str) -> str:
    """Graphviz rendering with vertices 1..n and one line per directed edge."""
    lines = [f'digraph "{name}" {{']
    for v in range(1, g.n + 1):
        lines.append(f"  {v};")
    for a, b in g.sorted_edges():
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
