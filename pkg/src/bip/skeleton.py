"""The polytope's combinatorial 1-skeleton and the poset it generates.

Every vertex of the polytope of w is the point realizing some u <= w, and the
edges at that vertex are read off the reduced move graph at u.  Each skeleton
edge is produced from both of its endpoints; the builder asserts this
two-sided duplication instead of assuming it.

``WContext`` memoizes all per-w combinatorial data (interval, move graphs,
reachability, skeleton closure, class representatives).  Sweeps partition
work by w across workers; a context is only ever written while being built,
after which all queries are read-only.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import NotInInterval
from .gamma import edge_list_to_masks, extends, gamma_tilde_edges, reduce_edges
from .order import IntervalPoset, perm_from_inversions, root_set
from .perm import Permutation, all_permutations, identity


class WContext:
    """Lazily built, immutable-after-build cache of everything about one w."""

    def __init__(self, w: Permutation):
        self.w = w
        self.n = w.n
        self._tilde: dict[int, frozenset[tuple[int, int]]] = {}
        self._reach: dict[int, tuple[int, ...]] = {}
        self._reduced: dict[int, frozenset[tuple[int, int]]] = {}

    @functools.cached_property
    def interval(self) -> tuple[Permutation, ...]:
        from .order import bruhat_lower_interval

        return bruhat_lower_interval(self.w).elements

    @functools.cached_property
    def index(self) -> dict[Permutation, int]:
        return {p: i for i, p in enumerate(self.interval)}

    def require(self, u: Permutation) -> int:
        idx = self.index.get(u)
        if idx is None:
            raise NotInInterval(f"{u} is not Bruhat-below {self.w}")
        return idx

    def tilde_edges(self, i: int) -> frozenset[tuple[int, int]]:
        got = self._tilde.get(i)
        if got is None:
            got = self._tilde[i] = gamma_tilde_edges(self.w, self.interval[i])
        return got

    def reach_masks(self, i: int) -> tuple[int, ...]:
        got = self._reach.get(i)
        if got is None:
            got = self._reach[i] = edge_list_to_masks(self.n, self.tilde_edges(i))
        return got

    def reduced_edges(self, i: int) -> frozenset[tuple[int, int]]:
        got = self._reduced.get(i)
        if got is None:
            got = self._reduced[i] = reduce_edges(self.n, self.tilde_edges(i), self.reach_masks(i))
        return got

    @functools.cached_property
    def skeleton_pairs(self) -> tuple[tuple[int, int], ...]:
        """Deduplicated skeleton edges as (lower, upper) interval indices."""
        sources: dict[tuple[int, int], set[int]] = {}
        for i, u in enumerate(self.interval):
            for a, b in self.reduced_edges(i):
                j = self.index[u.swap_values(a, b)]
                lo, hi = (i, j) if self.interval[i].length < self.interval[j].length else (j, i)
                sources.setdefault((lo, hi), set()).add(i)
        for (lo, hi), seen in sources.items():
            assert seen == {lo, hi}, f"skeleton edge {lo}-{hi} not produced from both ends"
        return tuple(sorted(sources))

    @functools.cached_property
    def up_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.interval]
        for lo, hi in self.skeleton_pairs:
            adj[lo].append(hi)
        return tuple(tuple(sorted(a)) for a in adj)

    @functools.cached_property
    def down_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.interval]
        for lo, hi in self.skeleton_pairs:
            adj[hi].append(lo)
        return tuple(tuple(sorted(a)) for a in adj)

    @functools.cached_property
    def above_masks(self) -> tuple[int, ...]:
        """Reflexive upward reachability in the skeleton poset, as bitmasks."""
        masks = [0] * len(self.interval)
        for i in range(len(self.interval) - 1, -1, -1):
            m = 1 << i
            for j in self.up_adj[i]:
                m |= masks[j]
            masks[i] = m
        return tuple(masks)

    @functools.cached_property
    def below_masks(self) -> tuple[int, ...]:
        masks = [0] * len(self.interval)
        for i in range(len(self.interval)):
            m = 1 << i
            for j in self.down_adj[i]:
                m |= masks[j]
            masks[i] = m
        return tuple(masks)

    def poset_leq(self, i: int, j: int) -> bool:
        """u_i <= u_j in the skeleton poset."""
        return bool(self.above_masks[i] >> j & 1)

    @functools.cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(self.reduced_edges(i)) for i in range(len(self.interval)))

    @functools.cached_property
    def tops(self) -> tuple[Permutation, ...]:
        """Weak-order maximum of each interval element's equivalence class."""
        out = []
        for i in range(len(self.interval)):
            masks = self.reach_masks(i)
            pairs = [
                (c, d)
                for c in range(1, self.n + 1)
                for d in range(c + 1, self.n + 1)
                if not masks[c] >> (d - 1) & 1
            ]
            out.append(perm_from_inversions(root_set(pairs, self.n)))
        return tuple(out)

    def bot_scan(self, x: Permutation) -> int:
        """Index of the unique interval element whose move graph x extends."""
        hits = [i for i in range(len(self.interval)) if extends(x, self.tilde_edges(i))]
        assert len(hits) == 1, f"{x} extends {len(hits)} interval graphs under {self.w}"
        return hits[0]

    @functools.cached_property
    def bot_index(self) -> dict[Permutation, int]:
        """Class representative (as interval index) for every element of S_n."""
        table: dict[Permutation, int] = {}
        for i in range(len(self.interval)):
            edges = self.tilde_edges(i)
            for x in all_permutations(self.n):
                if extends(x, edges):
                    assert x not in table, f"classes under {self.w} overlap at {x}"
                    table[x] = i
        return table

    def bot_of(self, x: Permutation) -> int:
        if self.n <= 5 or "bot_index" in self.__dict__:
            return self.bot_index[x]
        return self.bot_scan(x)

    @functools.cached_property
    def chain_count(self) -> int:
        counts = [0] * len(self.interval)
        counts[0] = 1  # index 0 is the identity (minimal length sorts first)
        for i in range(1, len(self.interval)):
            counts[i] = sum(counts[j] for j in self.down_adj[i])
        return counts[self.index[self.w]]


@functools.lru_cache(maxsize=256)
def wcontext(w: Permutation) -> WContext:
    return WContext(w)


@dataclass(frozen=True)
class SkeletonGraph:
    """Vertices, edges, and vertex degrees of the polytope of w."""

    w: Permutation
    vertices: tuple[Permutation, ...]
    edges: frozenset[tuple[Permutation, Permutation]]  # (lower, upper) by length
    degrees: dict[Permutation, int]

    def edge_count(self) -> int:
        return len(self.edges)

    def to_json_dict(self) -> dict:
        index = {p: i for i, p in enumerate(self.vertices)}
        return {
            "order_kind": "skeleton",
            "w": str(self.w),
            "elements": [str(p) for p in self.vertices],
            "covers": sorted([index[a], index[b]] for a, b in self.edges),
            "degrees": {str(p): self.degrees[p] for p in self.vertices},
        }


def polytope_edges(w: Permutation) -> SkeletonGraph:
    """Compute every polytope edge from the per-vertex move graphs."""
    ctx = wcontext(w)
    interval = ctx.interval
    edges = frozenset(
        (interval[lo], interval[hi]) for lo, hi in ctx.skeleton_pairs
    )
    degrees = {interval[i]: ctx.degrees[i] for i in range(len(interval))}
    return SkeletonGraph(w=w, vertices=interval, edges=edges, degrees=degrees)


def skeleton_poset(w: Permutation) -> IntervalPoset:
    """The interval [e, w] ordered by polytope edges directed toward greater length."""
    ctx = wcontext(w)
    return IntervalPoset(
        order_kind="skeleton",
        elements=ctx.interval,
        covers=frozenset(ctx.skeleton_pairs),
        bottom=identity(w.n),
        top=w,
    )


def degree(w: Permutation, u: Permutation) -> int:
    """Number of polytope edges at the vertex realizing u."""
    ctx = wcontext(w)
    return ctx.degrees[ctx.require(u)]


def up_covers(w: Permutation, u: Permutation) -> list[Permutation]:
    """Upper covers of u in the skeleton poset."""
    ctx = wcontext(w)
    i = ctx.require(u)
    return [ctx.interval[j] for j in ctx.up_adj[i]]


def maximal_chain_count(w: Permutation) -> int:
    """Number of maximal chains of the skeleton poset, by exact dynamic programming."""
    return wcontext(w).chain_count


def poset_leq(w: Permutation, u: Permutation, v: Permutation) -> bool:
    """Comparison in the skeleton poset (u below v through polytope edges)."""
    ctx = wcontext(w)
    return ctx.poset_leq(ctx.require(u), ctx.require(v))
