"""Bruhat order and the two weak orders on S_n.

Bruhat comparison uses the sorted-prefix dominance criterion (u <= v iff for
every k the sorted first k values of u are entrywise <= those of v), which the
test suite cross-validates exhaustively against the subword characterization.

Weak-order joins and meets are looked up in a memoized cover-relation graph
built once per rank; the per-rank caches are immutable after construction and
safe for concurrent readers.
"""

from __future__ import annotations

import functools
from bisect import insort
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NoUniqueMax, NotBiclosed, PreconditionViolated, RankMismatch
from .perm import (
    Permutation,
    Transposition,
    all_permutations,
    identity,
    simple,
    swap_length_delta,
)


def _check_ranks(u: Permutation, v: Permutation) -> None:
    if u.n != v.n:
        raise RankMismatch(f"rank {u.n} vs rank {v.n}")


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Is u <= v in (strong) Bruhat order?

    >>> from .perm import parse
    >>> bruhat_leq(parse("213"), parse("231"))
    True
    >>> bruhat_leq(parse("312"), parse("231"))
    False
    """
    _check_ranks(u, v)
    if u.length > v.length:
        return False
    if u.word == v.word:
        return True
    su: list[int] = []
    sv: list[int] = []
    for k in range(u.n - 1):
        insort(su, u.word[k])
        insort(sv, v.word[k])
        for x, y in zip(su, sv):
            if x > y:
                return False
    return True


def bruhat_lt(u: Permutation, v: Permutation) -> bool:
    return u.word != v.word and bruhat_leq(u, v)


def weak_leq(u: Permutation, v: Permutation, side: str = "right") -> bool:
    """Weak-order comparison by containment of inversion sets."""
    _check_ranks(u, v)
    if side == "right":
        return u.left_inversions() <= v.left_inversions()
    if side == "left":
        return u.right_inversions() <= v.right_inversions()
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


# ---------------------------------------------------------------------------
# Interval posets


@dataclass(frozen=True)
class IntervalPoset:
    """A finite poset on explicit elements, given by its cover relations.

    ``covers`` holds (lower, upper) index pairs into ``elements``; elements
    are sorted by (length, word) so serialized output is reproducible.
    """

    order_kind: str  # bruhat | right-weak | left-weak | skeleton
    elements: tuple[Permutation, ...]
    covers: frozenset[tuple[int, int]]
    bottom: Permutation
    top: Permutation

    def index(self, u: Permutation) -> int:
        return self._index_map[u]

    @functools.cached_property
    def _index_map(self) -> dict[Permutation, int]:
        return {p: i for i, p in enumerate(self.elements)}

    def up_adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.elements]
        for lo, hi in sorted(self.covers):
            adj[lo].append(hi)
        return adj

    def to_json_dict(self) -> dict:
        return {
            "order_kind": self.order_kind,
            "w": str(self.top),
            "elements": [str(p) for p in self.elements],
            "covers": sorted([lo, hi] for lo, hi in self.covers),
        }


def bruhat_lower_interval(w: Permutation) -> IntervalPoset:
    """All u <= w with their Bruhat cover relations.

    The interval is generated by walking covers downward from w; Bruhat order
    is graded, so every element of [e, w] is reached this way.
    """
    n = w.n
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    if x.word[i - 1] > x.word[j - 1] and swap_length_delta(x.word, i, j) == -1:
                        y = x.swap_positions(i, j)
                        if y not in seen:
                            seen.add(y)
                            nxt.append(y)
        frontier = nxt
    elements = tuple(sorted(seen, key=Permutation.sort_key))
    index = {p: i for i, p in enumerate(elements)}
    covers = set()
    for u in elements:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if u.word[i - 1] < u.word[j - 1] and swap_length_delta(u.word, i, j) == 1:
                    v = u.swap_positions(i, j)
                    if v in index:
                        covers.add((index[u], index[v]))
    return IntervalPoset(
        order_kind="bruhat",
        elements=elements,
        covers=frozenset(covers),
        bottom=identity(n),
        top=w,
    )


def bruhat_max_of(subset: Iterable[Permutation]) -> Permutation:
    """The element of ``subset`` lying Bruhat-above every other one."""
    items = sorted(set(subset), key=Permutation.sort_key)
    if not items:
        raise ValueError("bruhat_max_of needs a nonempty subset")
    candidate = items[-1]
    for x in items:
        if not bruhat_leq(x, candidate):
            raise NoUniqueMax(f"{x} and {candidate} are incomparable")
    return candidate


def lifting_check(v: Permutation, w: Permutation, s: int) -> bool:
    """Check the lifting property at a right descent of w that is not one of v.

    Requires v <= w and s in D_R(w) \\ D_R(v); returns whether both vs <= w
    and v <= ws hold (they always should).
    """
    _check_ranks(v, w)
    if not bruhat_leq(v, w):
        raise PreconditionViolated(f"{v} is not Bruhat-below {w}")
    if s not in w.right_descents() or s in v.right_descents():
        raise PreconditionViolated(f"s_{s} must be a right descent of w only")
    vs = v.swap_positions(s, s + 1)
    ws = w.swap_positions(s, s + 1)
    return bruhat_leq(vs, w) and bruhat_leq(v, ws)


# ---------------------------------------------------------------------------
# Biclosed root sets


@dataclass(frozen=True)
class RootSet:
    """A set of positive roots for rank n, one transposition (a b) per root e_a - e_b."""

    transpositions: frozenset[Transposition]
    n: int

    def __post_init__(self) -> None:
        for t in self.transpositions:
            if t.b > self.n:
                raise ValueError(f"{t} is not a root for rank {self.n}")

    def has(self, a: int, b: int) -> bool:
        return Transposition(a, b) in self.transpositions


def is_biclosed(r: RootSet) -> bool:
    """Closed under root addition, with a complement that is also closed."""
    inside = {(t.a, t.b) for t in r.transpositions}
    for a in range(1, r.n + 1):
        for b in range(a + 1, r.n + 1):
            for c in range(b + 1, r.n + 1):
                ab, bc, ac = (a, b) in inside, (b, c) in inside, (a, c) in inside
                if ab and bc and not ac:
                    return False
                if not ab and not bc and ac:
                    return False
    return True


def perm_from_inversions(r: RootSet) -> Permutation:
    """The unique permutation whose left inversion set is ``r``.

    Values are sorted with b placed before a exactly when (a b) is in the set;
    biclosedness makes that relation a total order.
    """
    if not is_biclosed(r):
        raise NotBiclosed(f"{sorted((t.a, t.b) for t in r.transpositions)} is not biclosed")
    inside = {(t.a, t.b) for t in r.transpositions}

    def before(x: int, y: int) -> int:
        lo, hi = (x, y) if x < y else (y, x)
        inverted = (lo, hi) in inside
        first = hi if inverted else lo
        return -1 if first == x else 1

    word = sorted(range(1, r.n + 1), key=functools.cmp_to_key(before))
    result = Permutation(tuple(word))
    assert result.left_inversions() == r.transpositions
    return result


def root_set(pairs: Iterable[tuple[int, int]], n: int) -> RootSet:
    return RootSet(frozenset(Transposition(a, b) for a, b in pairs), n)


# ---------------------------------------------------------------------------
# Per-rank weak-order cache


class WeakOrderCache:
    """Right-weak-order covers and reachability for one rank, built once.

    After construction everything is read-only, so instances may be shared
    between threads and reused by all queries at the same rank.
    """

    def __init__(self, n: int):
        self.n = n
        self.elements: tuple[Permutation, ...] = tuple(
            sorted(all_permutations(n), key=Permutation.sort_key)
        )
        self.index: dict[Permutation, int] = {p: i for i, p in enumerate(self.elements)}
        up: list[list[int]] = [[] for _ in self.elements]
        down: list[list[int]] = [[] for _ in self.elements]
        for i, u in enumerate(self.elements):
            for s in range(1, n):
                if u.word[s - 1] < u.word[s]:
                    j = self.index[u.swap_positions(s, s + 1)]
                    up[i].append(j)
                    down[j].append(i)
        self.up_covers = tuple(tuple(sorted(a)) for a in up)
        self.down_covers = tuple(tuple(sorted(a)) for a in down)

    @functools.cached_property
    def upper_masks(self) -> tuple[int, ...]:
        """Bitmask per element of everything right-weak-above it (inclusive)."""
        masks = [0] * len(self.elements)
        for i in range(len(self.elements) - 1, -1, -1):
            m = 1 << i
            for j in self.up_covers[i]:
                m |= masks[j]
            masks[i] = m
        return tuple(masks)

    @functools.cached_property
    def lower_masks(self) -> tuple[int, ...]:
        masks = [0] * len(self.elements)
        for i in range(len(self.elements)):
            m = 1 << i
            for j in self.down_covers[i]:
                m |= masks[j]
            masks[i] = m
        return tuple(masks)

    def leq(self, u: Permutation, v: Permutation) -> bool:
        return bool(self.upper_masks[self.index[u]] >> self.index[v] & 1)

    def join_index(self, i: int, j: int) -> int:
        common = self.upper_masks[i] & self.upper_masks[j]
        k = (common & -common).bit_length() - 1
        assert common == self.upper_masks[k], "weak order failed to be a lattice"
        return k

    def meet_index(self, i: int, j: int) -> int:
        common = self.lower_masks[i] & self.lower_masks[j]
        k = common.bit_length() - 1
        assert common == self.lower_masks[k], "weak order failed to be a lattice"
        return k


@functools.lru_cache(maxsize=None)
def weak_cache(n: int) -> WeakOrderCache:
    return WeakOrderCache(n)


def _weak_lattice_op(u: Permutation, v: Permutation, side: str, op: str) -> Permutation:
    _check_ranks(u, v)
    if side == "left":
        flipped = _weak_lattice_op(u.inverse(), v.inverse(), "right", op)
        return flipped.inverse()
    if side != "right":
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    wc = weak_cache(u.n)
    i, j = wc.index[u], wc.index[v]
    k = wc.join_index(i, j) if op == "join" else wc.meet_index(i, j)
    return wc.elements[k]


def weak_join(u: Permutation, v: Permutation, side: str = "right") -> Permutation:
    """Least upper bound in the chosen weak order."""
    return _weak_lattice_op(u, v, side, "join")


def weak_meet(u: Permutation, v: Permutation, side: str = "right") -> Permutation:
    """Greatest lower bound in the chosen weak order."""
    return _weak_lattice_op(u, v, side, "meet")


def weak_lower_set(u: Permutation) -> set[Permutation]:
    """Everything right-weak-below u (the interval [e, u] in right weak order)."""
    wc = weak_cache(u.n)
    mask = wc.lower_masks[wc.index[u]]
    return {wc.elements[i] for i in _bits(mask)}


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# Test-facing oracle: the subword characterization of Bruhat order.


def bruhat_leq_subword(u: Permutation, v: Permutation) -> bool:
    """Slow independent comparison: some subword of a reduced word of v is a
    reduced word of u.  Used only to certify the dominance criterion."""
    _check_ranks(u, v)
    word = v.reduced_word()
    target = u.word

    def search(pos: int, current: Permutation) -> bool:
        if current.word == target:
            return True
        if pos == len(word) or current.length + (len(word) - pos) < u.length:
            return False
        s = word[pos]
        nxt = current.swap_positions(s, s + 1)
        # use the letter only when it raises length, keeping the subword reduced
        if nxt.length > current.length and search(pos + 1, nxt):
            return True
        return search(pos + 1, current)

    return search(0, identity(u.n))
