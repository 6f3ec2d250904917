"""Lattice structure of the skeleton poset via weak-order quotient classes.

Permutations are equivalent under w when they are linear extensions of the
same move graph; each class holds exactly one element of [e, w] (its weak
minimum ``bot``) and a weak maximum ``top`` whose inversions are the value
pairs (c, d), c < d, with no path c to d.  Joins in the skeleton poset are
computed through the weak order: join(u, v) = bot(top(u) v top(v)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RankMismatch
from .gamma import gamma_tilde, linear_extensions, transitive_reduction
from .order import bruhat_leq, perm_from_inversions, root_set, weak_cache, weak_join
from .perm import Permutation, identity, simple
from .skeleton import wcontext


def bot(w: Permutation, x: Permutation) -> Permutation:
    """The unique u <= w whose move graph x extends (the weak minimum of x's class)."""
    ctx = wcontext(w)
    return ctx.interval[ctx.bot_of(x)]


def top(w: Permutation, x: Permutation) -> Permutation:
    """The weak maximum of x's class under w.

    Its left inversions are exactly the increasing value pairs (c, d) with no
    directed path from c to d in the move graph of bot(w, x).
    """
    ctx = wcontext(w)
    masks = ctx.reach_masks(ctx.bot_of(x))
    pairs = [
        (c, d)
        for c in range(1, w.n + 1)
        for d in range(c + 1, w.n + 1)
        if not masks[c] >> (d - 1) & 1
    ]
    return perm_from_inversions(root_set(pairs, w.n))


@dataclass(frozen=True)
class ThetaClass:
    """One equivalence class under w: its members and weak-order extremes."""

    w: Permutation
    bot: Permutation
    top: Permutation
    members: tuple[Permutation, ...]

    def to_json_dict(self) -> dict:
        return {
            "w": str(self.w),
            "bot": str(self.bot),
            "top": str(self.top),
            "members": [str(p) for p in self.members],
        }


def theta_class(w: Permutation, x: Permutation) -> ThetaClass:
    """The full class of x under w, with its invariants verified on the spot.

    Checks that the members are exactly the weak-order interval [bot, top] and
    that bot and top really are the unique weak extremes.
    """
    ctx = wcontext(w)
    i = ctx.bot_of(x)
    rep = ctx.interval[i]
    members = sorted(
        linear_extensions(transitive_reduction(gamma_tilde(w, rep))),
        key=Permutation.sort_key,
    )
    hi = ctx.tops[i]
    wc = weak_cache(w.n)
    member_mask = 0
    for z in members:
        member_mask |= 1 << wc.index[z]
    interval_mask = wc.upper_masks[wc.index[rep]] & wc.lower_masks[wc.index[hi]]
    assert member_mask == interval_mask, "class is not the weak interval [bot, top]"
    return ThetaClass(w=w, bot=rep, top=hi, members=tuple(members))


def join_w(w: Permutation, u: Permutation, v: Permutation) -> Permutation:
    """Least upper bound of u and v in the skeleton poset of w."""
    ctx = wcontext(w)
    i, j = ctx.require(u), ctx.require(v)
    z = weak_join(ctx.tops[i], ctx.tops[j])
    return ctx.interval[ctx.bot_of(z)]


def meet_w(w: Permutation, u: Permutation, v: Permutation) -> Permutation:
    """Greatest lower bound in the skeleton poset: the join of all common lower bounds.

    No dual of the join formula is available, so the meet is assembled from
    below; the identity makes the common-lower-bound set nonempty.
    """
    ctx = wcontext(w)
    i, j = ctx.require(u), ctx.require(v)
    common = ctx.below_masks[i] & ctx.below_masks[j]
    result = identity(w.n)
    mask = common
    while mask:
        low = mask & -mask
        mask ^= low
        result = join_w(w, result, ctx.interval[low.bit_length() - 1])
    return result


def parabolic_max(w: Permutation, indices: set[int] | frozenset[int]) -> Permutation:
    """Maximum below w inside the subgroup generated by the listed simple reflections.

    Computed as the iterated skeleton-poset join of the generators below w, in
    ascending index order (the join is associative and commutative, so the
    order only fixes the evaluation sequence).
    """
    result = identity(w.n)
    for i in sorted(indices):
        s = simple(i, w.n)
        if bruhat_leq(s, w):
            result = join_w(w, result, s)
    return result


def mixed_meet(u: Permutation, v: Permutation) -> Permutation:
    """The Bruhat-maximal element of (weak interval below u) meet (Bruhat interval below v).

    Equals the class minimum of u under v.
    """
    if u.n != v.n:
        raise RankMismatch(f"rank {u.n} vs rank {v.n}")
    return bot(v, u)
