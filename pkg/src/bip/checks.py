"""Registered verification sweeps over whole symmetric groups.

Each sweep re-proves one structural statement at desk scale against brute
force or the exact-geometry oracle, reporting an instance count and a list of
replayable failure witnesses.  Work is partitioned by the top element w (or
the v of a pair) across a worker pool; per-rank caches are rebuilt inside
each worker process and shared by all of its tasks.  Reports merge in task
order, so verdicts and witness lists are independent of the worker count.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from . import faces as faces_mod
from .errors import CriteriaDisagree, InternalDisagreement, NoUniqueMax, UnknownTheorem
from .gamma import extends
from .hull_oracle import face_lattice, oracle_edges
from .lattice import parabolic_max
from .order import bruhat_max_of, weak_cache
from .perm import Permutation, all_permutations
from .skeleton import wcontext

DEGREE_SWEEP_INTERVAL_CAP = 200  # rank >= 6 degree sweeps skip larger intervals


@dataclass
class SweepReport:
    """Result of one verification sweep; failures empty means pass."""

    theorem: str
    n: int
    seed: int | None
    sample: int | None
    workers: int
    instances: int
    failures: list[dict]
    wall_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def stdout_dict(self) -> dict:
        # wall time and worker count stay off stdout so output is byte-stable
        return {
            "theorem": self.theorem,
            "n": self.n,
            "seed": self.seed,
            "sample": self.sample,
            "instances": self.instances,
            "failures": self.failures,
            "pass": self.passed,
        }

    def json_line(self) -> str:
        return json.dumps(self.stdout_dict(), sort_keys=True, separators=(",", ":"))


def _sorted_words(rank: int) -> list[tuple[int, ...]]:
    perms = sorted(all_permutations(rank), key=Permutation.sort_key)
    return [p.word for p in perms]


def _per_w_tasks(n: int, seed: int, sample: int | None) -> list[tuple]:
    return [(r, word) for r in range(1, n + 1) for word in _sorted_words(r)]


def _sampled_w_tasks(n: int, seed: int, sample: int | None, cutoff: int = 4) -> list[tuple]:
    """Exhaustive through ``cutoff``; seeded samples of w above it."""
    k = sample if sample is not None else 50
    tasks: list[tuple] = []
    for r in range(1, n + 1):
        words = _sorted_words(r)
        if r > cutoff and k < len(words):
            rng = random.Random(f"{seed}:{r}")
            words = sorted(rng.sample(words, k))
        tasks.extend((r, word) for word in words)
    return tasks


def _fail(**kv) -> dict:
    return {k: v for k, v in kv.items()}


# ---------------------------------------------------------------------------
# lattice: unique least upper and greatest lower bounds, join formula


def _run_lattice(task: tuple) -> tuple[int, list[dict]]:
    _, word = task
    w = Permutation(word)
    ctx = wcontext(w)
    size = len(ctx.interval)
    above, below = ctx.above_masks, ctx.below_masks
    wc = weak_cache(w.n)
    top_idx = [wc.index[t] for t in ctx.tops]
    bot_table = ctx.bot_index
    failures: list[dict] = []
    instances = 0
    for i in range(size):
        for j in range(i, size):
            instances += 1
            pair = {"w": str(w), "u": str(ctx.interval[i]), "v": str(ctx.interval[j])}
            ups = above[i] & above[j]
            lub = (ups & -ups).bit_length() - 1
            if above[lub] != ups:
                failures.append(_fail(kind="no-unique-lub", **pair))
                continue
            downs = below[i] & below[j]
            glb = downs.bit_length() - 1
            if below[glb] != downs:
                failures.append(_fail(kind="no-unique-glb", **pair))
                continue
            z = wc.elements[wc.join_index(top_idx[i], top_idx[j])]
            if bot_table[z] != lub:
                failures.append(_fail(kind="join-formula", **pair))
    return instances, failures


# ---------------------------------------------------------------------------
# edges: combinatorial skeleton equals the exact-geometry oracle


def _run_edges(task: tuple) -> tuple[int, list[dict]]:
    _, word = task
    w = Permutation(word)
    ctx = wcontext(w)
    combinatorial = {
        frozenset((ctx.interval[i], ctx.interval[j])) for i, j in ctx.skeleton_pairs
    }
    geometric = {frozenset(pair) for pair in oracle_edges(w)}
    size = len(ctx.interval)
    instances = size * (size - 1) // 2
    failures: list[dict] = []

    def edge_key(edge: frozenset) -> list:
        return sorted(p.word for p in edge)

    for edge in sorted(combinatorial - geometric, key=edge_key):
        failures.append(
            _fail(kind="missing-from-oracle", w=str(w), edge=sorted(str(p) for p in edge))
        )
    for edge in sorted(geometric - combinatorial, key=edge_key):
        failures.append(
            _fail(kind="extra-in-oracle", w=str(w), edge=sorted(str(p) for p in edge))
        )
    for edge in sorted(geometric, key=edge_key):
        u, v = sorted(edge, key=Permutation.sort_key)
        t = v * u.inverse()
        moved = [k for k in range(1, w.n + 1) if t(k) != k]
        if len(moved) != 2:
            failures.append(
                _fail(kind="edge-not-transposition", w=str(w), edge=[str(u), str(v)])
            )
    return instances, failures


# ---------------------------------------------------------------------------
# simple: simplicity at the top vertex localizes simplicity everywhere


def _run_simple(task: tuple) -> tuple[int, list[dict]]:
    _, word = task
    w = Permutation(word)
    ctx = wcontext(w)
    d = faces_mod.dimension(w)
    at_top = ctx.degrees[ctx.index[w]] == d
    everywhere = all(x == d for x in ctx.degrees)
    failures: list[dict] = []
    if ctx.degrees[0] != d:
        failures.append(_fail(kind="not-simple-at-identity", w=str(w)))
    if at_top != everywhere:
        failures.append(
            _fail(kind="localization", w=str(w), at_top=at_top, everywhere=everywhere)
        )
    return 1, failures


# ---------------------------------------------------------------------------
# degree-monotone: vertex degree is order preserving on the skeleton poset


def _run_degree_monotone(task: tuple) -> tuple[int, list[dict]]:
    rank, word = task
    w = Permutation(word)
    ctx = wcontext(w)
    if rank >= 6 and len(ctx.interval) > DEGREE_SWEEP_INTERVAL_CAP:
        return 0, []
    degs = ctx.degrees
    failures: list[dict] = []
    instances = 0
    for i in range(len(ctx.interval)):
        mask = ctx.above_masks[i] & ~(1 << i)
        while mask:
            low = mask & -mask
            j = low.bit_length() - 1
            mask ^= low
            instances += 1
            if degs[i] > degs[j]:
                failures.append(
                    _fail(
                        kind="degree-drop",
                        w=str(w),
                        u=str(ctx.interval[i]),
                        v=str(ctx.interval[j]),
                        du=degs[i],
                        dv=degs[j],
                    )
                )
    return instances, failures


# ---------------------------------------------------------------------------
# smooth: three-way agreement of the smoothness criteria


def _run_smooth(task: tuple) -> tuple[int, list[dict]]:
    _, word = task
    w = Permutation(word)
    try:
        faces_mod.is_smooth_generic_orbit(w)
    except (CriteriaDisagree, InternalDisagreement) as exc:
        return 1, [_fail(kind="criteria-disagree", w=str(w), detail=str(exc))]
    return 1, []


# ---------------------------------------------------------------------------
# hvector: the two h-vector formulas agree


def _run_hvector(task: tuple) -> tuple[int, list[dict]]:
    _, word = task
    w = Permutation(word)
    try:
        faces_mod.h_vector(w)
    except InternalDisagreement as exc:
        return 1, [_fail(kind="h-formulas-differ", w=str(w), detail=str(exc))]
    return 1, []


# ---------------------------------------------------------------------------
# classes: the equivalence classes partition S_n into weak intervals


def _run_classes(task: tuple) -> tuple[int, list[dict]]:
    _, word = task
    w = Permutation(word)
    ctx = wcontext(w)
    wc = weak_cache(w.n)
    failures: list[dict] = []
    seen_mask = 0
    overlap = False
    for i in range(len(ctx.interval)):
        edges = ctx.tilde_edges(i)
        members = [x for x in wc.elements if extends(x, edges)]
        member_mask = 0
        for x in members:
            bit = 1 << wc.index[x]
            if seen_mask & bit:
                overlap = True
            member_mask |= bit
        seen_mask |= member_mask
        rep = ctx.interval[i]
        hi = ctx.tops[i]
        lo_mask = wc.upper_masks[wc.index[rep]] & wc.lower_masks[wc.index[hi]]
        if member_mask != lo_mask:
            failures.append(
                _fail(kind="not-weak-interval", w=str(w), bot=str(rep), top=str(hi))
            )
        for x in members:
            if not (wc.leq(rep, x) and wc.leq(x, hi)):
                failures.append(
                    _fail(kind="extremes", w=str(w), bot=str(rep), top=str(hi), x=str(x))
                )
                break
    if overlap or seen_mask.bit_count() != len(wc.elements):
        failures.append(_fail(kind="not-a-partition", w=str(w)))
    return len(ctx.interval), failures


# ---------------------------------------------------------------------------
# order-preservation: the class maximum is weak-order monotone, and an
# isomorphism between the skeleton poset and its image


def _run_order_preservation(task: tuple) -> tuple[int, list[dict]]:
    _, word = task
    w = Permutation(word)
    ctx = wcontext(w)
    wc = weak_cache(w.n)
    bot_table = ctx.bot_index
    top_index = [wc.index[t] for t in ctx.tops]
    top_of = [top_index[bot_table[x]] for x in wc.elements]
    failures: list[dict] = []
    instances = 0
    for i, x in enumerate(wc.elements):
        for j in wc.up_covers[i]:
            instances += 1
            if not wc.upper_masks[top_of[i]] >> top_of[j] & 1:
                failures.append(
                    _fail(kind="top-not-monotone", w=str(w), x=str(x), y=str(wc.elements[j]))
                )
    size = len(ctx.interval)
    for i in range(size):
        for j in range(size):
            instances += 1
            in_poset = bool(ctx.above_masks[i] >> j & 1)
            in_weak = bool(wc.upper_masks[top_index[i]] >> top_index[j] & 1)
            if in_poset != in_weak:
                failures.append(
                    _fail(
                        kind="not-isomorphism",
                        w=str(w),
                        u=str(ctx.interval[i]),
                        v=str(ctx.interval[j]),
                    )
                )
    return instances, failures


# ---------------------------------------------------------------------------
# parabolic: the subgroup maximum equals the join of its generators


def _run_parabolic(task: tuple) -> tuple[int, list[dict]]:
    rank, word = task
    w = Permutation(word)
    ctx = wcontext(w)
    supports = [u.support() for u in ctx.interval]
    failures: list[dict] = []
    instances = 0
    subsets = 1 << (rank - 1) if rank > 1 else 1
    for bits in range(subsets):
        indices = frozenset(i + 1 for i in range(rank - 1) if bits >> i & 1)
        instances += 1
        joined = parabolic_max(w, indices)
        inside = [ctx.interval[k] for k in range(len(ctx.interval)) if supports[k] <= indices]
        try:
            expected = bruhat_max_of(inside)
        except NoUniqueMax:
            failures.append(_fail(kind="no-unique-max", w=str(w), I=sorted(indices)))
            continue
        if joined != expected:
            failures.append(
                _fail(
                    kind="parabolic-mismatch",
                    w=str(w),
                    I=sorted(indices),
                    join=str(joined),
                    max=str(expected),
                )
            )
    return instances, failures


# ---------------------------------------------------------------------------
# mixed-meet: bot under v equals the Bruhat maximum of the mixed intersection


def _run_mixed_meet(task: tuple) -> tuple[int, list[dict]]:
    _, v_word, u_words = task
    v = Permutation(v_word)
    ctx = wcontext(v)
    wc = weak_cache(v.n)
    interval_set = set(ctx.interval)
    failures: list[dict] = []
    instances = 0
    us = [Permutation(word) for word in u_words] if u_words else list(wc.elements)
    for u in us:
        instances += 1
        claimed = ctx.interval[ctx.bot_of(u)]
        lower = wc.lower_masks[wc.index[u]]
        candidates = [
            wc.elements[k]
            for k in _iter_bits(lower)
            if wc.elements[k] in interval_set
        ]
        try:
            expected = bruhat_max_of(candidates)
        except NoUniqueMax:
            failures.append(_fail(kind="no-unique-max", u=str(u), v=str(v)))
            continue
        if claimed != expected:
            failures.append(
                _fail(kind="mixed-meet-mismatch", u=str(u), v=str(v), got=str(claimed), brute=str(expected))
            )
    return instances, failures


def _iter_bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mixed_meet_tasks(n: int, seed: int, sample: int | None) -> list[tuple]:
    tasks: list[tuple] = []
    for r in range(1, min(n, 4) + 1):
        for v_word in _sorted_words(r):
            tasks.append((r, v_word, None))
    k = sample if sample is not None else 10000
    for r in range(5, n + 1):
        words = _sorted_words(r)
        rng = random.Random(f"{seed}:{r}")
        pairs = [(rng.choice(words), rng.choice(words)) for _ in range(k)]
        by_v: dict[tuple, list[tuple]] = {}
        for u_word, v_word in pairs:
            by_v.setdefault(v_word, []).append(u_word)
        for v_word in sorted(by_v):
            tasks.append((r, v_word, tuple(sorted(by_v[v_word]))))
    return tasks


# ---------------------------------------------------------------------------
# path-transfer: reachability transfers from the upper to the lower end of a cover


def _run_path_transfer(task: tuple) -> tuple[int, list[dict]]:
    _, word = task
    w = Permutation(word)
    ctx = wcontext(w)
    failures: list[dict] = []
    instances = 0
    for lo, hi in ctx.skeleton_pairs:
        u, v = ctx.interval[lo], ctx.interval[hi]
        t = v * u.inverse()
        moved = sorted(k for k in range(1, w.n + 1) if t(k) != k)
        a, b = moved
        ru, rv = ctx.reach_masks(lo), ctx.reach_masks(hi)
        instances += 1
        for c in range(1, w.n + 1):
            for d in range(1, w.n + 1):
                if c == d or not rv[c] >> (d - 1) & 1:
                    continue
                transfers = bool(ru[c] >> (d - 1) & 1)
                if c < d and not transfers:
                    failures.append(
                        _fail(kind="up-pair-lost", w=str(w), u=str(u), v=str(v), c=c, d=d)
                    )
                elif c > d and c != b and d != a and not transfers:
                    failures.append(
                        _fail(kind="down-pair-lost", w=str(w), u=str(u), v=str(v), c=c, d=d)
                    )
    return instances, failures


# ---------------------------------------------------------------------------
# injection: each lower edge maps to exactly one upper edge, injectively


def _run_injection(task: tuple) -> tuple[int, list[dict]]:
    _, word = task
    w = Permutation(word)
    ctx = wcontext(w)
    failures: list[dict] = []
    instances = 0
    for lo, hi in ctx.skeleton_pairs:
        u, v = ctx.interval[lo], ctx.interval[hi]
        t = v * u.inverse()
        swap = {k: t(k) for k in range(1, w.n + 1)}
        upper = {frozenset(e) for e in ctx.reduced_edges(hi)}
        instances += 1
        targets: list[frozenset[int]] = []
        ok = True
        for c, d in sorted(ctx.reduced_edges(lo)):
            candidates = {frozenset((c, d)), frozenset((swap[c], swap[d]))}
            found = [x for x in candidates if x in upper]
            if len(found) != 1:
                failures.append(
                    _fail(
                        kind="phi-not-unique",
                        w=str(w),
                        u=str(u),
                        v=str(v),
                        edge=[c, d],
                        matches=len(found),
                    )
                )
                ok = False
                continue
            targets.append(found[0])
        if ok and len(set(targets)) != len(targets):
            failures.append(_fail(kind="phi-not-injective", w=str(w), u=str(u), v=str(v)))
    return instances, failures


# ---------------------------------------------------------------------------
# faces: oracle face lattice vs f-vector, 2-face shapes, directional simplicity


def _position_label(u: Permutation, v: Permutation) -> tuple[int, int] | None:
    """Positions swapped to get from u to v, or None if not a position swap."""
    moved = [i for i in range(1, u.n + 1) if u(i) != v(i)]
    if len(moved) != 2:
        return None
    i, j = moved
    if u(i) != v(j) or u(j) != v(i):
        return None
    return (i, j)


def _value_label(u: Permutation, v: Permutation) -> tuple[int, int] | None:
    """Values exchanged between u and v, or None if not a single transposition."""
    t = v * u.inverse()
    moved = sorted(k for k in range(1, u.n + 1) if t(k) != k)
    if len(moved) != 2:
        return None
    return (moved[0], moved[1])


def _separated(x: tuple[int, int], y: tuple[int, int]) -> bool:
    x, y = sorted((x, y))
    return x[1] < y[0]


def _classify_two_face(
    values: list[tuple[int, int]], positions: list[tuple[int, int]]
) -> str | None:
    """Match a polygon's cyclic edge labels against the three legal patterns.

    ``values`` are the exchanged value pairs (the reflections joining the
    endpoints); ``positions`` the swapped position pairs.  A square carries
    two commuting reflections on opposite sides, with all four letters
    strictly ordered in the value or the position reading.  A trapezoid
    carries three labels on three letters, the doubled one on opposite legs
    and never the long transposition.  A hexagon permutes three values within
    three positions: value labels repeat with period three while position
    labels alternate between the low and high swap of the position triple.
    """
    k = len(values)
    distinct = sorted(set(values))
    if k == 4 and len(distinct) == 2:
        if values[0] != values[2] or values[1] != values[3]:
            return None
        if len({x for lab in distinct for x in lab}) != 4:
            return None
        if not (_separated(*distinct) or _separated(*sorted(set(positions)))):
            return None
        return "square"
    if k == 4 and len(distinct) == 3:
        doubled = [lab for lab in distinct if values.count(lab) == 2]
        if len(doubled) != 1:
            return None
        letters = sorted({x for lab in distinct for x in lab})
        if len(letters) != 3:
            return None
        a, b, c = letters
        if set(distinct) != {(a, b), (a, c), (b, c)} or doubled[0] == (a, c):
            return None
        idx = [m for m, lab in enumerate(values) if lab == doubled[0]]
        if idx[1] - idx[0] != 2:
            return None  # doubled labels sit on opposite sides
        return "trapezoid"
    if k == 6 and len(distinct) == 3:
        letters = sorted({x for lab in distinct for x in lab})
        if len(letters) != 3:
            return None
        a, b, c = letters
        if set(distinct) != {(a, b), (a, c), (b, c)}:
            return None
        if any(values[m] != values[(m + 3) % 6] for m in range(6)):
            return None
        if any(values[m] == values[(m + 1) % 6] for m in range(6)):
            return None
        pos_distinct = sorted(set(positions))
        pos_letters = sorted({x for lab in pos_distinct for x in lab})
        if len(pos_distinct) != 2 or len(pos_letters) != 3:
            return None
        if set(pos_distinct[0]) & set(pos_distinct[1]) != {pos_letters[1]}:
            return None
        return "hexagon"
    return None


def _run_faces(task: tuple) -> tuple[int, list[dict]]:
    _, word = task
    w = Permutation(word)
    ctx = wcontext(w)
    fl = face_lattice(w)
    failures: list[dict] = []
    instances = 1

    if fl.dim != faces_mod.dimension(w):
        failures.append(
            _fail(kind="dimension", w=str(w), oracle=fl.dim, support=faces_mod.dimension(w))
        )

    fv = faces_mod.f_vector(w)
    counts = [0] * (fl.dim + 1)
    for d, _fs in fl.faces:
        if d >= 0:
            counts[d] += 1
    if tuple(counts) != fv.f:
        failures.append(_fail(kind="f-count", w=str(w), oracle=counts, formula=list(fv.f)))

    edge_faces = fl.faces_of_dim(1)
    for fs in edge_faces:
        if len(fs) != 2:
            failures.append(_fail(kind="edge-face-size", w=str(w)))

    for fs in fl.faces_of_dim(2):
        verts = sorted(fs)
        adj: dict[int, list[int]] = {x: [] for x in verts}
        for ef in edge_faces:
            if ef <= fs:
                x, y = tuple(ef)
                adj[x].append(y)
                adj[y].append(x)
        if any(len(nb) != 2 for nb in adj.values()):
            failures.append(_fail(kind="two-face-not-polygon", w=str(w), face=verts))
            continue
        cycle = [verts[0], adj[verts[0]][0]]
        while len(cycle) < len(verts):
            nxt = [x for x in adj[cycle[-1]] if x != cycle[-2]]
            cycle.append(nxt[0])
        values = []
        positions = []
        for m in range(len(cycle)):
            a, b = ctx.interval[cycle[m]], ctx.interval[cycle[(m + 1) % len(cycle)]]
            vlab, plab = _value_label(a, b), _position_label(a, b)
            if vlab is None or plab is None:
                break
            values.append(vlab)
            positions.append(plab)
        shape = _classify_two_face(values, positions) if len(values) == len(cycle) else None
        if shape is None:
            failures.append(
                _fail(
                    kind="two-face-shape",
                    w=str(w),
                    face=[str(ctx.interval[x]) for x in verts],
                    labels=[list(lab) for lab in values],
                )
            )

    report = faces_mod.directional_simplicity_check(w, max_n=w.n)
    instances += report.instances
    failures.extend(report.failures)
    return instances, failures


# ---------------------------------------------------------------------------
# palindromic: the h-vector is palindromic exactly for simple polytopes


def _run_palindromic(task: tuple) -> tuple[int, list[dict]]:
    _, word = task
    w = Permutation(word)
    try:
        fv = faces_mod.h_vector(w)
    except InternalDisagreement as exc:
        return 1, [_fail(kind="h-formulas-differ", w=str(w), detail=str(exc))]
    palin = faces_mod.is_palindromic(fv)
    simple = faces_mod.is_simple(w, all_vertices=True)
    if palin != simple:
        return 1, [_fail(kind="palindromic-vs-simple", w=str(w), palindromic=palin, simple=simple)]
    return 1, []


# ---------------------------------------------------------------------------
# non-revisiting: geodesic evidence on small instances


def _run_non_revisiting(task: tuple) -> tuple[int, list[dict]]:
    _, word = task
    w = Permutation(word)
    report = faces_mod.non_revisiting_check(w, max_n=w.n)
    return max(report.instances, 1), list(report.failures)


# ---------------------------------------------------------------------------
# registry and driver


@dataclass(frozen=True)
class CheckSpec:
    default_n: int
    tasks: Callable[[int, int, int | None], list[tuple]]
    run: Callable[[tuple], tuple[int, list[dict]]]
    summary: str


CHECKS: dict[str, CheckSpec] = {
    "lattice": CheckSpec(
        5, _per_w_tasks, _run_lattice, "unique bounds in the skeleton poset and the join formula"
    ),
    "edges": CheckSpec(
        5, _sampled_w_tasks, _run_edges, "skeleton edges equal exact-geometry hull edges"
    ),
    "simple": CheckSpec(
        6, _per_w_tasks, _run_simple, "simplicity at the top vertex localizes simplicity"
    ),
    "degree-monotone": CheckSpec(
        6, _per_w_tasks, _run_degree_monotone, "vertex degree is monotone on the skeleton poset"
    ),
    "smooth": CheckSpec(
        6, _per_w_tasks, _run_smooth, "three-way agreement of the smoothness criteria"
    ),
    "hvector": CheckSpec(
        5, _per_w_tasks, _run_hvector, "out-degree and ascent h-vector formulas agree"
    ),
    "classes": CheckSpec(
        5, _per_w_tasks, _run_classes, "classes partition S_n into weak-order intervals"
    ),
    "order-preservation": CheckSpec(
        5, _per_w_tasks, _run_order_preservation, "class maxima are monotone and reflect the poset"
    ),
    "parabolic": CheckSpec(
        5, _per_w_tasks, _run_parabolic, "parabolic maximum equals the join of its generators"
    ),
    "mixed-meet": CheckSpec(
        5, _mixed_meet_tasks, _run_mixed_meet, "class minimum equals the mixed-interval maximum"
    ),
    "path-transfer": CheckSpec(
        5, _per_w_tasks, _run_path_transfer, "reachability transfers down skeleton covers"
    ),
    "injection": CheckSpec(
        5, _per_w_tasks, _run_injection, "edge sets inject along upward skeleton covers"
    ),
    "faces": CheckSpec(
        4, _per_w_tasks, _run_faces, "face lattice counts, 2-face shapes, directional simplicity"
    ),
    "palindromic": CheckSpec(
        5, _per_w_tasks, _run_palindromic, "palindromic h-vector iff simple polytope"
    ),
    "non-revisiting": CheckSpec(
        4, _per_w_tasks, _run_non_revisiting, "geodesics never return to a face they left"
    ),
}


def _execute(task: tuple) -> tuple[int, list[dict]]:
    theorem = task[0]
    return CHECKS[theorem].run(task[1:])


def run_check(
    theorem: str,
    n: int | None = None,
    seed: int = 0,
    workers: int = 1,
    sample: int | None = None,
) -> SweepReport:
    """Run one registered sweep and collect its report.

    Deterministic for a fixed (theorem, n, seed, sample) regardless of the
    worker count: tasks are generated in sorted order and merged in order.
    """
    spec = CHECKS.get(theorem)
    if spec is None:
        raise UnknownTheorem(f"unknown check {theorem!r}; known: {', '.join(sorted(CHECKS))}")
    n = spec.default_n if n is None else n
    started = time.perf_counter()
    tasks = [(theorem, *t) for t in spec.tasks(n, seed, sample)]
    if workers <= 1:
        results = [_execute(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunk = max(1, len(tasks) // (workers * 8))
            results = list(pool.map(_execute, tasks, chunksize=chunk))
    instances = 0
    failures: list[dict] = []
    for count, fails in results:
        instances += count
        failures.extend(fails)
    wall_ms = (time.perf_counter() - started) * 1000.0
    return SweepReport(
        theorem=theorem,
        n=n,
        seed=seed,
        sample=sample,
        workers=workers,
        instances=instances,
        failures=failures,
        wall_ms=wall_ms,
    )
