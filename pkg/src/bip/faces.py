"""Face counts, simplicity, and the smoothness classification.

The h-vector is computed twice, from two formulas that must agree: entry k
counts interval elements with exactly k upward skeleton edges, and also the
class maxima with exactly k right ascents.  The polytope dimension equals the
size of the support of w (certified against exact affine rank by the tests).

Smoothness of the generic torus orbit closure is decided three independent
ways at once: simplicity at the top vertex, the reduced move graph of w being
a spanning forest (one tree per fixed block, so exactly ``dimension`` edges
and no undirected cycle), and palindromicity of the h-vector.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .errors import CriteriaDisagree, InternalDisagreement, OracleUnavailable
from .gamma import undirected_profile, gamma as reduced_gamma
from .hull_oracle import face_lattice
from .perm import Permutation
from .skeleton import degree as vertex_degree
from .skeleton import wcontext


@dataclass(frozen=True)
class FaceVector:
    """Paired face-count and h-vector record for one polytope."""

    dim: int
    f: tuple[int, ...]
    h: tuple[int, ...]


def dimension(w: Permutation) -> int:
    """Dimension of the polytope: the number of distinct generators in w."""
    return len(w.support())


def h_vector(w: Permutation) -> FaceVector:
    """The h-vector by out-degree counts, cross-checked against ascent counts.

    Raises InternalDisagreement when the two independent formulas differ,
    which would signal an implementation bug.
    """
    ctx = wcontext(w)
    d = dimension(w)
    by_outdeg = [0] * (d + 1)
    by_ascent = [0] * (d + 1)
    for i in range(len(ctx.interval)):
        k = len(ctx.up_adj[i])
        if k > d:
            raise InternalDisagreement(f"out-degree {k} exceeds dimension {d} under {w}")
        by_outdeg[k] += 1
        a = ctx.tops[i].ascent_count()
        if a > d:
            raise InternalDisagreement(f"ascent count {a} exceeds dimension {d} under {w}")
        by_ascent[a] += 1
    if by_outdeg != by_ascent:
        raise InternalDisagreement(
            f"out-degree histogram {by_outdeg} != ascent histogram {by_ascent} under {w}"
        )
    h = tuple(by_outdeg)
    f = tuple(sum(h[k] * comb(k, i) for k in range(d + 1)) for i in range(d + 1))
    return FaceVector(dim=d, f=f, h=h)


def f_vector(w: Permutation) -> FaceVector:
    """Face counts by dimension, derived from the h-vector by binomial expansion."""
    return h_vector(w)


def is_palindromic(h) -> bool:
    """Does the sequence read the same in both directions?"""
    seq = list(h.h) if isinstance(h, FaceVector) else list(h)
    return seq == seq[::-1]


def is_simple_at(w: Permutation, u: Permutation) -> bool:
    """Does the vertex realizing u have exactly ``dimension`` incident edges?"""
    return vertex_degree(w, u) == dimension(w)


def is_simple(w: Permutation, all_vertices: bool = False) -> bool:
    """Simplicity of the polytope, decided at the top vertex.

    ``all_vertices=True`` scans the entire interval instead, for verification
    sweeps that compare the two modes.
    """
    if all_vertices:
        ctx = wcontext(w)
        d = dimension(w)
        return all(x == d for x in ctx.degrees)
    return is_simple_at(w, w)


def top_graph_is_spanning_forest(w: Permutation) -> bool:
    """Tree test at the top: the reduced move graph of w has no undirected
    cycle and exactly ``dimension`` edges (a spanning tree of each block)."""
    g = reduced_gamma(w, w)
    _, has_cycle = undirected_profile(g)
    return not has_cycle and len(g.edges) == dimension(w)


@dataclass(frozen=True)
class SmoothnessVerdict:
    """Three independently computed smoothness criteria plus their shared verdict."""

    w: Permutation
    smooth: bool
    simple_at_w: bool
    tree: bool
    palindromic: bool


def is_smooth_generic_orbit(w: Permutation) -> SmoothnessVerdict:
    """Classify smoothness of the generic torus orbit closure three ways.

    The criteria must agree; a disagreement raises CriteriaDisagree and would
    mean a bug, not a property of w.
    """
    at_w = is_simple_at(w, w)
    tree = top_graph_is_spanning_forest(w)
    palin = is_palindromic(h_vector(w))
    if not (at_w == tree == palin):
        raise CriteriaDisagree(
            f"w={w}: simple-at-top={at_w}, spanning-forest={tree}, palindromic={palin}"
        )
    return SmoothnessVerdict(w=w, smooth=at_w, simple_at_w=at_w, tree=tree, palindromic=palin)


def face_record(w: Permutation) -> dict:
    """The JSON record shared by the hvector and smooth commands."""
    fv = h_vector(w)
    verdict = is_smooth_generic_orbit(w)
    return {
        "w": str(w),
        "dim": fv.dim,
        "f": list(fv.f),
        "h": list(fv.h),
        "simple": is_simple(w),
        "smooth": {
            "at_w": verdict.simple_at_w,
            "tree": verdict.tree,
            "palindromic": verdict.palindromic,
        },
    }


@dataclass(frozen=True)
class ProbeReport:
    """Outcome of one geometric probe: instance count and failure witnesses."""

    w: Permutation
    instances: int
    failures: tuple[dict, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def _cost_dot(vec: tuple[int, ...]) -> int:
    n = len(vec)
    return sum((n - k) * vec[k] for k in range(n))


def directional_simplicity_check(w: Permutation, max_n: int = 4) -> ProbeReport:
    """Certify that every set of upward edges at a vertex spans an oracle face.

    Upward means increasing inner product with the cost vector (n, n-1, .., 1),
    whose orientation must (and is checked to) match increasing length.
    """
    if w.n > max_n:
        raise OracleUnavailable(f"rank {w.n} exceeds the face-lattice bound {max_n}")
    fl = face_lattice(w)
    nverts = len(fl.vertices)
    dots = [_cost_dot(v.vertex_vector()) for v in fl.vertices]
    lengths = [v.length for v in fl.vertices]
    edge_faces = fl.faces_of_dim(1)
    failures: list[dict] = []
    instances = 0
    face_sets = [fs for _, fs in fl.faces]
    for i in range(nverts):
        up: list[frozenset[int]] = []
        for fs in edge_faces:
            if i not in fs:
                continue
            (j,) = fs - {i}
            if (dots[j] > dots[i]) != (lengths[j] > lengths[i]):
                failures.append(
                    {"w": str(w), "u": str(fl.vertices[i]), "kind": "orientation"}
                )
            if dots[j] > dots[i]:
                up.append(fs)
        for r in range(len(up) + 1):
            for combo in itertools.combinations(up, r):
                instances += 1
                wanted = set(combo)
                hit = any(
                    i in face_set
                    and {fs for fs in edge_faces if i in fs and fs <= face_set} == wanted
                    for face_set in face_sets
                )
                if not hit:
                    failures.append(
                        {
                            "w": str(w),
                            "u": str(fl.vertices[i]),
                            "kind": "no-spanning-face",
                            "edges": sorted(sorted(fs) for fs in wanted),
                        }
                    )
    return ProbeReport(w=w, instances=instances, failures=tuple(failures))


def non_revisiting_check(w: Permutation, max_n: int = 4) -> ProbeReport:
    """Walk every skeleton geodesic against every proper oracle face, flagging
    any path that leaves a face and later re-enters it."""
    if w.n > max_n:
        raise OracleUnavailable(f"rank {w.n} exceeds the face-lattice bound {max_n}")
    fl = face_lattice(w)
    ctx = wcontext(w)
    nverts = len(ctx.interval)
    adj: list[list[int]] = [[] for _ in range(nverts)]
    for lo, hi in ctx.skeleton_pairs:
        adj[lo].append(hi)
        adj[hi].append(lo)

    def distances(src: int) -> list[int]:
        dist = [-1] * nverts
        dist[src] = 0
        queue = [src]
        while queue:
            nxt = []
            for x in queue:
                for y in adj[x]:
                    if dist[y] < 0:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            queue = nxt
        return dist

    proper = [fs for d, fs in fl.faces if 0 <= d < fl.dim]
    failures: list[dict] = []
    instances = 0
    for s in range(nverts):
        dist = distances(s)
        for t in range(nverts):
            if t == s:
                continue

            def geodesics(x: int, path: tuple[int, ...]):
                # every dist-increasing path that reaches t is a shortest path
                if x == t:
                    yield path
                    return
                for y in adj[x]:
                    if dist[y] == dist[x] + 1 and dist[y] <= dist[t]:
                        yield from geodesics(y, path + (y,))

            for path in geodesics(s, (s,)):
                for fs in proper:
                    instances += 1
                    state = 0  # 0 never entered, 1 inside, 2 left
                    bad = False
                    for x in path:
                        inside = x in fs
                        if inside and state == 2:
                            bad = True
                            break
                        if inside:
                            state = 1
                        elif state == 1:
                            state = 2
                    if bad:
                        failures.append(
                            {
                                "w": str(w),
                                "kind": "revisit",
                                "path": [str(ctx.interval[x]) for x in path],
                                "face": sorted(str(ctx.interval[x]) for x in fs),
                            }
                        )
    return ProbeReport(w=w, instances=instances, failures=tuple(failures))
