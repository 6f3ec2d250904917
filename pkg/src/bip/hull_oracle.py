"""Exact geometric ground truth for the polytopes, independent of the graph theory.

Vertices are realized as integer vectors; every decision reduces to exact
feasibility of a linear system, solved by a phase-one simplex with Bland's
rule.  Rows are kept as integers throughout (rescaling a row by a positive
integer changes nothing the simplex looks at), so no floating point appears
anywhere.

The edge test: a segment between two vertices u, v is an edge exactly when
its midpoint lies outside the hull of the vertices other than u AND outside
the hull of the vertices other than v.  (Testing only the hull with both
endpoints removed is not sound: the midpoint of a trapezoid's diagonal avoids
the hull of the two remaining vertices without the diagonal being an edge.)
Face lattices are enumerated by brute-force supporting hyperplanes inside the
affine hull and are limited to polytope dimension <= 3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatch, DimensionTooLarge
from .perm import Permutation


@dataclass(frozen=True)
class RationalPoint:
    """A point with exact rational coordinates."""

    coords: tuple[Fraction, ...]

    @staticmethod
    def of(values: Iterable) -> "RationalPoint":
        return RationalPoint(tuple(Fraction(v) for v in values))

    @property
    def dim(self) -> int:
        return len(self.coords)


def _feasible_combination(rows: list[list[int]]) -> bool:
    """Phase-one simplex: does the system (row coefficients | rhs) admit a
    nonnegative solution?  Each row is one equality; the last entry is the rhs.

    Integer pivoting: the stored tableau is the true rational tableau times
    the last pivot element, so every entry is a minor of the input matrix and
    the division below is exact.  Signs and ratio comparisons are unaffected
    by the shared positive scale.
    """
    m = len(rows)
    cols = len(rows[0]) - 1
    tableau = [list(r) for r in rows]
    for row in tableau:
        if row[-1] < 0:
            for k in range(len(row)):
                row[k] = -row[k]
    cost = [sum(tableau[r][j] for r in range(m)) for j in range(cols + 1)]
    basis = [cols + r for r in range(m)]  # artificial labels sit past the real columns
    denom = 1

    while True:
        if cost[-1] == 0:
            return True
        enter = -1
        for j in range(cols):
            if cost[j] > 0:
                enter = j  # Bland: smallest improving column
                break
        if enter < 0:
            return cost[-1] == 0
        pivot_row = -1
        for r in range(m):
            a = tableau[r][enter]
            if a <= 0:
                continue
            if pivot_row < 0:
                pivot_row = r
                continue
            lhs = tableau[r][-1] * tableau[pivot_row][enter]
            rhs = tableau[pivot_row][-1] * a
            if lhs < rhs or (lhs == rhs and basis[r] < basis[pivot_row]):
                pivot_row = r
        assert pivot_row >= 0, "phase-one objective cannot be unbounded"
        p = tableau[pivot_row][enter]
        prow = tableau[pivot_row]
        for r in range(m):
            if r == pivot_row:
                continue
            f = tableau[r][enter]
            row = tableau[r]
            if f:
                tableau[r] = [(p * x - f * y) // denom for x, y in zip(row, prow)]
            elif p != denom:
                tableau[r] = [p * x // denom for x in row]
        f = cost[enter]
        if f:
            cost = [(p * x - f * y) // denom for x, y in zip(cost, prow)]
        elif p != denom:
            cost = [p * x // denom for x in cost]
        denom = p
        basis[pivot_row] = enter


def _clear_denominators(rows: list[list[Fraction]]) -> list[list[int]]:
    out = []
    for row in rows:
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        out.append([int(x * lcm) for x in row])
    return out


def in_hull(p: RationalPoint, generators: Sequence[RationalPoint]) -> bool:
    """Exact test: is p a convex combination of the generators?"""
    if not generators:
        raise ValueError("in_hull needs at least one generator")
    n = p.dim
    for g in generators:
        if g.dim != n:
            raise DimensionMismatch(f"point of dim {g.dim} among dim-{n} generators")
    rows: list[list[Fraction]] = []
    for k in range(n):
        rows.append([g.coords[k] for g in generators] + [p.coords[k]])
    rows.append([Fraction(1)] * len(generators) + [Fraction(1)])
    return _feasible_combination(_clear_denominators(rows))


def _midpoint_in_hull(target2: Sequence[int], gens: Sequence[Sequence[int]]) -> bool:
    """Is target2/2 in the hull of the integer generators?

    Works on doubled data so everything stays integral; the redundant final
    coordinate row (all points share the same coordinate sum) is dropped.
    """
    n = len(target2)
    rows = []
    for k in range(n - 1):
        rows.append([2 * g[k] for g in gens] + [target2[k]])
    rows.append([1] * len(gens) + [1])
    return _feasible_combination(rows)


def oracle_edges(w: Permutation) -> frozenset[tuple[Permutation, Permutation]]:
    """All polytope edges of w by midpoint exclusion, as (lower, upper) pairs.

    The pair {u, v} is an edge iff no convex representation of the midpoint
    can avoid u and none can avoid v; each side is one exact feasibility
    solve.  Every pair of distinct vertices is tested; nothing combinatorial
    about the interval is consulted beyond its vertex set.
    """
    from .skeleton import wcontext

    interval = wcontext(w).interval
    vectors = [u.vertex_vector() for u in interval]
    edges = set()
    for i, j in itertools.combinations(range(len(interval)), 2):
        target2 = [vectors[i][k] + vectors[j][k] for k in range(w.n)]
        without_i = [vectors[k] for k in range(len(interval)) if k != i]
        if _midpoint_in_hull(target2, without_i):
            continue
        without_j = [vectors[k] for k in range(len(interval)) if k != j]
        if _midpoint_in_hull(target2, without_j):
            continue
        edges.add((interval[i], interval[j]))
    return frozenset(edges)


# ---------------------------------------------------------------------------
# Exact linear algebra helpers


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull: -1 for no points, 0 for a single point."""
    if not points:
        return -1
    base = points[0]
    diffs = [[Fraction(p[k] - base[k]) for k in range(len(base))] for p in points[1:]]
    return len(_row_reduce(diffs)[0])


def _row_reduce(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Gaussian elimination; returns the nonzero reduced rows and pivot columns."""
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    reduced: list[list[Fraction]] = []
    cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    reduced = rows[:r]
    return reduced, pivots


def _cross3(u: Sequence[int], v: Sequence[int]) -> tuple[int, int, int]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _hyperplane_normal(points: list[tuple[int, ...]]) -> tuple[int, ...] | None:
    """Normal of the hyperplane through d affinely independent points in Z^d.

    Returns None when the points are affinely dependent.
    """
    d = len(points[0])
    if d == 1:
        return (1,)
    dirs = [tuple(q[k] - points[0][k] for k in range(d)) for q in points[1:]]
    if d == 2:
        (dx, dy) = dirs[0]
        normal = (-dy, dx)
    else:
        normal = _cross3(dirs[0], dirs[1])
    if all(x == 0 for x in normal):
        return None
    return normal


# ---------------------------------------------------------------------------
# Face lattices for polytopes of dimension <= 3


@dataclass(frozen=True)
class FaceLattice:
    """All faces of one polytope, each as a set of vertex indices.

    ``faces`` is graded by dimension (the empty face has dimension -1) and is
    closed under intersection; ``incidences`` pairs each face with the faces
    covering it one dimension up.
    """

    dim: int
    vertices: tuple[Permutation, ...]
    faces: tuple[tuple[int, frozenset[int]], ...]
    incidences: tuple[tuple[int, int], ...]

    def faces_of_dim(self, k: int) -> list[frozenset[int]]:
        return [fs for d, fs in self.faces if d == k]

    def to_json_dict(self) -> dict:
        return {
            "w": str(self.vertices[-1]) if self.vertices else None,
            "dim": self.dim,
            "faces": [
                {"dim": d, "vertices": [str(self.vertices[i]) for i in sorted(fs)]}
                for d, fs in self.faces
            ],
        }


def _face_key(fs: frozenset[int]) -> tuple:
    return (len(fs), tuple(sorted(fs)))


def face_lattice(w: Permutation) -> FaceLattice:
    """Every face of w's polytope by supporting-hyperplane enumeration.

    Only implemented for polytopes of dimension <= 3 (every rank-4 instance
    qualifies); larger inputs raise DimensionTooLarge.
    """
    from .skeleton import wcontext

    interval = wcontext(w).interval
    vectors = [u.vertex_vector() for u in interval]
    nverts = len(vectors)

    base = vectors[0]
    diffs = [[Fraction(v[k] - base[k]) for k in range(w.n)] for v in vectors[1:]]
    _, pivots = _row_reduce(diffs)
    d = len(pivots)
    if d > 3:
        raise DimensionTooLarge(f"polytope dimension {d} exceeds the oracle bound of 3")

    # project onto the pivot coordinates: linear and injective on the affine hull
    proj = [tuple(v[c] for c in pivots) for v in vectors]

    facets: set[frozenset[int]] = set()
    if d > 0:
        for combo in itertools.combinations(range(nverts), d):
            normal = _hyperplane_normal([proj[i] for i in combo])
            if normal is None:
                continue
            level = sum(a * x for a, x in zip(normal, proj[combo[0]]))
            side = 0
            on_plane = []
            supporting = True
            for i in range(nverts):
                s = sum(a * x for a, x in zip(normal, proj[i])) - level
                if s == 0:
                    on_plane.append(i)
                elif side == 0:
                    side = 1 if s > 0 else -1
                elif (s > 0) != (side > 0):
                    supporting = False
                    break
            if supporting and side != 0:
                facets.add(frozenset(on_plane))

    # every proper face is an intersection of facets
    proper: set[frozenset[int]] = set(facets)
    frontier = set(facets)
    while frontier:
        new: set[frozenset[int]] = set()
        for f in frontier:
            for g in facets:
                h = f & g
                if h and h not in proper:
                    new.add(h)
        proper |= new
        frontier = new

    all_faces: set[frozenset[int]] = {frozenset(range(nverts)), frozenset()} | proper
    graded = []
    for fs in all_faces:
        pts = [proj[i] for i in sorted(fs)]
        graded.append((affine_rank(pts), fs))
    graded.sort(key=lambda item: (item[0], _face_key(item[1])))

    incidences = []
    for i, (di, fi) in enumerate(graded):
        for j, (dj, fj) in enumerate(graded):
            if dj == di + 1 and fi < fj:
                incidences.append((i, j))

    return FaceLattice(
        dim=d,
        vertices=interval,
        faces=tuple(graded),
        incidences=tuple(incidences),
    )
