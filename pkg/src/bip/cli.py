"""Command-line surface: queries, DOT/JSON emission, and verification sweeps.

All structured output is line-delimited JSON (sorted keys, no extra
whitespace) or DOT, written to stdout; timing and diagnostics go to stderr.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks, faces, gamma, hull_oracle, lattice, order, skeleton
from .errors import BipError, UnknownTheorem
from .perm import parse as parse_perm


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bip",
        description="Bruhat interval polytopes: skeletons, lattices, h-vectors, exact certification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("interval", help="lower Bruhat interval of w as a poset")
    p.add_argument("w")

    p = sub.add_parser("skeleton", help="polytope edges and vertex degrees of w")
    p.add_argument("w")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("gamma", help="move graph at u inside the interval of w")
    p.add_argument("w")
    p.add_argument("u")
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("class", help="equivalence class of x under w")
    p.add_argument("w")
    p.add_argument("x")

    p = sub.add_parser("join", help="least upper bound of u and v in the skeleton poset")
    p.add_argument("w")
    p.add_argument("u")
    p.add_argument("v")

    p = sub.add_parser("meet", help="greatest lower bound of u and v in the skeleton poset")
    p.add_argument("w")
    p.add_argument("u")
    p.add_argument("v")

    p = sub.add_parser("mwi", help="maximum below w inside the subgroup generated by I")
    p.add_argument("w")
    p.add_argument("indices", help="comma-separated simple-reflection indices, e.g. 1,3")

    p = sub.add_parser("mixed-meet", help="Bruhat maximum of [e,u]-right-weak intersect [e,v]")
    p.add_argument("u")
    p.add_argument("v")

    p = sub.add_parser("hvector", help="face counts and h-vector of w's polytope")
    p.add_argument("w")

    p = sub.add_parser("smooth", help="smoothness classification of w's generic orbit closure")
    p.add_argument("w")

    p = sub.add_parser("chains", help="number of maximal chains of the skeleton poset")
    p.add_argument("w")

    p = sub.add_parser("oracle", help="exact-geometry ground truth")
    oracle_sub = p.add_subparsers(dest="oracle_command", required=True)
    q = oracle_sub.add_parser("edges", help="hull edges by midpoint exclusion")
    q.add_argument("w")
    q = oracle_sub.add_parser("faces", help="full face lattice (dimension <= 3)")
    q.add_argument("w")

    p = sub.add_parser("check", help="run a registered verification sweep")
    p.add_argument("theorem", help=", ".join(sorted(checks.CHECKS)))
    p.add_argument("--n", type=int, default=None, help="largest rank to sweep")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--sample", type=int, default=None, help="sample size for randomized ranks")

    return parser


def run(argv: list[str]) -> int:
    """Dispatch one command line; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except UnknownTheorem as exc:
        print(f"bip: {exc}", file=sys.stderr)
        return 2
    except BipError as exc:
        print(f"bip: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    cmd = args.command

    if cmd == "interval":
        _emit(order.bruhat_lower_interval(parse_perm(args.w)).to_json_dict())
        return 0

    if cmd == "skeleton":
        w = parse_perm(args.w)
        graph = skeleton.polytope_edges(w)
        if args.dot:
            poset = skeleton.skeleton_poset(w)
            lines = [f'digraph "P_{w}" {{']
            for p in poset.elements:
                lines.append(f'  "{p}";')
            for lo, hi in sorted(poset.covers):
                lines.append(f'  "{poset.elements[lo]}" -> "{poset.elements[hi]}";')
            lines.append("}")
            print("\n".join(lines))
        else:
            _emit(graph.to_json_dict())
        return 0

    if cmd == "gamma":
        w, u = parse_perm(args.w), parse_perm(args.u)
        g = gamma.gamma_tilde(w, u)
        if args.reduced:
            g = gamma.transitive_reduction(g)
        if args.dot:
            print(gamma.to_dot(g, f"Gamma_{w}({u})"), end="")
        else:
            _emit(
                {
                    "w": str(w),
                    "u": str(u),
                    "n": g.n,
                    "reduced": g.reduced,
                    "edges": [[a, b] for a, b in g.sorted_edges()],
                }
            )
        return 0

    if cmd == "class":
        w, x = parse_perm(args.w), parse_perm(args.x)
        _emit(lattice.theta_class(w, x).to_json_dict())
        return 0

    if cmd in ("join", "meet"):
        w, u, v = parse_perm(args.w), parse_perm(args.u), parse_perm(args.v)
        op = lattice.join_w if cmd == "join" else lattice.meet_w
        _emit({"w": str(w), "u": str(u), "v": str(v), cmd: str(op(w, u, v))})
        return 0

    if cmd == "mwi":
        w = parse_perm(args.w)
        indices = {int(part) for part in args.indices.split(",") if part.strip()}
        _emit(
            {
                "w": str(w),
                "I": sorted(indices),
                "max": str(lattice.parabolic_max(w, indices)),
            }
        )
        return 0

    if cmd == "mixed-meet":
        u, v = parse_perm(args.u), parse_perm(args.v)
        _emit({"u": str(u), "v": str(v), "mixed_meet": str(lattice.mixed_meet(u, v))})
        return 0

    if cmd in ("hvector", "smooth"):
        _emit(faces.face_record(parse_perm(args.w)))
        return 0

    if cmd == "chains":
        w = parse_perm(args.w)
        _emit({"w": str(w), "maximal_chains": skeleton.maximal_chain_count(w)})
        return 0

    if cmd == "oracle":
        w = parse_perm(args.w)
        if args.oracle_command == "edges":
            edges = sorted(
                sorted([str(u), str(v)]) for u, v in hull_oracle.oracle_edges(w)
            )
            _emit({"w": str(w), "edges": edges})
        else:
            _emit(hull_oracle.face_lattice(w).to_json_dict())
        return 0

    if cmd == "check":
        report = checks.run_check(
            args.theorem, n=args.n, seed=args.seed, workers=args.workers, sample=args.sample
        )
        print(report.json_line())
        print(
            f"bip check {report.theorem}: n={report.n} instances={report.instances} "
            f"failures={len(report.failures)} wall={report.wall_ms:.0f}ms "
            f"workers={report.workers}",
            file=sys.stderr,
        )
        return 0 if report.passed else 1

    raise AssertionError(f"unhandled command {cmd!r}")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
