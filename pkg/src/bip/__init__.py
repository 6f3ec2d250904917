"""Combinatorics of Bruhat interval polytopes with exact-geometry certification."""

from . import checks, cli, errors, faces, gamma, hull_oracle, lattice, order, perm, skeleton
from .perm import Permutation, Transposition, from_one_line, parse

__all__ = [
    "Permutation",
    "Transposition",
    "from_one_line",
    "parse",
    "checks",
    "cli",
    "errors",
    "faces",
    "gamma",
    "hull_oracle",
    "lattice",
    "order",
    "perm",
    "skeleton",
]
