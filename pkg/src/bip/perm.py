"""Symmetric-group arithmetic on one-line words of 1..n.

A permutation u is stored as the tuple ``(u(1), ..., u(n))``.  All values are
immutable after construction, so they can be shared freely between threads.

Text form: digits may be concatenated on input for n <= 9 ("231") or
comma-separated ("2,3,1"); canonical output is always comma-separated.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DuplicateValue, NotAPermutation, RankMismatch


@dataclass(frozen=True)
class Transposition:
    """The transposition (a b) with 1 <= a < b, kept in canonical a < b form.

    Depending on context it acts on values (left multiplication) or on
    positions (right multiplication); it also stands for the positive root
    e_a - e_b.
    """

    a: int
    b: int

    def __post_init__(self) -> None:
        if not (1 <= self.a < self.b):
            raise ValueError(f"transposition needs 1 <= a < b, got ({self.a}, {self.b})")

    def apply(self, x: int) -> int:
        if x == self.a:
            return self.b
        if x == self.b:
            return self.a
        return x

    def __repr__(self) -> str:
        return f"({self.a} {self.b})"


def transposition(x: int, y: int) -> Transposition:
    """Build a transposition from an unordered pair of distinct values."""
    if x == y:
        raise ValueError("transposition needs two distinct values")
    return Transposition(min(x, y), max(x, y))


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation: ``word[i-1] = u(i)``.

    >>> u = Permutation((2, 3, 1))
    >>> u(1), u.length, str(u)
    (2, 2, '2,3,1')
    """

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.word)
        if n == 0 or set(self.word) != set(range(1, n + 1)):
            raise NotAPermutation(f"not a permutation of 1..{n}: {self.word!r}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """Value at position i (1-indexed)."""
        return self.word[i - 1]

    def position(self, value: int) -> int:
        """Position of ``value``, i.e. the inverse permutation at ``value``."""
        return self._inverse_word[value - 1]

    @functools.cached_property
    def _inverse_word(self) -> tuple[int, ...]:
        inv = [0] * self.n
        for i, v in enumerate(self.word):
            inv[v - 1] = i + 1
        return tuple(inv)

    def inverse(self) -> "Permutation":
        return Permutation(self._inverse_word)

    @functools.cached_property
    def length(self) -> int:
        """Coxeter length: the number of inversions of the word."""
        w = self.word
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition (u * v)(i) = u(v(i))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.n != other.n:
            raise RankMismatch(f"cannot compose ranks {self.n} and {other.n}")
        w = self.word
        return Permutation(tuple(w[v - 1] for v in other.word))

    def swap_values(self, a: int, b: int) -> "Permutation":
        """Left multiplication by (a b): exchange the values a and b."""
        t = transposition(a, b)
        return Permutation(tuple(t.apply(v) for v in self.word))

    def swap_positions(self, i: int, j: int) -> "Permutation":
        """Right multiplication by (i j): exchange positions i and j."""
        if i == j:
            raise ValueError("positions must be distinct")
        w = list(self.word)
        w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
        return Permutation(tuple(w))

    def left_inversions(self) -> frozenset[Transposition]:
        """All (a b) with a < b such that b precedes a in the word."""
        pos = self._inverse_word
        n = self.n
        return frozenset(
            Transposition(a, b)
            for a in range(1, n + 1)
            for b in range(a + 1, n + 1)
            if pos[b - 1] < pos[a - 1]
        )

    def right_inversions(self) -> frozenset[Transposition]:
        """Left inversions of the inverse."""
        return self.inverse().left_inversions()

    def right_descents(self) -> frozenset[int]:
        """Indices i with u(i) > u(i+1), i.e. simple reflections lowering u on the right."""
        w = self.word
        return frozenset(i + 1 for i in range(self.n - 1) if w[i] > w[i + 1])

    def left_descents(self) -> frozenset[int]:
        """Indices i such that i+1 precedes i in the word."""
        pos = self._inverse_word
        return frozenset(i for i in range(1, self.n) if pos[i] < pos[i - 1])

    def ascent_count(self) -> int:
        """Number of right ascents, n - 1 minus the number of right descents."""
        return self.n - 1 - len(self.right_descents())

    def reduced_word(self) -> tuple[int, ...]:
        """One reduced word (indices of simple reflections), by descent stripping.

        Repeatedly removes the smallest right descent, which bubble-sorts the
        word back to the identity in exactly ``length`` steps.

        >>> Permutation((2, 3, 1)).reduced_word()
        (1, 2)
        """
        w = list(self.word)
        stripped: list[int] = []
        i = 0
        while i < len(w) - 1:
            if w[i] > w[i + 1]:
                stripped.append(i + 1)
                w[i], w[i + 1] = w[i + 1], w[i]
                i = max(i - 1, 0)
            else:
                i += 1
        return tuple(reversed(stripped))

    def support(self) -> frozenset[int]:
        """Set of simple-reflection indices occurring in any reduced word."""
        return frozenset(self.reduced_word())

    def vertex_vector(self) -> tuple[int, ...]:
        """The point (u^-1(1), ..., u^-1(n)) realizing u as a polytope vertex."""
        return self._inverse_word

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.word)

    def __repr__(self) -> str:
        return f"Permutation({self.word!r})"

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Deterministic ordering used everywhere: by length, then by word."""
        return (self.length, self.word)


def from_one_line(values: Sequence[int]) -> Permutation:
    """Validate and wrap a one-line word.

    >>> from_one_line([1, 2, 3]).length
    0
    """
    return Permutation(tuple(values))


def parse(text: str) -> Permutation:
    """Parse "231" (digits, n <= 9) or "2,3,1" into a permutation."""
    text = text.strip()
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
    else:
        parts = list(text)
    try:
        values = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise NotAPermutation(f"cannot parse permutation from {text!r}") from exc
    return Permutation(values)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest(n: int) -> Permutation:
    """The order-reversing permutation w0, the maximum in all three orders."""
    return Permutation(tuple(range(n, 0, -1)))


def simple(i: int, n: int) -> Permutation:
    """The adjacent transposition s_i as an element of S_n."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"simple reflection index {i} out of range for rank {n}")
    return identity(n).swap_positions(i, i + 1)


def all_transpositions(n: int) -> list[Transposition]:
    return [Transposition(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic word order (not sorted by length)."""
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def flatten(values: Iterable[int]) -> Permutation:
    """Standardize distinct integers to a permutation of 1..k, preserving order.

    Each entry is replaced by its rank among the entries (smallest -> 1), so
    the relative order, and hence every inversion, is preserved.

    >>> flatten([5, 2, 9]).word
    (2, 1, 3)
    """
    vals = list(values)
    if len(set(vals)) != len(vals):
        raise DuplicateValue(f"flatten needs distinct values, got {vals!r}")
    rank = {v: m for m, v in enumerate(sorted(vals), start=1)}
    return Permutation(tuple(rank[v] for v in vals))


def swap_length_delta(word: Sequence[int], i: int, j: int) -> int:
    """Length change when positions i < j of ``word`` are exchanged.

    The change is +-(1 + 2c) where c counts positions strictly between i and j
    holding a value strictly between word[i-1] and word[j-1].
    """
    a, b = word[i - 1], word[j - 1]
    lo, hi = (a, b) if a < b else (b, a)
    c = sum(1 for k in range(i, j - 1) if lo < word[k] < hi)
    return (1 + 2 * c) if a < b else -(1 + 2 * c)
