import itertools

import pytest
from hypothesis import given, strategies as st

from bip.errors import DuplicateValue, NotAPermutation, RankMismatch
from bip.perm import (
    Permutation,
    Transposition,
    all_permutations,
    flatten,
    from_one_line,
    identity,
    longest,
    parse,
    simple,
    swap_length_delta,
    transposition,
)


def test_from_one_line_identity():
    assert from_one_line([1, 2, 3]).length == 0


def test_from_one_line_two_inversions():
    assert from_one_line([2, 3, 1]).length == 2


def test_from_one_line_rejects_repeats():
    with pytest.raises(NotAPermutation):
        from_one_line([1, 2, 2])
    with pytest.raises(NotAPermutation):
        from_one_line([0, 1, 2])


def test_length_examples():
    assert identity(5).length == 0
    assert longest(4).length == 6
    assert parse("231").length == 2


def test_inverse_and_compose():
    u = parse("231")
    assert u.inverse() == parse("312")
    s1, s2 = simple(1, 3), simple(2, 3)
    assert s1 * s2 == parse("231")
    assert u * u.inverse() == identity(3)


def test_compose_rank_mismatch():
    with pytest.raises(RankMismatch):
        identity(3) * identity(4)


def test_value_and_position_swaps():
    assert identity(4).swap_values(1, 2) == parse("2134")
    assert parse("231").swap_positions(1, 3) == parse("132")
    assert parse("231").swap_values(1, 3) == parse("213")


def test_inversion_sets():
    assert identity(3).left_inversions() == frozenset()
    assert parse("231").left_inversions() == {Transposition(1, 2), Transposition(1, 3)}
    n = 4
    assert longest(n).left_inversions() == {
        Transposition(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)
    }


def test_descents_and_ascents():
    assert identity(4).ascent_count() == 3
    assert longest(4).ascent_count() == 0
    u = parse("231")
    assert u.right_descents() == {2}
    assert u.ascent_count() == 1
    assert u.left_descents() == {1}


def test_reduced_word_examples():
    assert identity(3).reduced_word() == ()
    assert parse("231").reduced_word() == (1, 2)
    assert parse("231").support() == {1, 2}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reduced_word_multiplies_back(n):
    for u in all_permutations(n):
        word = u.reduced_word()
        assert len(word) == u.length
        acc = identity(n)
        for i in word:
            acc = acc * simple(i, n)
        assert acc == u


def test_flatten_examples():
    assert flatten([5, 2, 9]) == parse("213")
    assert flatten([2, 1, 3]) == parse("213")
    assert flatten([7]) == Permutation((1,))
    with pytest.raises(DuplicateValue):
        flatten([3, 3])


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=8, unique=True))
def test_flatten_idempotent(values):
    once = flatten(values)
    assert flatten(once.word) == once


def test_vertex_vector_examples():
    assert identity(4).vertex_vector() == (1, 2, 3, 4)
    assert parse("231").vertex_vector() == (3, 1, 2)
    assert parse("213").vertex_vector() == (2, 1, 3)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_vertex_vector_injective_with_fixed_sum(n):
    seen = set()
    for u in all_permutations(n):
        vec = u.vertex_vector()
        assert sum(vec) == n * (n + 1) // 2
        seen.add(vec)
    import math

    assert len(seen) == math.factorial(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_inversion_count_matches_length(n):
    for u in all_permutations(n):
        assert len(u.left_inversions()) == u.length
        assert len(u.right_inversions()) == u.length


@pytest.mark.parametrize("n", [3, 4])
def test_simple_multiplication_changes_length_by_one(n):
    for u in all_permutations(n):
        for i in range(1, n):
            v = u.swap_positions(i, i + 1)
            assert abs(v.length - u.length) == 1
            assert (v.length == u.length - 1) == (i in u.right_descents())


def test_swap_length_delta_matches_recount():
    for u in all_permutations(4):
        for i, j in itertools.combinations(range(1, 5), 2):
            v = u.swap_positions(i, j)
            assert swap_length_delta(u.word, i, j) == v.length - u.length


def test_parse_both_text_forms():
    assert parse("231") == parse("2,3,1")
    assert parse(" 2 , 3 , 1 ") == from_one_line([2, 3, 1])
    assert str(parse("231")) == "2,3,1"
    with pytest.raises(NotAPermutation):
        parse("2x1")


def test_parse_comma_form_required_past_rank_nine():
    word = tuple(range(1, 11))
    assert parse(",".join(map(str, word))).word == word


def test_transposition_canonical_form():
    assert transposition(5, 2) == Transposition(2, 5)
    with pytest.raises(ValueError):
        Transposition(4, 2)
    with pytest.raises(ValueError):
        transposition(3, 3)


@given(st.permutations(list(range(1, 7))))
def test_double_inverse_roundtrip(word):
    u = Permutation(tuple(word))
    assert u.inverse().inverse() == u
    assert u.inverse().length == u.length
