import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from bip.errors import NoUniqueMax, NotBiclosed, PreconditionViolated, RankMismatch
from bip.order import (
    IntervalPoset,
    bruhat_leq,
    bruhat_leq_subword,
    bruhat_lower_interval,
    bruhat_max_of,
    is_biclosed,
    lifting_check,
    perm_from_inversions,
    root_set,
    weak_cache,
    weak_join,
    weak_leq,
    weak_lower_set,
    weak_meet,
)
from bip.perm import Permutation, all_permutations, flatten, identity, longest, parse, simple

from conftest import perms_sorted


def test_bruhat_examples():
    w = parse("231")
    for v in all_permutations(3):
        assert bruhat_leq(identity(3), v)
    assert not bruhat_leq(parse("312"), w)
    assert not bruhat_leq(w, parse("312"))
    assert bruhat_leq(parse("213"), w)


def test_bruhat_rank_mismatch():
    with pytest.raises(RankMismatch):
        bruhat_leq(identity(3), identity(4))


def test_bruhat_agrees_with_subword_property_on_s4(s4):
    for u in s4:
        for v in s4:
            assert bruhat_leq(u, v) == bruhat_leq_subword(u, v), (u, v)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_weak_implies_bruhat_implies_length(n):
    perms = perms_sorted(n)
    for u in perms:
        for v in perms:
            if weak_leq(u, v, "right"):
                assert bruhat_leq(u, v)
            if bruhat_leq(u, v):
                assert u.length <= v.length


def test_weak_leq_examples():
    w = parse("231")
    assert weak_leq(identity(3), w, "right")
    assert weak_leq(parse("213"), w, "right")
    assert not weak_leq(parse("132"), w, "right")
    with pytest.raises(ValueError):
        weak_leq(w, w, "sideways")


def test_lower_interval_examples():
    assert bruhat_lower_interval(identity(3)).elements == (identity(3),)
    poset = bruhat_lower_interval(parse("231"))
    assert [str(p) for p in poset.elements] == ["1,2,3", "1,3,2", "2,1,3", "2,3,1"]
    assert sorted(poset.covers) == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert len(bruhat_lower_interval(longest(3)).elements) == 6


@pytest.mark.parametrize("n", [2, 3, 4])
def test_lower_interval_is_downward_closure(n):
    for w in all_permutations(n):
        got = set(bruhat_lower_interval(w).elements)
        want = {u for u in all_permutations(n) if bruhat_leq(u, w)}
        assert got == want


def test_interval_covers_are_length_one_transposition_steps():
    poset = bruhat_lower_interval(parse("3412"))
    for lo, hi in poset.covers:
        u, v = poset.elements[lo], poset.elements[hi]
        assert v.length == u.length + 1
        t = v * u.inverse()
        assert sum(1 for k in range(1, 5) if t(k) != k) == 2


def test_weak_join_meet_examples():
    s1, s2 = simple(1, 3), simple(2, 3)
    assert weak_join(s1, s2) == longest(3)
    assert weak_meet(s1, s2) == identity(3)
    for u in all_permutations(3):
        assert weak_join(u, identity(3)) == u
        assert weak_meet(u, longest(3)) == u


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_weak_lattice_axioms_exhaustive(n):
    perms = perms_sorted(n)
    for u in perms:
        assert weak_join(u, u) == u and weak_meet(u, u) == u
    for u, v in itertools.combinations(perms, 2):
        j, m = weak_join(u, v), weak_meet(u, v)
        assert j == weak_join(v, u) and m == weak_meet(v, u)
        assert weak_join(u, m) == u  # absorption
        assert weak_meet(u, j) == u
        assert weak_leq(u, j, "right") and weak_leq(v, j, "right")
        assert weak_leq(m, u, "right") and weak_leq(m, v, "right")


def test_left_weak_operations_mirror_right_on_inverses():
    for u in all_permutations(3):
        for v in all_permutations(3):
            assert weak_leq(u, v, "left") == weak_leq(u.inverse(), v.inverse(), "right")
            lj = weak_join(u, v, "left")
            assert lj == weak_join(u.inverse(), v.inverse(), "right").inverse()


def test_biclosed_examples():
    assert is_biclosed(root_set([], 3))
    assert perm_from_inversions(root_set([], 3)) == identity(3)
    r = root_set([(1, 3), (2, 3)], 3)
    assert is_biclosed(r)
    assert perm_from_inversions(r) == parse("312")
    bad = root_set([(1, 3)], 3)
    assert not is_biclosed(bad)
    with pytest.raises(NotBiclosed):
        perm_from_inversions(bad)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_inversion_sets_are_exactly_biclosed_sets(n):
    for u in all_permutations(n):
        r = root_set([(t.a, t.b) for t in u.left_inversions()], n)
        assert is_biclosed(r)
        assert perm_from_inversions(r) == u


def test_bruhat_max_examples():
    assert bruhat_max_of([identity(3)]) == identity(3)
    diamond = [identity(3), simple(1, 3), simple(2, 3), parse("231")]
    assert bruhat_max_of(diamond) == parse("231")
    with pytest.raises(NoUniqueMax):
        bruhat_max_of([simple(1, 3), simple(2, 3)])
    with pytest.raises(ValueError):
        bruhat_max_of([])


def test_lifting_examples():
    assert lifting_check(identity(2), simple(1, 2), 1)
    assert lifting_check(simple(1, 3), parse("231"), 2)
    with pytest.raises(PreconditionViolated):
        lifting_check(simple(2, 3), parse("231"), 2)  # s2 is a descent of both
    with pytest.raises(PreconditionViolated):
        lifting_check(parse("312"), parse("231"), 2)  # not Bruhat comparable


@pytest.mark.parametrize("n", [2, 3, 4])
def test_lifting_property_holds_exhaustively(n):
    for w in all_permutations(n):
        for v in all_permutations(n):
            if not bruhat_leq(v, w):
                continue
            for s in w.right_descents() - v.right_descents():
                assert lifting_check(v, w, s)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_flattening_property_randomized(data):
    n = data.draw(st.integers(min_value=2, max_value=6))
    w = Permutation(tuple(data.draw(st.permutations(list(range(1, n + 1))))))
    size = data.draw(st.integers(min_value=2, max_value=n))
    positions = sorted(data.draw(st.permutations(list(range(1, n + 1))))[:size])
    shuffled = data.draw(st.permutations(list(range(size))))
    values = [w(i) for i in positions]
    word = list(w.word)
    for slot, take in zip(positions, shuffled):
        word[slot - 1] = values[take]
    v = Permutation(tuple(word))
    sub_v = flatten([v(i) for i in positions])
    sub_w = flatten([w(i) for i in positions])
    assert bruhat_leq(v, w) == bruhat_leq(sub_v, sub_w)


def test_weak_lower_set_matches_direct_filter():
    for u in all_permutations(4):
        direct = {x for x in all_permutations(4) if weak_leq(x, u, "right")}
        assert weak_lower_set(u) == direct


def test_interval_poset_json_schema():
    poset = bruhat_lower_interval(parse("231"))
    doc = poset.to_json_dict()
    assert doc["order_kind"] == "bruhat"
    assert doc["w"] == "2,3,1"
    assert doc["elements"] == ["1,2,3", "1,3,2", "2,1,3", "2,3,1"]
    assert doc["covers"] == [[0, 1], [0, 2], [1, 3], [2, 3]]


def test_weak_cache_is_shared_per_rank():
    assert weak_cache(4) is weak_cache(4)
