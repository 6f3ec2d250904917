import itertools
import random

import pytest

from bip.errors import NotInInterval, RankMismatch
from bip.lattice import (
    ThetaClass,
    bot,
    join_w,
    meet_w,
    mixed_meet,
    parabolic_max,
    theta_class,
    top,
)
from bip.order import bruhat_leq, bruhat_max_of, weak_leq, weak_lower_set
from bip.perm import all_permutations, identity, longest, parse, simple
from bip.skeleton import wcontext

from conftest import (
    brute_greatest_lower_bound,
    brute_least_upper_bound,
    bruhat_interval_elements,
)


def test_bot_examples():
    w = parse("231")
    for u in bruhat_interval_elements(w):
        assert bot(w, u) == u
    assert bot(w, parse("312")) == parse("132")
    assert bot(w, longest(3)) == w


def test_top_examples():
    w = parse("231")
    assert top(w, parse("132")) == parse("312")
    assert top(w, w) == longest(3)
    w0 = longest(3)
    for x in all_permutations(3):
        assert top(w0, x) == x  # braid classes are singletons


def test_theta_class_examples():
    w = parse("231")
    cls = theta_class(w, identity(3))
    assert cls.members == (identity(3),)

    cls = theta_class(w, parse("312"))
    assert cls.bot == parse("132")
    assert cls.top == parse("312")
    assert set(cls.members) == {parse("132"), parse("312")}

    assert theta_class(longest(4), parse("3142")).members == (parse("3142"),)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_classes_partition_and_are_weak_intervals(n):
    for w in all_permutations(n):
        seen = set()
        for x in all_permutations(n):
            cls = theta_class(w, x)  # construction re-checks the interval claim
            assert x in cls.members
            if x == cls.bot:
                assert not seen & set(cls.members)
                seen |= set(cls.members)
            for z in cls.members:
                assert weak_leq(cls.bot, z, "right") and weak_leq(z, cls.top, "right")
        assert len(seen) == len(list(all_permutations(n)))


def test_join_meet_examples():
    w = parse("231")
    s1, s2 = simple(1, 3), simple(2, 3)
    assert join_w(w, s1, s2) == w
    assert meet_w(w, s1, s2) == identity(3)
    for u in bruhat_interval_elements(w):
        assert join_w(w, u, identity(3)) == u
        assert meet_w(w, u, w) == u


def test_join_meet_require_membership():
    with pytest.raises(NotInInterval):
        join_w(parse("231"), parse("312"), identity(3))
    with pytest.raises(NotInInterval):
        meet_w(parse("231"), identity(3), parse("321"))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_join_meet_against_brute_force(n):
    for w in all_permutations(n):
        members = sorted(bruhat_interval_elements(w), key=lambda p: p.sort_key())
        for u, v in itertools.combinations_with_replacement(members, 2):
            assert join_w(w, u, v) == brute_least_upper_bound(w, u, v), (w, u, v)
            assert meet_w(w, u, v) == brute_greatest_lower_bound(w, u, v), (w, u, v)


def test_parabolic_examples():
    w = parse("231")
    assert parabolic_max(w, set()) == identity(3)
    assert parabolic_max(w, {1, 2}) == w
    assert parabolic_max(w, {1}) == simple(1, 3)
    # generators not below w contribute nothing
    assert parabolic_max(simple(1, 4), {1, 3}) == simple(1, 4)


def test_parabolic_join_order_irrelevant():
    rng = random.Random(11)
    for w in all_permutations(4):
        indices = [1, 2, 3]
        expected = parabolic_max(w, set(indices))
        for _ in range(3):
            shuffled = indices[:]
            rng.shuffle(shuffled)
            acc = identity(4)
            for i in shuffled:
                s = simple(i, 4)
                if bruhat_leq(s, w):
                    acc = join_w(w, acc, s)
            assert acc == expected


@pytest.mark.parametrize("n", [2, 3, 4])
def test_parabolic_matches_bruhat_maximum(n):
    for w in all_permutations(n):
        interval = bruhat_interval_elements(w)
        for size in range(n):
            for indices in itertools.combinations(range(1, n), size):
                chosen = set(indices)
                inside = [u for u in interval if u.support() <= chosen]
                assert parabolic_max(w, chosen) == bruhat_max_of(inside)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_support_generators_join_to_w(n):
    for w in all_permutations(n):
        assert parabolic_max(w, w.support()) == w


def test_mixed_meet_examples():
    assert mixed_meet(parse("312"), parse("231")) == parse("132")
    for u in all_permutations(3):
        assert mixed_meet(u, longest(3)) == u
        assert mixed_meet(identity(3), u) == identity(3)
    with pytest.raises(RankMismatch):
        mixed_meet(identity(3), identity(4))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_mixed_meet_against_brute_force(n):
    for u in all_permutations(n):
        down_weak = weak_lower_set(u)
        for v in all_permutations(n):
            candidates = down_weak & bruhat_interval_elements(v)
            assert mixed_meet(u, v) == bruhat_max_of(candidates)


@pytest.mark.parametrize("n", [2, 3])
def test_top_constant_on_classes_and_bot_idempotent(n):
    for w in all_permutations(n):
        for x in all_permutations(n):
            assert bot(w, top(w, x)) == bot(w, x)
            cls = theta_class(w, x)
            for z in cls.members:
                assert top(w, z) == cls.top


def test_theta_class_json():
    doc = theta_class(parse("231"), parse("312")).to_json_dict()
    assert doc == {
        "w": "2,3,1",
        "bot": "1,3,2",
        "top": "3,1,2",
        "members": ["1,3,2", "3,1,2"],
    }
