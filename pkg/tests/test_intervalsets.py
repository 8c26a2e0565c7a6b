from fractions import Fraction

import pytest

from ietwords import BoundarySet, Component, ExactScalar, interval, singleton
from ietwords.intervalsets import split_above, split_below

from conftest import q


def test_component_validation():
    with pytest.raises(ValueError):
        Component(q(1, 2), True, q(1, 3), False)          # lo > hi
    with pytest.raises(ValueError):
        Component(q(1, 2), True, q(1, 2), False)          # singleton needs flags
    s = singleton(q(1, 2))
    assert s.components[0].is_singleton()


def test_adjacent_halfopen_intervals_merge():
    a = Component(q(0), True, q(1, 2), False)
    b = Component(q(1, 2), True, q(1), False)
    merged = BoundarySet([a, b])
    assert len(merged) == 1
    assert str(merged.components[0]) == "[0, 1)"


def test_open_gap_prevents_merge():
    a = Component(q(0), True, q(1, 2), False)
    b = Component(q(1, 2), False, q(1), False)        # (1/2, 1): point missing
    s = BoundarySet([a, b])
    assert len(s) == 2
    assert not s.contains(q(1, 2))
    # adding the missing singleton glues everything
    glued = s.union(singleton(q(1, 2)))
    assert len(glued) == 1


def test_closed_touching_intervals_merge():
    a = Component(q(0), True, q(1, 2), True)
    b = Component(q(1, 2), False, q(1), False)
    assert len(BoundarySet([a, b])) == 1


def test_contains_respects_flags():
    s = BoundarySet([Component(q(1, 4), False, q(3, 4), True)])
    assert not s.contains(q(1, 4))
    assert s.contains(q(1, 2))
    assert s.contains(q(3, 4))
    assert not s.contains(q(7, 8))


def test_union_and_intersect():
    a = interval(q(0), q(1, 2))
    b = interval(q(1, 4), q(3, 4))
    assert a.union(b) == interval(q(0), q(3, 4))
    assert a.intersect(b) == interval(q(1, 4), q(1, 2))
    assert a.intersects(b)
    c = interval(q(3, 4), q(1))
    assert a.intersect(c).is_empty()
    assert not a.intersects(c)


def test_intersect_produces_singleton():
    a = BoundarySet([Component(q(0), True, q(1, 2), True)])
    b = BoundarySet([Component(q(1, 2), True, q(1), False)])
    meet = a.intersect(b)
    assert len(meet) == 1 and meet.components[0].is_singleton()
    assert meet.sample_point() == q(1, 2)


def test_transform_translation_and_reflection():
    s = BoundarySet([Component(q(1, 4), True, q(1, 2), False)])
    shifted = s.transform(1, q(1, 4))
    assert shifted == BoundarySet([Component(q(1, 2), True, q(3, 4), False)])
    # x -> -x + 1: [1/4, 1/2)  becomes  (1/2, 3/4]
    flipped = s.transform(-1, q(1))
    c = flipped.components[0]
    assert (c.lo, c.lo_in, c.hi, c.hi_in) == (q(1, 2), False, q(3, 4), True)
    # reflecting twice comes home
    assert flipped.transform(-1, q(1)) == s


def test_split_at_point():
    c = Component(q(0), True, q(1), False)
    left = split_below(c, q(1, 3))
    right = split_above(c, q(1, 3))
    assert (left.lo, left.hi, left.hi_in) == (q(0), q(1, 3), False)
    assert (right.lo, right.lo_in) == (q(1, 3), False)
    assert split_below(c, q(0)) is None
    assert split_above(c, q(1)) is None


def test_sample_point_is_member(rng):
    for _ in range(200):
        lo = Fraction(rng.randint(0, 30), 32)
        hi = lo + Fraction(rng.randint(1, 30), 32)
        c = Component(
            q(lo.numerator, lo.denominator), rng.random() < 0.5,
            q(hi.numerator, hi.denominator), rng.random() < 0.5,
        )
        s = BoundarySet([c])
        assert s.contains(s.sample_point())


def test_set_algebra_matches_pointwise_evaluation(rng):
    # union/intersect verified against membership on a fine rational grid
    grid = [q(k, 96) for k in range(97)]

    def random_set():
        comps = []
        for _ in range(rng.randint(1, 3)):
            a = Fraction(rng.randint(0, 90), 96)
            b = a + Fraction(rng.randint(1, 96 - int(a * 96)), 96)
            comps.append(
                Component(
                    q(a.numerator, a.denominator), rng.random() < 0.5,
                    q(b.numerator, b.denominator), rng.random() < 0.5,
                )
            )
        return BoundarySet(comps)

    for _ in range(80):
        s, t = random_set(), random_set()
        u, m = s.union(t), s.intersect(t)
        for g in grid:
            assert u.contains(g) == (s.contains(g) or t.contains(g))
            assert m.contains(g) == (s.contains(g) and t.contains(g))
        assert s.intersects(t) == (not m.is_empty())


def test_canonical_equality_and_hash():
    a = BoundarySet([Component(q(0), True, q(1, 2), False),
                     Component(q(1, 2), True, q(1), False)])
    b = BoundarySet([Component(q(0), True, q(1), False)])
    assert a == b and hash(a) == hash(b)
