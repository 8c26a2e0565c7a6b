import pytest

from ietwords import (
    BoundarySet,
    Component,
    CoverageGapError,
    ExactScalar,
    FieldMismatch,
    GluingMap,
    GoodnessCertificate,
    OverlapError,
    PointOutsideDomain,
    UnknownLetter,
    canonicalize,
    color_of,
    glue_word,
    identity_map,
    is_good,
    make_scalar,
    refine_to_good,
    rotation,
)
from ietwords.instances import random_instance, random_point

from conftest import q

ALPHA = make_scalar(-1, 2, 1, 2, 5)
ZERO5, ONE5 = ExactScalar.zero(5), ExactScalar.one(5)
CUT = ONE5 - ALPHA   # 1 - alpha, the rotation's discontinuity


def natural():
    return canonicalize({
        "0": [Component(ZERO5, True, CUT, False)],
        "1": [Component(CUT, True, ONE5, False)],
    })


def whole_interval(letter="A"):
    return canonicalize({letter: [Component(ZERO5, True, ONE5, False)]})


# ---------------------------------------------------------- canonicalize

def test_adjacent_pieces_merge_into_one_class():
    sub = canonicalize({"A": [Component(q(0), True, q(1, 2), False),
                              Component(q(1, 2), True, q(1), False)]})
    assert len(sub.class_of("A")) == 1


def test_overlap_is_rejected_with_witness():
    with pytest.raises(OverlapError) as e:
        canonicalize({"A": [Component(q(0), True, q(2, 3), False)],
                      "B": [Component(q(1, 2), True, q(1), False)]})
    assert e.value.witness == q(1, 2)


def test_gap_is_rejected_with_witness():
    with pytest.raises(CoverageGapError) as e:
        canonicalize({"A": [Component(q(0), True, q(1, 3), False)]})
    assert e.value.witness == q(1, 3)


def test_interior_gap_witness():
    with pytest.raises(CoverageGapError) as e:
        canonicalize({"A": [Component(q(0), True, q(1, 4), False)],
                      "B": [Component(q(1, 2), True, q(1), False)]})
    assert q(1, 4) <= e.value.witness < q(1, 2)


def test_alphabet_is_sorted_and_classes_nonempty():
    sub = canonicalize({"B": [Component(q(1, 2), True, q(1), False)],
                        "A": [Component(q(0), True, q(1, 2), False)]})
    assert sub.alphabet == ("A", "B")
    with pytest.raises(ValueError):
        canonicalize({"A": [Component(q(0), True, q(1), False)], "B": []})


def test_partition_with_closed_open_flags():
    sub = canonicalize({
        "A": [Component(q(0), True, q(1, 2), True)],
        "B": [Component(q(1, 2), False, q(1), False)],
    })
    assert sub.color_of(q(1, 2)) == "A"


def test_singleton_class_is_legal():
    sub = canonicalize({
        "A": [Component(q(0), True, q(1, 2), False)],
        "P": [Component(q(1, 2), True, q(1, 2), True)],
        "B": [Component(q(1, 2), False, q(1), False)],
    })
    assert sub.color_of(q(1, 2)) == "P"
    # a singleton is convex: condition 1 holds
    cert = is_good(sub, identity_map(0))
    assert isinstance(cert, GoodnessCertificate)


# -------------------------------------------------------------- color_of

def test_color_of_natural_partition():
    sub = natural()
    assert color_of(sub, ZERO5) == "0"
    assert color_of(sub, CUT) == "1"          # boundary joins the right class
    assert color_of(sub, ALPHA) == "1"        # alpha >= 1 - alpha
    with pytest.raises(PointOutsideDomain):
        color_of(sub, ONE5)
    with pytest.raises(PointOutsideDomain):
        color_of(sub, -ALPHA)


# ---------------------------------------------------------------- is_good

def test_natural_partition_is_good_for_golden_rotation():
    cert = is_good(natural(), rotation(ALPHA))
    assert isinstance(cert, GoodnessCertificate)
    assert cert.violations == ()


def test_single_class_fails_condition_two():
    R = rotation(ALPHA)
    violations = is_good(whole_interval(), R)
    assert isinstance(violations, list) and len(violations) == 1
    v = violations[0]
    assert v.kind == "shared-image-color"
    assert v.letter == "A" and v.color == "A"
    assert v.point == CUT
    a, b = v.witness
    assert a < CUT < b
    # both witnesses really do map to the same color
    sub = whole_interval()
    assert sub.color_of(R.apply(a)) == sub.color_of(R.apply(b)) == "A"


def test_split_classes_fail_condition_one():
    sub = canonicalize({
        "A": [Component(q(0), True, q(1, 4), False),
              Component(q(1, 2), True, q(3, 4), False)],
        "B": [Component(q(1, 4), True, q(1, 2), False),
              Component(q(3, 4), True, q(1), False)],
    })
    violations = is_good(sub, identity_map(0))
    assert {v.letter for v in violations} == {"A", "B"}
    assert all(v.kind == "not-convex" for v in violations)


def test_discontinuity_on_class_boundary_is_not_interior():
    # the rotation's only discontinuity is the classes' common boundary
    sub = natural()
    R = rotation(ALPHA)
    assert isinstance(is_good(sub, R), GoodnessCertificate)


def test_equal_halves_are_good_for_quarter_rotation():
    # the cut 3/4 sits inside B = [1/2,1), but the two sides land in
    # different colors (left -> B, right -> A), so condition 2 holds
    R = rotation(q(1, 4))
    sub = canonicalize({
        "A": [Component(q(0), True, q(1, 2), False)],
        "B": [Component(q(1, 2), True, q(1), False)],
    })
    assert isinstance(is_good(sub, R), GoodnessCertificate)


def test_condition_two_catches_interior_straddle_with_rational_map():
    # rotation by 1/4 with A = [0,7/8): the cut 3/4 is interior to A, the
    # left side covers images colored A and B, the right side lands in A
    R = rotation(q(1, 4))
    sub = canonicalize({
        "A": [Component(q(0), True, q(7, 8), False)],
        "B": [Component(q(7, 8), True, q(1), False)],
    })
    violations = is_good(sub, R)
    assert isinstance(violations, list) and len(violations) == 1
    v = violations[0]
    assert (v.letter, v.point, v.color) == ("A", q(3, 4), "A")
    a, b = v.witness
    assert a < q(3, 4) < b
    assert sub.color_of(R.apply(a)) == sub.color_of(R.apply(b)) == "A"


def test_field_mismatch_between_sub_and_map():
    with pytest.raises(FieldMismatch):
        is_good(natural(), rotation(q(1, 3)))


def test_certificate_is_map_specific():
    sub = natural()
    cert = is_good(sub, rotation(ALPHA))
    other = rotation(ALPHA + ALPHA - ExactScalar.one(5))  # rotation by 2a-1
    cert2 = is_good(sub, other)
    assert isinstance(cert2, GoodnessCertificate)
    assert cert.map_id != cert2.map_id


# --------------------------------------------------------- refine_to_good

def test_refine_already_good_renames_bijectively():
    sub = natural()
    R = rotation(ALPHA)
    refined, gluing = refine_to_good(sub, R)
    assert gluing.is_bijective()
    # classes unchanged as sets
    old = {frozenset(bset.components) for bset in sub.classes.values()}
    new = {frozenset(bset.components) for bset in refined.classes.values()}
    assert old == new
    assert isinstance(is_good(refined, R), GoodnessCertificate)


def test_refine_single_class_splits_at_discontinuity():
    R = rotation(ALPHA)
    refined, gluing = refine_to_good(whole_interval(), R)
    assert refined.alphabet == ("A0", "A1")
    assert refined.class_of("A0") == BoundarySet([Component(ZERO5, True, CUT, False)])
    assert refined.class_of("A1") == BoundarySet([Component(CUT, True, ONE5, False)])
    assert gluing.mapping == {"A0": "A", "A1": "A"}
    assert isinstance(is_good(refined, R), GoodnessCertificate)


def test_refine_splits_disconnected_classes():
    sub = canonicalize({
        "A": [Component(q(0), True, q(1, 4), False),
              Component(q(1, 2), True, q(3, 4), False)],
        "B": [Component(q(1, 4), True, q(1, 2), False),
              Component(q(3, 4), True, q(1), False)],
    })
    refined, gluing = refine_to_good(sub, identity_map(0))
    assert sorted(refined.alphabet) == ["A0", "A1", "B0", "B1"]
    assert gluing.mapping == {"A0": "A", "A1": "A", "B0": "B", "B1": "B"}
    assert isinstance(is_good(refined, identity_map(0)), GoodnessCertificate)


def test_alphabet_bound(rng):
    for _ in range(25):
        pmap, sub, _ = random_instance(rng)
        refined, _ = refine_to_good(sub, pmap)
        bound = sub.component_count() + len(pmap.discontinuities())
        assert len(refined.alphabet) <= bound


def test_refinement_soundness_random(rng):
    for _ in range(40):
        pmap, sub, _ = random_instance(rng)
        refined, _ = refine_to_good(sub, pmap)
        assert isinstance(is_good(refined, pmap), GoodnessCertificate)


def test_pointwise_gluing_identity(rng):
    for _ in range(10):
        pmap, sub, _ = random_instance(rng)
        refined, gluing = refine_to_good(sub, pmap)
        for _ in range(1000):
            x = random_point(rng)
            assert gluing(refined.color_of(x)) == sub.color_of(x)


def test_letter_collision_falls_back_to_underscores():
    # reversal of 12 equal intervals has 11 interior cuts; class "B" then
    # mints "B10", which plain concatenation also mints for class "B1"
    from ietwords import IET, iet_to_map

    twelfth = q(1, 12)
    pmap = iet_to_map(IET((twelfth,) * 12, tuple(range(11, -1, -1))))
    sub = canonicalize({
        "B": [Component(q(0), True, q(23, 24), False)],
        "B1": [Component(q(23, 24), True, q(1), False)],
    })
    refined, gluing = refine_to_good(sub, pmap)
    assert len(refined.alphabet) == len(set(refined.alphabet)) == 13
    assert "B_10" in refined.alphabet and "B1_0" in refined.alphabet
    assert set(gluing.mapping.values()) == {"B", "B1"}
    assert isinstance(is_good(refined, pmap), GoodnessCertificate)


# ------------------------------------------------------------- glue_word

def test_glue_word_on_sequences():
    g = GluingMap({"A0": "A", "A1": "A"})
    assert glue_word("A0 A1 A0", g) == ("A", "A", "A")
    assert glue_word(["A0", "A0"], g) == ("A", "A")
    ident = GluingMap({"A": "A", "B": "B"})
    assert glue_word(["A", "B", "A"], ident) == ("A", "B", "A")
    with pytest.raises(UnknownLetter):
        glue_word("A0 C", g)


def test_gluing_map_interface():
    g = GluingMap({"A0": "A", "A1": "A", "B0": "B"})
    assert g.domain() == ("A0", "A1", "B0")
    assert g.image_alphabet() == ("A", "B")
    assert not g.is_bijective()
    assert g("B0") == "B"
