"""Good subdivisions: the two conditions, violations, and refinement.

A subdivision colors [0, 1) with finitely many letters.  It is *good*
for a map T when (1) every color class is a single interval and (2) no
class straddles a discontinuity of T with both sides mapping into a
shared color.  When a subdivision is not good, `refine_to_good` cuts it
into one that is, and returns the gluing that projects refined letters
back onto the originals.
"""

from ietwords import (
    BoundarySet,
    Component,
    ExactScalar,
    Subdivision,
    glue_word,
    is_good,
    make_scalar,
    refine_to_good,
    rotation,
)

alpha = make_scalar(-1, 2, 1, 2, 5)
zero, one = ExactScalar.zero(5), ExactScalar.one(5)
cut = one - alpha
R = rotation(alpha)

# The natural two-letter partition at the rotation's own discontinuity.
natural = Subdivision({
    "1": BoundarySet([Component(zero, True, cut, False)]),
    "0": BoundarySet([Component(cut, True, one, False)]),
})
print("natural partition vs golden rotation:")
print("  ", is_good(natural, R))
print()

# One letter covering everything fails condition 2: the class contains
# the discontinuity, and both sides map somewhere colored "A" (there is
# nothing else).  The violation carries an exact witness pair.
whole = Subdivision({"A": BoundarySet([Component(zero, True, one, False)])})
print("one letter for the whole interval:")
for v in is_good(whole, R):
    print("  ", v)
print()

# Refinement cuts "A" at the discontinuity and names the parts A0, A1.
refined, gluing = refine_to_good(whole, R)
print("refined classes:")
for letter in refined.alphabet:
    print(f"   {letter}: {refined.class_of(letter)}")
print("gluing:", dict(gluing.mapping))
print()

# A disconnected class fails condition 1 instead.
stripes = Subdivision({
    "A": BoundarySet([
        Component(zero, True, make_scalar(1, 4, 0, 1, 5), False),
        Component(make_scalar(1, 2, 0, 1, 5), True,
                  make_scalar(3, 4, 0, 1, 5), False),
    ]),
    "B": BoundarySet([
        Component(make_scalar(1, 4, 0, 1, 5), True,
                  make_scalar(1, 2, 0, 1, 5), False),
        Component(make_scalar(3, 4, 0, 1, 5), True, one, False),
    ]),
})
print("striped A/B partition:")
for v in is_good(stripes, R):
    print("  ", v)
refined2, gluing2 = refine_to_good(stripes, R)
print("refines into", len(refined2.alphabet), "letters:",
      ", ".join(refined2.alphabet))
print()

# The gluing acts on letters, hence on whole words.
print("glue A0 A1 A1 A0 back:", " ".join(glue_word("A0 A1 A1 A0", gluing)))
