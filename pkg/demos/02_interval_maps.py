"""Piecewise-affine maps of [0, 1): building, validating, and IET forms.

A map is a list of affine pieces with slope +1 or -1 on half-open
domains.  Validation is a report, not an exception: it lists coverage
gaps, overlaps, and points whose image escapes [0, 1), each with an
exact witness, and says whether the map is a bijection.
"""

from ietwords import (
    IET,
    AffinePiece,
    HalfOpenInterval,
    PiecewiseMap,
    iet_to_map,
    make_scalar,
    rotation,
    to_iet,
)


def r(num, den=1):
    return make_scalar(num, den, 0, 1, 0)


# A rotation is the simplest two-piece map: x + angle, wrapping once.
R = rotation(r(1, 3))
print("rotation by 1/3")
print("   ", R)
print("  R(0)    =", R(r(0)))
print("  R(2/3)  =", R(r(2, 3)), " (the wrap)")
print("  cuts    =", [str(p) for p in R.discontinuities()])
print("  report  =", R.validate())
print()

# An interval exchange: three intervals of lengths 1/4, 1/4, 1/2,
# rearranged so the last one comes first.
iet = IET((r(1, 4), r(1, 4), r(1, 2)), (2, 0, 1))
T = iet_to_map(iet)
print("3-interval exchange, permutation (2, 0, 1)")
for x in (r(0), r(1, 4), r(1, 2)):
    print(f"  T({x}) = {T(x)}")
print("  back to IET form:", to_iet(T))
print()

# Validation catches broken maps instead of letting them run.  This one
# leaves (1/2, 3/4) uncovered and its pieces' images collide.
broken = PiecewiseMap([
    AffinePiece(HalfOpenInterval(r(0), r(1, 2)), 1, r(0)),
    AffinePiece(HalfOpenInterval(r(3, 4), r(1)), 1, r(-3, 4)),
])
report = broken.validate()
print("a broken map:")
for v in report.violations:
    print(f"  {v.kind}: {v.detail}")
print("  bijective:", report.bijective)
print()

# Slope -1 pieces are allowed (reflections), but they rarely assemble
# into bijections of [0, 1): the image of a half-open domain under a
# reflection is half-open on the *other* side.
mirror = PiecewiseMap([AffinePiece(HalfOpenInterval(r(0), r(1)), -1, r(1))])
print("the full reflection x -> 1 - x:")
for v in mirror.validate().violations:
    print(f"  {v.kind}: {v.detail}")
print("  (its image (0, 1] attains 1, which is outside [0, 1))")
