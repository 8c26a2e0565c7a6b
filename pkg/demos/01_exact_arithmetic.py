"""Exact scalars in Q(sqrt(d)): construction, comparison, and text forms.

Everything downstream (interval maps, subdivisions, codings) leans on one
guarantee: numbers of the form a + b*sqrt(d) with rational a, b compare
exactly, with no floating point anywhere.  This script shows the scalar
type doing that, including the classic trap cases where floats would lie.
"""

from fractions import Fraction

from ietwords import ExactScalar, format_scalar, make_scalar, mod1, parse_scalar

# make_scalar(a_num, a_den, b_num, b_den, d) builds (a_num/a_den) +
# (b_num/b_den)*sqrt(d).  The golden rotation angle (sqrt(5)-1)/2:
alpha = make_scalar(-1, 2, 1, 2, 5)
print("alpha           =", alpha)
print("as text         =", format_scalar(alpha))
print("parsed back     =", parse_scalar(format_scalar(alpha), d=5))
print("roundtrip equal :", parse_scalar(format_scalar(alpha), d=5) == alpha)
print()

# alpha is the positive root of x^2 + x - 1, so alpha^2 = 1 - alpha.
one = ExactScalar.one(5)
print("alpha * alpha   =", alpha * alpha)
print("1 - alpha       =", one - alpha)
print("identity holds  :", alpha * alpha == one - alpha)
print()

# Comparisons are decided by integer arithmetic on the components, so
# points that floats cannot separate stay distinct.  513/830 is a decent
# rational approximation of alpha; the Fibonacci convergent 514229/832040
# is a spectacular one (error below 1e-12), and both still order exactly.
for num, den in [(513, 830), (514229, 832040)]:
    approx = make_scalar(num, den, 0, 1, 5)
    side = "<" if approx < alpha else ">"
    print(f"{num}/{den} {side} alpha   (difference has sign "
          f"{(approx - alpha).sign()})")
print()

# Arithmetic mixes freely with ints and Fractions from the same context.
x = alpha * Fraction(1, 2) + Fraction(1, 3)
print("alpha/2 + 1/3   =", x)
print("rational part   =", x.rational_part, "  radical part =", x.radical_part)
print()

# mod1 folds any scalar into [0, 1): the circle the maps act on.
print("mod1(alpha + 1) =", mod1(alpha + 1))
print("mod1(2*alpha)   =", mod1(alpha + alpha), " (wraps past 1)")
print("mod1(-1/3)      =", mod1(make_scalar(-1, 3, 0, 1, 0)))
