"""Colorings of [0, 1), the goodness predicate, refinement, and gluing.

A Subdivision assigns a letter to every point of [0, 1); the letter's color
class is a finite union of flagged intervals.  A subdivision is *good* for a
map when (1) every color class is convex and (2) at every discontinuity that
sits strictly inside a class, the two sides map to color sets that do not
meet.  Any subdivision can be cut into a good one, and the original coding
is recovered from the refined one by gluing letters back.
"""

from __future__ import annotations

import hashlib
from bisect import bisect_right
from dataclasses import dataclass

from .exactnum import ExactScalar, FieldMismatch, format_scalar
from .intervalsets import (
    AT,
    BELOW,
    BoundarySet,
    Component,
    _from_keys,
    _succ,
    split_above,
    split_below,
)
from .intervalmap import PointOutsideDomain


class OverlapError(ValueError):
    """Two color classes claim the same point."""

    def __init__(self, witness, letters=()):
        self.witness = witness
        self.letters = tuple(letters)
        where = " and ".join(self.letters) if self.letters else "classes"
        super().__init__(f"{where} overlap at {witness}")


class CoverageGapError(ValueError):
    """Some point of [0, 1) has no color."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"no class covers {witness}")


class UnknownLetter(KeyError):
    """A letter outside the gluing map's domain."""

    def __init__(self, letter):
        self.letter = letter
        super().__init__(letter)

    def __str__(self):
        return f"letter {self.letter!r} is not in the gluing domain"


class Subdivision:
    """A partition of [0, 1) into finitely many lettered color classes.

    Construction canonicalizes: each class's intervals are merged and
    sorted, the alphabet is sorted, and the partition property (disjoint,
    no gaps, exactly [0, 1)) is verified.
    """

    __slots__ = ("_alphabet", "_classes", "_d", "_starts", "_letters_at")

    def __init__(self, classes):
        if not classes:
            raise ValueError("a subdivision needs at least one class")
        canon = {}
        for letter in sorted(classes):
            bset = classes[letter]
            if not isinstance(bset, BoundarySet):
                bset = BoundarySet(bset)
            if bset.is_empty():
                raise ValueError(f"class {letter!r} is empty")
            canon[str(letter)] = bset
        self._classes = canon
        self._alphabet = tuple(canon)

        d = next(iter(canon.values())).components[0].lo.d
        for bset in canon.values():
            for c in bset.components:
                if c.lo.d != d:
                    raise FieldMismatch("class endpoints from different field contexts")
        self._d = d

        self._verify_partition()

    def _verify_partition(self):
        zero = ExactScalar.zero(self._d)
        one = ExactScalar.one(self._d)
        flat = sorted(
            ((c, letter) for letter in self._alphabet
             for c in self._classes[letter].components),
            key=lambda pair: pair[0].lo_key,
        )
        cursor = (zero, AT)          # the next key that must be covered
        prev_letter = None
        for c, letter in flat:
            if c.lo_key > cursor:
                raise CoverageGapError(_from_keys(cursor, c.lo_key).sample_point())
            if c.lo_key < cursor:
                overlap_hi = min(c.hi_key, (cursor[0], cursor[1] - 1))
                witness = _from_keys(c.lo_key, overlap_hi).sample_point()
                raise OverlapError(witness, (prev_letter, letter))
            if c.lo < zero or c.hi > one or c.hi_key >= (one, AT):
                raise ValueError(f"class {letter!r} extends beyond [0, 1)")
            cursor = _succ(c.hi_key)
            prev_letter = letter
        if cursor != (one, AT):
            raise CoverageGapError(_from_keys(cursor, (one, BELOW)).sample_point())
        self._starts = [c.lo_key for c, _ in flat]
        self._letters_at = [letter for _, letter in flat]

    @property
    def alphabet(self):
        return self._alphabet

    @property
    def classes(self):
        return dict(self._classes)

    @property
    def d(self):
        return self._d

    def class_of(self, letter):
        try:
            return self._classes[letter]
        except KeyError:
            raise UnknownLetter(letter) from None

    def color_of(self, x):
        zero = ExactScalar.zero(self._d)
        one = ExactScalar.one(self._d)
        if not (zero <= x < one):
            raise PointOutsideDomain(f"{x} outside [0, 1)")
        idx = bisect_right(self._starts, (x, AT)) - 1
        return self._letters_at[idx]

    def component_count(self):
        return sum(len(bset) for bset in self._classes.values())

    def content_id(self):
        text = ";".join(
            f"{letter}:" + "|".join(
                f"{format_scalar(c.lo)},{int(c.lo_in)},{format_scalar(c.hi)},{int(c.hi_in)}"
                for c in self._classes[letter].components
            )
            for letter in self._alphabet
        )
        return "sub:" + hashlib.sha256(text.encode()).hexdigest()[:12]

    def __eq__(self, other):
        if not isinstance(other, Subdivision):
            return NotImplemented
        return self._classes == other._classes

    def __hash__(self):
        return hash(tuple(self._classes.items()))

    def __repr__(self):
        inner = ", ".join(f"{letter}: {bset!r}" for letter, bset in self._classes.items())
        return f"Subdivision({{{inner}}})"


def canonicalize(classes):
    """Build a Subdivision from raw letter -> intervals data."""
    return Subdivision(classes)


def color_of(sub, x):
    """The unique letter whose class contains x."""
    return sub.color_of(x)


@dataclass(frozen=True)
class GoodnessViolation:
    """One reason a subdivision fails to be good for a map.

    kind "not-convex": `letter`'s class has several components; the witness
    pair samples two of them.  kind "shared-image-color": the two sides of
    discontinuity `point` inside `letter`'s class both map into class
    `color`; the witness pair (A, B) straddles the point and satisfies
    color(f(A)) == color(f(B)) == color.
    """

    kind: str
    letter: str
    point: ExactScalar | None = None
    color: str | None = None
    witness: tuple | None = None

    def __str__(self):
        if self.kind == "not-convex":
            a, b = self.witness
            return (f"class {self.letter!r} is not convex "
                    f"(components sampled at {a} and {b})")
        a, b = self.witness
        return (f"class {self.letter!r} straddles discontinuity {self.point}: "
                f"images of {a} and {b} are both colored {self.color!r}")


@dataclass(frozen=True)
class GoodnessCertificate:
    """Witness that a subdivision is good for one specific map."""

    subdivision_id: str
    map_id: str
    violations: tuple = ()

    def __str__(self):
        return f"good for {self.map_id} (subdivision {self.subdivision_id})"


def _image_parts(pmap, bset):
    """Split a set along the map's pieces and push each part forward.

    Yields (piece, image) with image = piece(part); the union of the images
    is the exact image of bset.
    """
    for piece in pmap.pieces:
        dom = BoundarySet([Component(piece.domain.lo, True, piece.domain.hi, False)])
        part = bset.intersect(dom)
        if not part.is_empty():
            yield piece, part.transform(piece.slope, piece.intercept)


def _pull_back(piece, y):
    if piece.slope == 1:
        return y - piece.intercept
    return piece.intercept - y


def is_good(sub, pmap):
    """Check both goodness conditions.

    Returns a GoodnessCertificate, or a list of GoodnessViolation records
    with exact witnesses.
    """
    if sub.d != pmap.d:
        raise FieldMismatch("subdivision and map use different field contexts")
    violations = []

    for letter in sub.alphabet:
        comps = sub.class_of(letter).components
        if len(comps) > 1:
            violations.append(
                GoodnessViolation(
                    "not-convex",
                    letter,
                    witness=(comps[0].sample_point(), comps[1].sample_point()),
                )
            )

    cuts = pmap.discontinuities()
    for letter in sub.alphabet:
        for comp in sub.class_of(letter).components:
            for p in cuts:
                if not (comp.lo < p < comp.hi):
                    continue
                left = BoundarySet([split_below(comp, p)])
                right = BoundarySet([split_above(comp, p)])
                left_parts = list(_image_parts(pmap, left))
                right_parts = list(_image_parts(pmap, right))
                for color in sub.alphabet:
                    cls = sub.class_of(color)
                    hit_l = next(
                        (
                            (piece, img.intersect(cls))
                            for piece, img in left_parts
                            if img.intersects(cls)
                        ),
                        None,
                    )
                    if hit_l is None:
                        continue
                    hit_r = next(
                        (
                            (piece, img.intersect(cls))
                            for piece, img in right_parts
                            if img.intersects(cls)
                        ),
                        None,
                    )
                    if hit_r is None:
                        continue
                    a = _pull_back(hit_l[0], hit_l[1].sample_point())
                    b = _pull_back(hit_r[0], hit_r[1].sample_point())
                    violations.append(
                        GoodnessViolation(
                            "shared-image-color", letter, point=p,
                            color=color, witness=(a, b),
                        )
                    )
                    break       # one witness per (letter, discontinuity)

    if violations:
        return violations
    return GoodnessCertificate(sub.content_id(), pmap.content_id())


class GluingMap:
    """Letter-to-letter projection from a refined alphabet to the original."""

    __slots__ = ("_mapping",)

    def __init__(self, mapping):
        self._mapping = {str(k): str(v) for k, v in mapping.items()}
        if not self._mapping:
            raise ValueError("empty gluing map")

    @property
    def mapping(self):
        return dict(self._mapping)

    def domain(self):
        return tuple(sorted(self._mapping))

    def image_alphabet(self):
        return tuple(sorted(set(self._mapping.values())))

    def is_bijective(self):
        return len(set(self._mapping.values())) == len(self._mapping)

    def __call__(self, letter):
        try:
            return self._mapping[letter]
        except KeyError:
            raise UnknownLetter(letter) from None

    def __eq__(self, other):
        if not isinstance(other, GluingMap):
            return NotImplemented
        return self._mapping == other._mapping

    def __hash__(self):
        return hash(tuple(sorted(self._mapping.items())))

    def __repr__(self):
        inner = ", ".join(f"{k}->{v}" for k, v in sorted(self._mapping.items()))
        return f"GluingMap({inner})"


def _cut_component(comp, points):
    """Split a component at interior points; each point joins its right piece."""
    segments = []
    current = comp
    for p in points:
        segments.append(_from_keys(current.lo_key, (p, BELOW)))
        current = _from_keys((p, AT), current.hi_key)
    segments.append(current)
    return segments


def refine_to_good(sub, pmap):
    """Cut every class at component boundaries and discontinuities.

    Returns (refined, gluing).  The refined subdivision is good for pmap:
    every new class is a single interval, and no new class has a
    discontinuity strictly inside it, so the image-color condition holds
    vacuously.  Gluing sends each fresh letter back to the letter it was
    cut from, and the new alphabet has at most (#old components) +
    (#discontinuities) letters.
    """
    if sub.d != pmap.d:
        raise FieldMismatch("subdivision and map use different field contexts")
    cuts = sorted(pmap.discontinuities())

    per_letter = {}
    for letter in sub.alphabet:
        segments = []
        for comp in sub.class_of(letter).components:
            interior = [p for p in cuts if comp.lo < p < comp.hi]
            segments.extend(_cut_component(comp, interior))
        per_letter[letter] = segments

    names = [
        (f"{letter}{i}", letter, seg)
        for letter in sub.alphabet
        for i, seg in enumerate(per_letter[letter])
    ]
    if len({name for name, _, _ in names}) != len(names):
        # plain concatenation collided (e.g. letters "A" and "A0"); an
        # underscore keeps names unambiguous while staying deterministic
        names = [
            (f"{letter}_{i}", letter, seg)
            for letter in sub.alphabet
            for i, seg in enumerate(per_letter[letter])
        ]

    refined = Subdivision({name: BoundarySet([seg]) for name, _, seg in names})
    gluing = GluingMap({name: letter for name, letter, _ in names})
    return refined, gluing


def glue_word(word, gluing):
    """Apply the gluing letterwise; SymbolicWord in, SymbolicWord out."""
    from .coding import SymbolicWord

    if isinstance(word, SymbolicWord):
        letters = tuple(gluing(l) for l in word.letters)
        return word.projected(letters)
    if isinstance(word, str):
        word = word.split()
    return tuple(gluing(l) for l in word)
