"""Piecewise-affine transformations of [0, 1) and interval exchanges.

A PiecewiseMap is a finite list of affine pieces with slope +1 or -1 whose
half-open domains tile [0, 1).  Validation is report-style: invalid maps
can be built and inspected, but the dynamic operations assume a map whose
report is clean.  An IET is the translation-bijection special case, stored
as lengths plus a permutation.
"""

from __future__ import annotations

import hashlib
from bisect import bisect_right
from dataclasses import dataclass

from .exactnum import ExactScalar, FieldMismatch, format_scalar
from .intervalsets import BoundarySet, Component


class PointOutsideDomain(ValueError):
    """A point outside [0, 1) was fed to the dynamics."""


class CorruptMap(RuntimeError):
    """An operation that requires a validated map found it broken."""


class NotTranslationPiecewise(ValueError):
    """to_iet needs every slope to be +1."""


class NotBijective(ValueError):
    """to_iet needs the piece images to tile [0, 1) exactly."""


@dataclass(frozen=True)
class HalfOpenInterval:
    """[lo, hi) with 0 <= lo < hi <= 1, endpoints in one field context."""

    lo: ExactScalar
    hi: ExactScalar

    def __post_init__(self):
        if self.lo.d != self.hi.d:
            raise FieldMismatch("interval endpoints from different field contexts")
        zero = ExactScalar.zero(self.lo.d)
        one = ExactScalar.one(self.lo.d)
        if not (zero <= self.lo < self.hi <= one):
            raise ValueError(f"need 0 <= lo < hi <= 1, got [{self.lo}, {self.hi})")

    def contains(self, x):
        return self.lo <= x < self.hi

    def length(self):
        return self.hi - self.lo

    def __str__(self):
        return f"[{self.lo}, {self.hi})"


@dataclass(frozen=True)
class AffinePiece:
    """x -> slope*x + intercept on a half-open domain, slope +1 or -1."""

    domain: HalfOpenInterval
    slope: int
    intercept: ExactScalar

    def __post_init__(self):
        if self.slope not in (1, -1):
            raise ValueError(f"slope must be +1 or -1, got {self.slope}")
        if self.intercept.d != self.domain.lo.d:
            raise FieldMismatch("intercept from a different field context")

    def __call__(self, x):
        if self.slope == 1:
            return x + self.intercept
        return -x + self.intercept

    def image_set(self):
        """Exact image: [l, h) for slope +1, (l, h] for slope -1."""
        if self.slope == 1:
            return BoundarySet(
                [
                    Component(
                        self.domain.lo + self.intercept,
                        True,
                        self.domain.hi + self.intercept,
                        False,
                    )
                ]
            )
        return BoundarySet(
            [
                Component(
                    -self.domain.hi + self.intercept,
                    False,
                    -self.domain.lo + self.intercept,
                    True,
                )
            ]
        )

    def invert(self, image_subset):
        """Preimage of a BoundarySet already known to sit inside the image."""
        if self.slope == 1:
            return image_subset.transform(1, -self.intercept)
        # x -> -x + c is an involution
        return image_subset.transform(-1, self.intercept)


@dataclass(frozen=True)
class MapViolation:
    kind: str          # "domain-overlap" | "coverage-gap" | "image-escape"
    detail: str
    witness: ExactScalar | None = None


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[MapViolation, ...]
    bijective: bool

    @property
    def ok(self):
        return not self.violations

    def __str__(self):
        if self.ok:
            kind = "bijective" if self.bijective else "non-bijective"
            return f"valid ({kind})"
        return "; ".join(f"{v.kind}: {v.detail}" for v in self.violations)


class PiecewiseMap:
    """Finitely many affine pieces, sorted by domain start."""

    __slots__ = ("_pieces", "_d", "_los", "_report")

    def __init__(self, pieces):
        pieces = sorted(pieces, key=lambda p: p.domain.lo)
        if not pieces:
            raise ValueError("a map needs at least one piece")
        d = pieces[0].domain.lo.d
        for p in pieces:
            if p.domain.lo.d != d:
                raise FieldMismatch("pieces from different field contexts")
        self._pieces = tuple(pieces)
        self._d = d
        self._los = [p.domain.lo for p in pieces]
        self._report = None

    @property
    def pieces(self):
        return self._pieces

    @property
    def d(self):
        return self._d

    def __len__(self):
        return len(self._pieces)

    def piece_at(self, x):
        zero = ExactScalar.zero(self._d)
        one = ExactScalar.one(self._d)
        if not (zero <= x < one):
            raise PointOutsideDomain(f"{x} outside [0, 1)")
        idx = bisect_right(self._los, x) - 1
        if idx < 0 or not self._pieces[idx].domain.contains(x):
            raise CorruptMap(f"no piece contains {x}")
        return self._pieces[idx]

    def apply(self, x):
        return self.piece_at(x)(x)

    __call__ = apply

    def discontinuities(self):
        """Interior boundaries where the left limit differs from the value."""
        points = []
        for left, right in zip(self._pieces, self._pieces[1:]):
            p = right.domain.lo
            left_limit = left(p)
            if left_limit != right(p):
                points.append(p)
        return points

    def validate(self):
        """Structural report: overlaps, gaps, escaping images, bijectivity."""
        if self._report is not None:
            return self._report
        violations = []
        zero = ExactScalar.zero(self._d)
        one = ExactScalar.one(self._d)

        cursor = zero
        for p in self._pieces:
            if p.domain.lo > cursor:
                violations.append(
                    MapViolation(
                        "coverage-gap",
                        f"nothing covers [{cursor}, {p.domain.lo})",
                        witness=cursor,
                    )
                )
            elif p.domain.lo < cursor:
                violations.append(
                    MapViolation(
                        "domain-overlap",
                        f"domains overlap from {p.domain.lo}",
                        witness=p.domain.lo,
                    )
                )
            if p.domain.hi > cursor:
                cursor = p.domain.hi
        if cursor < one:
            violations.append(
                MapViolation(
                    "coverage-gap",
                    f"nothing covers [{cursor}, 1)",
                    witness=cursor,
                )
            )

        image_sets = []
        for i, p in enumerate(self._pieces):
            if p.slope == 1:
                lo_img = p.domain.lo + p.intercept
                hi_img = p.domain.hi + p.intercept
                escapes = lo_img < zero or hi_img > one
            else:
                lo_img = -p.domain.hi + p.intercept
                hi_img = -p.domain.lo + p.intercept
                # hi_img is attained (slope -1 image is (lo, hi]), so 1 is out
                escapes = lo_img < zero or hi_img >= one
            if escapes:
                violations.append(
                    MapViolation(
                        "image-escape",
                        f"piece {i} maps {p.domain} outside [0, 1)",
                        witness=p.domain.lo,
                    )
                )
            else:
                image_sets.append(p.image_set())

        bijective = False
        if len(image_sets) == len(self._pieces):
            bijective = not any(
                a.intersects(b)
                for k, a in enumerate(image_sets)
                for b in image_sets[k + 1 :]
            )
            if bijective:
                union = BoundarySet()
                for s in image_sets:
                    union = union.union(s)
                full = BoundarySet([Component(zero, True, one, False)])
                bijective = union == full

        self._report = ValidationReport(tuple(violations), bijective)
        return self._report

    def require_valid(self):
        report = self.validate()
        if not report.ok:
            raise CorruptMap(str(report))
        return self

    def content_id(self):
        """Deterministic identity string derived from the pieces."""
        text = ";".join(
            f"{format_scalar(p.domain.lo)},{format_scalar(p.domain.hi)},"
            f"{p.slope},{format_scalar(p.intercept)}"
            for p in self._pieces
        )
        return "map:" + hashlib.sha256(text.encode()).hexdigest()[:12]

    def __eq__(self, other):
        if not isinstance(other, PiecewiseMap):
            return NotImplemented
        return self._pieces == other._pieces

    def __hash__(self):
        return hash(self._pieces)

    def __repr__(self):
        parts = ", ".join(
            f"{p.domain} -> {'+x' if p.slope == 1 else '-x'}+{p.intercept}"
            for p in self._pieces
        )
        return f"PiecewiseMap({parts})"


@dataclass(frozen=True)
class IET:
    """Interval exchange: interval i (with the given length) moves to slot
    permutation[i], counted left to right in the image."""

    lengths: tuple
    permutation: tuple

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(self.lengths))
        object.__setattr__(self, "permutation", tuple(self.permutation))
        if len(self.lengths) != len(self.permutation):
            raise ValueError("lengths and permutation sizes differ")
        if sorted(self.permutation) != list(range(len(self.lengths))):
            raise ValueError(f"not a permutation of 0..{len(self.lengths) - 1}")
        d = self.lengths[0].d
        zero = ExactScalar.zero(d)
        total = zero
        for length in self.lengths:
            if length.d != d:
                raise FieldMismatch("lengths from different field contexts")
            if not length > zero:
                raise ValueError("lengths must be positive")
            total = total + length
        if total != ExactScalar.one(d):
            raise ValueError(f"lengths sum to {total}, expected 1")

    @property
    def d(self):
        return self.lengths[0].d


def iet_to_map(iet):
    """Embed an IET as its canonical translation PiecewiseMap."""
    k = len(iet.lengths)
    zero = ExactScalar.zero(iet.d)

    src_starts = [zero]
    for length in iet.lengths[:-1]:
        src_starts.append(src_starts[-1] + length)

    # slot s is occupied by the interval i with permutation[i] == s
    by_slot = sorted(range(k), key=lambda i: iet.permutation[i])
    dest_starts = [None] * k
    cursor = zero
    for i in by_slot:
        dest_starts[i] = cursor
        cursor = cursor + iet.lengths[i]

    pieces = []
    for i in range(k):
        domain = HalfOpenInterval(src_starts[i], src_starts[i] + iet.lengths[i])
        pieces.append(AffinePiece(domain, 1, dest_starts[i] - src_starts[i]))
    return PiecewiseMap(pieces)


def to_iet(pmap):
    """Recover the IET presentation of a translation bijection."""
    for p in pmap.pieces:
        if p.slope != 1:
            raise NotTranslationPiecewise("a piece has slope -1")
    report = pmap.validate()
    if not report.ok or not report.bijective:
        raise NotBijective(str(report))
    lengths = tuple(p.domain.length() for p in pmap.pieces)
    image_starts = [p.domain.lo + p.intercept for p in pmap.pieces]
    order = sorted(range(len(image_starts)), key=lambda i: image_starts[i])
    permutation = [0] * len(order)
    for slot, i in enumerate(order):
        permutation[i] = slot
    return IET(lengths, tuple(permutation))


def identity_map(d=0):
    zero = ExactScalar.zero(d)
    one = ExactScalar.one(d)
    return PiecewiseMap([AffinePiece(HalfOpenInterval(zero, one), 1, zero)])


def rotation(angle):
    """Rotation x -> x + angle (mod 1) as a two-piece translation map."""
    d = angle.d
    zero = ExactScalar.zero(d)
    one = ExactScalar.one(d)
    if not (zero <= angle < one):
        raise ValueError(f"angle must lie in [0, 1), got {angle}")
    if angle == zero:
        return identity_map(d)
    cut = one - angle
    return PiecewiseMap(
        [
            AffinePiece(HalfOpenInterval(zero, cut), 1, angle),
            AffinePiece(HalfOpenInterval(cut, one), 1, angle - one),
        ]
    )
