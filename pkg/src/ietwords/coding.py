"""Orbits and their symbolic codings.

The word of x0 under a map T and subdivision S is the color sequence of
T^0 x0, T^1 x0, T^2 x0, ...  Batch and streaming generation share one code
path, and the glue-back round trip is checked in a single fused orbit walk.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import count, islice

from .exactnum import ExactScalar, FieldMismatch
from .intervalmap import PointOutsideDomain
from .subdivision import refine_to_good


@dataclass(frozen=True)
class WordOrigin:
    """Where a word came from: which map, subdivision, start point, length."""

    map_id: str
    subdivision_id: str
    x0: ExactScalar
    length: int
    projected: bool = False


class SymbolicWord:
    """An immutable finite letter sequence with its provenance.

    Equality compares letters only; the origin is metadata (a glued word
    can equal the directly generated one).
    """

    __slots__ = ("_letters", "_origin")

    def __init__(self, letters, origin=None):
        self._letters = tuple(str(l) for l in letters)
        if origin is not None and origin.length != len(self._letters):
            raise ValueError("origin length disagrees with letter count")
        self._origin = origin

    @property
    def letters(self):
        return self._letters

    @property
    def origin(self):
        return self._origin

    def projected(self, new_letters):
        """The same word seen through a gluing; origin marked as projected."""
        origin = None
        if self._origin is not None:
            origin = replace(self._origin, projected=True)
        return SymbolicWord(new_letters, origin)

    def text(self, wrap=None):
        """Whitespace-separated tokens, optionally wrapped every `wrap` tokens."""
        if wrap is None:
            return " ".join(self._letters)
        lines = [
            " ".join(self._letters[i : i + wrap])
            for i in range(0, len(self._letters), wrap)
        ]
        return "\n".join(lines)

    def __len__(self):
        return len(self._letters)

    def __iter__(self):
        return iter(self._letters)

    def __getitem__(self, i):
        return self._letters[i]

    def __eq__(self, other):
        if isinstance(other, SymbolicWord):
            return self._letters == other._letters
        if isinstance(other, (tuple, list)):
            return self._letters == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._letters)

    def __repr__(self):
        shown = " ".join(self._letters[:12])
        if len(self._letters) > 12:
            shown += " ..."
        return f"SymbolicWord({len(self._letters)} letters: {shown})"


@dataclass(frozen=True)
class Orbit:
    """Forward orbit segment: points[k+1] = map(points[k])."""

    points: tuple

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]


def _check_start(pmap, x0):
    zero = ExactScalar.zero(pmap.d)
    one = ExactScalar.one(pmap.d)
    if not (zero <= x0 < one):
        raise PointOutsideDomain(f"{x0} outside [0, 1)")


def iter_orbit(pmap, x0, n=None):
    """Stream the forward orbit of x0; infinite when n is None."""
    _check_start(pmap, x0)
    x = x0
    steps = count() if n is None else range(n)
    for _ in steps:
        yield x
        x = pmap.apply(x)


def orbit(pmap, x0, n):
    """The first n orbit points of x0, exactly."""
    if n < 1:
        raise ValueError("need n >= 1")
    return Orbit(tuple(iter_orbit(pmap, x0, n)))


def iter_code(pmap, sub, x0, n=None):
    """Stream the coding letters of x0's orbit; constant memory."""
    if sub.d != pmap.d:
        raise FieldMismatch("subdivision and map use different field contexts")
    for x in iter_orbit(pmap, x0, n):
        yield sub.color_of(x)


def code(pmap, sub, x0, n):
    """The length-n coding word of x0 under (pmap, sub)."""
    if n < 1:
        raise ValueError("need n >= 1")
    letters = tuple(islice(iter_code(pmap, sub, x0), n))
    origin = WordOrigin(pmap.content_id(), sub.content_id(), x0, n)
    return SymbolicWord(letters, origin)


@dataclass(frozen=True)
class RoundtripResult:
    """Outcome of the refine-code-glue comparison."""

    ok: bool
    mismatch_index: int | None = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "OK" if self.ok else f"Mismatch({self.mismatch_index})"


OK = RoundtripResult(True)


def roundtrip_check(pmap, sub, x0, n):
    """Does gluing the refined coding recover the original coding?

    Computes (refined, gluing) = refine_to_good(sub, pmap), then walks one
    orbit coding each point against both subdivisions; the glued refined
    letter must equal the original letter at every index.  Equivalent to
    comparing glue_word(code(pmap, refined, x0, n)) with
    code(pmap, sub, x0, n), but in a single pass.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    refined, gluing = refine_to_good(sub, pmap)
    for k, x in enumerate(iter_orbit(pmap, x0, n)):
        if gluing(refined.color_of(x)) != sub.color_of(x):
            return RoundtripResult(False, k)
    return OK
