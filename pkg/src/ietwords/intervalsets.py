"""Exact set algebra for finite unions of intervals with endpoint flags.

A component (lo, lo_in, hi, hi_in) denotes the interval from lo to hi with
each endpoint included iff its flag is set; lo == hi with both flags set is
a singleton point.  Endpoints are ExactScalar values from one field
context, so every operation here is decided exactly.

Positions are compared through keys (x, eps) with eps in {-1, 0, +1}
standing for "just below x", "x itself", "just above x".  A component is
the key range [lo_key, hi_key]; unions, intersections and adjacency checks
reduce to tuple comparisons on keys.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactnum import ExactScalar

BELOW, AT, ABOVE = -1, 0, 1


def _lo_key(lo, lo_in):
    return (lo, AT if lo_in else ABOVE)


def _hi_key(hi, hi_in):
    return (hi, AT if hi_in else BELOW)


def _succ(key):
    # next representable position: x- -> x -> x+
    return (key[0], key[1] + 1)


@dataclass(frozen=True)
class Component:
    """One maximal interval of a BoundarySet."""

    lo: ExactScalar
    lo_in: bool
    hi: ExactScalar
    hi_in: bool

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty component: lo {self.lo} > hi {self.hi}")
        if self.lo == self.hi and not (self.lo_in and self.hi_in):
            raise ValueError("a single point needs both endpoints included")

    @property
    def lo_key(self):
        return _lo_key(self.lo, self.lo_in)

    @property
    def hi_key(self):
        return _hi_key(self.hi, self.hi_in)

    def contains(self, x):
        return self.lo_key <= (x, AT) <= self.hi_key

    def is_singleton(self):
        return self.lo == self.hi

    def length(self):
        return self.hi - self.lo

    def sample_point(self):
        """A representative point, preferring the left endpoint."""
        if self.lo_in:
            return self.lo
        # open on the left: lo < hi here, so the midpoint is interior
        return _midpoint(self.lo, self.hi)

    def __str__(self):
        left = "[" if self.lo_in else "("
        right = "]" if self.hi_in else ")"
        return f"{left}{self.lo}, {self.hi}{right}"


def _midpoint(a, b):
    from fractions import Fraction

    return (a + b) * Fraction(1, 2)


def _from_keys(lo_key, hi_key):
    (lo, le), (hi, he) = lo_key, hi_key
    if le == BELOW or he == ABOVE:
        raise ValueError("keys do not bound a component")
    return Component(lo, le == AT, hi, he == AT)


class BoundarySet:
    """A canonical finite union of flagged intervals.

    Components are pairwise disjoint, sorted and non-adjacent; the empty
    set is allowed.  Instances are immutable.
    """

    __slots__ = ("_components",)

    def __init__(self, components=()):
        self._components = _canonical_components(components)

    @property
    def components(self):
        return self._components

    def is_empty(self):
        return not self._components

    def contains(self, x):
        key = (x, AT)
        for c in self._components:
            if c.lo_key > key:
                return False
            if key <= c.hi_key:
                return True
        return False

    __contains__ = contains

    def length(self):
        total = None
        for c in self._components:
            total = c.length() if total is None else total + c.length()
        return total

    def union(self, other):
        return BoundarySet(self._components + other._components)

    def intersect(self, other):
        out = []
        for a in self._components:
            for b in other._components:
                lo_key = max(a.lo_key, b.lo_key)
                hi_key = min(a.hi_key, b.hi_key)
                if lo_key <= hi_key:
                    out.append(_from_keys(lo_key, hi_key))
        return BoundarySet(out)

    def intersects(self, other):
        for a in self._components:
            for b in other._components:
                if max(a.lo_key, b.lo_key) <= min(a.hi_key, b.hi_key):
                    return True
        return False

    def sample_point(self):
        if self.is_empty():
            raise ValueError("empty set has no points")
        return self._components[0].sample_point()

    def transform(self, slope, intercept):
        """Image under x -> slope*x + intercept with slope +1 or -1."""
        out = []
        for c in self._components:
            if slope == 1:
                out.append(
                    Component(c.lo + intercept, c.lo_in, c.hi + intercept, c.hi_in)
                )
            else:
                out.append(
                    Component(-c.hi + intercept, c.hi_in, -c.lo + intercept, c.lo_in)
                )
        return BoundarySet(out)

    def __eq__(self, other):
        if not isinstance(other, BoundarySet):
            return NotImplemented
        return self._components == other._components

    def __hash__(self):
        return hash(self._components)

    def __iter__(self):
        return iter(self._components)

    def __len__(self):
        return len(self._components)

    def __repr__(self):
        if not self._components:
            return "BoundarySet(empty)"
        return "BoundarySet(" + " u ".join(str(c) for c in self._components) + ")"


def interval(lo, hi, lo_in=True, hi_in=False):
    """Single flagged interval as a BoundarySet; [lo, hi) by default."""
    return BoundarySet([Component(lo, lo_in, hi, hi_in)])


def singleton(x):
    return BoundarySet([Component(x, True, x, True)])


def split_below(component, p):
    """component ∩ {x < p} as a key pair, or None when empty."""
    lo_key = component.lo_key
    hi_key = min(component.hi_key, (p, BELOW))
    if lo_key <= hi_key:
        return _from_keys(lo_key, hi_key)
    return None


def split_above(component, p):
    """component ∩ {x > p} as a key pair, or None when empty."""
    lo_key = max(component.lo_key, (p, ABOVE))
    hi_key = component.hi_key
    if lo_key <= hi_key:
        return _from_keys(lo_key, hi_key)
    return None


def _canonical_components(components):
    comps = sorted(components, key=lambda c: c.lo_key)
    merged = []
    for c in comps:
        if merged and c.lo_key <= _succ(merged[-1].hi_key):
            last = merged[-1]
            if c.hi_key > last.hi_key:
                merged[-1] = _from_keys(last.lo_key, c.hi_key)
        else:
            merged.append(c)
    return tuple(merged)
