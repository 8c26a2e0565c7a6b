"""JSON forms for maps, subdivisions, words, gluings, and instance files.

Scalars travel as grammar strings ("-1/2+1/2*sqrt(5)"), never as floats:
a float would silently destroy exactness, so no serializer here ever emits
one.  Schema problems raise SpecError with a JSON-pointer-style path;
semantic problems (overlaps, invalid maps, out-of-range starting points)
are left to the domain validators and keep their own exception types.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .exactnum import (
    ExactScalar,
    FieldMismatch,
    NonSquarefreeRadicand,
    ParseError,
    ZeroDenominator,
    format_scalar,
    parse_scalar,
)
from .intervalsets import BoundarySet, Component
from .intervalmap import IET, AffinePiece, HalfOpenInterval, PiecewiseMap
from .subdivision import GluingMap, Subdivision


class SpecError(ValueError):
    """A structural problem in an instance document, with its location."""

    def __init__(self, path, message):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}")


@dataclass(frozen=True)
class InstanceSpec:
    """A fully parsed instance: map, subdivision, start point, length."""

    field_d: int
    pmap: PiecewiseMap
    sub: Subdivision
    x0: ExactScalar
    length: int
    iet: IET | None = None      # set when the document described an IET


# ---------------------------------------------------------------- writers

def map_to_json(pmap):
    return {
        "pieces": [
            {
                "lo": format_scalar(p.domain.lo),
                "hi": format_scalar(p.domain.hi),
                "slope": p.slope,
                "intercept": format_scalar(p.intercept),
            }
            for p in pmap.pieces
        ]
    }


def iet_to_json(iet):
    return {
        "lengths": [format_scalar(l) for l in iet.lengths],
        "permutation": list(iet.permutation),
    }


def subdivision_to_json(sub):
    return {
        "classes": {
            letter: [
                {
                    "lo": format_scalar(c.lo),
                    "hi": format_scalar(c.hi),
                    "lo_in": c.lo_in,
                    "hi_in": c.hi_in,
                }
                for c in sub.class_of(letter).components
            ]
            for letter in sub.alphabet
        }
    }


def gluing_to_json(gluing):
    return gluing.mapping


def word_to_json(word):
    origin = None
    if word.origin is not None:
        origin = {
            "map_id": word.origin.map_id,
            "subdivision_id": word.origin.subdivision_id,
            "x0": format_scalar(word.origin.x0),
            "length": word.origin.length,
            "projected": word.origin.projected,
        }
    return {"letters": list(word.letters), "origin": origin}


def instance_to_json(spec):
    doc = {
        "field_d": spec.field_d,
        "map": iet_to_json(spec.iet) if spec.iet is not None else map_to_json(spec.pmap),
        "subdivision": subdivision_to_json(spec.sub),
        "x0": format_scalar(spec.x0),
        "length": spec.length,
    }
    return doc


def dumps(obj):
    """Canonical text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------- readers

def _require(obj, key, path):
    if not isinstance(obj, dict):
        raise SpecError(path, f"expected an object, got {type(obj).__name__}")
    if key not in obj:
        raise SpecError(path, f"missing key {key!r}")
    return obj[key]


def _read_scalar(text, d, path):
    if not isinstance(text, str):
        raise SpecError(path, f"scalars are grammar strings, got {type(text).__name__}")
    try:
        return parse_scalar(text, d=d)
    except ParseError as e:
        raise SpecError(path, f"bad scalar at position {e.position}: {e.message}") from e
    except (ZeroDenominator, NonSquarefreeRadicand, FieldMismatch) as e:
        raise SpecError(path, str(e)) from e


def _read_int(value, path, minimum=None):
    if not isinstance(value, int) or isinstance(value, bool):
        raise SpecError(path, f"expected an integer, got {type(value).__name__}")
    if minimum is not None and value < minimum:
        raise SpecError(path, f"expected an integer >= {minimum}, got {value}")
    return value


def _read_bool(value, path):
    if not isinstance(value, bool):
        raise SpecError(path, f"expected a boolean, got {type(value).__name__}")
    return value


def map_from_json(obj, d, path="/map"):
    """A PiecewiseMap from either the pieces form or the IET form.

    Returns (pmap, iet-or-None).  Structure errors raise SpecError; the
    map is built but not validated here.
    """
    if not isinstance(obj, dict):
        raise SpecError(path, f"expected an object, got {type(obj).__name__}")
    if "pieces" in obj:
        pieces_obj = obj["pieces"]
        if not isinstance(pieces_obj, list) or not pieces_obj:
            raise SpecError(f"{path}/pieces", "expected a nonempty array")
        pieces = []
        for i, po in enumerate(pieces_obj):
            ppath = f"{path}/pieces/{i}"
            lo = _read_scalar(_require(po, "lo", ppath), d, f"{ppath}/lo")
            hi = _read_scalar(_require(po, "hi", ppath), d, f"{ppath}/hi")
            slope = _require(po, "slope", ppath)
            if slope not in (1, -1):
                raise SpecError(f"{ppath}/slope", f"slope must be 1 or -1, got {slope!r}")
            intercept = _read_scalar(
                _require(po, "intercept", ppath), d, f"{ppath}/intercept"
            )
            try:
                pieces.append(AffinePiece(HalfOpenInterval(lo, hi), slope, intercept))
            except ValueError as e:
                raise SpecError(ppath, str(e)) from e
        return PiecewiseMap(pieces), None
    if "lengths" in obj:
        lengths_obj = obj["lengths"]
        if not isinstance(lengths_obj, list) or not lengths_obj:
            raise SpecError(f"{path}/lengths", "expected a nonempty array")
        lengths = [
            _read_scalar(t, d, f"{path}/lengths/{i}") for i, t in enumerate(lengths_obj)
        ]
        perm_obj = _require(obj, "permutation", path)
        if not isinstance(perm_obj, list):
            raise SpecError(f"{path}/permutation", "expected an array")
        perm = [
            _read_int(v, f"{path}/permutation/{i}") for i, v in enumerate(perm_obj)
        ]
        from .intervalmap import iet_to_map

        try:
            iet = IET(tuple(lengths), tuple(perm))
        except ValueError as e:
            raise SpecError(path, str(e)) from e
        return iet_to_map(iet), iet
    raise SpecError(path, "expected either a 'pieces' or a 'lengths' description")


def subdivision_from_json(obj, d, path="/subdivision"):
    classes_obj = _require(obj, "classes", path)
    if not isinstance(classes_obj, dict) or not classes_obj:
        raise SpecError(f"{path}/classes", "expected a nonempty object")
    classes = {}
    for letter, comps_obj in classes_obj.items():
        cpath = f"{path}/classes/{letter}"
        if not isinstance(comps_obj, list) or not comps_obj:
            raise SpecError(cpath, "expected a nonempty array of intervals")
        comps = []
        for i, co in enumerate(comps_obj):
            ipath = f"{cpath}/{i}"
            lo = _read_scalar(_require(co, "lo", ipath), d, f"{ipath}/lo")
            hi = _read_scalar(_require(co, "hi", ipath), d, f"{ipath}/hi")
            lo_in = _read_bool(co.get("lo_in", True), f"{ipath}/lo_in")
            hi_in = _read_bool(co.get("hi_in", False), f"{ipath}/hi_in")
            try:
                comps.append(Component(lo, lo_in, hi, hi_in))
            except ValueError as e:
                raise SpecError(ipath, str(e)) from e
        classes[letter] = BoundarySet(comps)
    return Subdivision(classes)


def gluing_from_json(obj, path="/gluing"):
    if not isinstance(obj, dict) or not obj:
        raise SpecError(path, "expected a nonempty object of letter pairs")
    for k, v in obj.items():
        if not isinstance(v, str):
            raise SpecError(f"{path}/{k}", "expected a letter string")
    return GluingMap(obj)


def parse_spec(document):
    """Parse and validate a full instance document (text or decoded dict).

    Schema problems raise SpecError with a pointer path.  Domain problems
    (class overlap, coverage gap, invalid map, x0 outside [0, 1)) raise
    their module exceptions so callers can tell the two apart.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            raise SpecError("/", f"invalid JSON: {e}") from e
    if not isinstance(document, dict):
        raise SpecError("/", "expected a JSON object")

    d = _read_int(_require(document, "field_d", "/"), "/field_d", minimum=0)
    try:
        ExactScalar.zero(d)
    except NonSquarefreeRadicand as e:
        raise SpecError("/field_d", str(e)) from e

    pmap, iet = map_from_json(_require(document, "map", "/"), d)
    sub = subdivision_from_json(_require(document, "subdivision", "/"), d)
    x0 = _read_scalar(_require(document, "x0", "/"), d, "/x0")
    length = _read_int(_require(document, "length", "/"), "/length", minimum=1)

    pmap.require_valid()

    from .intervalmap import PointOutsideDomain

    zero, one = ExactScalar.zero(d), ExactScalar.one(d)
    if not (zero <= x0 < one):
        raise PointOutsideDomain(f"x0 = {x0} outside [0, 1)")

    return InstanceSpec(d, pmap, sub, x0, length, iet)
