"""Exact symbolic coding of piecewise-affine interval maps.

Generate symbolic words by coding orbits of interval exchange
transformations and other piecewise-affine maps of [0, 1), decide when a
coloring is good for a map, refine any coloring into a good one, and glue
the refined coding back — all in exact arithmetic over Q(sqrt(d)).
"""

from .exactnum import (
    EQ,
    GT,
    LT,
    ExactScalar,
    FieldMismatch,
    NonSquarefreeRadicand,
    OutOfExpectedRange,
    ParseError,
    ZeroDenominator,
    add,
    cmp,
    format_scalar,
    make_scalar,
    mod1,
    mul,
    neg,
    parse_scalar,
    sub,
)
from .intervalsets import BoundarySet, Component, interval, singleton
from .intervalmap import (
    IET,
    AffinePiece,
    CorruptMap,
    HalfOpenInterval,
    NotBijective,
    NotTranslationPiecewise,
    PiecewiseMap,
    PointOutsideDomain,
    identity_map,
    iet_to_map,
    rotation,
    to_iet,
)
from .subdivision import (
    CoverageGapError,
    GluingMap,
    GoodnessCertificate,
    GoodnessViolation,
    OverlapError,
    Subdivision,
    UnknownLetter,
    canonicalize,
    color_of,
    glue_word,
    is_good,
    refine_to_good,
)
from .coding import (
    OK,
    Orbit,
    RoundtripResult,
    SymbolicWord,
    WordOrigin,
    code,
    iter_code,
    iter_orbit,
    orbit,
    roundtrip_check,
)
from .analysis import (
    APERIODIC_AT_SCALE,
    NOT_RECURRENT_AT_SCALE,
    ComplexityProfile,
    PrefixTooShort,
    RecurrenceProfile,
    complexity,
    detect_period,
    recurrence_profile,
    recurrence_window,
)
from .jsonio import (
    InstanceSpec,
    SpecError,
    dumps,
    gluing_from_json,
    gluing_to_json,
    iet_to_json,
    instance_to_json,
    map_from_json,
    map_to_json,
    parse_spec,
    subdivision_from_json,
    subdivision_to_json,
    word_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "APERIODIC_AT_SCALE",
    "AffinePiece",
    "BoundarySet",
    "ComplexityProfile",
    "Component",
    "CorruptMap",
    "CoverageGapError",
    "EQ",
    "ExactScalar",
    "FieldMismatch",
    "GT",
    "GluingMap",
    "GoodnessCertificate",
    "GoodnessViolation",
    "HalfOpenInterval",
    "IET",
    "InstanceSpec",
    "LT",
    "NOT_RECURRENT_AT_SCALE",
    "NonSquarefreeRadicand",
    "NotBijective",
    "NotTranslationPiecewise",
    "OK",
    "Orbit",
    "OutOfExpectedRange",
    "OverlapError",
    "ParseError",
    "PiecewiseMap",
    "PointOutsideDomain",
    "PrefixTooShort",
    "RecurrenceProfile",
    "RoundtripResult",
    "SpecError",
    "Subdivision",
    "SymbolicWord",
    "UnknownLetter",
    "WordOrigin",
    "ZeroDenominator",
    "add",
    "canonicalize",
    "cmp",
    "code",
    "color_of",
    "complexity",
    "detect_period",
    "dumps",
    "format_scalar",
    "glue_word",
    "gluing_from_json",
    "gluing_to_json",
    "identity_map",
    "iet_to_json",
    "iet_to_map",
    "instance_to_json",
    "interval",
    "is_good",
    "iter_code",
    "iter_orbit",
    "make_scalar",
    "map_from_json",
    "map_to_json",
    "mod1",
    "mul",
    "neg",
    "orbit",
    "parse_scalar",
    "parse_spec",
    "recurrence_profile",
    "recurrence_window",
    "refine_to_good",
    "rotation",
    "roundtrip_check",
    "singleton",
    "sub",
    "subdivision_from_json",
    "subdivision_to_json",
    "to_iet",
    "word_to_json",
]
