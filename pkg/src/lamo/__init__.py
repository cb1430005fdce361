"""Inverse sequence pairs, complementary integer sets, and the two-runner
event simulation that cross-checks them, all in exact arithmetic."""

from .errors import (
    CollisionPresent,
    EmptyWindow,
    HorizonExceeded,
    IncompatibleRadicands,
    InfiniteValue,
    LamoError,
    NonPositiveSlope,
    NonPositiveTime,
    NotNonDecreasing,
    NotPositive,
    NotSorted,
    OutsideImage,
    ParseError,
    UnsupportedPoint,
    ZeroDenominator,
)
from .exact import ExactNumber
from .sequences import (
    INF,
    ExtNat,
    IntSet,
    NumberSequence,
    Tail,
    Verdict,
    check_complementary,
    check_non_decreasing,
    classify,
    from_set,
    grid_witness,
    hat,
    hat_horizon,
    invert,
    mutually_inverse_on_window,
)
from .continuous import (
    Avoidance,
    LinearMap,
    MonotoneMap,
    PiecewiseMap,
    beatty_pair,
    construct_phi,
    corollary_sets,
    induced_inverse,
    lattice_avoidance,
    meeting_count,
)
from .runner import Event, EventLog, meeting_time, meets_at_origin, recorded_sets, simulate

__version__ = "0.1.0"

__all__ = [
    "CollisionPresent",
    "EmptyWindow",
    "HorizonExceeded",
    "IncompatibleRadicands",
    "InfiniteValue",
    "LamoError",
    "NonPositiveSlope",
    "NonPositiveTime",
    "NotNonDecreasing",
    "NotPositive",
    "NotSorted",
    "OutsideImage",
    "ParseError",
    "UnsupportedPoint",
    "ZeroDenominator",
    "ExactNumber",
    "INF",
    "ExtNat",
    "IntSet",
    "NumberSequence",
    "Tail",
    "Verdict",
    "check_complementary",
    "check_non_decreasing",
    "classify",
    "from_set",
    "grid_witness",
    "hat",
    "hat_horizon",
    "invert",
    "mutually_inverse_on_window",
    "Avoidance",
    "LinearMap",
    "MonotoneMap",
    "PiecewiseMap",
    "beatty_pair",
    "construct_phi",
    "corollary_sets",
    "induced_inverse",
    "lattice_avoidance",
    "meeting_count",
    "Event",
    "EventLog",
    "meeting_time",
    "meets_at_origin",
    "recorded_sets",
    "simulate",
    "__version__",
]
