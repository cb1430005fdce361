"""Exactly representable strictly increasing maps and the sets they induce.

Two map shapes cover everything downstream: a linear map t -> lambda*t with
an exact (possibly quadratic-irrational) slope, and a piecewise-linear map
through rational anchor values at t = 1..N with a linear run from the
origin, continued past N either by extending the last slope or by a
saturating piecewise-linear approach to a finite limit.  Both shapes answer
eval, inverse and floor queries exactly, which is all the event simulation
and the set constructions below ever ask.

`construct_phi` builds, for a finite-valued non-decreasing sequence f, a
map with floor(phi(n)) = f(n) whose values at integers are never integers;
`corollary_sets` produces the pair {floor(phi(n)+n)} and
{floor(n+phi^-1(n)) : n in Im(phi)} on a window; `beatty_pair` is the
linear special case.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import (
    EmptyWindow,
    InfiniteValue,
    NonPositiveSlope,
    NonPositiveTime,
    NotNonDecreasing,
    NotPositive,
    NotSorted,
    OutsideImage,
    UnsupportedPoint,
)
from .exact import ExactNumber
from .sequences import (
    INF,
    ExtNat,
    IntSet,
    NumberSequence,
    check_non_decreasing,
)

Timelike = Union[int, Fraction, ExactNumber]


def _exact(x: Timelike) -> ExactNumber:
    e = ExactNumber._coerce(x)
    if e is None:
        raise TypeError(f"expected an exact numeric value, got {x!r}")
    return e


def _fraction(x: Timelike, what: str) -> Fraction:
    if isinstance(x, ExactNumber):
        if not x.is_rational:
            raise UnsupportedPoint(f"{what} must be rational for a piecewise map, got {x}")
        return x.as_fraction()
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(f"expected an exact numeric value, got {x!r}")
    return Fraction(x)


class MonotoneMap:
    """Strictly increasing continuous map on (0, oo) with exact queries."""

    def eval(self, t: Timelike) -> ExactNumber:
        raise NotImplementedError

    def inverse_eval(self, y: Timelike) -> ExactNumber:
        raise NotImplementedError

    def image_sup(self) -> Optional[ExactNumber]:
        """Supremum M of the open image (0, M); None when unbounded."""
        raise NotImplementedError

    def image_contains(self, y: Timelike) -> bool:
        e = _exact(y)
        if e.sign() <= 0:
            return False
        m = self.image_sup()
        return m is None or e.compare(m) < 0


class LinearMap(MonotoneMap):
    """t -> slope * t with an exact positive slope."""

    __slots__ = ("slope",)

    def __init__(self, slope: Timelike) -> None:
        s = _exact(slope)
        if s.sign() <= 0:
            raise NonPositiveSlope(f"slope must be positive, got {s}")
        self.slope = s

    def eval(self, t: Timelike) -> ExactNumber:
        e = _exact(t)
        if e.sign() <= 0:
            raise NonPositiveTime(f"time must be positive, got {e}")
        return self.slope * e

    def inverse_eval(self, y: Timelike) -> ExactNumber:
        e = _exact(y)
        if e.sign() <= 0:
            raise OutsideImage(f"{e} is outside the image (0, oo)")
        return e / self.slope

    def image_sup(self) -> Optional[ExactNumber]:
        return None

    def __repr__(self) -> str:
        return f"LinearMap({self.slope!r})"


class PiecewiseMap(MonotoneMap):
    """Linear between integer anchors t = 0, 1, .., with anchor(0) = 0.

    `anchor_values[i]` is the value at t = i+1.  Past the last stored
    anchor the map either keeps the final slope forever (unbounded image)
    or follows saturating anchors limit - s/(t+1) chosen to join the last
    stored anchor continuously, giving the open image (0, limit).
    """

    __slots__ = ("values", "limit", "_scale")

    def __init__(
        self,
        anchor_values: Sequence[Union[int, Fraction]],
        saturation_limit: Optional[Union[int, Fraction]] = None,
    ) -> None:
        vals = tuple(Fraction(v) for v in anchor_values)
        if not vals:
            raise EmptyWindow("a piecewise map needs at least one anchor")
        prev = Fraction(0)
        for v in vals:
            if v <= prev:
                if v <= 0:
                    raise NotPositive(f"anchor values must be positive, got {v}")
                raise NotSorted(f"anchor values must be strictly increasing: {v} after {prev}")
            prev = v
        self.values = vals
        if saturation_limit is None:
            self.limit = None
            self._scale = None
        else:
            lim = Fraction(saturation_limit)
            if lim <= vals[-1]:
                raise NotSorted(f"saturation limit {lim} must exceed the last anchor {vals[-1]}")
            self.limit = lim
            # limit - scale/(t+1) passes through the last stored anchor.
            self._scale = (lim - vals[-1]) * (len(vals) + 1)

    def _last_slope(self) -> Fraction:
        if len(self.values) == 1:
            return self.values[0]
        return self.values[-1] - self.values[-2]

    def anchor(self, j: int) -> Fraction:
        """Value at integer grid point j >= 0 (the t=0 anchor is the limit 0)."""
        if j < 0:
            raise NonPositiveTime(f"grid point must be >= 0, got {j}")
        if j == 0:
            return Fraction(0)
        n = len(self.values)
        if j <= n:
            return self.values[j - 1]
        if self.limit is None:
            return self.values[-1] + self._last_slope() * (j - n)
        assert self._scale is not None
        return self.limit - Fraction(self._scale, j + 1)

    def eval(self, t: Timelike) -> ExactNumber:
        x = _fraction(t, "evaluation point")
        if x <= 0:
            raise NonPositiveTime(f"time must be positive, got {x}")
        j = max(1, math.ceil(x))
        lo = self.anchor(j - 1)
        hi = self.anchor(j)
        return ExactNumber.from_fraction(lo + (x - (j - 1)) * (hi - lo))

    def inverse_eval(self, y: Timelike) -> ExactNumber:
        w = _fraction(y, "image point")
        if w <= 0:
            raise OutsideImage(f"{w} is outside the image: not positive")
        if self.limit is not None and w >= self.limit:
            raise OutsideImage(f"{w} is outside the open image (0, {self.limit})")
        n = len(self.values)
        if w > self.values[-1]:
            if self.limit is None:
                t = n + (w - self.values[-1]) / self._last_slope()
                return ExactNumber.from_fraction(t)
            assert self._scale is not None
            # Smallest grid point j > n with anchor(j) >= w, then invert the
            # linear run into it.  The candidate from limit - scale/(j+1) >= w
            # is verified exactly and nudged if needed.
            j = max(n + 1, math.ceil(self._scale / (self.limit - w) - 1))
            while self.anchor(j) < w:
                j += 1
            while j > n + 1 and self.anchor(j - 1) >= w:
                j -= 1
        else:
            j = bisect_left(self.values, w) + 1
        lo = self.anchor(j - 1)
        hi = self.anchor(j)
        t = (j - 1) + (w - lo) / (hi - lo)
        return ExactNumber.from_fraction(t)

    def image_sup(self) -> Optional[ExactNumber]:
        if self.limit is None:
            return None
        return ExactNumber.from_fraction(self.limit)

    def __repr__(self) -> str:
        tail = f", saturation_limit={self.limit!r}" if self.limit is not None else ""
        return f"PiecewiseMap({list(self.values)!r}{tail})"


@dataclass(frozen=True)
class Avoidance:
    """Result of scanning phi(n) for integer values on 1..N."""

    checked_through: int
    violation: Optional[int] = None

    @property
    def holds(self) -> bool:
        return self.violation is None

    def __str__(self) -> str:
        if self.holds:
            return f"holds through {self.checked_through}"
        return f"violation({self.violation})"


def meeting_count(phi: MonotoneMap, t: Timelike) -> int:
    """floor(phi(t) + t), the number of meetings of the two motions by time t."""
    e = _exact(t)
    return (phi.eval(e) + e).floor()


def lattice_avoidance(phi: MonotoneMap, N: int) -> Avoidance:
    """Scan n = 1..N for phi(n) landing exactly on a positive integer."""
    if not isinstance(N, int) or N < 1:
        raise NotPositive(f"scan bound must be a positive integer, got {N!r}")
    for n in range(1, N + 1):
        if phi.eval(n).is_integer():
            return Avoidance(N, n)
    return Avoidance(N)


def corollary_sets(phi: MonotoneMap, K: int) -> tuple[IntSet, IntSet]:
    """Window [1, K] of S_Y = {floor(phi(n)+n)} and S_X = {floor(n+phi^-1(n))}.

    S_X ranges over integers n inside the open image of phi.  Both
    generators are strictly increasing, so enumeration stops at the first
    value beyond K and the horizons are exactly K.
    """
    if not isinstance(K, int) or K < 1:
        raise NotPositive(f"window bound must be a positive integer, got {K!r}")
    s_y: list[int] = []
    n = 1
    while True:
        v = meeting_count(phi, n)
        if v > K:
            break
        if v >= 1:
            s_y.append(v)
        n += 1
    s_x: list[int] = []
    n = 1
    while phi.image_contains(n):
        t = phi.inverse_eval(n)
        v = (t + n).floor()
        if v > K:
            break
        if v >= 1:
            s_x.append(v)
        n += 1
    return IntSet(tuple(s_y), K), IntSet(tuple(s_x), K)


def construct_phi(f: NumberSequence) -> PiecewiseMap:
    """A strictly increasing map with floor(phi(n)) = f(n) and no integer values.

    Anchors are f(n) + 1 - 1/(n+1): the fractional parts increase strictly
    with n, so the map increases strictly even where f is constant, and
    phi(n) is never an integer.  A constant tail v appends, if needed, the
    anchor for index N+1 and then saturates toward v + 1, placing every
    integer > v outside the image; an unknown tail extends the last slope,
    with the floor guarantee holding through the prefix length.
    """
    if not check_non_decreasing(f):
        raise NotNonDecreasing(f"cannot build a map for a non-monotone sequence: {f}")
    if any(v is INF for v in f.prefix) or f.tail.kind == "infinite":
        raise InfiniteValue("map construction needs all values finite")

    def anchor_at(n: int, value: int) -> Fraction:
        return Fraction(value + 1) - Fraction(1, n + 1)

    anchors = [anchor_at(n, int(v)) for n, v in enumerate(f.prefix, start=1)]

    if f.tail.kind == "constant":
        v = f.tail.value
        assert v is not None
        N = len(f.prefix)
        if N == 0 or f.prefix[-1] != v:
            # Joining anchor for index N+1; after it the saturating
            # continuation reproduces v + 1 - 1/(n+1) at every later n.
            anchors.append(anchor_at(N + 1, v))
        return PiecewiseMap(anchors, saturation_limit=v + 1)

    if not anchors:
        raise EmptyWindow("cannot build a map from an empty prefix with unknown tail")
    return PiecewiseMap(anchors)


def induced_inverse(phi: MonotoneMap, n: int) -> ExtNat:
    """floor(phi^-1(n)) when n is in the image of phi, INF otherwise."""
    if not isinstance(n, int) or n < 1:
        raise NotPositive(f"index must be a positive integer, got {n!r}")
    if not phi.image_contains(n):
        return INF
    return phi.inverse_eval(n).floor()


def beatty_pair(lam: Timelike, K: int) -> tuple[IntSet, IntSet]:
    """Window [1, K] of {floor((1+lam)n)} and {floor((1+1/lam)n)}.

    No irrationality condition is imposed: rational slopes are legal and
    simply produce a pair that fails complementarity, which is the
    interesting failure case.
    """
    s = _exact(lam)
    if s.sign() <= 0:
        raise NonPositiveSlope(f"slope must be positive, got {s}")
    return corollary_sets(LinearMap(s), K)
