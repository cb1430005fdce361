"""Non-decreasing sequences over the extended naturals and their inverses.

A sequence is stored as a finite prefix (1-indexed) plus a tail descriptor
saying what happens after the prefix: nothing known, constant forever, or
infinite forever.  Every operation states the exact window on which its
answer is a theorem about the full infinite object; outside that window it
raises instead of guessing.

The central operation is `invert`, the counting inverse
g(n) = |{m : f(m) < n}|, together with the hat map n -> n + f(n) and the
complementarity check on the induced integer sets.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .errors import (
    EmptyWindow,
    HorizonExceeded,
    NotNonDecreasing,
    NotPositive,
    NotSorted,
)

INF = math.inf

# A sequence value: a non-negative int, or INF.
ExtNat = Union[int, float]


def is_extnat(v: object) -> bool:
    if v is INF:
        return True
    return isinstance(v, int) and not isinstance(v, bool) and v >= 0


@dataclass(frozen=True)
class Tail:
    """What a sequence does beyond its stored prefix."""

    kind: str  # "unknown" | "constant" | "infinite"
    value: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in ("unknown", "constant", "infinite"):
            raise ValueError(f"unknown tail kind {self.kind!r}")
        if self.kind == "constant":
            if not isinstance(self.value, int) or isinstance(self.value, bool) or self.value < 0:
                raise ValueError("constant tail needs a non-negative integer value")
        elif self.value is not None:
            raise ValueError(f"{self.kind} tail carries no value")

    @classmethod
    def unknown(cls) -> Tail:
        return cls("unknown")

    @classmethod
    def constant(cls, v: int) -> Tail:
        return cls("constant", v)

    @classmethod
    def infinite(cls) -> Tail:
        return cls("infinite")

    def __str__(self) -> str:
        if self.kind == "constant":
            return f"constant {self.value}"
        return self.kind


class NumberSequence:
    """Finite prefix of a sequence over ExtNat, plus a tail descriptor.

    Construction checks only that entries are well-typed; monotonicity and
    tail consistency are the job of `check_non_decreasing`, and every
    operation that needs them verifies first.  Equality is semantic: two
    values compare equal when they denote the same total function, e.g. a
    prefix ending in the constant-tail value equals the shorter prefix.
    """

    __slots__ = ("_prefix", "_tail")

    def __init__(self, prefix: Iterable[ExtNat], tail: Tail) -> None:
        entries = tuple(prefix)
        for v in entries:
            if not is_extnat(v):
                raise ValueError(f"sequence entry must be a non-negative int or inf: {v!r}")
        if not isinstance(tail, Tail):
            raise TypeError("tail must be a Tail")
        self._prefix = entries
        self._tail = tail

    @property
    def prefix(self) -> tuple[ExtNat, ...]:
        return self._prefix

    @property
    def tail(self) -> Tail:
        return self._tail

    def __len__(self) -> int:
        return len(self._prefix)

    # -- semantics --------------------------------------------------------

    def _effective_tail(self) -> Tail:
        # A prefix ending in INF forces every later value to INF, whatever
        # the declared tail says.
        if self._tail.kind == "unknown" and self._prefix and self._prefix[-1] is INF:
            return Tail.infinite()
        return self._tail

    def determined_horizon(self) -> ExtNat:
        """Largest index n for which value_at(n) is answerable (INF if all)."""
        if self._effective_tail().kind == "unknown":
            return len(self._prefix)
        return INF

    def value_at(self, n: int) -> ExtNat:
        """f(n) for 1-indexed n, or HorizonExceeded past the known window."""
        if not isinstance(n, int) or n < 1:
            raise NotPositive(f"sequence index must be >= 1, got {n!r}")
        if n <= len(self._prefix):
            return self._prefix[n - 1]
        t = self._effective_tail()
        if t.kind == "constant":
            return t.value  # type: ignore[return-value]
        if t.kind == "infinite":
            return INF
        raise HorizonExceeded(f"value at index {n} is outside the known prefix of length {len(self._prefix)}")

    def _canonical(self) -> tuple[tuple[ExtNat, ...], Tail]:
        t = self._effective_tail()
        p = list(self._prefix)
        if t.kind == "constant":
            while p and p[-1] == t.value:
                p.pop()
        elif t.kind == "infinite":
            while p and p[-1] is INF:
                p.pop()
        return tuple(p), t

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumberSequence):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self) -> int:
        return hash(self._canonical())

    def __repr__(self) -> str:
        return f"NumberSequence({self._prefix!r}, {self._tail!r})"

    def __str__(self) -> str:
        terms = ", ".join("inf" if v is INF else str(v) for v in self._prefix)
        return f"({terms}) tail {self._tail}"


@dataclass(frozen=True)
class IntSet:
    """Strictly increasing positive integers with a membership horizon.

    `horizon` = K means membership of every integer in [1, K] is fully
    determined by `elements`; nothing is claimed beyond K.
    """

    elements: tuple[int, ...]
    horizon: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        if not isinstance(self.horizon, int) or self.horizon < 0:
            raise NotPositive(f"horizon must be a non-negative integer, got {self.horizon!r}")
        prev = 0
        for e in self.elements:
            if not isinstance(e, int) or isinstance(e, bool) or e < 1:
                raise NotPositive(f"set element must be a positive integer: {e!r}")
            if e <= prev:
                raise NotSorted(f"set elements must be strictly increasing: {e} after {prev}")
            prev = e
        if self.elements and self.elements[-1] > self.horizon:
            raise HorizonExceeded(
                f"element {self.elements[-1]} lies beyond the horizon {self.horizon}"
            )

    def contains(self, i: int) -> bool:
        if i > self.horizon:
            raise HorizonExceeded(f"membership of {i} undetermined beyond horizon {self.horizon}")
        k = bisect_left(self.elements, i)
        return k < len(self.elements) and self.elements[k] == i

    def __str__(self) -> str:
        inner = ", ".join(str(e) for e in self.elements)
        return f"{{{inner}}} horizon {self.horizon}"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a complementarity check on [1, K]."""

    kind: str  # "partition" | "overlap" | "gap"
    witness: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.kind == "partition"

    def __str__(self) -> str:
        if self.kind == "partition":
            return "partition"
        return f"{self.kind}({self.witness})"


def check_non_decreasing(s: NumberSequence) -> bool:
    """True iff the prefix is non-decreasing and consistent with the tail."""
    prev: ExtNat = 0
    for v in s.prefix:
        if v < prev:
            return False
        prev = v
    t = s.tail
    if t.kind == "constant":
        # Constant tails demand a finite sequence bounded by the constant.
        return all(v is not INF and v <= t.value for v in s.prefix)
    return True


def _require_non_decreasing(s: NumberSequence) -> None:
    if not check_non_decreasing(s):
        raise NotNonDecreasing(f"sequence is not non-decreasing: {s}")


def _finite_run(prefix: tuple[ExtNat, ...]) -> list[int]:
    # Leading finite entries; in a valid sequence INF entries form the tail run.
    out: list[int] = []
    for v in prefix:
        if v is INF:
            break
        out.append(v)  # type: ignore[arg-type]
    return out


def invert(f: NumberSequence) -> NumberSequence:
    """Counting inverse g(n) = |{m : f(m) < n}|.

    The output encodes its own exactness window: a constant input tail
    yields a fully determined g (infinite tail), an infinite input tail
    yields a fully determined g (constant tail), and an unknown input tail
    yields g known exactly for n up to the last prefix value.
    """
    _require_non_decreasing(f)
    t = f._effective_tail()
    prefix = f.prefix

    if t.kind == "infinite":
        vals = _finite_run(prefix)
        if not vals:
            return NumberSequence((), Tail.constant(0))
        top = vals[-1]
        g = [bisect_left(vals, n) for n in range(1, top + 1)]
        return NumberSequence(g, Tail.constant(len(vals)))

    if t.kind == "constant":
        v = t.value
        assert v is not None
        g = [bisect_left(prefix, n) for n in range(1, v + 1)]
        return NumberSequence(g, Tail.infinite())

    # Unknown tail: exact exactly for n <= f(N).
    if not prefix:
        raise EmptyWindow("cannot invert an empty prefix with unknown tail")
    top = prefix[-1]
    assert top is not INF  # INF endings were rerouted to the infinite case
    if top == 0:
        raise EmptyWindow("inverse of an all-zero known prefix has an empty exact window")
    g = [bisect_left(prefix, n) for n in range(1, int(top) + 1)]
    return NumberSequence(g, Tail.unknown())


def grid_witness(
    f: NumberSequence, g: NumberSequence, M: int, N: int
) -> Optional[tuple[int, int, str]]:
    """First (m, n) in the M x N window violating the exactly-one condition.

    Returns None when every pair satisfies exactly one of f(m) < n,
    g(n) < m; otherwise (m, n, "both" | "neither"), scanning m-major.
    """
    if M < 1 or N < 1:
        raise NotPositive("window dimensions must be >= 1")
    fv = [f.value_at(m) for m in range(1, M + 1)]
    gv = [g.value_at(n) for n in range(1, N + 1)]
    for m in range(1, M + 1):
        fm = fv[m - 1]
        for n in range(1, N + 1):
            first = fm < n
            second = gv[n - 1] < m
            if first == second:
                return (m, n, "both" if first else "neither")
    return None


def mutually_inverse_on_window(
    f: NumberSequence, g: NumberSequence, M: int, N: int
) -> bool:
    """True iff exactly one of f(m) < n, g(n) < m holds on all of [1,M]x[1,N]."""
    return grid_witness(f, g, M, N) is None


def hat_horizon(f: NumberSequence) -> ExtNat:
    """Largest K for which hat(f, K) is answerable."""
    if f._effective_tail().kind != "unknown":
        return INF
    if not f.prefix:
        return 0
    return len(f.prefix) + int(f.prefix[-1])


def hat(f: NumberSequence, K: int) -> IntSet:
    """The set {n + f(n) : f(n) finite} restricted to [1, K].

    Strict monotonicity of n + f(n) makes the elements distinct.  For an
    unknown tail the request must satisfy K <= N + f(N), since indices past
    the prefix could contribute values as small as N + 1 + f(N).
    """
    _require_non_decreasing(f)
    if not isinstance(K, int) or K < 1:
        raise NotPositive(f"hat window bound must be a positive integer, got {K!r}")
    t = f._effective_tail()
    if t.kind == "unknown" and K > hat_horizon(f):
        raise HorizonExceeded(
            f"hat window {K} exceeds the guaranteed horizon {hat_horizon(f)}"
        )
    elems: list[int] = []
    for n, fv in enumerate(f.prefix, start=1):
        if fv is INF:
            break
        s = n + int(fv)
        if s > K:
            break
        elems.append(s)
    if t.kind == "constant":
        v = t.value
        assert v is not None
        for n in range(len(f.prefix) + 1, K - v + 1):
            elems.append(n + v)
    return IntSet(tuple(elems), K)


def from_set(S: IntSet, complete: bool) -> NumberSequence:
    """Sequence f with hat(f) = S, via f(n) = s_n - n.

    `complete` asserts S lists every element of the underlying set, making
    f eventually infinite; otherwise S is a window in [1, horizon] and the
    tail is unknown.
    """
    vals = [e - n for n, e in enumerate(S.elements, start=1)]
    if any(v < 0 for v in vals):  # pragma: no cover - IntSet already forces e >= 1
        raise NotPositive("set element smaller than its index")
    if complete:
        return NumberSequence(vals, Tail.infinite())
    return NumberSequence(vals, Tail.unknown())


def check_complementary(A: IntSet, B: IntSet, K: int) -> Verdict:
    """Do A and B tile [1, K] with no overlap and no gap?

    On failure the witness is the smallest doubly covered integer when an
    overlap exists anywhere in the window, and the smallest uncovered
    integer otherwise: an overlap is where the two generated streams
    actually collide, so it outranks a skipped value in the report.
    """
    if not isinstance(K, int) or K < 1:
        raise NotPositive(f"window bound must be a positive integer, got {K!r}")
    if A.horizon < K or B.horizon < K:
        raise HorizonExceeded(
            f"window {K} exceeds a set horizon ({A.horizon}, {B.horizon})"
        )
    in_a = set(A.elements)
    in_b = set(B.elements)
    first_gap: Optional[int] = None
    for i in range(1, K + 1):
        a = i in in_a
        b = i in in_b
        if a and b:
            return Verdict("overlap", i)
        if not a and not b and first_gap is None:
            first_gap = i
    if first_gap is not None:
        return Verdict("gap", first_gap)
    return Verdict("partition")


def classify(f: NumberSequence) -> str:
    """Coarse shape of the sequence, as far as the tail makes decidable.

    "bounded" and "eventually_infinite" are statements about the full
    sequence; "all_finite_unbounded_window" only reports what the known
    prefix shows and claims nothing beyond it.
    """
    _require_non_decreasing(f)
    t = f._effective_tail()
    if t.kind == "constant":
        return "bounded"
    if t.kind == "infinite":
        return "eventually_infinite"
    return "all_finite_unbounded_window"
