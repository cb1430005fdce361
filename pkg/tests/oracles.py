"""Independent numeric oracles used to cross-check the exact kernel.

Everything here goes through the stdlib `decimal` module at high precision
and deliberately shares no code with the package under test.  The decimal
route is advisory: where it and the exact route disagree, the exact route
is authoritative, and the tests treat any disagreement as a failure to be
investigated rather than auto-resolved.
"""

from __future__ import annotations

from decimal import Decimal, localcontext

DIGITS = 100

# Values this close to an integer make a decimal floor unreliable; the
# inputs generated by the tests stay far away from this band.
GUARD = Decimal(10) ** -40


def decimal_value(a: int, b: int, d: int, c: int, digits: int = DIGITS) -> Decimal:
    """(a + b*sqrt(d))/c evaluated with `digits` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        return (Decimal(a) + Decimal(b) * Decimal(d).sqrt()) / Decimal(c)


def decimal_floor(a: int, b: int, d: int, c: int, digits: int = DIGITS) -> int:
    """Floor via high-precision decimal, guarded against near-integer values."""
    with localcontext() as ctx:
        ctx.prec = digits
        x = (Decimal(a) + Decimal(b) * Decimal(d).sqrt()) / Decimal(c)
        n = int(x.to_integral_value(rounding="ROUND_FLOOR"))
        if abs(x - n) < GUARD and x != n:
            raise AssertionError(f"decimal floor of ({a}+{b}*sqrt({d}))/{c} is too close to call")
        return n


def wythoff_pair(n: int, digits: int = DIGITS) -> tuple[int, int]:
    """(floor(n*phi), floor(n*phi^2)) with phi the golden ratio, via decimal."""
    with localcontext() as ctx:
        ctx.prec = digits
        phi = (1 + Decimal(5).sqrt()) / 2
        lower = int((phi * n).to_integral_value(rounding="ROUND_FLOOR"))
        upper = int((phi * phi * n).to_integral_value(rounding="ROUND_FLOOR"))
        return lower, upper


def counting_inverse(values: list[float], n: int) -> int:
    """|{m : f(m) < n}| by brute enumeration over an explicit finite list."""
    return sum(1 for v in values if v < n)
