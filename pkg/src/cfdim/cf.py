"""Exact continued-fraction arithmetic.

Expansions, convergents, cylinder intervals, the Gauss measure of an
interval, and certified digit extraction from dyadic sample intervals.
Everything except ``gauss_measure`` works in exact integer/rational
arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import InsufficientPrecision

Digits = tuple[int, ...]

_LOG2 = math.log(2.0)


def check_digits(seq: Iterable[int]) -> Digits:
    """Normalize to a tuple and enforce that every partial quotient is >= 1."""
    digits = tuple(int(a) for a in seq)
    for a in digits:
        if a < 1:
            raise ValueError(f"partial quotients must be >= 1, got {a}")
    return digits


class Convergent(NamedTuple):
    index: int
    p: int
    q: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


@dataclass(frozen=True)
class IntervalQ:
    """Interval with exact rational endpoints inside [0, 1]."""

    lo: Fraction
    hi: Fraction
    closed_lo: bool = True
    closed_hi: bool = False

    def __post_init__(self):
        if not (0 <= self.lo < self.hi <= 1):
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Fraction) -> bool:
        if self.lo < x < self.hi:
            return True
        if x == self.lo:
            return self.closed_lo
        if x == self.hi:
            return self.closed_hi
        return False

    def contains_interval(self, other: "IntervalQ") -> bool:
        lo_ok = self.lo < other.lo or (self.lo == other.lo and (self.closed_lo or not other.closed_lo))
        hi_ok = other.hi < self.hi or (other.hi == self.hi and (self.closed_hi or not other.closed_hi))
        return lo_ok and hi_ok

    def overlaps(self, other: "IntervalQ") -> bool:
        if self.hi < other.lo or other.hi < self.lo:
            return False
        if self.hi == other.lo:
            return self.closed_hi and other.closed_lo
        if other.hi == self.lo:
            return other.closed_hi and self.closed_lo
        return True


@dataclass(frozen=True)
class RealSample:
    """Dyadic interval standing in for an uncertain uniform real.

    ``center`` is a dyadic rational; the represented interval is
    ``center +- 2**-precision_bits`` and must lie inside [0, 1).
    """

    center: Fraction
    precision_bits: int

    def __post_init__(self):
        if self.precision_bits < 1:
            raise ValueError("precision_bits must be positive")
        half = Fraction(1, 2 ** self.precision_bits)
        if not (0 <= self.center - half and self.center + half < 1):
            raise ValueError("sample interval must lie inside [0, 1)")

    @property
    def lo(self) -> Fraction:
        return self.center - Fraction(1, 2 ** self.precision_bits)

    @property
    def hi(self) -> Fraction:
        return self.center + Fraction(1, 2 ** self.precision_bits)


def expand(x, max_digits: int) -> Digits:
    """Partial quotients of an exact rational x in [0, 1).

    Truncated at ``max_digits``. Rational inputs terminate; the algorithm
    produces the canonical form automatically (a terminating expansion
    never ends in 1 because each tail lies strictly inside (0, 1)).
    x = 0 yields the empty sequence.
    """
    x = Fraction(x)
    if not (0 <= x < 1):
        raise ValueError("expand needs 0 <= x < 1")
    if max_digits < 1:
        raise ValueError("max_digits must be positive")
    num, den = x.numerator, x.denominator
    digits: list[int] = []
    while num and len(digits) < max_digits:
        a, rem = divmod(den, num)
        digits.append(a)
        num, den = rem, num
    return tuple(digits)


def evaluate(seq: Iterable[int]) -> Fraction:
    """Exact value of a finite continued fraction [a_1, ..., a_n]."""
    digits = check_digits(seq)
    val = Fraction(0)
    for a in reversed(digits):
        val = Fraction(1, a + val)
    return val


def convergents(seq: Iterable[int]) -> list[Convergent]:
    """All convergents (p_k, q_k), starting from (p_0, q_0) = (0, 1)."""
    digits = check_digits(seq)
    out = [Convergent(0, 0, 1)]
    p_prev, q_prev = 1, 0  # virtual (p_{-1}, q_{-1})
    p_cur, q_cur = 0, 1
    for k, a in enumerate(digits, start=1):
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        out.append(Convergent(k, p_cur, q_cur))
    return out


def continuant_pair(seq: Iterable[int]) -> tuple[int, int]:
    """(q_n, q_{n-1}) for the digit sequence; (1, 0) for the empty one."""
    q_prev, q_cur = 0, 1
    for a in seq:
        q_prev, q_cur = q_cur, a * q_cur + q_prev
    return q_cur, q_prev


def continuant(seq: Iterable[int]) -> int:
    return continuant_pair(seq)[0]


def cylinder(seq: Iterable[int]) -> IntervalQ:
    """The set of reals whose expansion starts with the given digits.

    For n digits this is the interval with endpoints p_n/q_n and
    (p_n + p_{n-1})/(q_n + q_{n-1}), half-open on the side matching the
    parity of n; its length is exactly 1/(q_n (q_n + q_{n-1})).
    """
    digits = check_digits(seq)
    if not digits:
        raise ValueError("cylinder needs a non-empty digit sequence")
    cs = convergents(digits)
    n = len(digits)
    p, q = cs[n].p, cs[n].q
    pp, qp = cs[n - 1].p, cs[n - 1].q
    a = Fraction(p, q)
    b = Fraction(p + pp, q + qp)
    if n % 2 == 0:
        return IntervalQ(a, b, closed_lo=True, closed_hi=False)
    return IntervalQ(b, a, closed_lo=False, closed_hi=True)


def gauss_measure(iv: IntervalQ) -> float:
    """Measure of the interval under the density 1/((1+x) log 2)."""
    # log1p of the relative gap keeps full precision for tiny intervals.
    rel = (iv.hi - iv.lo) / (1 + iv.lo)
    return math.log1p(rel.numerator / rel.denominator) / _LOG2


def certified_digits(lo_num: int, lo_den: int, hi_num: int, hi_den: int, n: int) -> Digits:
    """First n partial quotients shared by every real in [lo, hi].

    Interval iteration of the Gauss map on exact rational endpoints: a
    digit is emitted only when floor(1/x) agrees at both endpoints.
    Raises InsufficientPrecision when the interval straddles a cylinder
    boundary (or touches 0) before n digits are certified.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    nl, dl, nh, dh = lo_num, lo_den, hi_num, hi_den
    digits: list[int] = []
    for _ in range(n):
        if nl <= 0:
            # interval reaches 0: digits unbounded below the cut
            raise InsufficientPrecision(f"after {len(digits)} digits")
        a_hi = dl // nl  # floor(1/lo): largest candidate digit
        a_lo = dh // nh  # floor(1/hi): smallest candidate digit
        if a_hi != a_lo:
            raise InsufficientPrecision(f"after {len(digits)} digits")
        a = a_lo
        digits.append(a)
        # Gauss map reverses orientation: new interval is [1/hi - a, 1/lo - a]
        nl, dl, nh, dh = dh - a * nh, nh, dl - a * nl, nl
    return tuple(digits)


def expand_certified(sample: RealSample, n: int) -> Digits:
    """Certified first n digits of every real in the sample interval."""
    lo, hi = sample.lo, sample.hi
    return certified_digits(lo.numerator, lo.denominator, hi.numerator, hi.denominator, n)
