"""Exponent functions for products of partial quotients.

``g(d, s)`` drives the penalty exponent for products along an arithmetic
progression of step n (positions n, 2n, ..., dn); ``f(d, s)`` is the
analogue for d consecutive positions.  Both are defined by first-order
iterations, which are authoritative here; the closed forms are fast
paths validated per d against the iteration before use.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, FeasibilityError

log = logging.getLogger("cfdim.growth")

_HALF_WINDOW = 1e-6  # around s = 1/2 the closed forms are removable-singular


def _check_d_s(d: int, s) -> None:
    if d < 1:
        raise DomainError("d must be a positive integer")
    if not (0 <= s <= 1):
        raise DomainError("s must lie in [0, 1]")


def g(d: int, s):
    """g_d(s) by the iteration g_1 = s, g_k = s*g_{k-1}/(1-s+k*g_{k-1}).

    Exact when s is a Fraction; float otherwise.  The denominator is
    positive on all of [0, 1], so the iteration never degenerates.
    """
    _check_d_s(d, s)
    val = s
    for k in range(2, d + 1):
        # denominator 1 - s + k*val is positive for every s in [0, 1]
        val = s * val / (1 - s + k * val)
    return val


def f(d: int, s):
    """f_d(s) by the iteration f_1 = s, f_{k+1} = s*f_k/(1-s+f_k)."""
    _check_d_s(d, s)
    val = s
    for _ in range(2, d + 1):
        val = s * val / (1 - s + val) if val or s else val * 0
    return val


def g_closed(d: int, s):
    """Closed form for g_d, re-derived from the iteration.

    1/g_d(s) = ((1-s)^{d+1} + (2d+1) s^{d+1} - (d+1) s^d) / (s^d (2s-1)^2)
    for s not in {0, 1/2, 1}; the special values are 0, 1/(d(d+1)), 1/d.
    Near s = 1/2 (within 1e-6) the iteration is used instead of the
    removable-singular quotient.
    """
    _check_d_s(d, s)
    if s == 0:
        return s * 0
    if s == 1:
        return 1 / (d * (s - s + 1) * d) * d if isinstance(s, Fraction) else 1.0 / d
    half = Fraction(1, 2) if isinstance(s, Fraction) else 0.5
    if s == half:
        return Fraction(1, d * (d + 1)) if isinstance(s, Fraction) else 1.0 / (d * (d + 1))
    if abs(s - half) < _HALF_WINDOW:
        return g(d, s)
    num = (1 - s) ** (d + 1) + (2 * d + 1) * s ** (d + 1) - (d + 1) * s**d
    return s**d * (2 * s - 1) ** 2 / num


def f_closed(d: int, s):
    """Closed form f_d(s) = s^d (2s-1) / (s^d - (1-s)^d), with the value
    1/(2d) at s = 1/2 (and the iteration inside the 1e-6 window)."""
    _check_d_s(d, s)
    if s == 0:
        return s * 0
    if s == 1:
        return s
    half = Fraction(1, 2) if isinstance(s, Fraction) else 0.5
    if s == half:
        return Fraction(1, 2 * d) if isinstance(s, Fraction) else 1.0 / (2 * d)
    if abs(s - half) < _HALF_WINDOW:
        return f(d, s)
    return s**d * (2 * s - 1) / (s**d - (1 - s) ** d)


_validated_g: set[int] = set()
_validated_f: set[int] = set()
_fallback_g: set[int] = set()
_fallback_f: set[int] = set()


def _validate(d: int, exact_fn, closed_fn, validated: set, fallback: set, name: str) -> None:
    worst = 0.0
    for i in range(1, 64):
        s = i / 64.0
        worst = max(worst, abs(closed_fn(d, s) - exact_fn(d, s)))
    if worst > 1e-10:
        log.warning("closed form for %s_%d disagrees with the iteration by %.3g; "
                    "falling back to the iteration", name, d, worst)
        fallback.add(d)
    validated.add(d)


def g_eval(d: int, s):
    """g_d(s) via the validated closed form when safe, else the iteration."""
    if d not in _validated_g:
        _validate(d, g, g_closed, _validated_g, _fallback_g, "g")
    if d in _fallback_g or isinstance(s, Fraction):
        return g(d, s)
    return g_closed(d, s)


def f_eval(d: int, s):
    """f_d(s) via the validated closed form when safe, else the iteration."""
    if d not in _validated_f:
        _validate(d, f, f_closed, _validated_f, _fallback_f, "f")
    if d in _fallback_f or isinstance(s, Fraction):
        return f(d, s)
    return f_closed(d, s)


def omega(d: int, s):
    """omega_d(s) = f_d(s)/g_d(s); increasing in s, equal to (d+1)/2 at 1/2."""
    _check_d_s(d, s)
    if s == 0:
        raise DomainError("omega is undefined at s = 0")
    return f(d, s) / g(d, s)


@dataclass(frozen=True)
class AlphaSequence:
    """Optimal per-step factors (A_1, ..., A_d) with product B.

    ``cumulative`` gives the chain alpha_k = A_1 * ... * A_k used by the
    minimax problem; the chain is nondecreasing and ends at B.
    """

    values: tuple[float, ...]
    s: float
    B: float

    @property
    def d(self) -> int:
        return len(self.values)

    @property
    def cumulative(self) -> tuple[float, ...]:
        out = []
        acc = 1.0
        for a in self.values:
            acc *= a
            out.append(acc)
        return tuple(out)


def alpha_sequence(d: int, s: float, B: float) -> AlphaSequence:
    """The optimizer of the minimax problem: A_1 = B**(g_d(s)/s) and
    A_{j+1} = A_1 * A_j**((1-s)/s).  Requires 1/2 < s < 1 and B > 1."""
    if d < 1:
        raise DomainError("d must be a positive integer")
    if not (0.5 < s < 1):
        raise DomainError("alpha_sequence needs 1/2 < s < 1")
    if not B > 1:
        raise DomainError("alpha_sequence needs B > 1")
    s = float(s)
    B = float(B)
    a1 = B ** (float(g(d, s)) / s)
    vals = [a1]
    for _ in range(d - 1):
        vals.append(a1 * vals[-1] ** ((1 - s) / s))
    return AlphaSequence(tuple(vals), s, B)


def minimax_value(alphas, s: float, B: float) -> float:
    """min{alpha_1^{-s}, (alpha_{k-1}^{1-s} alpha_k^{-s})^{1/k},
    (alpha_{d-1}^{1-s} B^{-s})^{1/d}} for a feasible nondecreasing chain
    1 <= alpha_1 <= ... <= alpha_{d-1} <= B.  Over all feasible chains the
    supremum of this value is B**(-g_d(s))."""
    alphas = tuple(float(a) for a in alphas)
    d = len(alphas) + 1
    chain = (1.0,) + alphas + (float(B),)
    for lo, hi in zip(chain, chain[1:]):
        if lo > hi:
            raise FeasibilityError(f"chain not nondecreasing within [1, B]: {chain}")
    s = float(s)
    B = float(B)
    terms = []
    if alphas:
        terms.append(alphas[0] ** (-s))
        for k in range(2, d):
            terms.append((alphas[k - 2] ** (1 - s) * alphas[k - 1] ** (-s)) ** (1.0 / k))
        terms.append((alphas[-1] ** (1 - s) * B ** (-s)) ** (1.0 / d))
    else:
        terms.append(B ** (-s))
    return min(terms)
