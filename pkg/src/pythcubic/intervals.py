"""Closed rational intervals and isolation of the three real roots of
x^3 - a x^2 - (a+3) x - 1 by exact bisection."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

Rational = Union[int, Fraction]

# every bisection level halves all three brackets; 2^-20 is the starting precision
DEFAULT_LEVEL = 20
MAX_LEVEL = 4000


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value: Rational) -> Interval:
        v = Fraction(value)
        return cls(v, v)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, value: Rational) -> bool:
        return self.lo <= value <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def sign(self) -> int:
        """+1 or -1 if the sign is certain, 0 if the interval straddles zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0

    def abs_upper(self) -> Fraction:
        return max(abs(self.lo), abs(self.hi))

    def __add__(self, other: Interval | Rational) -> Interval:
        if isinstance(other, Interval):
            return Interval(self.lo + other.lo, self.hi + other.hi)
        return Interval(self.lo + other, self.hi + other)

    __radd__ = __add__

    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other: Interval | Rational) -> Interval:
        return self + (-other)

    def __rsub__(self, other: Rational) -> Interval:
        return (-self) + other

    def __mul__(self, other: Interval | Rational) -> Interval:
        if isinstance(other, Interval):
            p = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
            return Interval(min(p), max(p))
        if other >= 0:
            return Interval(self.lo * other, self.hi * other)
        return Interval(self.hi * other, self.lo * other)

    __rmul__ = __mul__

    def reciprocal(self) -> Interval:
        if self.contains_zero():
            raise ZeroDivisionError("interval contains zero")
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other: Interval | Rational) -> Interval:
        if isinstance(other, Interval):
            return self * other.reciprocal()
        return self * Interval.point(Fraction(1) / Fraction(other))

    def __pow__(self, n: int) -> Interval:
        if n < 0:
            return self.reciprocal() ** (-n)
        result = Interval.point(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base.square()
        return result

    def square(self) -> Interval:
        lo, hi = self.lo * self.lo, self.hi * self.hi
        if self.contains_zero():
            return Interval(Fraction(0), max(lo, hi))
        return Interval(min(lo, hi), max(lo, hi))

    def abs(self) -> Interval:
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(Fraction(0), self.abs_upper())


def sqrt_upper(value: Rational) -> Fraction:
    """A rational number >= sqrt(value) (value >= 0), within 1/den of it."""
    value = Fraction(value)
    if value <= 0:
        return Fraction(0)
    n, d = value.numerator, value.denominator
    # sqrt(n/d) = sqrt(n*d)/d
    r = isqrt(n * d)
    if r * r == n * d:
        return Fraction(r, d)
    return Fraction(r + 1, d)


def minpoly_value(a: int, t: Rational) -> Fraction | int:
    return ((t - a) * t - (a + 3)) * t - 1


def coarse_brackets(a: int) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
    """Starting brackets for (rho, rho', rho''); f changes sign on each."""
    return ((a + 1, a + 3), (-2, -1), (-1, 0))


class _RootCache:
    """Per-a list of bracket triples, index = bisection level."""

    def __init__(self) -> None:
        self._levels: dict[int, list[tuple[Interval, Interval, Interval]]] = {}
        self._lock = threading.Lock()

    def get(self, a: int, level: int) -> tuple[Interval, Interval, Interval]:
        if level > MAX_LEVEL:
            raise RuntimeError(f"root refinement beyond level {MAX_LEVEL}")
        with self._lock:
            levels = self._levels.get(a)
            if levels is None:
                levels = [tuple(Interval(Fraction(lo), Fraction(hi)) for lo, hi in coarse_brackets(a))]
                self._levels[a] = levels
            while len(levels) <= level:
                levels.append(tuple(_bisect(a, iv) for iv in levels[-1]))
            return levels[level]


def _bisect(a: int, iv: Interval) -> Interval:
    mid = (iv.lo + iv.hi) / 2
    f_lo = minpoly_value(a, iv.lo)
    f_mid = minpoly_value(a, mid)
    # f has no rational roots (only candidates are +-1 and f(1) = -2a-3, f(-1) = 1)
    if (f_lo < 0) == (f_mid < 0):
        return Interval(mid, iv.hi)
    return Interval(iv.lo, mid)


_ROOTS = _RootCache()


def root_intervals(a: int, level: int = DEFAULT_LEVEL) -> tuple[Interval, Interval, Interval]:
    """Isolating intervals for (rho, rho', rho'') after `level` bisections.

    Widths are 2^(1-level) for rho and 2^-level for the other two roots.
    """
    return _ROOTS.get(a, level)


def level_for_width(width: Rational) -> int:
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    level = 1
    while Fraction(2, 2**level) > width:
        level += 1
    return level


def root_in_bracket(a: int, i: int, lo: Rational, hi: Rational) -> bool:
    """Whether root i of the minimal polynomial lies strictly between lo and hi.

    Refines until the isolating interval is inside (lo, hi) or misses it; this
    terminates because the roots are irrational.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    level = DEFAULT_LEVEL
    while True:
        iv = root_intervals(a, level)[i]
        if lo < iv.lo and iv.hi < hi:
            return True
        if iv.hi <= lo or iv.lo >= hi:
            return False
        level += 4
