"""Units rho^k rho'^l of Z[rho] and exact comparisons of their conjugates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .field import FieldParam, OrderElement, Signature, invert_unit
from .intervals import DEFAULT_LEVEL, MAX_LEVEL, Interval, Rational, root_intervals

DEFAULT_EXP_BOX = 10

# signatures of rho and rho' in the embedding order (rho, rho', rho'')
_SIG_RHO = (1, -1, -1)
_SIG_RHO1 = (-1, -1, 1)


@dataclass(frozen=True, order=True)
class UnitExponent:
    """The unit rho^k * rho'^l."""

    k: int
    l: int

    def element(self, field: FieldParam) -> OrderElement:
        return unit_element(field, self)

    def __str__(self) -> str:
        return f"ρ^{self.k}·ρ'^{self.l}"


@lru_cache(maxsize=4096)
def _power(field: FieldParam, which: int, n: int) -> OrderElement:
    base = field.rho if which == 0 else field.rho1
    if n == 0:
        return field.one
    if n < 0:
        return invert_unit(_power(field, which, -n))
    if n == 1:
        return base
    half = _power(field, which, n // 2)
    sq = half * half
    return sq * base if n % 2 else sq


def unit_element(field: FieldParam, u: UnitExponent) -> OrderElement:
    return _power(field, 0, u.k) * _power(field, 1, u.l)


def unit_signature(u: UnitExponent) -> Signature:
    return tuple(  # type: ignore[return-value]
        (s0 if u.k % 2 else 1) * (s1 if u.l % 2 else 1) for s0, s1 in zip(_SIG_RHO, _SIG_RHO1)
    )


def is_totally_positive_unit(u: UnitExponent) -> bool:
    # rho has signature (+,-,-) and rho' has (-,-,+); only even exponents give (+,+,+)
    return u.k % 2 == 0 and u.l % 2 == 0


def exponent_box(bound: int) -> Iterator[UnitExponent]:
    if bound < 0:
        raise ValueError("exponent box must be non-negative")
    for k in range(-bound, bound + 1):
        for l in range(-bound, bound + 1):
            yield UnitExponent(k, l)


def totally_positive_units(field: FieldParam, bound: int = DEFAULT_EXP_BOX) -> list[tuple[UnitExponent, OrderElement]]:
    return [(u, unit_element(field, u)) for u in exponent_box(bound) if is_totally_positive_unit(u)]


def unit_abs_conjugate(a: int, u: UnitExponent, i: int, level: int = DEFAULT_LEVEL) -> Interval:
    """Enclosure of |i-th conjugate| of rho^k rho'^l from the root intervals.

    The i-th conjugate of rho' is the root following index i cyclically.
    """
    roots = root_intervals(a, level)
    return (roots[i].abs() ** u.k) * (roots[(i + 1) % 3].abs() ** u.l)


def compare_unit_conjugate(a: int, u: UnitExponent, i: int, bound: Rational) -> int:
    """Sign of |eps^(i)| - bound for eps = rho^k rho'^l, decided exactly."""
    bound = Fraction(bound)
    if u.k == 0 and u.l == 0:
        return (1 > bound) - (1 < bound)
    # eps != +-1 has no rational conjugate, so refinement terminates
    level = DEFAULT_LEVEL
    while level <= MAX_LEVEL:
        iv = unit_abs_conjugate(a, u, i, level)
        if iv.lo > bound:
            return 1
        if iv.hi < bound:
            return -1
        level += 8
    raise RuntimeError("unit conjugate comparison did not terminate")


def units_in_conjugate_box(
    field: FieldParam,
    bound: Rational | Sequence[Rational],
    exp_box: int = DEFAULT_EXP_BOX,
) -> list[UnitExponent]:
    """All (k, l) with |k|, |l| <= exp_box and |eps^(i)| <= bound_i for every i."""
    if exp_box < 1:
        raise ValueError("exponent box must be >= 1")
    if isinstance(bound, (int, Fraction)):
        bounds = (bound, bound, bound)
    else:
        bounds = tuple(bound)
        if len(bounds) != 3:
            raise ValueError("need one bound per embedding")
    out = []
    for u in exponent_box(exp_box):
        if all(compare_unit_conjugate(field.a, u, i, bounds[i]) <= 0 for i in range(3)):
            out.append(u)
    return sorted(out)
