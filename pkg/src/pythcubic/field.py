"""Exact arithmetic in Z[rho], rho a root of x^3 - a x^2 - (a+3) x - 1.

Elements are integer triples (x, y, z) meaning x + y*rho + z*rho^2.  The three
real embeddings are ordered (rho, rho', rho'') with rho > a+1,
-2 < rho' < -1 and -1 < rho'' < 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Sequence

from .intervals import (
    DEFAULT_LEVEL,
    MAX_LEVEL,
    Interval,
    Rational,
    level_for_width,
    root_intervals,
)


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


Signature = tuple[int, int, int]


def format_signature(sig: Signature) -> str:
    return "(" + ",".join("+" if s > 0 else "-" for s in sig) + ")"


def parse_signature(text: str) -> Signature:
    signs = [c for c in text if c in "+-"]
    if len(signs) != 3:
        raise ValueError(f"cannot parse signature {text!r}")
    return tuple(1 if c == "+" else -1 for c in signs)  # type: ignore[return-value]


def negate_signature(sig: Signature) -> Signature:
    return (-sig[0], -sig[1], -sig[2])


class CharData(NamedTuple):
    """Coefficients of t^3 - trace t^2 + s2 t - norm."""

    trace: int
    s2: int
    norm: int


@dataclass(frozen=True)
class FieldParam:
    a: int

    def __post_init__(self) -> None:
        if not isinstance(self.a, int):
            raise TypeError("a must be an integer")
        if self.a < -1:
            raise ValueError(f"a must be >= -1, got {self.a}")

    @property
    def minpoly(self) -> tuple[int, int, int, int]:
        """Coefficients of x^3 - a x^2 - (a+3) x - 1, leading first."""
        return (1, -self.a, -(self.a + 3), -1)

    @property
    def discriminant_root(self) -> int:
        return self.a * self.a + 3 * self.a + 9

    def element(self, x: int, y: int = 0, z: int = 0) -> OrderElement:
        return OrderElement(self, x, y, z)

    @cached_property
    def zero(self) -> OrderElement:
        return OrderElement(self, 0, 0, 0)

    @cached_property
    def one(self) -> OrderElement:
        return OrderElement(self, 1, 0, 0)

    @cached_property
    def rho(self) -> OrderElement:
        return OrderElement(self, 0, 1, 0)

    @cached_property
    def _galois_rho(self) -> OrderElement:
        # rho^-1 = rho^2 - a rho - (a+3), so -1 - rho^-1 = (a+2) + a rho - rho^2
        a = self.a
        g = OrderElement(self, a + 2, a, -1)
        g2 = g * g
        g3 = g2 * g
        if g3 - a * g2 - (a + 3) * g - self.one != self.zero:
            raise AssertionError("galois image of rho is not a root of the minimal polynomial")
        return g

    @cached_property
    def _galois_square(self) -> OrderElement:
        g = self._galois_rho
        return g * g

    @cached_property
    def rho1(self) -> OrderElement:
        """rho' as an element of Z[rho]."""
        return self._galois_rho

    @cached_property
    def rho2(self) -> OrderElement:
        """rho'' as an element of Z[rho]."""
        return galois_image(self._galois_rho)


class OrderElement:
    __slots__ = ("field", "x", "y", "z")

    def __init__(self, field: FieldParam, x: int, y: int, z: int) -> None:
        self.field = field
        self.x = int(x)
        self.y = int(y)
        self.z = int(z)

    @property
    def coords(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"OrderElement(a={self.field.a}, {self.x}, {self.y}, {self.z})"

    def __str__(self) -> str:
        terms = []
        for c, mono in ((self.x, ""), (self.y, "ρ"), (self.z, "ρ²")):
            if c == 0:
                continue
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            terms.append(("-" if c < 0 else "+") + body)
        if not terms:
            return "0"
        s = "".join(terms)
        return s[1:] if s[0] == "+" else s

    def __eq__(self, other: object) -> bool:
        if isinstance(other, OrderElement):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, int):
            return self.y == 0 and self.z == 0 and self.x == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.a, self.x, self.y, self.z))

    def _coerce(self, other: OrderElement | int) -> OrderElement:
        if isinstance(other, OrderElement):
            if other.field != self.field:
                raise ValueError(
                    f"elements belong to different orders (a={self.field.a} and a={other.field.a})"
                )
            return other
        if isinstance(other, int):
            return OrderElement(self.field, other, 0, 0)
        raise TypeError(f"cannot combine OrderElement with {type(other).__name__}")

    def __add__(self, other: OrderElement | int) -> OrderElement:
        o = self._coerce(other)
        return OrderElement(self.field, self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __neg__(self) -> OrderElement:
        return OrderElement(self.field, -self.x, -self.y, -self.z)

    def __sub__(self, other: OrderElement | int) -> OrderElement:
        o = self._coerce(other)
        return OrderElement(self.field, self.x - o.x, self.y - o.y, self.z - o.z)

    def __rsub__(self, other: int) -> OrderElement:
        return self._coerce(other) - self

    def __mul__(self, other: OrderElement | int) -> OrderElement:
        if isinstance(other, int):
            return OrderElement(self.field, self.x * other, self.y * other, self.z * other)
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> OrderElement:
        if n < 0:
            return invert_unit(self) ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result


def make_element(field: FieldParam, x: int, y: int, z: int) -> OrderElement:
    return OrderElement(field, x, y, z)


def mul(e1: OrderElement, e2: OrderElement) -> OrderElement:
    """Product reduced by rho^3 = a rho^2 + (a+3) rho + 1."""
    e2 = e1._coerce(e2)
    a = e1.field.a
    x1, y1, z1 = e1.x, e1.y, e1.z
    x2, y2, z2 = e2.x, e2.y, e2.z
    c0 = x1 * x2
    c1 = x1 * y2 + y1 * x2
    c2 = x1 * z2 + y1 * y2 + z1 * x2
    c3 = y1 * z2 + z1 * y2
    c4 = z1 * z2
    # rho^3 = 1 + (a+3) rho + a rho^2
    # rho^4 = a + (a^2+3a+1) rho + (a^2+a+3) rho^2
    return OrderElement(
        e1.field,
        c0 + c3 + a * c4,
        c1 + (a + 3) * c3 + (a * a + 3 * a + 1) * c4,
        c2 + a * c3 + (a * a + a + 3) * c4,
    )


def char_coefficients(a, x, y, z):
    """(trace, s2, norm) of x + y rho + z rho^2 from its multiplication matrix.

    Works elementwise on numpy integer arrays as well as on Python ints.
    """
    # columns: e, rho*e, rho^2*e; rho*(x, y, z) = (z, x + (a+3) z, y + a z)
    m00, m10, m20 = x, y, z
    m01, m11, m21 = z, x + (a + 3) * z, y + a * z
    m02, m12, m22 = m21, m01 + (a + 3) * m21, m11 + a * m21
    trace = m00 + m11 + m22
    s2 = (m00 * m11 - m01 * m10) + (m00 * m22 - m02 * m20) + (m11 * m22 - m12 * m21)
    norm = (
        m00 * (m11 * m22 - m12 * m21)
        - m01 * (m10 * m22 - m12 * m20)
        + m02 * (m10 * m21 - m11 * m20)
    )
    return trace, s2, norm


def char_data(e: OrderElement) -> CharData:
    return CharData(*char_coefficients(e.field.a, e.x, e.y, e.z))


def norm(e: OrderElement) -> int:
    return char_data(e).norm


def trace(e: OrderElement) -> int:
    a = e.field.a
    # Tr(1) = 3, Tr(rho) = a, Tr(rho^2) = a^2 + 2(a+3)
    return 3 * e.x + a * e.y + (a * a + 2 * a + 6) * e.z


def is_totally_positive(e: OrderElement) -> bool:
    # all conjugates are real, so they are all positive iff the characteristic
    # polynomial has strictly alternating coefficient signs
    if e.is_zero():
        return False
    t, s2, n = char_coefficients(e.field.a, e.x, e.y, e.z)
    return t > 0 and s2 > 0 and n > 0


def totally_geq(e1: OrderElement, e2: OrderElement) -> bool:
    d = e1 - e2
    return d.is_zero() or is_totally_positive(d)


def totally_gt(e1: OrderElement, e2: OrderElement) -> bool:
    return is_totally_positive(e1 - e2)


def galois_image(e: OrderElement) -> OrderElement:
    """Image under the automorphism rho -> rho'; the embeddings rotate left."""
    f = e.field
    g, g2 = f._galois_rho, f._galois_square
    return OrderElement(
        f,
        e.x + e.y * g.x + e.z * g2.x,
        e.y * g.y + e.z * g2.y,
        e.y * g.z + e.z * g2.z,
    )


def conjugates(e: OrderElement) -> tuple[OrderElement, OrderElement, OrderElement]:
    e1 = galois_image(e)
    return (e, e1, galois_image(e1))


def exact_quotient(e1: OrderElement, e2: OrderElement) -> OrderElement | None:
    """e1 / e2 if it lies in Z[rho], else None."""
    if e2.is_zero():
        raise ZeroDivisionError("division by zero element")
    _, c1, c2 = conjugates(e2)
    n = norm(e2)
    num = e1 * (c1 * c2)
    if num.x % n or num.y % n or num.z % n:
        return None
    return OrderElement(e1.field, num.x // n, num.y // n, num.z // n)


def is_unit(e: OrderElement) -> bool:
    return not e.is_zero() and abs(norm(e)) == 1


def invert_unit(e: OrderElement) -> OrderElement:
    if not is_unit(e):
        raise DomainError(f"{e} is not a unit")
    q = exact_quotient(e.field.one, e)
    assert q is not None
    return q


# ---------------------------------------------------------------- embeddings


@dataclass(frozen=True)
class EmbeddingIntervals:
    field: FieldParam
    intervals: tuple[Interval, Interval, Interval]
    level: int

    @property
    def width(self) -> Fraction:
        return max(iv.width for iv in self.intervals)

    def refine(self, width: Rational) -> EmbeddingIntervals:
        return refine_embeddings(self.field, min(Fraction(width), self.width))

    def __getitem__(self, i: int) -> Interval:
        return self.intervals[i]


def refine_embeddings(field: FieldParam, width: Rational) -> EmbeddingIntervals:
    level = level_for_width(width)
    return EmbeddingIntervals(field, root_intervals(field.a, level), level)


def embeddings_at_level(field: FieldParam, level: int) -> EmbeddingIntervals:
    return EmbeddingIntervals(field, root_intervals(field.a, level), level)


def evaluate(e: OrderElement, root: Interval) -> Interval:
    """Interval enclosure of x + y t + z t^2 for t in `root` (Horner form)."""
    return (root * e.z + e.y) * root + e.x


def embedding_interval(e: OrderElement, i: int, level: int = DEFAULT_LEVEL) -> Interval:
    return evaluate(e, root_intervals(e.field.a, level)[i])


def embedding_intervals(e: OrderElement, level: int = DEFAULT_LEVEL) -> tuple[Interval, Interval, Interval]:
    roots = root_intervals(e.field.a, level)
    return tuple(evaluate(e, r) for r in roots)  # type: ignore[return-value]


def embedding_sign(e: OrderElement, i: int, level: int = DEFAULT_LEVEL) -> int:
    """Sign of the i-th conjugate of a nonzero element, refined until certain."""
    if e.is_zero():
        raise DomainError("the zero element has no sign")
    while level <= MAX_LEVEL:
        s = embedding_interval(e, i, level).sign()
        if s:
            return s
        level += 4
    raise RuntimeError("sign refinement did not terminate")


def signature(e: OrderElement) -> Signature:
    if e.is_zero():
        raise DomainError("signature is undefined for zero")
    return tuple(embedding_sign(e, i) for i in range(3))  # type: ignore[return-value]


def compare_embedding(e: OrderElement, i: int, r: Rational) -> int:
    """Sign of e^(i) - r, exactly (0 only when e equals the rational r)."""
    r = Fraction(r)
    d = e * r.denominator - r.numerator
    if d.is_zero():
        return 0
    return embedding_sign(d, i)


def embedding_floats(e: OrderElement) -> tuple[float, float, float]:
    """Approximate conjugates; for display and heuristics only."""
    return tuple(float((iv.lo + iv.hi) / 2) for iv in embedding_intervals(e, 60))  # type: ignore[return-value]


def field_element_from_sequence(field: FieldParam, coords: Sequence[int]) -> OrderElement:
    if len(coords) != 3:
        raise ValueError("need exactly three coordinates")
    return OrderElement(field, *coords)
