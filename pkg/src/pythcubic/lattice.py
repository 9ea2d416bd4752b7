"""Integer coordinate boxes containing every element whose conjugates lie in
given ranges.

An element is the quadratic x + y t + z t^2 interpolating its conjugates at
the three roots, so Lagrange interpolation maps conjugate bounds to
coordinate bounds.  The roots enter as intervals and the result is rounded
outward, so the box is always complete.
"""

from __future__ import annotations

from math import ceil, floor
from typing import Iterator, Sequence

from .field import FieldParam, OrderElement
from .intervals import DEFAULT_LEVEL, Interval, root_intervals

Box = tuple[tuple[int, int], tuple[int, int], tuple[int, int]]


def coordinate_box(field: FieldParam, conj_ranges: Sequence[Interval], level: int = DEFAULT_LEVEL) -> Box:
    """Inclusive integer ranges for (x, y, z) of any element whose i-th
    conjugate lies in conj_ranges[i]."""
    th = root_intervals(field.a, level)
    x = y = z = Interval.point(0)
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        denom = (th[i] - th[j]) * (th[i] - th[k])
        w = conj_ranges[i] / denom
        z = z + w
        y = y - w * (th[j] + th[k])
        x = x + w * (th[j] * th[k])
    return tuple((floor(iv.lo), ceil(iv.hi)) for iv in (x, y, z))  # type: ignore[return-value]


def box_size(box: Box) -> int:
    n = 1
    for lo, hi in box:
        n *= max(0, hi - lo + 1)
    return n


def iter_box(field: FieldParam, box: Box) -> Iterator[OrderElement]:
    (x0, x1), (y0, y1), (z0, z1) = box
    for z in range(z0, z1 + 1):
        for y in range(y0, y1 + 1):
            for x in range(x0, x1 + 1):
                yield OrderElement(field, x, y, z)
