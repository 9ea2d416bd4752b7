import numpy as np
from hypothesis import strategies as st

from pythcubic.field import FieldParam, OrderElement

coord = st.integers(min_value=-40, max_value=40)
a_values = st.integers(min_value=-1, max_value=50)


@st.composite
def elements(draw, a=None, nonzero=False):
    if a is None:
        a = draw(a_values)
    f = FieldParam(a)
    x, y, z = draw(coord), draw(coord), draw(coord)
    if nonzero and x == y == z == 0:
        x = 1
    return OrderElement(f, x, y, z)


@st.composite
def element_tuples(draw, n, nonzero=False):
    a = draw(a_values)
    return tuple(draw(elements(a=a, nonzero=nonzero)) for _ in range(n))


def float_roots(a):
    """(rho, rho', rho'') from numpy, as an independent numeric oracle."""
    r = sorted(np.roots([1, -a, -(a + 3), -1]).real)
    return r[2], r[0], r[1]


def float_conjugates(e):
    return tuple(e.x + e.y * t + e.z * t * t for t in float_roots(e.field.a))


def gamma(f):
    a = f.a
    return f.element(a * a + a + 8, a * a - a + 1, 2 - a)
