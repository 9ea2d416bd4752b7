import pytest

from pythcubic.field import DomainError, FieldParam, is_totally_positive, norm, trace
from pythcubic.indecomposables import (
    TrianglePoint,
    alpha,
    brute_force_indecomposables,
    canonical_sign,
    match_theorem12,
    sigma_indecomposables_below,
    theorem12_list,
    theorem12_multiples_with_trace_at_most,
    totally_positive_with_trace_at_most,
    triangle,
    triangle0,
)

from conftest import float_conjugates, gamma


def test_list_at_a_minus_one_has_no_triangle():
    f = FieldParam(-1)
    assert triangle(f) == []
    assert theorem12_list(f) == [f.one, f.element(1, 1, 1)]


def test_triangle_a3():
    f = FieldParam(3)
    expected = {(v, w) for v in range(4) for w in range(5 * v + 1, 4 * (v + 1) + 1)}
    assert {(p.v, p.w(3)) for p in triangle(f)} == expected
    assert len(theorem12_list(f)) == 2 + len(expected) == 12


def test_triangle0_a3():
    f = FieldParam(3)
    pts = triangle0(f)
    assert pts == [TrianglePoint(0, 0), TrianglePoint(0, 1), TrianglePoint(0, 2), TrianglePoint(1, 1)]
    assert [p.element(f) for p in pts] == [
        f.element(0, -1, 1),
        f.element(0, -2, 1),
        f.element(0, -3, 1),
        f.element(-1, -7, 2),
    ]


def test_triangle0_a4():
    pts = triangle0(FieldParam(4))
    assert {(p.v, p.W) for p in pts} == {(v, W) for v in range(2) for W in range(v, 4 - 2 * v)}


def test_triangle0_needs_nonnegative_a():
    with pytest.raises(DomainError):
        triangle0(FieldParam(-1))


@pytest.mark.parametrize("a", range(0, 51))
def test_triangle0_inside_triangle(a):
    f = FieldParam(a)
    full = set(triangle(f))
    assert set(triangle0(f)) <= full
    for p in triangle0(f):
        assert p.v * (a + 2) + 1 <= p.w(a) <= (p.v + 1) * (a + 1)


@pytest.mark.parametrize("a", range(-1, 26))
def test_listed_elements_totally_positive(a):
    for e in theorem12_list(FieldParam(a)):
        assert is_totally_positive(e)
        assert all(c > 0 for c in float_conjugates(e))


def test_alpha_coordinates():
    f = FieldParam(10)
    assert alpha(f, 2, 3) == f.element(-2, -(2 * 12 + 1 + 3), 3)


def test_canonical_sign():
    f = FieldParam(2)
    assert canonical_sign(f.element(0, -3, 1)) == f.element(0, 3, -1)
    assert canonical_sign(f.element(1, -3, 1)) == f.element(1, -3, 1)


def test_sigma_indecomposables_a15():
    f = FieldParam(15)
    g = gamma(f)
    r, r1, r2 = f.rho, f.rho1, f.rho2
    assert set(sigma_indecomposables_below(f, (1, -1, -1), g)) == {r, r1 * r2 * (r * r - r)}
    assert sigma_indecomposables_below(f, (-1, 1, -1), g) == [r * r1 * (r2 * r2 - 14 * r2)]
    assert sigma_indecomposables_below(f, (1, 1, 1), g) == [f.one]


def test_brute_force_small_examples():
    for a in (-1, 0, 3):
        f = FieldParam(a)
        out = brute_force_indecomposables(f, 30)
        assert f.one in out
        assert f.element(2) not in out


def test_brute_force_matches_list_a0():
    f = FieldParam(0)
    out = set(brute_force_indecomposables(f, 30))
    assert out == set(theorem12_multiples_with_trace_at_most(f, 30))
    assert all(match_theorem12(e) is not None for e in out)


def test_enumeration_is_complete_for_small_trace():
    # compare against a naive cube scan
    f = FieldParam(1)
    fast = set(totally_positive_with_trace_at_most(f, 12))
    naive = set()
    for x in range(-30, 31):
        for y in range(-30, 31):
            for z in range(-30, 31):
                e = f.element(x, y, z)
                if 0 < trace(e) <= 12 and is_totally_positive(e):
                    naive.add(e.coords)
    assert fast == naive


@pytest.mark.parametrize("a", range(3, 51))
def test_norm_monotone_along_triangle0(a):
    f = FieldParam(a)
    pts = set(triangle0(f))
    for p in pts:
        nxt = TrianglePoint(p.v + 1, p.W)
        if nxt in pts:
            assert norm(p.element(f)) < norm(nxt.element(f))
