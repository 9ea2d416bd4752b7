import pytest
from hypothesis import given, settings, strategies as st

from pythcubic.field import DomainError, FieldParam, is_totally_positive, totally_geq, trace
from pythcubic.sos import (
    Decomposition,
    SquareCandidate,
    is_sum_of_squares,
    pythagoras_length,
    squares_below_bruteforce,
    squares_below_structured,
    structured_parts,
)

from conftest import gamma


def _expected_gamma_squares(f):
    a = f.a
    r, r1, r2 = f.rho, f.rho1, f.rho2
    return {
        f.element(1),
        f.element(4),
        f.element(9),
        r * r,
        (r1 * r2 * (r * r - r)) ** 2,
        (r2 * r * (r1 * r1 - r1)) ** 2,
        (r2 * r * (r1 * r1 - 2 * r1)) ** 2,
        (r * r1 * (r2 * r2 - (a - 1) * r2)) ** 2,
    }


def _sums_of_at_most(squares, k, target):
    """Every element reachable as a sum of <= k of the given squares that stays below target."""
    f = target.field
    levels = [{f.zero}]
    for _ in range(k):
        nxt = set()
        for s in levels[-1]:
            for q in squares:
                t = s + q
                if totally_geq(target, t):
                    nxt.add(t)
        levels.append(nxt)
    return levels


@pytest.mark.parametrize("a", [5, 15, 30])
def test_gamma_census(a):
    f = FieldParam(a)
    got = {c.square for c in squares_below_bruteforce(gamma(f))}
    assert got == _expected_gamma_squares(f)


def test_gamma_census_small_a():
    f = FieldParam(3)
    extra = {f.element(20, 11, -3), f.element(1, 2, 1)}
    got = {c.square for c in squares_below_bruteforce(gamma(f))}
    assert got == _expected_gamma_squares(f) | extra
    f = FieldParam(4)
    got = {c.square for c in squares_below_bruteforce(gamma(f))}
    assert len(got) == 9 and _expected_gamma_squares(f) < got


def test_squares_below_one():
    f = FieldParam(6)
    assert [c.square for c in squares_below_bruteforce(f.one)] == [f.one]
    assert squares_below_bruteforce(f.zero) == []
    with pytest.raises(DomainError):
        squares_below_bruteforce(f.rho)


@pytest.mark.parametrize("a", [3, 4, 15])
def test_structured_equals_brute(a):
    g = gamma(FieldParam(a))
    assert squares_below_structured(g) == squares_below_bruteforce(g)


def test_structured_sums():
    _, _, sums = structured_parts(gamma(FieldParam(15)))
    f = FieldParam(15)
    assert sums[(1, 1, 1)] == [f.element(2), f.element(3)]
    _, _, sums = structured_parts(gamma(FieldParam(20)))
    assert sums[(1, -1, -1)] == []


def test_candidates_are_valid():
    g = gamma(FieldParam(8))
    for c in squares_below_bruteforce(g):
        assert c.square == c.root * c.root
        assert is_totally_positive(c.square) and totally_geq(g, c.square)
        assert trace(c.square) >= 3
        assert c == SquareCandidate.of(-c.root)


@pytest.mark.parametrize("a", [3, 4, 10, 30])
def test_gamma_length_six(a):
    f = FieldParam(a)
    dec = pythagoras_length(gamma(f), 7)
    assert dec.length == 6 and dec.is_valid()
    assert pythagoras_length(gamma(f), 5) is None


def test_six_square_witness():
    for a in range(3, 31):
        f = FieldParam(a)
        w = f.element(a + 1, a, -1)
        assert 3 * f.one + f.element(4) + f.rho * f.rho + w * w == gamma(f)


def test_small_lengths():
    f = FieldParam(4)
    assert pythagoras_length(f.element(2)).length == 2
    zero = pythagoras_length(f.zero, 0)
    assert zero.length == 0 and zero.parts == ()
    with pytest.raises(DomainError):
        pythagoras_length(f.rho)
    with pytest.raises(ValueError):
        pythagoras_length(f.one, -1)


def test_table_row_a2():
    f = FieldParam(2)
    dec = pythagoras_length(f.element(7, 0, 1), 10)
    assert dec.length == 5 and dec.is_valid()


@pytest.mark.parametrize("a", range(3, 11))
def test_minimality_against_sum_oracle(a):
    f = FieldParam(a)
    g = gamma(f)
    squares = [c.square for c in squares_below_bruteforce(g)]
    levels = _sums_of_at_most(squares, 6, g)
    assert all(g not in lv for lv in levels[:6])
    assert g in levels[6]


def test_lengths_match_sum_oracle_for_small_targets():
    f = FieldParam(3)
    targets = [f.element(x, y, z) for x in range(1, 9) for y in range(-3, 4) for z in range(0, 2)]
    for t in targets:
        if not is_totally_positive(t):
            continue
        squares = [c.square for c in squares_below_bruteforce(t)]
        levels = _sums_of_at_most(squares, 4, t)
        dec = pythagoras_length(t, 4)
        expected = next((m for m, lv in enumerate(levels) if t in lv), None)
        assert (dec.length if dec else None) == expected


def test_is_sum_of_squares_examples():
    f = FieldParam(3)
    assert is_sum_of_squares(f.zero)
    assert not is_sum_of_squares(f.rho)
    assert is_sum_of_squares(gamma(f))
    # totally positive but not a sum of squares: indecomposable non-square
    assert not is_sum_of_squares(f.element(1, 1, 1))


@settings(max_examples=40, deadline=None)
@given(st.integers(-1, 12), st.lists(st.tuples(*[st.integers(-3, 3)] * 3), min_size=1, max_size=3))
def test_length_of_random_sums(a, roots):
    f = FieldParam(a)
    t = f.zero
    for r in roots:
        w = f.element(*r)
        t = t + w * w
    dec = pythagoras_length(t, len(roots))
    assert dec is not None and dec.length <= len(roots)
    assert dec.total() == t and dec.is_valid()
    assert isinstance(dec, Decomposition)
