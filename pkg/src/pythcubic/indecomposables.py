"""Totally positive indecomposables of Z[rho], their unit multiples of every
signature, and an independent brute-force indecomposability check."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .field import (
    DomainError,
    FieldParam,
    OrderElement,
    Signature,
    char_coefficients,
    conjugates,
    exact_quotient,
    is_totally_positive,
    norm,
    signature,
    totally_geq,
    trace,
)
from .intervals import Interval
from .lattice import coordinate_box
from .units import DEFAULT_EXP_BOX, exponent_box, is_totally_positive_unit, unit_element


@dataclass(frozen=True, order=True)
class TrianglePoint:
    """Index (v, W) of alpha(v, W) = -v - w rho + (v+1) rho^2, w = v(a+2) + 1 + W."""

    v: int
    W: int

    def w(self, a: int) -> int:
        return self.v * (a + 2) + 1 + self.W

    def element(self, field: FieldParam) -> OrderElement:
        return alpha(field, self.v, self.W)


def alpha(field: FieldParam, v: int, W: int) -> OrderElement:
    a = field.a
    return OrderElement(field, -v, -(v * (a + 2) + 1 + W), v + 1)


def triangle(field: FieldParam) -> list[TrianglePoint]:
    """The full triangle: 0 <= v <= a, v(a+2)+1 <= w <= (v+1)(a+1)."""
    a = field.a
    pts = []
    for v in range(0, a + 1):
        for w in range(v * (a + 2) + 1, (v + 1) * (a + 1) + 1):
            pts.append(TrianglePoint(v, w - v * (a + 2) - 1))
    return pts


def triangle0(field: FieldParam) -> list[TrianglePoint]:
    """The reduced representative subset, with a = 3A + a0."""
    a = field.a
    if a < 0:
        raise DomainError("the reduced triangle needs a >= 0")
    A, a0 = divmod(a, 3)
    top = A if a0 in (1, 2) else A - 1
    pts = [TrianglePoint(v, W) for v in range(0, top + 1) for W in range(v, a - 2 * v)]
    if a0 == 0:
        pts.append(TrianglePoint(A, A))
    return sorted(pts)


def exceptional(field: FieldParam) -> OrderElement:
    return OrderElement(field, 1, 1, 1)


def theorem12_list(field: FieldParam) -> list[OrderElement]:
    """Representatives, up to totally positive units, of all totally positive
    indecomposables: 1, 1 + rho + rho^2 and the triangle."""
    return [field.one, exceptional(field)] + [p.element(field) for p in triangle(field)]


def _coords_key(e: OrderElement) -> tuple[int, int, int]:
    return e.coords


def canonical_sign(e: OrderElement) -> OrderElement:
    """The one of +-e whose first nonzero coordinate is positive."""
    for c in e.coords:
        if c:
            return e if c > 0 else -e
    return e


def sigma_indecomposable_squares_below(
    target: OrderElement, exp_box: int = DEFAULT_EXP_BOX, include_units: bool = True
) -> dict[OrderElement, list[OrderElement]]:
    """Map square -> roots for every sigma-indecomposable beta (any signature)
    with beta^2 below target.

    beta runs over eps * alpha with eps = rho^k rho'^l, |k|, |l| <= exp_box, and
    alpha over the listed representatives and their conjugates.  Both beta and
    -beta are returned as roots.
    """
    if not is_totally_positive(target):
        raise DomainError("target must be totally positive")
    field = target.field
    n_target = norm(target)
    reps: list[OrderElement] = []
    seen = set()
    for lam in theorem12_list(field):
        if not include_units and abs(norm(lam)) == 1:
            continue
        # N(beta^2) = N(alpha)^2 must not exceed N(target)
        if norm(lam) ** 2 > n_target:
            continue
        for c in conjugates(lam):
            if c not in seen:
                seen.add(c)
                reps.append(c)
    units = [(u, unit_element(field, u)) for u in exponent_box(exp_box)]
    out: dict[OrderElement, list[OrderElement]] = {}
    for lam in reps:
        lam_sq = lam * lam
        for u, eps in units:
            sq = eps * eps * lam_sq
            if totally_geq(target, sq):
                beta = eps * lam
                roots = out.setdefault(sq, [])
                for r in (beta, -beta):
                    if r not in roots:
                        roots.append(r)
    return out


def sigma_indecomposables_below(
    field: FieldParam,
    sig: Signature,
    target: OrderElement,
    exp_box: int = DEFAULT_EXP_BOX,
) -> list[OrderElement]:
    """All sigma-indecomposables of signature `sig` whose square is below target."""
    if target.field != field:
        raise ValueError("target belongs to a different order")
    found = set()
    for roots in sigma_indecomposable_squares_below(target, exp_box).values():
        for r in roots:
            if signature(r) == tuple(sig):
                found.add(r)
    return sorted(found, key=_coords_key)


# ------------------------------------------------------------ brute force

# int64 products in the characteristic polynomial stay exact below this bound
_INT64_SAFE = 2**62


def _safe_for_int64(a: int, box) -> bool:
    m = max(max(abs(lo), abs(hi)) for lo, hi in box)
    entry = 3 * m * (abs(a) + 3) ** 2 * 4
    return 6 * entry**3 < _INT64_SAFE


def totally_positive_with_trace_at_most(field: FieldParam, trace_bound: int) -> list[tuple[int, int, int]]:
    """Coordinates of every totally positive element with trace <= trace_bound."""
    a = field.a
    rng = Interval(Fraction(0), Fraction(trace_bound))
    box = coordinate_box(field, (rng, rng, rng))
    dtype = np.int64 if _safe_for_int64(a, box) else object
    (x0, x1), (y0, y1), (z0, z1) = box
    xs = np.arange(x0, x1 + 1, dtype=np.int64).astype(dtype)
    ys = np.arange(y0, y1 + 1, dtype=np.int64).astype(dtype)
    found = []
    tr_z = a * a + 2 * a + 6
    for z in range(z0, z1 + 1):
        X, Y = np.meshgrid(xs, ys, indexing="ij")
        tr = 3 * X + a * Y + tr_z * z
        keep = (tr > 0) & (tr <= trace_bound)
        if not keep.any():
            continue
        X, Y = X[keep], Y[keep]
        Z = np.full(X.shape, z, dtype=X.dtype)
        t, s2, n = char_coefficients(a, X, Y, Z)
        pos = (t > 0) & (s2 > 0) & (n > 0)
        found.extend(zip(X[pos].tolist(), Y[pos].tolist(), [z] * int(np.count_nonzero(pos))))
    return found


def brute_force_indecomposables(field: FieldParam, trace_bound: int) -> list[OrderElement]:
    """Every totally positive element with trace <= trace_bound that is not a
    sum of two totally positive elements.

    A splitting alpha = b1 + b2 has both parts totally positive with smaller
    trace, so both lie in the same enumerated set; the search only has to test
    membership of alpha - b1 for b1 with Tr(b1) <= Tr(alpha) / 2.
    """
    if trace_bound < 1:
        raise ValueError("trace bound must be >= 1")
    a = field.a
    pts = totally_positive_with_trace_at_most(field, trace_bound)
    if not pts:
        return []
    P = np.array(pts, dtype=np.int64)
    tr = 3 * P[:, 0] + a * P[:, 1] + (a * a + 2 * a + 6) * P[:, 2]
    order = np.lexsort((P[:, 2], P[:, 1], P[:, 0], tr))
    P, tr = P[order], tr[order]
    lo = P.min(axis=0)
    hi = P.max(axis=0)
    shape = tuple((hi - lo + 1).tolist())
    grid = np.zeros(shape, dtype=bool)
    grid[tuple((P - lo).T)] = True
    out = []
    for idx in range(len(P)):
        t = tr[idx]
        # candidates b1 with 2 Tr(b1) <= Tr(alpha)
        cut = int(np.searchsorted(tr, t // 2, side="right"))
        if cut:
            D = P[idx] - P[:cut] - lo
            inside = np.all((D >= 0) & (D < hi - lo + 1), axis=1)
            D = D[inside]
            if len(D) and grid[tuple(D.T)].any():
                continue
        out.append(OrderElement(field, *map(int, P[idx])))
    return sorted(out, key=_coords_key)


def totally_positive_unit_quotient(e: OrderElement, lam: OrderElement) -> OrderElement | None:
    """e / lam if it is a totally positive unit of Z[rho], else None."""
    if abs(norm(e)) != abs(norm(lam)):
        return None
    q = exact_quotient(e, lam)
    if q is None or abs(norm(q)) != 1 or not is_totally_positive(q):
        return None
    return q


def match_theorem12(e: OrderElement) -> OrderElement | None:
    """The listed representative lam with e = (totally positive unit) * lam."""
    for lam in theorem12_list(e.field):
        if totally_positive_unit_quotient(e, lam) is not None:
            return lam
    return None


def theorem12_multiples_with_trace_at_most(
    field: FieldParam, trace_bound: int, exp_box: int = DEFAULT_EXP_BOX
) -> list[OrderElement]:
    """u * lam over listed lam and totally positive units u in the exponent box,
    keeping those with trace <= trace_bound."""
    out = set()
    units = [unit_element(field, u) for u in exponent_box(exp_box) if is_totally_positive_unit(u)]
    for lam in theorem12_list(field):
        for eps in units:
            e = eps * lam
            if trace(e) <= trace_bound:
                out.add(e)
    return sorted(out, key=_coords_key)
