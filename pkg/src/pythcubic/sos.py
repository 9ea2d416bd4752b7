"""Squares totally below a target and minimal sums of squares."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import ceil
from typing import Iterable

from .field import (
    DomainError,
    OrderElement,
    Signature,
    embedding_intervals,
    is_totally_positive,
    signature,
    totally_geq,
    trace,
)
from .indecomposables import canonical_sign, sigma_indecomposable_squares_below
from .intervals import Interval, sqrt_upper
from .lattice import coordinate_box, iter_box
from .units import DEFAULT_EXP_BOX

DEFAULT_MAX_M = 7
MEMO_SIZE = 1 << 16


@dataclass(frozen=True)
class SquareCandidate:
    root: OrderElement
    square: OrderElement

    @classmethod
    def of(cls, root: OrderElement) -> SquareCandidate:
        root = canonical_sign(root)
        return cls(root, root * root)


@dataclass(frozen=True)
class Decomposition:
    target: OrderElement
    parts: tuple[SquareCandidate, ...] = dc_field(default=())

    @property
    def length(self) -> int:
        return len(self.parts)

    def total(self) -> OrderElement:
        s = self.target.field.zero
        for p in self.parts:
            s = s + p.root * p.root
        return s

    def is_valid(self) -> bool:
        return self.total() == self.target and all(totally_geq(self.target, p.square) for p in self.parts)


def _sort_key(c: SquareCandidate):
    return c.square.coords


def _require_totally_positive(target: OrderElement) -> None:
    if not is_totally_positive(target):
        raise DomainError(f"{target} is not totally positive")


def squares_below_bruteforce(target: OrderElement) -> list[SquareCandidate]:
    """Every nonzero square omega^2 with omega^2 <= target, one root per square.

    |omega^(i)| <= sqrt(target^(i)) turns into a coordinate box, which is
    enumerated exhaustively.
    """
    if target.is_zero():
        return []
    _require_totally_positive(target)
    field = target.field
    ranges = []
    for iv in embedding_intervals(target):
        s = sqrt_upper(iv.hi)
        ranges.append(Interval(-s, s))
    box = coordinate_box(field, ranges)
    out = []
    for w in iter_box(field, box):
        if w.is_zero() or canonical_sign(w) is not w:
            continue
        sq = w * w
        if totally_geq(target, sq):
            out.append(SquareCandidate(w, sq))
    return sorted(out, key=_sort_key)


def _same_signature_sums(
    betas: list[OrderElement], target: OrderElement
) -> list[OrderElement]:
    """Sums of two or more of `betas` (with repetition) whose square is below target.

    All betas share one signature, so every cross term beta_i beta_j is totally
    positive and a partial sum's square is below the full sum's square; pruning
    on the partial sum is therefore complete.
    """
    found: list[OrderElement] = []

    def extend(partial: OrderElement, start: int, count: int) -> None:
        for i in range(start, len(betas)):
            s = partial + betas[i]
            if totally_geq(target, s * s):
                found.append(s)
                extend(s, i, count + 1)

    for i, b in enumerate(betas):
        extend(b, i, 1)
    return found


def structured_parts(
    target: OrderElement, exp_box: int = DEFAULT_EXP_BOX
) -> tuple[dict[OrderElement, list[OrderElement]], dict[Signature, list[OrderElement]], dict[Signature, list[OrderElement]]]:
    """The pieces of the structured enumeration.

    Returns (indecomposable squares -> roots, signature -> sigma-indecomposables,
    signature -> sigma-decomposable sums), with signatures taken up to sign so
    that each pair (sigma, -sigma) appears once under its representative with a
    leading '+'.
    """
    ind = sigma_indecomposable_squares_below(target, exp_box)
    by_sig: dict[Signature, list[OrderElement]] = {}
    for roots in ind.values():
        for r in roots:
            sig = signature(r)
            if sig[0] < 0:
                continue
            by_sig.setdefault(sig, [])
            if r not in by_sig[sig]:
                by_sig[sig].append(r)
    sums: dict[Signature, list[OrderElement]] = {}
    for sig, betas in sorted(by_sig.items(), reverse=True):
        betas.sort(key=lambda e: e.coords)
        sums[sig] = _same_signature_sums(betas, target)
    return ind, by_sig, sums


def squares_below_structured(target: OrderElement, exp_box: int = DEFAULT_EXP_BOX) -> list[SquareCandidate]:
    """Squares below target assembled from units, squares of
    sigma-indecomposables and squares of same-signature sums."""
    if target.is_zero():
        return []
    _require_totally_positive(target)
    ind, _, sums = structured_parts(target, exp_box)
    squares: dict[OrderElement, SquareCandidate] = {}
    for sq, roots in ind.items():
        squares.setdefault(sq, SquareCandidate.of(roots[0]))
    for elems in sums.values():
        for s in elems:
            c = SquareCandidate.of(s)
            squares.setdefault(c.square, c)
    return sorted(squares.values(), key=_sort_key)


def _search_order(cands: Iterable[SquareCandidate]) -> list[SquareCandidate]:
    # larger squares first
    return sorted(cands, key=lambda c: (-trace(c.square), c.square.coords))


def pythagoras_length(
    target: OrderElement,
    max_m: int = DEFAULT_MAX_M,
    candidates: list[SquareCandidate] | None = None,
) -> Decomposition | None:
    """Least m <= max_m with target a sum of m squares, as a witness.

    Returns None when no representation with at most max_m squares exists.
    Every square in a representation of a residue lies below that residue, so
    the candidates for the target, filtered per residue, cover all branches.
    """
    if max_m < 0:
        raise ValueError("max_m must be non-negative")
    if target.is_zero():
        return Decomposition(target, ())
    _require_totally_positive(target)
    field = target.field
    if candidates is None:
        candidates = squares_below_bruteforce(target)
    cands = _search_order(candidates)
    traces = [trace(c.square) for c in cands]
    coords = [c.square.coords for c in cands]
    a = field.a

    @lru_cache(maxsize=MEMO_SIZE)
    def search(res: tuple[int, int, int], budget: int, start: int) -> tuple[int, ...] | None:
        if budget == 0 or start >= len(cands):
            return None
        x, y, z = res
        t_res = 3 * x + a * y + (a * a + 2 * a + 6) * z
        # the largest remaining square has trace traces[start]
        if t_res > budget * traces[start]:
            return None
        for i in range(start, len(cands)):
            if traces[i] > t_res:
                continue
            cx, cy, cz = coords[i]
            r = (x - cx, y - cy, z - cz)
            if r == (0, 0, 0):
                return (i,)
            if budget == 1 or not is_totally_positive(OrderElement(field, *r)):
                continue
            sub = search(r, budget - 1, i)
            if sub is not None:
                return (i,) + sub
        return None

    for m in range(1, max_m + 1):
        found = search(target.coords, m, 0)
        if found is not None:
            return Decomposition(target, tuple(cands[i] for i in found))
    return None


def is_sum_of_squares(target: OrderElement) -> bool:
    if target.is_zero():
        return True
    if not is_totally_positive(target):
        return False
    # every nonzero square has trace >= 3
    bound = ceil(trace(target) / 3)
    return pythagoras_length(target, bound) is not None


def squares_below(target: OrderElement) -> list[SquareCandidate]:
    return squares_below_bruteforce(target)

