"""Dempster's rule of combination with conflict accounting.

The rule pools two mass functions by intersecting every pair of focal
elements, multiplying their masses, discarding the weight that lands on the
empty set (the conflict k), and renormalizing the rest by 1 - k:

    m12(A) = sum(m1(B) * m2(C) for B n C = A, A != {}) / (1 - k)
    k      = sum(m1(B) * m2(C) for B n C = {})

Combination is refused once k reaches ``1 - CONFLICT_EPSILON``: dividing by a
vanishing 1 - k amplifies noise beyond any meaningful precision, and k = 1
exactly means the cores are disjoint.

Three evaluation routes are provided and tested against each other:

* :func:`combine` / :func:`fold` run on the selected kernel backend
  (compiled extension or pure Python) without building traces;
* :func:`combine_traced` / :func:`fuse_all` additionally record every
  cross-product cell, mirroring a hand-worked combination table;
* :func:`oracle_fuse_all` is an independent brute-force check: it enumerates
  the full n-way product of focal tuples in exact rational arithmetic and
  normalizes once at the end.  Agreement of the sequential fold with this
  single-normalization enumeration is the associativity of the rule, kept as
  a test, not an assumption.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from ._backend import combine_products, conflict_weight
from .errors import (
    EmptyInputError,
    ExplosionGuardError,
    TotalConflictError,
)
from .frame import Frame, Subset
from .mass import MassFunction

CONFLICT_EPSILON = 1e-9
ORACLE_TUPLE_CAP = 10_000_000


@dataclass(frozen=True, slots=True)
class CombinationCell:
    """One cross-product cell: left focal meets right focal."""

    left: Subset
    right: Subset
    intersection: Subset
    product: float


@dataclass(frozen=True, slots=True)
class CombinationTrace:
    """Everything one pairwise combination did.

    ``cells`` lists all focal pairs in deterministic order (left focal
    ascending by mask, then right focal ascending); ``conflict`` is k;
    ``result`` is the normalized combined mass function; ``inputs`` keeps the
    two operands so a renderer can label table rows and columns.
    """

    cells: tuple[CombinationCell, ...]
    conflict: float
    result: MassFunction
    inputs: tuple[MassFunction, MassFunction]


@dataclass(frozen=True, slots=True)
class FusionReport:
    """A sequential left-to-right fold: one trace per additional source."""

    steps: tuple[CombinationTrace, ...]
    final: MassFunction

    @property
    def per_step_conflict(self) -> tuple[float, ...]:
        return tuple(step.conflict for step in self.steps)


def _common_frame(sources: Sequence[MassFunction]) -> Frame:
    if not sources:
        raise EmptyInputError("at least one mass function is required")
    frame = sources[0].frame
    for m in sources[1:]:
        frame.check_same(m.frame)
    return frame


def conflict(m1: MassFunction, m2: MassFunction) -> float:
    """The conflict k between two evidences: total mass on empty intersections."""
    m1.frame.check_same(m2.frame)
    masks1, masses1 = zip(*m1.mask_items())
    masks2, masses2 = zip(*m2.mask_items())
    return conflict_weight(masks1, masses1, masks2, masses2)


def combine(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Dempster's rule for two mass functions (kernel-backed, no trace)."""
    m1.frame.check_same(m2.frame)
    masks1, masses1 = zip(*m1.mask_items())
    masks2, masses2 = zip(*m2.mask_items())
    masks, products, k = combine_products(masks1, masses1, masks2, masses2)
    return _normalize(m1.frame, masks, products, k, step=None)


def _normalize(
    frame: Frame,
    masks: Sequence[int],
    products: Sequence[float],
    k: float,
    step: int | None,
) -> MassFunction:
    if k >= 1.0 - CONFLICT_EPSILON:
        raise TotalConflictError(k, step=step)
    # Divide by the kept weight itself instead of 1-k.  Equal in exact
    # arithmetic, but near the refusal threshold the cancellation noise in k
    # is amplified by the tiny denominator; the complementary sum keeps the
    # result summing to 1 for every admissible k.  With no conflict at all
    # the true denominator is exactly 1, so the combination stays bit-exact
    # (vacuous stays neutral).
    denom = sum(products) if k > 0.0 else 1.0
    return MassFunction._from_mask_dict(
        frame, {mask: p / denom for mask, p in zip(masks, products)}
    )


def combine_traced(m1: MassFunction, m2: MassFunction) -> CombinationTrace:
    """Dempster's rule with the full cross-product cell table.

    The cell list mirrors a hand-worked combination table: left focal
    elements as rows, right focal elements as columns, the intersection and
    the product m1(B)*m2(C) in each cell.
    """
    m1.frame.check_same(m2.frame)
    frame = m1.frame
    cells: list[CombinationCell] = []
    acc: dict[int, float] = {}
    k = 0.0
    for left, mb in m1.focal_elements():
        for right, mc in m2.focal_elements():
            inter = left & right
            p = mb * mc
            cells.append(CombinationCell(left, right, inter, p))
            if inter.is_empty:
                k += p
            else:
                acc[inter.mask] = acc.get(inter.mask, 0.0) + p
    masks = sorted(acc)
    result = _normalize(frame, masks, [acc[m] for m in masks], k, step=None)
    return CombinationTrace(tuple(cells), k, result, (m1, m2))


def fuse_all(sources: Sequence[MassFunction]) -> FusionReport:
    """Fold sources left to right, keeping the trace of every step.

    Step i combines the accumulated result with source i+1 and renormalizes,
    exactly like working through the combination tables one by one.
    """
    _common_frame(sources)
    acc = sources[0]
    steps: list[CombinationTrace] = []
    for step_no, source in enumerate(sources[1:], start=1):
        try:
            trace = combine_traced(acc, source)
        except TotalConflictError as exc:
            raise TotalConflictError(exc.conflict, step=step_no) from None
        steps.append(trace)
        acc = trace.result
    return FusionReport(tuple(steps), acc)


def fold(sources: Sequence[MassFunction]) -> MassFunction:
    """The final mass of :func:`fuse_all` without building traces."""
    _common_frame(sources)
    acc = sources[0]
    for step_no, source in enumerate(sources[1:], start=1):
        masks1, masses1 = zip(*acc.mask_items())
        masks2, masses2 = zip(*source.mask_items())
        masks, products, k = combine_products(masks1, masses1, masks2, masses2)
        acc = _normalize(acc.frame, masks, products, k, step=step_no)
    return acc


def oracle_fuse_all(sources: Sequence[MassFunction]) -> MassFunction:
    """Brute-force n-way combination in exact rational arithmetic.

    Enumerates every tuple of focal elements (one per source), accumulates
    the product of their masses onto the tuple's intersection, discards
    empty-intersection weight, and normalizes once at the end.  Mass values
    are read through their shortest decimal representation, so ordinary
    decimal inputs are handled exactly.
    """
    frame = _common_frame(sources)
    tuple_count = math.prod(len(m) for m in sources)
    if tuple_count > ORACLE_TUPLE_CAP:
        raise ExplosionGuardError(
            f"{tuple_count} focal tuples exceed the cap of {ORACLE_TUPLE_CAP}"
        )
    rational = [
        [(mask, Fraction(repr(mass))) for mask, mass in m.mask_items()]
        for m in sources
    ]
    full_mask = frame.full.mask
    acc: dict[int, Fraction] = {}
    for combo in itertools.product(*rational):
        inter = full_mask
        weight = Fraction(1)
        for mask, mass in combo:
            inter &= mask
            weight *= mass
        if inter != 0:
            acc[inter] = acc.get(inter, Fraction(0)) + weight
    total = sum(acc.values())
    if total == 0:
        raise TotalConflictError(1.0)
    return MassFunction._from_mask_dict(
        frame, {mask: float(acc[mask] / total) for mask in sorted(acc)}
    )
