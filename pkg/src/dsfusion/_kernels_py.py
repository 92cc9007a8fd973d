"""Pure-Python combination kernels (fallback for the compiled extension).

Both backends implement the same contract and the same floating-point
operation order (left-major accumulation), so their results are
bit-identical; ``tests/test_backends.py`` holds them to that.
"""

from __future__ import annotations

from collections.abc import Sequence

BACKEND = "python"


def combine_products(
    masks1: Sequence[int],
    masses1: Sequence[float],
    masks2: Sequence[int],
    masses2: Sequence[float],
) -> tuple[list[int], list[float], float]:
    """Cross-product accumulation of two focal-element lists.

    Returns ``(masks, products, conflict)`` where ``products`` holds the
    un-normalized sums of m1(B)*m2(C) grouped by intersection mask (ascending
    order) and ``conflict`` is the total weight of empty intersections.
    """
    acc: dict[int, float] = {}
    conflict = 0.0
    for b, mb in zip(masks1, masses1):
        for c, mc in zip(masks2, masses2):
            inter = b & c
            p = mb * mc
            if inter == 0:
                conflict += p
            else:
                acc[inter] = acc.get(inter, 0.0) + p
    masks = sorted(acc)
    return masks, [acc[m] for m in masks], conflict


def conflict_weight(
    masks1: Sequence[int],
    masses1: Sequence[float],
    masks2: Sequence[int],
    masses2: Sequence[float],
) -> float:
    """Total product weight landing on empty intersections."""
    conflict = 0.0
    for b, mb in zip(masks1, masses1):
        for c, mc in zip(masks2, masses2):
            if b & c == 0:
                conflict += mb * mc
    return conflict
