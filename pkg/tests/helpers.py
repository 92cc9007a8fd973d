"""Shared randomized-input builders for the test suite.

Everything takes a random.Random so individual tests stay reproducible.
Masses are built from integer grids, keeping values exactly representable
enough that sums land within normalization tolerance.
"""

from __future__ import annotations

import random

from dsfusion import Frame, MassFunction, Motion, Scenario


def random_mass(rng: random.Random, frame: Frame, max_focals: int = 4) -> MassFunction:
    """A random normalized mass function with 1..max_focals non-empty focals."""
    n_subsets = (1 << len(frame)) - 1
    count = rng.randint(1, min(max_focals, n_subsets))
    masks = rng.sample(range(1, n_subsets + 1), count)
    # integer weights ensure the float masses sum to exactly 1.0 after division
    weights = [rng.randint(1, 1000) for _ in masks]
    total = sum(weights)
    entries = {
        frame.subset_from_mask(mask): weight / total
        for mask, weight in zip(masks, weights)
    }
    return MassFunction(frame, entries)


def random_simple_masses(
    rng: random.Random, frame: Frame, count: int
) -> list[MassFunction]:
    """Simple support functions with overlapping focals (never total conflict)."""
    n_subsets = (1 << len(frame)) - 1
    full = frame.full.mask
    masses = []
    for _ in range(count):
        mask = rng.randrange(1, n_subsets)
        if mask == full:
            mask = 1
        weight = rng.randint(1, 99) / 100
        masses.append(
            MassFunction.simple_support(frame.subset_from_mask(mask), weight)
        )
    return masses


def random_scenario(rng: random.Random) -> Scenario:
    """A small random scenario: 2..5 labels, 1..6 motions, 1..4 conditions."""
    size = rng.randint(2, 5)
    labels = [f"h{i}" for i in range(size)]
    frame = Frame(labels)
    n_subsets = (1 << size) - 1
    full = frame.full.mask

    motions = []
    for i in range(rng.randint(1, 6)):
        mask = rng.randrange(1, n_subsets)
        if mask == full:
            mask = 1
        motions.append(Motion(f"motion {i}", frame.subset_from_mask(mask)))

    conditions = rng.randint(1, 4)
    bpa = [
        tuple(rng.randint(1, 100) / 100 for _ in motions)
        for _ in range(conditions)
    ]
    return Scenario(frame, motions, bpa)
