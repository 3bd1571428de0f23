"""Shared builders for the test suite."""

from __future__ import annotations

import random

from circle6 import FixedPointData, dataset


def sphere_points(a: int, b: int) -> list[tuple[str, tuple[int, int, int]]]:
    return [("p1", (a, b, -a - b)), ("p2", (-a, -b, a + b))]


def sphere_data(a: int = 1, b: int = 2) -> FixedPointData:
    """Standard sphere action weight data, without a homology profile."""
    return dataset(3, sphere_points(a, b))


def random_symmetric_dataset(rng: random.Random, max_points: int = 3,
                             max_weight: int = 4) -> FixedPointData:
    """A valid dataset whose signed weight multiset is symmetric: random
    points followed by a negated copy of each."""
    k = rng.randint(1, max_points)
    rows = []
    for i in range(k):
        ws = tuple(rng.choice([w for w in range(-max_weight, max_weight + 1) if w])
                   for _ in range(3))
        rows.append((f"q{i + 1}", ws))
    rows += [(f"r{i + 1}", tuple(-w for w in ws)) for i, (_, ws) in enumerate(rows)]
    return dataset(3, rows)
