"""Exact check that only fixed-order grammars communicate without error.

Two expected-distance functionals are evaluated on a rational grid over the
simplex. In the sampling model the hearer draws its order from its own
grammar, independently of the speaker. In the argmax model it takes the most
probable order, splitting ties uniformly, as the simulated hearer does.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterator

from wordorder.core import DISTANCE, MISMATCH, N_ORDERS
from wordorder.grammar import Grammar, argmax_indices

MODELS = ("sampling", "argmax")


def expected_distance_sampling(speaker: Grammar, hearer: Grammar):
    return sum(speaker[i] * DISTANCE[i][j] * hearer[j]
               for i in range(N_ORDERS) for j in range(N_ORDERS))


def expected_distance_argmax(speaker: Grammar, hearer: Grammar):
    best = argmax_indices(hearer)
    total = sum(speaker[i] * DISTANCE[i][j] for j in best for i in range(N_ORDERS))
    return total * Fraction(1, len(best))


def compositions(total: int, parts: int = N_ORDERS) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` non-negative ints summing to ``total`` (stars and bars)."""
    for bars in combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 2 - prev)
        yield tuple(out)


@dataclass(frozen=True)
class SimplexGrid:
    resolution: int

    def __post_init__(self):
        if self.resolution < 1:
            raise ValueError("resolution must be >= 1")

    def __len__(self) -> int:
        return comb(self.resolution + N_ORDERS - 1, N_ORDERS - 1)

    def counts(self) -> Iterator[tuple[int, ...]]:
        return compositions(self.resolution)

    def __iter__(self) -> Iterator[Grammar]:
        k = self.resolution
        for c in self.counts():
            yield Grammar(tuple(Fraction(n, k) for n in c))


# Integer-count forms of the two functionals for grid points p = counts / k.
def _self_distance_sampling(counts, k) -> Fraction:
    s = 0
    for i, ni in enumerate(counts):
        if ni:
            row = MISMATCH[i]
            s += ni * sum(row[j] * nj for j, nj in enumerate(counts))
    return Fraction(s, 3 * k * k)


def _self_distance_argmax(counts, k) -> Fraction:
    top = max(counts)
    best = [j for j, n in enumerate(counts) if n == top]
    s = sum(counts[i] * MISMATCH[i][j] for j in best for i in range(N_ORDERS))
    return Fraction(s, 3 * k * len(best))


_SELF_DISTANCE = {"sampling": _self_distance_sampling, "argmax": _self_distance_argmax}


@dataclass
class VerificationReport:
    model: str
    resolution: int
    grid_size: int
    zero_set: list[tuple[Fraction, ...]] = field(default_factory=list)
    min_nonzero_value: Fraction | None = None

    @property
    def passed(self) -> bool:
        vertices = {tuple(Fraction(int(i == j)) for j in range(N_ORDERS)) for i in range(N_ORDERS)}
        return len(self.zero_set) == N_ORDERS and set(self.zero_set) == vertices

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "resolution": self.resolution,
            "grid_size": self.grid_size,
            "zero_set": [[str(x) for x in p] for p in self.zero_set],
            "min_nonzero_value": None if self.min_nonzero_value is None
            else str(self.min_nonzero_value),
            "pass": self.passed,
        }


def verify_model(resolution: int, model: str) -> VerificationReport:
    """Self-communication distance of every grid grammar under one hearer model."""
    if resolution < 2:
        raise ValueError("resolution must be >= 2; coarser grids contain only vertices")
    f = _SELF_DISTANCE[model]
    grid = SimplexGrid(resolution)
    report = VerificationReport(model, resolution, len(grid))
    for counts in grid.counts():
        v = f(counts, resolution)
        if v == 0:
            report.zero_set.append(tuple(Fraction(n, resolution) for n in counts))
        elif report.min_nonzero_value is None or v < report.min_nonzero_value:
            report.min_nonzero_value = v
    return report


def verify_theorem(resolution: int = 10) -> list[VerificationReport]:
    return [verify_model(resolution, m) for m in MODELS]
