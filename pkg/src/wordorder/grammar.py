"""Grammars: probability distributions over the six word orders."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from wordorder.core import N_ORDERS, ORDER_NAMES, ORDERS, WordOrder

SUM_TOLERANCE = 1e-9
TIE_TOLERANCE = 1e-12
_LOG6 = math.log(N_ORDERS)


@dataclass(frozen=True)
class Grammar:
    p: tuple

    def __post_init__(self):
        p = tuple(self.p)
        if len(p) != N_ORDERS:
            raise ValueError(f"grammar needs {N_ORDERS} probabilities, got {len(p)}")
        if any(x < 0 for x in p):
            raise ValueError(f"negative probability in {p}")
        if abs(sum(p) - 1) > SUM_TOLERANCE:
            raise ValueError(f"probabilities sum to {float(sum(p))!r}, not 1")
        object.__setattr__(self, "p", p)

    @classmethod
    def one_hot(cls, key) -> "Grammar":
        idx = key.index if isinstance(key, WordOrder) else (
            ORDER_NAMES.index(key.upper()) if isinstance(key, str) else int(key))
        return cls(tuple(1.0 if i == idx else 0.0 for i in range(N_ORDERS)))

    @property
    def is_one_hot(self) -> bool:
        return sum(1 for x in self.p if x != 0) == 1

    def __getitem__(self, i: int):
        return self.p[i]

    def as_dict(self) -> dict[str, float]:
        return {name: float(x) for name, x in zip(ORDER_NAMES, self.p)}


def uniform_grammar() -> Grammar:
    return Grammar((1 / N_ORDERS,) * N_ORDERS)


def entropy(g: Grammar) -> float:
    """Shannon entropy in base 6, so the uniform grammar scores 1."""
    h = math.fsum(-float(x) * math.log(float(x)) for x in g.p if x > 0) / _LOG6
    # clip rounding residue at the ends of the range
    return min(1.0, max(0.0, h))


def sample_order(g: Grammar, rng: random.Random) -> WordOrder:
    """Draw an order with probability ``g.p[i]``; consumes one ``rng.random()``."""
    u = rng.random()
    acc = 0.0
    last = 0
    for i, x in enumerate(g.p):
        if x <= 0:
            continue
        acc += float(x)
        last = i
        if u < acc:
            return ORDERS[i]
    return ORDERS[last]


def argmax_indices(g: Grammar, among: Iterable[int] | None = None) -> list[int]:
    idx = list(range(N_ORDERS)) if among is None else list(among)
    if not idx:
        raise ValueError("empty candidate set")
    best = max(g.p[i] for i in idx)
    return [i for i in idx if best - g.p[i] <= TIE_TOLERANCE]


def argmax_orders(g: Grammar) -> tuple[WordOrder, ...]:
    return tuple(ORDERS[i] for i in argmax_indices(g))


def normalize(values: Sequence[float]) -> Grammar:
    """Clamp negatives to zero and rescale; all-zero input falls back to uniform."""
    clamped = [x if x > 0 else 0.0 for x in values]
    total = math.fsum(clamped)
    if total <= 0:
        return uniform_grammar()
    return Grammar(tuple(x / total for x in clamped))


def mutate(g: Grammar, rng: random.Random, variance: float = 0.01) -> Grammar:
    """Add N(0, variance) noise to every entry, then clamp and renormalize."""
    if variance < 0:
        raise ValueError("variance must be non-negative")
    sd = math.sqrt(variance)
    return normalize([float(x) + rng.gauss(0.0, sd) for x in g.p])
