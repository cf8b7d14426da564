"""Syntactic roles, the six word orders, and the distance between orders."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction


class Role(enum.Enum):
    SUBJECT = "S"
    VERB = "V"
    OBJECT = "O"

    @property
    def marker(self) -> str:
        # one-letter case suffix carried by a word in this role
        return self.value.lower()


@dataclass(frozen=True)
class WordOrder:
    positions: tuple[Role, Role, Role]
    index: int

    @property
    def name(self) -> str:
        return "".join(r.value for r in self.positions)

    def position_of(self, role: Role) -> int:
        return self.positions.index(role)

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"WordOrder({self.name})"


_NAMES = ("SVO", "SOV", "VSO", "VOS", "OVS", "OSV")

ORDERS: tuple[WordOrder, ...] = tuple(
    WordOrder(tuple(Role(c) for c in name), i) for i, name in enumerate(_NAMES)
)
ORDER_NAMES = _NAMES
N_ORDERS = len(ORDERS)


def order(key: int | str) -> WordOrder:
    """Look up an order by canonical index or by name such as ``"SOV"``."""
    if isinstance(key, str):
        try:
            return ORDERS[_NAMES.index(key.upper())]
        except ValueError:
            raise ValueError(f"unknown word order {key!r}") from None
    return ORDERS[key]


def order_from_roles(roles) -> WordOrder:
    roles = tuple(roles)
    for o in ORDERS:
        if o.positions == roles:
            return o
    raise ValueError(f"not a permutation of S, V, O: {roles!r}")


def mismatch_count(a: WordOrder, b: WordOrder) -> int:
    return sum(x is not y for x, y in zip(a.positions, b.positions))


def role_distance(a: WordOrder, b: WordOrder) -> Fraction:
    """Fraction of sentence positions holding different roles in ``a`` and ``b``."""
    return Fraction(mismatch_count(a, b), 3)


def build_distance_matrix() -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(role_distance(a, b) for b in ORDERS) for a in ORDERS)


# integer mismatch counts (out of 3), shared by the hot loops
MISMATCH = tuple(tuple(mismatch_count(a, b) for b in ORDERS) for a in ORDERS)
DISTANCE = build_distance_matrix()
