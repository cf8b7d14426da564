"""Evolutionary simulation of word-order fixation over a noisy channel."""

from wordorder.core import ORDERS, Role, WordOrder, build_distance_matrix, role_distance
from wordorder.grammar import Grammar, argmax_orders, entropy, mutate, sample_order, uniform_grammar

__all__ = [
    "ORDERS",
    "Role",
    "WordOrder",
    "build_distance_matrix",
    "role_distance",
    "Grammar",
    "argmax_orders",
    "entropy",
    "mutate",
    "sample_order",
    "uniform_grammar",
]
