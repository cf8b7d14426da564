"""Letter-flipping noise between speaker and hearer."""

from __future__ import annotations

import random
from dataclasses import dataclass

from wordorder.lexicon import ALPHABET


@dataclass(frozen=True)
class NoiseParams:
    flip_probability: float = 0.01
    # a flip never maps a letter to itself, so flip_probability is the exact corruption rate
    exclude_self: bool = True
    alphabet: str = ALPHABET

    def __post_init__(self):
        if not 0.0 <= self.flip_probability <= 1.0:
            raise ValueError(f"flip_probability must be in [0, 1], got {self.flip_probability}")


def _flip(letter: str, params: NoiseParams, rng: random.Random) -> str:
    alphabet = params.alphabet
    if not params.exclude_self:
        return alphabet[rng.randrange(len(alphabet))]
    k = rng.randrange(len(alphabet) - 1)
    own = alphabet.index(letter)
    return alphabet[k + 1 if k >= own else k]


def apply_noise(tokens: list[str], params: NoiseParams, rng: random.Random) -> list[str]:
    """Corrupt each letter independently; token count and lengths are unchanged."""
    p = params.flip_probability
    if p == 0:
        return list(tokens)
    out = []
    for tok in tokens:
        letters = list(tok)
        for i, c in enumerate(letters):
            if rng.random() < p:
                letters[i] = _flip(c, params, rng)
        out.append("".join(letters))
    return out
