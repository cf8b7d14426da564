"""Speaker production and scenario-dependent hearer inference.

One grammar drives both agents of a pair. The hearer never sees the
speaker's order; it only has the noisy tokens, the shared lexicons and its
copy of the grammar.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

from wordorder.channel import NoiseParams, apply_noise
from wordorder.core import MISMATCH, ORDERS, Role, WordOrder, order_from_roles
from wordorder.grammar import Grammar, argmax_indices, sample_order
from wordorder.lexicon import Lexicon, LexiconKind, classify_word, nearest_word

# the hearer's output is a full role-to-position assignment, i.e. an order
RoleAssignment = WordOrder

_MARKER_ROLE = {r.marker: r for r in Role}


class Scenario(enum.Enum):
    BASE = "base"
    NV = "nv"
    CASE = "case"
    NV_CASE = "nv-case"

    @property
    def markers(self) -> bool:
        return self in (Scenario.CASE, Scenario.NV_CASE)

    @property
    def split_lexicons(self) -> bool:
        return self in (Scenario.NV, Scenario.NV_CASE)


@dataclass(frozen=True)
class LexiconSet:
    """Unified lexicon for BASE/CASE, noun + verb lexicons for NV/NV_CASE."""

    unified: Lexicon | None = None
    nouns: Lexicon | None = None
    verbs: Lexicon | None = None

    def check(self, scenario: Scenario) -> None:
        if scenario.split_lexicons:
            if self.nouns is None or self.verbs is None:
                raise ValueError(f"{scenario.value} needs noun and verb lexicons")
            if set(self.nouns.words) & set(self.verbs.words):
                raise ValueError("noun and verb lexicons overlap")
        elif self.unified is None:
            raise ValueError(f"{scenario.value} needs a unified lexicon")

    def word_length(self, scenario: Scenario) -> int:
        lex = self.nouns if scenario.split_lexicons else self.unified
        return lex.word_length


@dataclass(frozen=True)
class Utterance:
    tokens: tuple[str, str, str]
    marker_attached: bool = False

    def __post_init__(self):
        if len(self.tokens) != 3:
            raise ValueError(f"an utterance has exactly 3 tokens, got {len(self.tokens)}")
        object.__setattr__(self, "tokens", tuple(self.tokens))


def speak(g: Grammar, lexicons: LexiconSet, scenario: Scenario,
          rng: random.Random) -> tuple[Utterance, RoleAssignment]:
    if scenario.split_lexicons:
        subj, obj = rng.sample(lexicons.nouns.words, 2)
        verb = rng.choice(lexicons.verbs.words)
    else:
        subj, verb, obj = rng.sample(lexicons.unified.words, 3)
    words = {Role.SUBJECT: subj, Role.VERB: verb, Role.OBJECT: obj}
    order = sample_order(g, rng)
    if scenario.markers:
        tokens = tuple(words[r] + r.marker for r in order.positions)
    else:
        tokens = tuple(words[r] for r in order.positions)
    return Utterance(tokens, scenario.markers), order


def _pick(g: Grammar, candidates, rng: random.Random) -> WordOrder:
    best = argmax_indices(g, candidates)
    if len(best) == 1:
        return ORDERS[best[0]]
    return ORDERS[rng.choice(best)]


def _verb_positions(lexicons: LexiconSet, stems) -> list[int]:
    kinds = [classify_word(lexicons.nouns, lexicons.verbs, s)[1] for s in stems]
    return [i for i, k in enumerate(kinds) if k is LexiconKind.VERB]


def _hear_nv(g, lexicons, stems, rng) -> WordOrder:
    verbs = _verb_positions(lexicons, stems)
    if len(verbs) == 1:
        pos = verbs[0]
        return _pick(g, [o.index for o in ORDERS if o.positions[pos] is Role.VERB], rng)
    return _pick(g, None, rng)


def _marker_constraints(markers) -> dict[int, Role]:
    """Position -> role for marker letters that are valid and occur once."""
    found = [_MARKER_ROLE.get(m) for m in markers]
    return {i: r for i, r in enumerate(found) if r is not None and found.count(r) == 1}


def hear(g: Grammar, lexicons: LexiconSet, scenario: Scenario, noisy: Utterance,
         rng: random.Random) -> RoleAssignment:
    stem_len = lexicons.word_length(scenario)
    tok_len = stem_len + (1 if scenario.markers else 0)
    if len(noisy.tokens) != 3 or any(len(t) != tok_len for t in noisy.tokens):
        raise ValueError(f"expected 3 tokens of length {tok_len}, got {noisy.tokens!r}")
    stems = [t[:stem_len] for t in noisy.tokens]

    if scenario.markers:
        fixed = _marker_constraints([t[-1] for t in noisy.tokens])
        if len(fixed) == 3:
            return order_from_roles(fixed[i] for i in range(3))
        if scenario is Scenario.NV_CASE:
            return _hear_nv(g, lexicons, stems, rng)
        for s in stems:
            nearest_word(lexicons.unified, s)
        allowed = [o.index for o in ORDERS
                   if all(o.positions[i] is r for i, r in fixed.items())]
        return _pick(g, allowed or None, rng)

    if scenario is Scenario.NV:
        return _hear_nv(g, lexicons, stems, rng)
    # BASE: decoded words carry no role information
    for s in stems:
        nearest_word(lexicons.unified, s)
    return _pick(g, None, rng)


def trial_mismatch(g: Grammar, lexicons: LexiconSet, scenario: Scenario,
                   noise: NoiseParams, rng: random.Random) -> int:
    """Positions (out of 3) whose role the hearer got wrong in one exchange."""
    utterance, truth = speak(g, lexicons, scenario, rng)
    noisy = Utterance(tuple(apply_noise(list(utterance.tokens), noise, rng)),
                      utterance.marker_attached)
    guess = hear(g, lexicons, scenario, noisy, rng)
    return MISMATCH[truth.index][guess.index]


def communication_trial(g: Grammar, lexicons: LexiconSet, scenario: Scenario,
                        noise: NoiseParams, rng: random.Random) -> Fraction:
    return Fraction(trial_mismatch(g, lexicons, scenario, noise, rng), 3)
