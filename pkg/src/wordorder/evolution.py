"""Genetic algorithm over grammars: evaluation, truncation selection, mutation."""

from __future__ import annotations

import hashlib
import math
import random
from concurrent.futures import Executor
from dataclasses import dataclass, field

from wordorder.agents import LexiconSet, Scenario, trial_mismatch
from wordorder.channel import NoiseParams
from wordorder.grammar import Grammar, entropy, mutate, uniform_grammar
from wordorder.lexicon import ALPHABET, LexiconKind, generate_lexicon


def stream(master_seed: int, *keys) -> random.Random:
    """Independent random stream addressed by ``(master_seed, *keys)``.

    Keys are hashed, so any stream can be rebuilt without replaying the
    others; this is what lets workers evaluate grammars in any order.
    """
    digest = hashlib.blake2b(repr((master_seed, *keys)).encode(), digest_size=16).digest()
    return random.Random(int.from_bytes(digest, "little"))


@dataclass(frozen=True)
class EvolutionParams:
    population_size: int = 100
    generations: int = 1000
    selection_rate: float = 0.3
    mutation_variance: float = 0.01
    trials_per_grammar: int = 1
    noise: NoiseParams = field(default_factory=NoiseParams)
    scenario: Scenario = Scenario.BASE
    master_seed: int = 0
    # survivors enter the next generation unmutated; mutated copies fill the rest
    elitism: bool = True
    lexicon_size: int = 1000
    noun_lexicon_size: int = 500
    verb_lexicon_size: int = 500
    word_length: int = 3

    def __post_init__(self):
        object.__setattr__(self, "scenario", Scenario(self.scenario))
        checks = [
            ("population_size", self.population_size >= 2, ">= 2"),
            ("generations", self.generations >= 0, ">= 0"),
            ("selection_rate", 0 < self.selection_rate <= 1, "in (0, 1]"),
            ("mutation_variance", self.mutation_variance >= 0, ">= 0"),
            ("trials_per_grammar", self.trials_per_grammar >= 1, ">= 1"),
            ("lexicon_size", self.lexicon_size >= 3, ">= 3"),
            ("noun_lexicon_size", self.noun_lexicon_size >= 2, ">= 2"),
            ("verb_lexicon_size", self.verb_lexicon_size >= 1, ">= 1"),
            ("word_length", self.word_length >= 1, ">= 1"),
        ]
        for name, ok, rule in checks:
            if not ok:
                raise ConfigError(name, f"must be {rule}, got {getattr(self, name)!r}")
        capacity = len(ALPHABET) ** self.word_length
        if self.scenario.split_lexicons:
            if self.noun_lexicon_size + self.verb_lexicon_size > capacity:
                raise ConfigError("noun_lexicon_size",
                                  f"noun + verb lexicons exceed the {capacity} possible words")
        elif self.lexicon_size > capacity:
            raise ConfigError("lexicon_size", f"exceeds the {capacity} possible words")

    @property
    def survivor_count(self) -> int:
        return math.ceil(self.selection_rate * self.population_size)


class ConfigError(ValueError):
    def __init__(self, key: str, message: str):
        super().__init__(f"{key}: {message}")
        self.key = key
        self.message = message


@dataclass(frozen=True)
class GenerationStats:
    generation: int
    avg_distance: float
    avg_entropy: float
    best_distance: float
    best_grammar: Grammar
    best_entropy: float


def build_lexicons(params: EvolutionParams) -> LexiconSet:
    """Lexicons depend on the seed only, so every scenario of a suite sees the same words."""
    seed, L = params.master_seed, params.word_length
    if params.scenario.split_lexicons:
        nouns = generate_lexicon(stream(seed, "lexicon", "noun"), params.noun_lexicon_size, L,
                                 kind=LexiconKind.NOUN)
        verbs = generate_lexicon(stream(seed, "lexicon", "verb"), params.verb_lexicon_size, L,
                                 exclude=nouns.words, kind=LexiconKind.VERB)
        return LexiconSet(nouns=nouns, verbs=verbs)
    return LexiconSet(unified=generate_lexicon(stream(seed, "lexicon", "unified"),
                                               params.lexicon_size, L))


def _fitness_chunk(grammars, start, params, lexicons, generation):
    out = []
    T = params.trials_per_grammar
    for k, g in enumerate(grammars, start):
        miss = 0
        for t in range(T):
            rng = stream(params.master_seed, params.scenario.value, "trial", generation, k, t)
            miss += trial_mismatch(g, lexicons, params.scenario, params.noise, rng)
        out.append(miss / (3 * T))
    return out


def evaluate_population(grammars: list[Grammar], params: EvolutionParams, lexicons: LexiconSet,
                        generation: int, executor: Executor | None = None,
                        chunks: int = 8) -> list[float]:
    """Mean role distance per grammar; lower is fitter.

    With an executor the population is split into ``chunks`` contiguous
    slices; every trial draws from its own stream, so the result does not
    depend on how the work is split.
    """
    if not grammars:
        raise ValueError("empty population")
    if executor is None:
        return _fitness_chunk(grammars, 0, params, lexicons, generation)
    size = math.ceil(len(grammars) / chunks)
    starts = range(0, len(grammars), size)
    futures = [executor.submit(_fitness_chunk, grammars[s:s + size], s, params, lexicons,
                               generation) for s in starts]
    return [f for fut in futures for f in fut.result()]


def rank(fitnesses: list[float]) -> list[int]:
    """Indices sorted by fitness, lowest index first among equals."""
    return sorted(range(len(fitnesses)), key=lambda i: (fitnesses[i], i))


def select_and_reproduce(grammars: list[Grammar], fitnesses: list[float],
                         params: EvolutionParams, rng: random.Random) -> list[Grammar]:
    if len(grammars) != len(fitnesses):
        raise ValueError("grammars and fitnesses differ in length")
    n = len(grammars)
    survivors = [grammars[i] for i in rank(fitnesses)[:params.survivor_count]]
    S = len(survivors)
    nxt = list(survivors) if params.elitism else []
    # survivor i parents offspring i, i+S, i+2S, ...
    k = 0
    while len(nxt) < n:
        nxt.append(mutate(survivors[k % S], rng, params.mutation_variance))
        k += 1
    return nxt


def summarize(generation: int, grammars: list[Grammar], fitnesses: list[float]) -> GenerationStats:
    n = len(grammars)
    best = rank(fitnesses)[0]
    return GenerationStats(
        generation=generation,
        avg_distance=math.fsum(fitnesses) / n,
        avg_entropy=math.fsum(entropy(g) for g in grammars) / n,
        best_distance=fitnesses[best],
        best_grammar=grammars[best],
        best_entropy=entropy(grammars[best]),
    )


def run_experiment(params: EvolutionParams, executor: Executor | None = None,
                   on_generation=None) -> list[GenerationStats]:
    """Evolve a uniform population; one stats row per generation 0..generations."""
    lexicons = build_lexicons(params)
    lexicons.check(params.scenario)
    grammars = [uniform_grammar()] * params.population_size
    stats = []
    for gen in range(params.generations + 1):
        fitnesses = evaluate_population(grammars, params, lexicons, gen, executor)
        stats.append(summarize(gen, grammars, fitnesses))
        if on_generation is not None:
            on_generation(stats[-1])
        if gen == params.generations:
            break
        rng = stream(params.master_seed, params.scenario.value, "reproduce", gen)
        grammars = select_and_reproduce(grammars, fitnesses, params, rng)
    return stats
