"""Random fixed-length word lists and Levenshtein nearest-word decoding."""

from __future__ import annotations

import enum
import random
import string
from pathlib import Path
from typing import Iterable

import numpy as np

ALPHABET = string.ascii_lowercase


class LexiconKind(enum.Enum):
    UNIFIED = "unified"
    NOUN = "noun"
    VERB = "verb"


def levenshtein(a: str, b: str) -> int:
    """Edit distance with unit-cost insertion, deletion and substitution."""
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


class Lexicon:
    """An ordered list of distinct words of equal length.

    Immutable after construction. Decoding results are memoized per observed
    string, which is safe because the word list never changes.
    """

    def __init__(self, words: Iterable[str], kind: LexiconKind = LexiconKind.UNIFIED,
                 alphabet: str = ALPHABET):
        words = tuple(words)
        if not words:
            raise ValueError("lexicon must contain at least one word")
        lengths = {len(w) for w in words}
        if len(lengths) != 1:
            raise ValueError(f"words have mixed lengths {sorted(lengths)}")
        if len(set(words)) != len(words):
            raise ValueError("lexicon contains duplicate words")
        bad = set("".join(words)) - set(alphabet)
        if bad:
            raise ValueError(f"letters outside the alphabet: {sorted(bad)}")
        self.words = words
        self.kind = LexiconKind(kind)
        self.alphabet = alphabet
        self.word_length = lengths.pop()
        self._index = {w: i for i, w in enumerate(words)}
        self._codes = np.array([[ord(c) for c in w] for w in words], dtype=np.int32)
        self._memo: dict[str, tuple[int, int]] = {}

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, word) -> bool:
        return word in self._index

    def __getitem__(self, i: int) -> str:
        return self.words[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Lexicon) and (self.words, self.kind) == (other.words, other.kind)

    def __hash__(self) -> int:
        return hash((self.words, self.kind))

    def __repr__(self) -> str:
        return f"Lexicon({self.kind.value}, {len(self)} words)"

    def distances(self, observed: str) -> np.ndarray:
        """Levenshtein distance from ``observed`` to every word, in list order."""
        n, L = self._codes.shape
        obs = [ord(c) for c in observed]
        prev = np.broadcast_to(np.arange(len(obs) + 1, dtype=np.int32), (n, len(obs) + 1)).copy()
        for i in range(L):
            col = self._codes[:, i]
            cur = np.empty_like(prev)
            cur[:, 0] = i + 1
            for j, c in enumerate(obs):
                sub = prev[:, j] + (col != c)
                cur[:, j + 1] = np.minimum(np.minimum(prev[:, j + 1] + 1, cur[:, j] + 1), sub)
            prev = cur
        return prev[:, -1]

    def nearest_index(self, observed: str) -> tuple[int, int]:
        hit = self._index.get(observed)
        if hit is not None:
            return hit, 0
        cached = self._memo.get(observed)
        if cached is None:
            d = self.distances(observed)
            i = int(np.argmin(d))  # first minimum, i.e. lowest index on ties
            cached = self._memo[observed] = (i, int(d[i]))
        return cached

    # pickled copies (process pools) start with an empty memo
    def __getstate__(self):
        state = self.__dict__.copy()
        state["_memo"] = {}
        return state


def generate_lexicon(rng: random.Random, size: int, word_length: int = 3,
                     exclude: Iterable[str] = (), kind: LexiconKind = LexiconKind.UNIFIED,
                     alphabet: str = ALPHABET) -> Lexicon:
    """Draw ``size`` distinct uniformly random words not in ``exclude``."""
    exclude = set(exclude)
    if size < 1:
        raise ValueError(f"lexicon size must be >= 1, got {size}")
    if word_length < 1:
        raise ValueError(f"word length must be >= 1, got {word_length}")
    capacity = len(alphabet) ** word_length
    taken = sum(1 for w in exclude if len(w) == word_length)
    if capacity < size + taken:
        raise ValueError(
            f"cannot draw {size} distinct words of length {word_length} "
            f"from {capacity} possible ({taken} excluded)")
    words: list[str] = []
    seen = set(exclude)
    while len(words) < size:
        w = "".join(rng.choice(alphabet) for _ in range(word_length))
        if w not in seen:
            seen.add(w)
            words.append(w)
    return Lexicon(words, kind, alphabet)


def nearest_word(lexicon: Lexicon, observed: str) -> tuple[str, int]:
    """Closest lexicon word by edit distance; ties go to the lowest list index."""
    i, d = lexicon.nearest_index(observed)
    return lexicon.words[i], d


def classify_word(nouns: Lexicon, verbs: Lexicon, observed: str) -> tuple[str, LexiconKind]:
    """Nearest word over both lexicons, preferring the noun list on ties."""
    ni, nd = nouns.nearest_index(observed)
    vi, vd = verbs.nearest_index(observed)
    if vd < nd:
        return verbs.words[vi], LexiconKind.VERB
    return nouns.words[ni], LexiconKind.NOUN


def save_lexicon(lexicon: Lexicon, path) -> None:
    lines = [f"# kind: {lexicon.kind.value}", *lexicon.words]
    Path(path).write_text("\n".join(lines) + "\n")


def load_lexicon(path) -> Lexicon:
    lines = Path(path).read_text().splitlines()
    if not lines or not lines[0].startswith("# kind:"):
        raise ValueError(f"{path}: missing '# kind:' header line")
    kind = LexiconKind(lines[0].split(":", 1)[1].strip())
    return Lexicon([w for w in lines[1:] if w], kind)
