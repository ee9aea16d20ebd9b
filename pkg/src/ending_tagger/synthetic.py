"""Corpora sampled from a known 8-tag HMM whose open classes are marked by 2-letter suffixes.

Each open-class tag owns one or two suffixes shared by a Zipf-distributed
family of invented stems, so most of its types are rare and an ending model
can still tag them. A handful of frequent irregular words carry a suffix that
points at the wrong tag, and a few closed-class words overlap in their last
two letters; whole-word statistics for frequent words fix both.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .corpus import TaggedCorpus, Token

TAGS = ("CC", "DT", "IN", "JJ", "NN", "PR", "RB", "VB")

TRANSITIONS = {
    "^": {"DT": 0.45, "PR": 0.30, "NN": 0.10, "RB": 0.10, "IN": 0.05},
    "DT": {"NN": 0.60, "JJ": 0.40},
    "JJ": {"NN": 0.75, "JJ": 0.10, "CC": 0.10, "$": 0.05},
    "NN": {"VB": 0.35, "IN": 0.25, "CC": 0.10, "NN": 0.05, "$": 0.25},
    "VB": {"DT": 0.35, "IN": 0.20, "RB": 0.15, "JJ": 0.10, "PR": 0.05, "$": 0.15},
    "IN": {"DT": 0.60, "NN": 0.20, "PR": 0.20},
    "PR": {"VB": 0.80, "RB": 0.15, "$": 0.05},
    "RB": {"VB": 0.50, "JJ": 0.30, "$": 0.20},
    "CC": {"DT": 0.35, "PR": 0.25, "NN": 0.20, "JJ": 0.10, "VB": 0.10},
}

SUFFIXES = {
    "NN": ("on", "er", "es"),
    "VB": ("ed", "es", "ts"),
    "JJ": ("al", "ic", "er"),
    "RB": ("ly",),
}

CLOSED = {
    "DT": ("the", "a", "this", "these", "that"),
    "IN": ("of", "in", "on", "at", "by", "for"),
    "PR": ("he", "she", "it", "they", "that"),
    "CC": ("and", "or", "but"),
}

# frequent open-class words whose ending suggests a different tag
IRREGULAR = {
    "NN": ("bed", "red", "seed", "fly", "ally", "metal"),
    "VB": ("ran", "sat", "got", "went", "made", "ate"),
    "JJ": ("good", "big", "new", "old", "early"),
    "RB": ("soon", "often", "well", "there"),
}

_CONSONANTS = "bcdfghklmnprstvwz"
_VOWELS = "aeiou"


@dataclass(frozen=True)
class HMMSpec:
    n_stems: int = 2000
    irregular_share: float = 0.25
    zipf_exponent: float = 1.0


def _stem(rng: random.Random) -> str:
    n = rng.randint(2, 3)
    return "".join(rng.choice(_CONSONANTS) + rng.choice(_VOWELS) for _ in range(n)) + rng.choice(_CONSONANTS)


def build_lexicon(rng: random.Random, spec: HMMSpec) -> dict[str, tuple[list[str], list[float]]]:
    """Per-tag emission support and weights."""
    lexicon = {}
    for tag in TAGS:
        if tag in CLOSED:
            words = list(CLOSED[tag])
            weights = [1.0 / (i + 1) for i in range(len(words))]
        else:
            stems = []
            seen = set()
            while len(stems) < spec.n_stems:
                s = _stem(rng)
                if s not in seen:
                    seen.add(s)
                    stems.append(s)
            suffixes = SUFFIXES[tag]
            regular = [s + suffixes[i % len(suffixes)] for i, s in enumerate(stems)]
            reg_w = [1.0 / (i + 1) ** spec.zipf_exponent for i in range(len(regular))]
            irregular = list(IRREGULAR[tag])
            irr_total = spec.irregular_share / (1 - spec.irregular_share) * sum(reg_w)
            irr_w = [irr_total / len(irregular)] * len(irregular)
            words = irregular + regular
            weights = irr_w + reg_w
        lexicon[tag] = (words, weights)
    return lexicon


def generate_corpus(n_tokens: int, seed: int = 0, spec: HMMSpec = HMMSpec(), max_len: int = 40) -> TaggedCorpus:
    """Sample whole sentences until at least ``n_tokens`` tokens exist."""
    rng = random.Random(seed)
    lexicon = build_lexicon(rng, spec)
    rows = {p: (list(d), list(d.values())) for p, d in TRANSITIONS.items()}
    sentences = []
    total = 0
    while total < n_tokens:
        tags = []
        prev = "^"
        while True:
            nxt = rng.choices(*rows[prev])[0]
            if nxt == "$" or len(tags) >= max_len:
                break
            tags.append(nxt)
            prev = nxt
        if not tags:
            continue
        sent = tuple(Token(rng.choices(*lexicon[t])[0], t) for t in tags)
        sentences.append(sent)
        total += len(sent)
    return TaggedCorpus(tuple(sentences))
