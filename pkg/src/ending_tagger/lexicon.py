"""Lexical (emission) model built on word endings plus a set of whole words.

Training tokens are rewritten into lexical units before counting: a token
stays a whole word when its word is among the N most frequent training words
(or belongs to a closed class, when closed-class tags are configured), and is
otherwise reduced to its final L characters.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

from .corpus import TaggedCorpus

WORD = "word"
ENDING = "ending"

UNIT = "unit"
RELEXED = "relexed"
ETL_STRATEGIES = (UNIT, RELEXED)


class LexicalUnit(NamedTuple):
    surface: str
    kind: str  # WORD or ENDING

    def __str__(self):
        return self.surface if self.kind == WORD else "-" + self.surface


def extract_ending(word: str, length: int) -> str:
    """Final ``length`` characters of ``word``; short words are their own ending."""
    if length < 1:
        raise ValueError(f"ending length must be >= 1, got {length}")
    if not word:
        raise ValueError("empty word")
    return word[-length:]


@dataclass(frozen=True)
class FrequentWordSet:
    words: frozenset[str]
    n_requested: int

    def __contains__(self, word):
        return word in self.words

    def __len__(self):
        return len(self.words)


def select_frequent_words(vocab: Mapping[str, int], n: int) -> FrequentWordSet:
    """The ``n`` most frequent words; ties at the cutoff go to the smaller string."""
    if n < 0:
        raise ValueError(f"N must be >= 0, got {n}")
    ranked = sorted(vocab.items(), key=lambda kv: (-kv[1], kv[0]))
    return FrequentWordSet(frozenset(w for w, _ in ranked[:n]), n)


def closed_class_words(corpus: TaggedCorpus, closed_class_tags: Iterable[str]) -> frozenset[str]:
    """Words seen at least once with a closed-class tag."""
    closed = frozenset(closed_class_tags)
    if not closed:
        return frozenset()
    return frozenset(tok.word for tok in corpus.tokens() if tok.tag in closed)


@dataclass(frozen=True)
class TransformedCorpus:
    """Sentences of ``(LexicalUnit, tag)`` pairs plus the settings that made them."""

    sentences: tuple[tuple[tuple[LexicalUnit, str], ...], ...]
    ending_length: int
    frequent: FrequentWordSet
    closed_class_tags: frozenset[str] = frozenset()
    kept_words: frozenset[str] = frozenset()

    @property
    def n_tokens(self) -> int:
        return sum(len(s) for s in self.sentences)

    def units(self) -> Iterable[tuple[LexicalUnit, str]]:
        for s in self.sentences:
            yield from s


def unit_for(word: str, kept_words: frozenset[str], ending_length: int) -> LexicalUnit:
    if word in kept_words:
        return LexicalUnit(word, WORD)
    return LexicalUnit(extract_ending(word, ending_length), ENDING)


def transform_corpus(
    corpus: TaggedCorpus,
    frequent: FrequentWordSet,
    ending_length: int,
    closed_class_tags: Iterable[str] = (),
) -> TransformedCorpus:
    """Truncate every token whose word is neither frequent nor closed-class."""
    closed = frozenset(closed_class_tags)
    kept = frozenset(frequent.words) | closed_class_words(corpus, closed)
    sentences = tuple(
        tuple((unit_for(tok.word, kept, ending_length), tok.tag) for tok in s)
        for s in corpus.sentences
    )
    return TransformedCorpus(sentences, ending_length, frequent, closed, kept)


def double_up(truncated_only: TransformedCorpus, mixed: TransformedCorpus) -> TransformedCorpus:
    """Concatenate a fully truncated copy of the corpus with a mixed copy.

    Ending statistics then survive however large N gets. Whole-word decisions
    at decode time follow the mixed copy.
    """
    if truncated_only.ending_length != mixed.ending_length:
        raise ValueError(
            f"ending length mismatch: {truncated_only.ending_length} vs {mixed.ending_length}"
        )
    if len(truncated_only.frequent):
        raise ValueError("truncated_only must be transformed with N=0")
    tags_a = [[t for _, t in s] for s in truncated_only.sentences]
    tags_b = [[t for _, t in s] for s in mixed.sentences]
    if tags_a != tags_b:
        raise ValueError("inputs do not derive from the same corpus")
    return TransformedCorpus(
        truncated_only.sentences + mixed.sentences,
        mixed.ending_length,
        mixed.frequent,
        mixed.closed_class_tags,
        mixed.kept_words,
    )


@dataclass(frozen=True)
class LexicalModel:
    ending_length: int
    frequent: FrequentWordSet
    closed_class_tags: frozenset[str]
    kept_words: frozenset[str]
    emission_counts: Mapping[tuple[LexicalUnit, str], int]
    etl: Mapping[LexicalUnit, frozenset[str]]
    etl_strategy: str
    tagset: frozenset[str]
    open_class_tags: frozenset[str]
    # word -> tags it carried in the original (untruncated) training corpus
    word_tags: Mapping[str, frozenset[str]]
    tag_totals: Mapping[str, int] = field(init=False)

    def __post_init__(self):
        if self.etl_strategy not in ETL_STRATEGIES:
            raise ValueError(f"unknown ETL strategy {self.etl_strategy!r}")
        totals: Counter = Counter()
        for (_, tag), c in self.emission_counts.items():
            totals[tag] += c
        object.__setattr__(self, "tag_totals", dict(totals))

    def unit(self, word: str) -> LexicalUnit:
        return unit_for(word, self.kept_words, self.ending_length)

    def unit_prob(self, unit: LexicalUnit, tag: str) -> float:
        """P(unit | tag), normalised over every unit counted with ``tag``."""
        if tag not in self.tagset:
            raise ValueError(f"unknown tag {tag!r}")
        if unit not in self.etl:
            if tag in self.open_class_tags:
                return 1.0 / len(self.open_class_tags)
            return 0.0
        total = self.tag_totals.get(tag, 0)
        if not total:
            return 0.0
        return self.emission_counts.get((unit, tag), 0) / total

    def unit_counts(self) -> Counter:
        return Counter(u.kind for u in self.etl)


def emission_prob(model: LexicalModel, word: str, tag: str) -> float:
    return model.unit_prob(model.unit(word), tag)


def train_lexical(
    transformed: TransformedCorpus, etl_strategy: str, original: TaggedCorpus
) -> LexicalModel:
    if etl_strategy not in ETL_STRATEGIES:
        raise ValueError(f"unknown ETL strategy {etl_strategy!r}")
    if not transformed.n_tokens:
        raise ValueError("cannot train on an empty corpus")

    counts: Counter = Counter(transformed.units())
    etl: dict[LexicalUnit, set[str]] = defaultdict(set)
    for unit, tag in counts:
        etl[unit].add(tag)

    word_tags: dict[str, set[str]] = defaultdict(set)
    for tok in original.tokens():
        word_tags[tok.word].add(tok.tag)

    tagset = frozenset(tag for _, tag in counts) | original.tagset
    closed = frozenset(transformed.closed_class_tags)
    return LexicalModel(
        ending_length=transformed.ending_length,
        frequent=transformed.frequent,
        closed_class_tags=closed,
        kept_words=transformed.kept_words,
        emission_counts=dict(counts),
        etl={u: frozenset(ts) for u, ts in etl.items()},
        etl_strategy=etl_strategy,
        tagset=tagset,
        open_class_tags=tagset - closed,
        word_tags={w: frozenset(ts) for w, ts in word_tags.items()},
    )


def candidate_tags(model: LexicalModel, word: str) -> frozenset[str]:
    """Effective tag-list for ``word`` under the model's ETL strategy.

    Under the unit strategy a training word seen with a single tag keeps that
    tag however it was truncated.
    """
    if model.etl_strategy == UNIT:
        tags = model.word_tags.get(word)
        if tags is not None and len(tags) == 1:
            return tags
    unit = model.unit(word)
    tags = model.etl.get(unit)
    if tags is not None:
        return tags
    return model.open_class_tags or model.tagset
