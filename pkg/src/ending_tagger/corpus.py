"""Tagged corpora: the canonical vertical TSV format, inline conversion and splitting.

Canonical format is one ``word<TAB>tag`` pair per line with a blank line
between sentences. The inline format is whitespace-separated ``word_TAG``
tokens, one sentence per line.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class CorpusError(ValueError):
    """Raised for malformed corpus input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _has_space(s: str) -> bool:
    return any(c.isspace() for c in s)


@dataclass(frozen=True)
class Token:
    word: str
    tag: str

    def __post_init__(self):
        if not self.word or _has_space(self.word):
            raise CorpusError(f"invalid word {self.word!r}")
        if not self.tag or _has_space(self.tag):
            raise CorpusError(f"invalid tag {self.tag!r}")


Sentence = tuple  # tuple[Token, ...], never empty


@dataclass(frozen=True)
class TaggedCorpus:
    sentences: tuple[Sentence, ...] = ()
    tagset: frozenset[str] = field(init=False)

    def __post_init__(self):
        sents = tuple(tuple(s) for s in self.sentences)
        for s in sents:
            if not s:
                raise CorpusError("empty sentence")
        object.__setattr__(self, "sentences", sents)
        object.__setattr__(
            self, "tagset", frozenset(tok.tag for s in sents for tok in s)
        )

    @classmethod
    def from_pairs(cls, sentences: Iterable[Iterable[tuple[str, str]]]) -> TaggedCorpus:
        return cls(tuple(tuple(Token(w, t) for w, t in s) for s in sentences))

    def __len__(self) -> int:
        return len(self.sentences)

    @property
    def n_tokens(self) -> int:
        return sum(len(s) for s in self.sentences)

    def words(self) -> list[list[str]]:
        return [[tok.word for tok in s] for s in self.sentences]

    def tags(self) -> list[list[str]]:
        return [[tok.tag for tok in s] for s in self.sentences]

    def tokens(self) -> Iterable[Token]:
        for s in self.sentences:
            yield from s


def parse_corpus(text: str) -> TaggedCorpus:
    """Parse canonical ``word<TAB>tag`` text into a corpus.

    Runs of blank lines count as a single sentence boundary.
    """
    sentences: list[list[Token]] = []
    current: list[Token] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            if current:
                sentences.append(current)
                current = []
            continue
        if "\t" not in line:
            raise CorpusError("expected word<TAB>tag", lineno)
        word, _, tag = line.partition("\t")
        if not word:
            raise CorpusError("empty word", lineno)
        if not tag:
            raise CorpusError("empty tag", lineno)
        try:
            current.append(Token(word, tag))
        except CorpusError as exc:
            raise CorpusError(str(exc), lineno) from None
    if current:
        sentences.append(current)
    if not sentences:
        raise CorpusError("empty corpus")
    return TaggedCorpus(tuple(tuple(s) for s in sentences))


def serialize_corpus(corpus: TaggedCorpus) -> str:
    blocks = ["".join(f"{t.word}\t{t.tag}\n" for t in s) for s in corpus.sentences]
    return "\n".join(blocks)


def read_corpus(path) -> TaggedCorpus:
    with open(path, encoding="utf-8") as f:
        return parse_corpus(f.read())


def write_corpus(corpus: TaggedCorpus, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(serialize_corpus(corpus))


def parse_words(text: str) -> list[list[str]]:
    """Read untagged input: one word per line, blank lines between sentences.

    A trailing tag column, if present, is ignored so gold files can be tagged
    directly.
    """
    sentences: list[list[str]] = []
    current: list[str] = []
    for raw in text.splitlines():
        line = raw.rstrip("\r")
        if not line.strip():
            if current:
                sentences.append(current)
                current = []
            continue
        current.append(line.split("\t", 1)[0].strip())
    if current:
        sentences.append(current)
    return sentences


def convert_inline(text: str) -> str:
    """Rewrite ``word_TAG`` inline annotation as canonical text.

    The last underscore of each token separates word from tag.
    """
    blocks = []
    for line in text.splitlines():
        fields = line.split()
        if not fields:
            continue
        out = []
        for item in fields:
            word, sep, tag = item.rpartition("_")
            if not sep or not word or not tag:
                raise CorpusError(f"token {item!r} has no word_TAG separator")
            out.append(f"{word}\t{tag}\n")
        blocks.append("".join(out))
    return "\n".join(blocks)


def split_corpus(
    corpus: TaggedCorpus, train_fraction: float, seed: int
) -> tuple[TaggedCorpus, TaggedCorpus]:
    """Seeded sentence-level train/test split.

    The train side gets ``ceil(train_fraction * n_sentences)`` sentences; both
    sides keep the original sentence order.
    """
    if not 0.0 < train_fraction < 1.0:
        raise ValueError(f"train_fraction must be in (0, 1), got {train_fraction}")
    n = len(corpus.sentences)
    if n < 2:
        raise ValueError("need at least 2 sentences to split")
    n_train = math.ceil(train_fraction * n)
    order = list(range(n))
    random.Random(seed).shuffle(order)
    train_idx = set(order[:n_train])
    train = [s for i, s in enumerate(corpus.sentences) if i in train_idx]
    test = [s for i, s in enumerate(corpus.sentences) if i not in train_idx]
    return TaggedCorpus(tuple(train)), TaggedCorpus(tuple(test))


def vocabulary(corpus: TaggedCorpus) -> Counter:
    return Counter(tok.word for tok in corpus.tokens())


def load_toy_corpus() -> TaggedCorpus:
    """The small bundled English-like corpus used by tests and demos."""
    from importlib.resources import files

    text = files("ending_tagger").joinpath("data/toy_corpus.tsv").read_text("utf-8")
    return parse_corpus(text)


def read_tag_list(path) -> frozenset[str]:
    """Read a closed-class tag file: one tag per line."""
    with open(path, encoding="utf-8") as f:
        return parse_tag_list(f.read())


def parse_tag_list(text: str) -> frozenset[str]:
    return frozenset(line.strip() for line in text.splitlines() if line.strip())


def concat(corpora: Sequence[TaggedCorpus]) -> TaggedCorpus:
    return TaggedCorpus(tuple(s for c in corpora for s in c.sentences))
