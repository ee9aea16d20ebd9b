"""Viterbi decoding over effective-tag-list lattices, plus an exhaustive oracle.

Scores are sums of log-probabilities: ``log F(w_i|t_i) + log P(t_i|t_{i-1})``
for every token, plus the transition into the closing boundary. Among equally
scored paths the lexicographically smallest tag sequence wins.

Each log-probability is rounded to a multiple of 2**-40 and held as an int, so
path sums are exact and associative; floating-point sums are not, and would
let the dynamic program and the exhaustive oracle break near-ties differently.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

from . import lexicon
from .config import RunConfig
from .corpus import TaggedCorpus, vocabulary
from .lexicon import LexicalModel
from .transition import TransitionModel, count_bigrams

BRUTE_FORCE_LIMIT = 10**6
SCALE = 2**40
NEG_INF = -math.inf


def _fixed(logp: float):
    return NEG_INF if logp == -math.inf else round(logp * SCALE)


def _fixed_transitions(model):
    memo = {}

    def trans(prev, tag):
        key = (prev, tag)
        v = memo.get(key)
        if v is None:
            v = memo[key] = _fixed(model.transition_logprob(prev, tag))
        return v

    return trans


@dataclass
class TaggerModel:
    lexical: LexicalModel
    transitions: TransitionModel
    config: RunConfig
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.lexical.tagset != self.transitions.tagset:
            raise ValueError("lexical and transition tagsets disagree")

    @property
    def boundary(self) -> str:
        return self.transitions.boundary

    @property
    def tagset(self) -> frozenset[str]:
        return self.lexical.tagset

    def lattice_column(self, word: str) -> tuple[tuple[str, float], ...]:
        """Sorted ``(tag, log emission)`` pairs for the word's candidate tags."""
        col = self._cache.get(word)
        if col is None:
            unit = self.lexical.unit(word)
            col = tuple(
                (t, _log(self.lexical.unit_prob(unit, t)))
                for t in sorted(lexicon.candidate_tags(self.lexical, word))
            )
            self._cache[word] = col
        return col

    def emission_logprob(self, word: str, tag: str) -> float:
        return _log(lexicon.emission_prob(self.lexical, word, tag))

    def transition_logprob(self, prev: str, tag: str) -> float:
        return self.transitions.logprob(prev, tag)


def _log(p: float) -> float:
    return math.log(p) if p > 0 else -math.inf


def train_tagger(corpus: TaggedCorpus, config: RunConfig, cache: dict | None = None) -> TaggerModel:
    """Fit the lexical and transition models for one configuration.

    ``cache`` lets several configurations trained on the same corpus share
    the vocabulary, bigram counts and transformed corpora.
    """
    if not corpus.n_tokens:
        raise ValueError("cannot train on an empty corpus")
    if config.boundary in corpus.tagset:
        raise ValueError(f"boundary tag {config.boundary!r} occurs in the corpus")
    if cache is None:
        cache = {}
    L = config.ending_length
    closed = config.closed_class_tags
    vocab = cache.get("vocab")
    if vocab is None:
        vocab = cache["vocab"] = vocabulary(corpus)

    def transformed(n):
        key = ("units", L, n, closed)
        if key not in cache:
            frequent = lexicon.select_frequent_words(vocab, n)
            cache[key] = lexicon.transform_corpus(corpus, frequent, L, closed)
        return cache[key]

    units = transformed(config.top_n)
    if config.doubled:
        units = lexicon.double_up(transformed(0), units)
    lex = lexicon.train_lexical(units, config.etl, corpus)
    bigram_key = ("bigrams", config.boundary)
    if bigram_key not in cache:
        cache[bigram_key] = count_bigrams(corpus, config.boundary)
    return TaggerModel(lex, TransitionModel(cache[bigram_key], config.smoothing), config)


def candidate_tags(model: TaggerModel, word: str) -> frozenset[str]:
    return lexicon.candidate_tags(model.lexical, word)


@dataclass(frozen=True)
class DecodedSentence:
    words: tuple[str, ...]
    tags: tuple[str, ...]
    log_score: float
    fallback: bool = False


def _best_path(model, columns, from_boundary=True, to_boundary=True):
    """Max-scoring path through ``columns``; ``None`` when every path scores -inf.

    With ``from_boundary`` False the first column is a pinned token whose
    emission was already counted, so it starts at 0.
    """
    trans = _fixed_transitions(model)
    B = model.boundary
    scores = {}
    for tag, em in columns[0]:
        scores[tag] = trans(B, tag) + em if from_boundary else 0
    order = [t for t, _ in columns[0]]  # prefixes ranked lexicographically
    backptrs = []
    for col in columns[1:]:
        new, bp = {}, {}
        for tag, em in col:
            best, arg = None, None
            for p in order:
                s = scores[p] + trans(p, tag)
                if best is None or s > best:
                    best, arg = s, p
            new[tag] = best + em
            bp[tag] = arg
        rank = {p: i for i, p in enumerate(order)}
        order = sorted(new, key=lambda t: (rank[bp[t]], t))
        scores = new
        backptrs.append(bp)
    best, last = None, None
    for t in order:
        s = scores[t] + trans(t, B) if to_boundary else scores[t]
        if best is None or s > best:
            best, last = s, t
    if best == NEG_INF:
        return None
    path = [last]
    for bp in reversed(backptrs):
        path.append(bp[path[-1]])
    path.reverse()
    return tuple(path), best


def _fallback(words, columns) -> DecodedSentence:
    tags = []
    for col in columns:
        best, arg = None, None
        for t, em in col:
            if best is None or em > best:
                best, arg = em, t
        tags.append(arg)
    return DecodedSentence(tuple(words), tuple(tags), -math.inf, True)


def _columns(model: TaggerModel, words: Sequence[str]):
    if not words:
        raise ValueError("cannot decode an empty sentence")
    return [tuple((t, _fixed(em)) for t, em in model.lattice_column(w)) for w in words]


def viterbi(model: TaggerModel, words: Sequence[str]) -> DecodedSentence:
    """Highest-scoring tag sequence for a whole sentence.

    If every path has zero probability each token gets its best-emission
    candidate and the result is flagged ``fallback``.
    """
    columns = _columns(model, words)
    found = _best_path(model, columns)
    if found is None:
        return _fallback(words, columns)
    tags, score = found
    return DecodedSentence(tuple(words), tags, score / SCALE)


def brute_force_decode(model: TaggerModel, words: Sequence[str]) -> DecodedSentence:
    """Score every path in the lattice; a test oracle for :func:`viterbi`."""
    columns = _columns(model, words)
    size = math.prod(len(c) for c in columns)
    if size > BRUTE_FORCE_LIMIT:
        raise ValueError(f"lattice has {size} paths, over the {BRUTE_FORCE_LIMIT} limit")
    trans = _fixed_transitions(model)
    B = model.boundary
    best, best_path = None, None
    for path in itertools.product(*columns):
        s, prev = 0, B
        for tag, em in path:
            s += trans(prev, tag) + em
            prev = tag
        s += trans(prev, B)
        if best is None or s > best:
            best, best_path = s, path
    if best == NEG_INF:
        return _fallback(words, columns)
    return DecodedSentence(tuple(words), tuple(t for t, _ in best_path), best / SCALE)


def segment_spans(model: TaggerModel, words: Sequence[str]) -> list[tuple[int, int]]:
    """Split at unambiguous tokens into inclusive ``(start, end)`` spans.

    Neighbouring spans share their unambiguous endpoint.
    """
    n = len(words)
    if n == 0:
        return []
    cuts = {0, n - 1}
    cuts.update(i for i, w in enumerate(words) if len(candidate_tags(model, w)) == 1)
    points = sorted(cuts)
    if len(points) == 1:
        return [(0, 0)]
    return list(zip(points, points[1:]))


def decode_spans(model: TaggerModel, words: Sequence[str]) -> DecodedSentence:
    """Decode span by span with unambiguous tokens pinned; same result as :func:`viterbi`."""
    columns = _columns(model, words)
    n = len(words)
    tags: list[str] = []
    total = 0
    for start, end in segment_spans(model, words):
        found = _best_path(
            model, columns[start:end + 1], from_boundary=start == 0, to_boundary=end == n - 1
        )
        if found is None:
            return _fallback(words, columns)
        path, score = found
        tags.extend(path if start == 0 else path[1:])
        total += score
    return DecodedSentence(tuple(words), tuple(tags), total / SCALE)


def decode(model: TaggerModel, words: Sequence[str], spans: bool = False) -> DecodedSentence:
    return decode_spans(model, words) if spans else viterbi(model, words)


def tag_sentences(model: TaggerModel, sentences, spans: bool = False) -> list[DecodedSentence]:
    return [decode(model, s, spans) for s in sentences]
