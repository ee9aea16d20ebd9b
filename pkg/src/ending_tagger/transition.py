"""Bigram tag transitions with MLE, add-one and Good-Turing count adjustment."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

MLE = "mle"
ADD_ONE = "add_one"
GOOD_TURING = "good_turing"
POLICIES = (MLE, ADD_ONE, GOOD_TURING)

_ALIASES = {
    "mle": MLE,
    "ml": MLE,
    "addone": ADD_ONE,
    "add_one": ADD_ONE,
    "add-one": ADD_ONE,
    "gt": GOOD_TURING,
    "good_turing": GOOD_TURING,
    "good-turing": GOOD_TURING,
}

DEFAULT_BOUNDARY = "__BOUNDARY__"


def smoothing_policy(name: str) -> str:
    """Normalise a smoothing name (``mle``, ``addone``, ``gt``, ...)."""
    try:
        return _ALIASES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown smoothing policy {name!r}") from None


@dataclass(frozen=True)
class BigramCounts:
    """Tag bigram counts; ``boundary`` stands in for the tags before and after a sentence."""

    counts: Mapping[tuple[str, str], int]
    tagset: frozenset[str]
    boundary: str = DEFAULT_BOUNDARY
    unigram: Mapping[str, int] = field(init=False)

    def __post_init__(self):
        if self.boundary in self.tagset:
            raise ValueError(f"boundary tag {self.boundary!r} collides with a corpus tag")
        states = self.tagset | {self.boundary}
        uni: Counter = Counter()
        for (p, t), c in self.counts.items():
            if p not in states or t not in states:
                raise ValueError(f"bigram ({p}, {t}) uses a tag outside the tagset")
            if p == t == self.boundary:
                raise ValueError("boundary-to-boundary transition is impossible")
            if c < 0:
                raise ValueError("negative count")
            uni[p] += c
        object.__setattr__(self, "counts", {k: v for k, v in self.counts.items() if v})
        object.__setattr__(self, "unigram", dict(uni))

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def columns(self, prev: str) -> list[str]:
        """Tags that may follow ``prev``, in sorted order, boundary last."""
        cols = sorted(self.tagset)
        if prev != self.boundary:
            cols.append(self.boundary)
        return cols

    def rows(self) -> list[str]:
        return sorted(self.tagset) + [self.boundary]


def count_bigrams(
    tag_sequences: Iterable[Sequence[str]],
    boundary: str = DEFAULT_BOUNDARY,
    tagset: Iterable[str] | None = None,
) -> BigramCounts:
    """Count tag bigrams, padding each sentence with the boundary at both ends.

    ``tag_sequences`` may be a ``TaggedCorpus`` or any iterable of tag lists.
    """
    if hasattr(tag_sequences, "tags"):
        seqs = tag_sequences.tags()
    else:
        seqs = [list(s) for s in tag_sequences]
    counts: Counter = Counter()
    seen: set[str] = set()
    for tags in seqs:
        if not tags:
            continue
        seen.update(tags)
        padded = [boundary, *tags, boundary]
        counts.update(zip(padded, padded[1:]))
    full = frozenset(seen) | frozenset(tagset or ())
    if boundary in full:
        raise ValueError(f"boundary tag {boundary!r} collides with a corpus tag")
    return BigramCounts(dict(counts), full, boundary)


@dataclass(frozen=True)
class FreqOfFreqs:
    table: Mapping[int, int]  # r -> N_r, r >= 1
    total_types: int
    seen_types: int

    @property
    def unseen_types(self) -> int:
        return self.total_types - self.seen_types

    def n(self, r: int) -> int:
        return self.table.get(r, 0)


def freq_of_freqs(bigrams: BigramCounts) -> FreqOfFreqs:
    table = Counter(c for c in bigrams.counts.values() if c > 0)
    k = len(bigrams.tagset) + 1
    return FreqOfFreqs(dict(sorted(table.items())), k * k - 1, sum(table.values()))


def adjust_count(r: int, fof: FreqOfFreqs, policy: str) -> float:
    """Adjusted count r* for a bigram observed ``r`` times."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if policy == MLE:
        return float(r)
    if policy == ADD_ONE:
        return float(r + 1)
    if policy != GOOD_TURING:
        raise ValueError(f"unknown smoothing policy {policy!r}")
    if r == 0:
        if fof.unseen_types <= 0:
            return 0.0
        # with no singletons the plain estimate is zero; keep unseen mass positive
        return max(fof.n(1), 1) / fof.unseen_types
    n_r = fof.n(r)
    if n_r == 0:
        raise ValueError(f"no bigram type occurs exactly {r} times")
    n_next = fof.n(r + 1)
    if n_next == 0:
        return float(r)
    return (r + 1) * n_next / n_r


class TransitionModel:
    """Row-normalised transition probabilities under one smoothing policy.

    All probabilities are computed once from the integer counts.
    """

    def __init__(self, bigrams: BigramCounts, policy: str = MLE, fof: FreqOfFreqs | None = None):
        self.bigrams = bigrams
        self.policy = smoothing_policy(policy)
        self.fof = fof if fof is not None else freq_of_freqs(bigrams)
        self.boundary = bigrams.boundary
        self.tagset = bigrams.tagset
        adjusted = {r: adjust_count(r, self.fof, self.policy) for r in self.fof.table}
        adjusted[0] = adjust_count(0, self.fof, self.policy)
        self._prob: dict[str, dict[str, float]] = {}
        self._logprob: dict[str, dict[str, float]] = {}
        for prev in bigrams.rows():
            cols = bigrams.columns(prev)
            row = {t: adjusted[bigrams.counts.get((prev, t), 0)] for t in cols}
            total = math.fsum(row.values())
            probs = {t: (v / total if total > 0 else 0.0) for t, v in row.items()}
            self._prob[prev] = probs
            self._logprob[prev] = {t: (math.log(p) if p > 0 else -math.inf) for t, p in probs.items()}

    def prob(self, prev: str, tag: str) -> float:
        try:
            row = self._prob[prev]
        except KeyError:
            raise ValueError(f"unknown previous tag {prev!r}") from None
        return row.get(tag, 0.0)

    def logprob(self, prev: str, tag: str) -> float:
        try:
            row = self._logprob[prev]
        except KeyError:
            raise ValueError(f"unknown previous tag {prev!r}") from None
        return row.get(tag, -math.inf)

    def row(self, prev: str) -> dict[str, float]:
        return dict(self._prob[prev])


def transition_prob(
    bigrams: BigramCounts, fof: FreqOfFreqs, policy: str, prev: str, tag: str
) -> float:
    return TransitionModel(bigrams, policy, fof).prob(prev, tag)
