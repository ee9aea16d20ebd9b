import itertools
import math
import random

import pytest
from hypothesis import assume, given, settings, strategies as st

from ending_tagger import RunConfig, TaggedCorpus, train_tagger
from ending_tagger.decoder import (
    BRUTE_FORCE_LIMIT,
    brute_force_decode,
    candidate_tags,
    decode_spans,
    segment_spans,
    viterbi,
)

from lattices import random_model, random_sentence

B = "$"


class StubModel:
    """A lattice given directly by probability tables."""

    boundary = B

    def __init__(self, emissions, transitions):
        self.emissions = emissions  # word -> {tag: p}
        self.transitions = transitions  # (prev, tag) -> p

    def lattice_column(self, word):
        return tuple((t, _log(p)) for t, p in sorted(self.emissions[word].items()))

    def transition_logprob(self, prev, tag):
        return _log(self.transitions.get((prev, tag), 0.0))

    def path_prob(self, words, tags):
        p, prev = 1.0, B
        for w, t in zip(words, tags):
            p *= self.transitions.get((prev, t), 0.0) * self.emissions[w][t]
            prev = t
        return p * self.transitions.get((prev, B), 0.0)


def _log(p):
    return math.log(p) if p > 0 else -math.inf


TWO_TAG = StubModel(
    {"w1": {"A": 0.2, "B": 0.8}, "w2": {"A": 0.9, "B": 0.1}},
    {
        (B, "A"): 0.6, (B, "B"): 0.4,
        ("A", "A"): 0.5, ("A", "B"): 0.5,
        ("B", "A"): 0.9, ("B", "B"): 0.1,
        ("A", B): 1.0, ("B", B): 1.0,
    },
)


def test_two_token_example():
    words = ["w1", "w2"]
    # enumerate all four paths by hand-rolled products
    scores = {tags: TWO_TAG.path_prob(words, tags) for tags in itertools.product("AB", repeat=2)}
    best = max(scores, key=scores.get)
    assert best == ("B", "A")
    assert scores[best] == pytest.approx(0.4 * 0.8 * 0.9 * 0.9)
    assert scores[best] == pytest.approx(0.2592)

    out = viterbi(TWO_TAG, words)
    assert out.tags == best
    assert math.exp(out.log_score) == pytest.approx(0.2592, rel=1e-12)
    assert brute_force_decode(TWO_TAG, words) == out


def test_single_word_singleton():
    m = StubModel({"precise": {"JJ": 0.01}}, {(B, "JJ"): 0.1, ("JJ", B): 0.2})
    assert viterbi(m, ["precise"]).tags == ("JJ",)


def test_single_token_is_argmax_of_in_emission_out():
    m = StubModel(
        {"w": {"A": 0.5, "B": 0.3, "C": 0.2}},
        {(B, "A"): 0.1, (B, "B"): 0.5, (B, "C"): 0.4, ("A", B): 1.0, ("B", B): 0.5, ("C", B): 1.0},
    )
    expected = max("ABC", key=lambda t: m.path_prob(["w"], [t]))
    assert viterbi(m, ["w"]).tags == (expected,) == brute_force_decode(m, ["w"]).tags


def test_forced_lattice():
    rng = random.Random(5)
    words = [f"w{i}" for i in range(8)]
    tags = [rng.choice("ABCD") for _ in words]
    emissions = {w: {t: rng.random()} for w, t in zip(words, tags)}
    trans = {(p, t): rng.random() + 0.01 for p in "ABCD" + B for t in "ABCD" + B}
    assert viterbi(StubModel(emissions, trans), words).tags == tuple(tags)


def test_empty_sentence():
    with pytest.raises(ValueError):
        viterbi(TWO_TAG, [])


def test_brute_force_guard():
    m = StubModel({"w": {t: 0.1 for t in "ABCDEFGHIJ"}}, {})
    with pytest.raises(ValueError, match="limit"):
        brute_force_decode(m, ["w"] * 7)
    assert 10**7 > BRUTE_FORCE_LIMIT


def _random_stub(rng, n_tokens=5, tags="ABC", levels=(0.0, 0.25, 0.5, 1.0)):
    """Random lattice; coarse probability levels force exact ties and zeros."""
    words = [f"w{i}" for i in range(n_tokens)]
    emissions = {}
    for w in words:
        cands = rng.sample(tags, rng.randint(1, len(tags)))
        emissions[w] = {t: rng.choice(levels) for t in cands}
    states = list(tags) + [B]
    trans = {(p, t): rng.choice(levels) for p in states for t in states if not p == t == B}
    return StubModel(emissions, trans), words


def test_viterbi_matches_brute_force_on_random_stubs():
    for seed in range(1000):
        rng = random.Random(seed)
        m, words = _random_stub(rng)
        v, b = viterbi(m, words), brute_force_decode(m, words)
        assert v.tags == b.tags, seed
        assert v.fallback == b.fallback
        if not v.fallback:
            assert abs(v.log_score - b.log_score) <= 1e-9


def test_lexicographic_tie_break():
    # every path has the same score: smallest sequence wins
    m = StubModel({"w": {"A": 0.5, "B": 0.5}}, {(p, t): 0.5 for p in "AB$" for t in "AB$"})
    assert viterbi(m, ["w", "w", "w"]).tags == ("A", "A", "A")


def test_dead_lattice_fallback():
    m = StubModel(
        {"x": {"A": 0.3, "B": 0.7}, "y": {"A": 0.6, "B": 0.4}},
        {(B, "A"): 1.0, (B, "B"): 1.0},  # nothing reaches the closing boundary
    )
    out = viterbi(m, ["x", "y"])
    assert out.fallback
    assert out.tags == ("B", "A")
    assert out.log_score == -math.inf
    assert brute_force_decode(m, ["x", "y"]) == out


@given(st.integers(0, 10**6), st.floats(0.01, 100.0), st.integers(0, 4))
def test_argmax_invariant_under_emission_scaling(seed, k, pos):
    rng = random.Random(seed)
    m, words = _random_stub(rng, levels=(0.0, 0.13, 0.37, 0.71))
    # tied optima are left to the tie-break rule; require a clear winner
    probs = sorted(
        (m.path_prob(words, tags) for tags in itertools.product(*(sorted(m.emissions[w]) for w in words))),
        reverse=True,
    )
    assume(probs[0] > 0 and (len(probs) == 1 or probs[1] < probs[0] * (1 - 1e-9)))
    before = viterbi(m, words)
    scaled = StubModel(dict(m.emissions), m.transitions)
    scaled.emissions[words[pos]] = {t: p * k for t, p in m.emissions[words[pos]].items()}
    after = viterbi(scaled, words)
    assert after.tags == before.tags
    if not before.fallback:
        assert after.log_score == pytest.approx(before.log_score + math.log(k), abs=1e-9)


@given(st.integers(0, 10**6))
def test_log_and_probability_space_agree(seed):
    rng = random.Random(seed)
    m, words = _random_stub(rng, levels=(0.05, 0.2, 0.45, 0.9))
    out = viterbi(m, words)
    p = m.path_prob(words, out.tags)
    assert p >= 1e-200
    assert math.exp(out.log_score) == pytest.approx(p, rel=1e-9)


# -- real models -------------------------------------------------------------


@settings(deadline=None)
@given(st.integers(0, 10**6))
def test_viterbi_matches_brute_force_on_trained_models(seed):
    rng = random.Random(seed)
    corpus, model = random_model(rng)
    words = random_sentence(rng, corpus)
    v, b = viterbi(model, words), brute_force_decode(model, words)
    assert v.tags == b.tags
    assert v.log_score == b.log_score or abs(v.log_score - b.log_score) <= 1e-9
    for w, t in zip(words, v.tags):
        assert t in candidate_tags(model, w)


@settings(deadline=None)
@given(st.integers(0, 10**6))
def test_deterministic(seed):
    rng = random.Random(seed)
    corpus, model = random_model(rng)
    words = random_sentence(rng, corpus)
    again = train_tagger(corpus, model.config)
    assert viterbi(model, words) == viterbi(again, words) == viterbi(model, words)


def test_unit_singleton_decoded_to_its_tag(toy):
    model = train_tagger(toy, RunConfig(ending_length=2, top_n=0, etl="unit", smoothing="mle"))
    singles = {w: next(iter(ts)) for w, ts in model.lexical.word_tags.items() if len(ts) == 1}
    for sent in toy.words():
        out = viterbi(model, sent)
        for w, t in zip(sent, out.tags):
            if w in singles:
                assert t == singles[w]


def test_candidate_tags_unit_and_relexed():
    c = TaggedCorpus.from_pairs([[("these", "DTS"), ("bose", "NN")], [("rose", "VBD")]])
    unit = train_tagger(c, RunConfig(ending_length=2, etl="unit"))
    relexed = train_tagger(c, RunConfig(ending_length=2, etl="relexed"))
    assert candidate_tags(unit, "these") == {"DTS"}
    assert candidate_tags(relexed, "these") == {"DTS", "NN", "VBD"}
    assert candidate_tags(relexed, "rose") == {"DTS", "NN", "VBD"}
    assert candidate_tags(relexed, "galaxy") == relexed.lexical.open_class_tags


# -- spans -------------------------------------------------------------------


def test_segment_all_ambiguous(toy):
    model = train_tagger(toy, RunConfig(ending_length=1, etl="relexed"))
    words = ["the", "cat", "sat"]
    if all(len(candidate_tags(model, w)) > 1 for w in words):
        assert segment_spans(model, words) == [(0, 2)]


def test_segment_middle_unambiguous():
    model = train_tagger(
        TaggedCorpus.from_pairs([[("x", "A"), ("y", "B")], [("x", "B"), ("z", "A")]]),
        RunConfig(etl="unit"),
    )
    assert len(candidate_tags(model, "x")) == 2
    assert len(candidate_tags(model, "y")) == 1
    assert segment_spans(model, ["x", "y", "x"]) == [(0, 1), (1, 2)]
    assert segment_spans(model, ["x", "x", "x"]) == [(0, 2)]
    assert segment_spans(model, ["x"]) == [(0, 0)]


@settings(deadline=None, max_examples=60)
@given(st.integers(0, 10**6))
def test_span_decode_equals_whole_sentence(seed):
    rng = random.Random(seed)
    corpus, model = random_model(rng, n_tags=4)
    words = random_sentence(rng, corpus, max_len=12)
    whole, spans = viterbi(model, words), decode_spans(model, words)
    assert spans.tags == whole.tags
    assert spans.fallback == whole.fallback
    if not whole.fallback:
        assert spans.log_score == pytest.approx(whole.log_score, abs=1e-9)
