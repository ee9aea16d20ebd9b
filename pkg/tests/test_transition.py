import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ending_tagger.corpus import TaggedCorpus
from ending_tagger.transition import (
    ADD_ONE,
    GOOD_TURING,
    MLE,
    POLICIES,
    BigramCounts,
    FreqOfFreqs,
    TransitionModel,
    adjust_count,
    count_bigrams,
    freq_of_freqs,
    smoothing_policy,
    transition_prob,
)

from lattices import random_corpus

B = "^"


def _tables(draw_tags=st.integers(1, 5)):
    """Random (tagset, counts) pairs with a boundary symbol."""

    @st.composite
    def build(draw):
        n = draw(draw_tags)
        tags = [chr(ord("A") + i) for i in range(n)]
        states = tags + [B]
        pairs = [(p, t) for p in states for t in states if not (p == t == B)]
        counts = {pair: draw(st.integers(0, 9)) for pair in pairs}
        return BigramCounts(counts, frozenset(tags), B)

    return build()


def test_count_bigrams_single_sentence():
    c = TaggedCorpus.from_pairs([[("the", "AT"), ("cat", "NN")]])
    bc = count_bigrams(c, "^")
    assert bc.counts == {("^", "AT"): 1, ("AT", "NN"): 1, ("NN", "^"): 1}
    assert bc.unigram == {"^": 1, "AT": 1, "NN": 1}


def test_count_bigrams_empty():
    bc = count_bigrams(TaggedCorpus(), "^")
    assert bc.counts == {}
    assert bc.total == 0


def test_count_bigrams_boundary_collision():
    c = TaggedCorpus.from_pairs([[("x", "^")]])
    with pytest.raises(ValueError):
        count_bigrams(c, "^")


@given(st.integers(0, 10**6))
def test_bigram_total_is_tokens_plus_sentences(seed):
    c = random_corpus(random.Random(seed))
    bc = count_bigrams(c, B)
    assert bc.total == c.n_tokens + len(c)
    for p in bc.rows():
        assert sum(bc.counts.get((p, t), 0) for t in bc.columns(p)) == bc.unigram.get(p, 0)


def test_freq_of_freqs_histogram():
    bc = BigramCounts({("A", "B"): 1, ("B", "A"): 1, ("A", "A"): 2}, frozenset("AB"), B)
    fof = freq_of_freqs(bc)
    assert fof.table == {1: 2, 2: 1}
    assert fof.total_types == 3 * 3 - 1
    assert fof.seen_types == 3


def test_freq_of_freqs_distinct_values():
    tags = frozenset("ABC")
    pairs = [("A", "A"), ("A", "B"), ("B", "C"), ("C", B), (B, "A")]
    bc = BigramCounts({p: i + 1 for i, p in enumerate(pairs)}, tags, B)
    assert freq_of_freqs(bc).table == {1: 1, 2: 1, 3: 1, 4: 1, 5: 1}


def test_freq_of_freqs_token_mass_recount():
    c = random_corpus(random.Random(100), n_tags=4, n_sents=100)
    fof = freq_of_freqs(count_bigrams(c, B))
    # brute-force recount of the padded bigram tokens
    tokens = 0
    for sent in c.tags():
        tokens += len([B, *sent, B]) - 1
    assert sum(r * n for r, n in fof.table.items()) == tokens
    assert sum(fof.table.values()) == fof.seen_types


FOF = FreqOfFreqs({1: 4, 2: 2}, total_types=20, seen_types=6)


@pytest.mark.parametrize(
    "r, policy, expected",
    [
        (0, ADD_ONE, 1.0),
        (3, ADD_ONE, 4.0),
        (3, MLE, 3.0),
        (1, GOOD_TURING, 1.0),  # (1+1) * 2 / 4
        (2, GOOD_TURING, 2.0),  # N_3 = 0: keep r
        (0, GOOD_TURING, 4 / 14),  # N_1 / unseen types
    ],
)
def test_adjust_count(r, policy, expected):
    assert adjust_count(r, FOF, policy) == pytest.approx(expected)


def test_adjust_count_missing_frequency():
    with pytest.raises(ValueError):
        adjust_count(5, FOF, GOOD_TURING)


def test_adjust_count_without_singletons_stays_positive():
    fof = FreqOfFreqs({2: 3}, total_types=10, seen_types=3)
    assert adjust_count(0, fof, GOOD_TURING) > 0


@pytest.mark.parametrize("policy", [MLE, ADD_ONE])
def test_adjust_count_monotone(policy):
    values = [adjust_count(r, FOF, policy) for r in range(10)]
    assert values == sorted(values)


def test_mle_row():
    bc = BigramCounts({("X", "A"): 3, ("X", "B"): 1}, frozenset("ABX"), B)
    assert transition_prob(bc, freq_of_freqs(bc), MLE, "X", "A") == pytest.approx(0.75)


def test_add_one_row():
    # two tags plus the closing boundary: three columns
    bc = BigramCounts({("A", "A"): 3, ("A", "B"): 1}, frozenset("AB"), B)
    assert transition_prob(bc, freq_of_freqs(bc), ADD_ONE, "A", "A") == pytest.approx(4 / 7)


def test_unknown_previous_tag():
    bc = BigramCounts({("A", "B"): 1}, frozenset("AB"), B)
    with pytest.raises(ValueError):
        TransitionModel(bc, MLE).prob("Z", "A")


def test_boundary_row_excludes_boundary():
    bc = BigramCounts({(B, "A"): 1}, frozenset("AB"), B)
    m = TransitionModel(bc, ADD_ONE)
    assert m.prob(B, B) == 0.0
    assert set(m.row(B)) == {"A", "B"}


def test_good_turing_rows_on_toy_corpus():
    c = random_corpus(random.Random(200), n_tags=5, n_words=30, n_sents=200, max_len=10)
    m = TransitionModel(count_bigrams(c, B), GOOD_TURING)
    for p in m.bigrams.rows():
        assert math.fsum(m.row(p).values()) == pytest.approx(1.0, abs=1e-9)


@given(_tables(), st.sampled_from(POLICIES))
def test_rows_are_stochastic(bc, policy):
    m = TransitionModel(bc, policy)
    for p in bc.rows():
        row = m.row(p)
        if policy == MLE and not bc.unigram.get(p):
            assert all(v == 0 for v in row.values())
            continue
        assert math.fsum(row.values()) == pytest.approx(1.0, abs=1e-9)


@given(_tables(), st.sampled_from([ADD_ONE, GOOD_TURING]))
def test_smoothed_rows_strictly_positive(bc, policy):
    m = TransitionModel(bc, policy)
    for p in bc.rows():
        assert all(v > 0 for v in m.row(p).values())


@given(_tables())
def test_mle_zero_for_unseen(bc):
    m = TransitionModel(bc, MLE)
    for p in bc.rows():
        for t in bc.columns(p):
            if not bc.counts.get((p, t)):
                assert m.prob(p, t) == 0.0


@given(_tables())
def test_good_turing_telescoping(bc):
    fof = freq_of_freqs(bc)
    rows = [r for r in fof.table if fof.n(r + 1) > 0]
    exact = sum(fof.n(r) * Fraction((r + 1) * fof.n(r + 1), fof.n(r)) for r in rows)
    telescoped = sum((r + 1) * fof.n(r + 1) for r in rows)
    assert exact == telescoped
    approx = math.fsum(fof.n(r) * adjust_count(r, fof, GOOD_TURING) for r in rows)
    assert abs(approx - telescoped) <= 1e-12 * max(1, telescoped)


@pytest.mark.parametrize("name, policy", [("mle", MLE), ("addone", ADD_ONE), ("gt", GOOD_TURING), ("Good-Turing", GOOD_TURING)])
def test_smoothing_names(name, policy):
    assert smoothing_policy(name) == policy


def test_smoothing_unknown():
    with pytest.raises(ValueError):
        smoothing_policy("kneser-ney")
