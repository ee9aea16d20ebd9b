"""Random small corpora and models for oracle comparisons."""

import random

from ending_tagger import RunConfig, TaggedCorpus, train_tagger

POLICIES = ("mle", "add_one", "good_turing")
LETTERS = "abcdeiorsty"


def random_corpus(rng: random.Random, n_tags=3, n_words=12, n_sents=15, max_len=6) -> TaggedCorpus:
    tags = [chr(ord("A") + i) for i in range(n_tags)]
    words = sorted({"".join(rng.choice(LETTERS) for _ in range(rng.randint(1, 5))) for _ in range(n_words)})
    sents = []
    for _ in range(n_sents):
        n = rng.randint(1, max_len)
        sents.append([(rng.choice(words), rng.choice(tags)) for _ in range(n)])
    return TaggedCorpus.from_pairs(sents)


def random_model(rng: random.Random, policy=None, **corpus_kw):
    corpus = random_corpus(rng, **corpus_kw)
    config = RunConfig(
        ending_length=rng.randint(1, 3),
        top_n=rng.randint(0, 6),
        etl=rng.choice(["unit", "relexed"]),
        smoothing=policy or rng.choice(POLICIES),
        doubled=rng.random() < 0.3,
    )
    return corpus, train_tagger(corpus, config)


def random_sentence(rng: random.Random, corpus: TaggedCorpus, max_len=6):
    seen = sorted({t.word for t in corpus.tokens()})
    out = []
    for _ in range(rng.randint(1, max_len)):
        if rng.random() < 0.75:
            out.append(rng.choice(seen))
        else:
            out.append("".join(rng.choice(LETTERS) for _ in range(rng.randint(1, 6))))
    return out
