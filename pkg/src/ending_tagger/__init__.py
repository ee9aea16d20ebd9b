"""Part-of-speech tagging with word-ending statistics first and whole words second."""

from .config import RunConfig
from .corpus import TaggedCorpus, Token, parse_corpus, serialize_corpus, split_corpus, vocabulary
from .decoder import DecodedSentence, TaggerModel, brute_force_decode, decode, train_tagger, viterbi
from .evaluation import AccuracyReport, GridConfig, score, sweep, two_proportion_test

__all__ = [
    "AccuracyReport",
    "DecodedSentence",
    "GridConfig",
    "RunConfig",
    "TaggedCorpus",
    "TaggerModel",
    "Token",
    "brute_force_decode",
    "decode",
    "parse_corpus",
    "score",
    "serialize_corpus",
    "split_corpus",
    "sweep",
    "train_tagger",
    "two_proportion_test",
    "viterbi",
    "vocabulary",
]
