import pytest

from ending_tagger.corpus import load_toy_corpus, split_corpus


@pytest.fixture(scope="session")
def toy():
    return load_toy_corpus()


@pytest.fixture(scope="session")
def toy_split(toy):
    return split_corpus(toy, 0.9, seed=0)
