import pytest

from novikov.generators import Profile, corpus
from novikov.named import named_corpus


@pytest.fixture(scope="session")
def named():
    return named_corpus()


@pytest.fixture(scope="session")
def small_corpus():
    """GD algebras over every field plus labeled mutations."""
    return corpus(Profile(fields=("Q", "GF2", "GF3", "GF5"), dims=(1, 2, 3, 4),
                          count=40, mutations=40, seed=7))


@pytest.fixture(scope="session")
def positives(small_corpus, named):
    return [e.algebra for e in named] + [e.algebra for e in small_corpus if not e.negative]
