import random

import pytest

from coverforge import BraidLetter, BraidWord, parse_braid, util
from .data import a_figure_eight, a_torus_knot, a_trefoil, an_unknot

SEED = 20241019


def random_word(rng: random.Random, strands: int, length: int) -> BraidWord:
    letters = tuple(
        BraidLetter(rng.randint(1, strands - 1), rng.choice((1, -1))) for _ in range(length)
    )
    return BraidWord(strands, letters)


@pytest.fixture
def rng():
    return random.Random(SEED)


@pytest.fixture
def random_words(rng):
    """Reproducible sample of braid words on 2 to 4 strands"""
    def sample(count: int, max_length: int = 8):
        words = []
        for _ in range(count):
            strands = rng.randint(2, 4)
            words.append(random_word(rng, strands, rng.randint(0, max_length)))
        return words

    return sample


@pytest.fixture
def trefoil():
    return parse_braid(a_trefoil.TEXT, a_trefoil.STRANDS)


@pytest.fixture
def figure_eight():
    return parse_braid(a_figure_eight.TEXT, a_figure_eight.STRANDS)


@pytest.fixture
def unknot():
    return parse_braid(an_unknot.TEXT, an_unknot.STRANDS)


@pytest.fixture
def torus_knot():
    return parse_braid(a_torus_knot.TEXT, a_torus_knot.STRANDS)


@pytest.fixture(autouse=True)
def default_max_p(monkeypatch):
    monkeypatch.delenv(util.MAX_P_ENV_VAR, raising=False)
