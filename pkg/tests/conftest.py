import random

import pytest
from hypothesis import settings

from subsemigroup.semigroup import GeneratorSet
from subsemigroup.substitution import Substitution
from subsemigroup.words import Alphabet
from subsemigroup import catalog

settings.register_profile("repo", deadline=None, derandomize=True)
settings.load_profile("repo")


def random_system(rng: random.Random, max_letters=4, max_gens=3, max_image=3) -> GeneratorSet:
    """Seeded random generator set; uses only randrange for cross-version stability."""
    n_letters = rng.randrange(2, max_letters + 1)
    letters = "abcd"[:n_letters]
    alphabet = Alphabet(letters)
    n_gens = rng.randrange(1, max_gens + 1)
    gens = []
    for i in range(n_gens):
        images = {}
        for ch in letters:
            length = rng.randrange(1, max_image + 1)
            images[ch] = "".join(
                letters[rng.randrange(n_letters)] for _ in range(length)
            )
        gens.append(Substitution(alphabet, images, name="fgh"[i]))
    return GeneratorSet(alphabet, gens)


@pytest.fixture
def thue_morse():
    return catalog.thue_morse_pair()


@pytest.fixture
def fibonacci():
    return catalog.fibonacci_pair()


@pytest.fixture
def sturmian():
    return catalog.sturmian_triple()


@pytest.fixture
def sturmian_pair():
    return catalog.sturmian_injective_pair()


@pytest.fixture
def countable_pair():
    return catalog.countable_pair()


@pytest.fixture
def five_letter():
    return catalog.five_letter_triple()
