"""Shared helpers for the test suite."""

from __future__ import annotations

import random

from swapsensus import Instance


def random_words(
    rng: random.Random,
    max_n: int = 6,
    max_k: int = 4,
    max_sigma: int = 3,
    min_n: int = 1,
    min_k: int = 1,
    min_sigma: int = 1,
) -> tuple[str, ...]:
    """Draw a tuple of equal-length lowercase words from a seeded generator."""
    n = rng.randint(min_n, max_n)
    k = rng.randint(min_k, max_k)
    sigma = rng.randint(min_sigma, max_sigma)
    letters = "abcdefghijklmnopqrstuvwxyz"[:sigma]
    return tuple("".join(rng.choice(letters) for _ in range(n)) for _ in range(k))


def random_instance(rng: random.Random, **kwargs) -> Instance:
    """Draw a random Instance; keyword arguments pass through to random_words."""
    return Instance(random_words(rng, **kwargs))
