"""Seeded random rationals and functionals for property tests and verify suites."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .shuffle import Functional, all_monomials, all_words, lift

NUM_RANGE = (-9, 9)
DEN_RANGE = (1, 4)


def rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(*NUM_RANGE), rng.randint(*DEN_RANGE))


def _alphabet(k: int) -> tuple[str, ...]:
    return tuple("abcdefgh"[:k])


def random_word_values(rng: random.Random, k: int, N: int) -> dict:
    return {w: rational(rng) for w in all_words(k, N)}


def random_character(rng: random.Random, N: int, k: int = 1,
                     alphabet: Sequence[str] | None = None) -> Functional:
    alphabet = tuple(alphabet) if alphabet else _alphabet(k)
    return lift("character", random_word_values(rng, len(alphabet), N), alphabet, N)


def random_infchar(rng: random.Random, N: int, k: int = 1,
                   alphabet: Sequence[str] | None = None) -> Functional:
    alphabet = tuple(alphabet) if alphabet else _alphabet(k)
    return lift("infchar", random_word_values(rng, len(alphabet), N), alphabet, N)


def random_functional(rng: random.Random, N: int, k: int = 1) -> Functional:
    """General form with independent random values everywhere, the unit included."""
    alphabet = _alphabet(k)
    return Functional(alphabet, N, "general",
                      {x: rational(rng) for x in all_monomials(k, N)})


def random_rationals(rng: random.Random, count: int, distinct: bool = False) -> list[Fraction]:
    out: list[Fraction] = []
    while len(out) < count:
        q = rational(rng)
        if distinct and q in out:
            continue
        out.append(q)
    return out
