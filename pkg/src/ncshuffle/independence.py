"""Mixed moments of two variables straight from the independence rules.

Variable a lives in algebra 1, b in algebra 2 (a < b in the monotone order).
Moment sequences are lists ``m`` with ``m[0] == 1`` and ``m[q]`` the q-th moment.
An alternating word is a tuple of (tag, power) pairs.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Sequence

Block = tuple[int, int]


class MalformedWord(ValueError):
    pass


def normalize(word: Sequence[Block]) -> tuple[Block, ...]:
    """Merge neighbouring equal tags and drop zero powers."""
    out: list[list[int]] = []
    for tag, power in word:
        if tag not in (1, 2):
            raise MalformedWord(f"tag must be 1 or 2, got {tag}")
        if power < 0:
            raise MalformedWord(f"negative power {power}")
        if power == 0:
            continue
        if out and out[-1][0] == tag:
            out[-1][1] += power
        else:
            out.append([tag, power])
    return tuple((t, p) for t, p in out)


def from_tags(tags: Sequence[int]) -> tuple[Block, ...]:
    """Letter-by-letter tag pattern to alternating form: (1,2,2,1) -> ((1,1),(2,2),(1,1))."""
    return normalize([(t, 1) for t in tags])


def _check_alternating(word):
    for (t1, _), (t2, _) in zip(word, word[1:]):
        if t1 == t2:
            raise MalformedWord("adjacent blocks share a tag")
    for t, p in word:
        if t not in (1, 2) or p < 1:
            raise MalformedWord(f"bad block {(t, p)}")


def _moment(seq, q: int) -> Fraction:
    if q >= len(seq):
        raise ValueError(f"moment of order {q} beyond the given {len(seq) - 1}")
    return Fraction(seq[q])


def _total(word) -> int:
    return sum(p for _, p in word)


def monotone_mixed_moment(nu1: Sequence, nu2: Sequence, word: Sequence[Block],
                          rng: random.Random | None = None) -> Fraction:
    """phi of an alternating word when algebra 1 < algebra 2 are monotone independent.

    Each tag-2 block is a peak: phi(x b^q y) = nu2(q) phi(x y). ``rng`` picks the
    peak at random instead of leftmost.
    """
    word = tuple(word)
    _check_alternating(word)
    value = Fraction(1)
    while any(t == 2 for t, _ in word):
        peaks = [i for i, (t, _) in enumerate(word) if t == 2]
        i = rng.choice(peaks) if rng else peaks[0]
        value *= _moment(nu2, word[i][1])
        word = normalize(word[:i] + word[i + 1:])
    return value * _moment(nu1, _total(word))


def cmonotone_mixed_moment(pair1: tuple[Sequence, Sequence], pair2: tuple[Sequence, Sequence],
                           word: Sequence[Block], rng: random.Random | None = None) -> Fraction:
    """phi of an alternating word for c-monotone algebras 1 < 2.

    pair_i = (mu_i, nu_i): phi- and psi-moments of the i-th variable. A leading
    or trailing tag-2 block splits off with its phi-moment; an interior one
    contributes phi(x)(mu2 - nu2)phi(y) + nu2 phi(xy). Boundary rules are tried
    first unless ``rng`` is given, in which case any applicable rule may fire.
    """
    word = tuple(word)
    _check_alternating(word)
    mu1, _ = pair1
    mu2, nu2 = pair2
    memo: dict = {}

    def phi(w):
        if w in memo:
            return memo[w]
        if not w:
            return Fraction(1)
        if len(w) == 1:
            tag, p = w[0]
            return _moment(mu1 if tag == 1 else mu2, p)
        moves = []
        if w[0][0] == 2:
            moves.append(("lead", 0))
        if w[-1][0] == 2:
            moves.append(("trail", len(w) - 1))
        if rng is not None or not moves:
            moves += [("peak", j) for j in range(1, len(w) - 1) if w[j][0] == 2]
        rule, j = rng.choice(moves) if rng else moves[0]
        q = w[j][1]
        if rule == "lead":
            out = _moment(mu2, q) * phi(w[1:])
        elif rule == "trail":
            out = phi(w[:-1]) * _moment(mu2, q)
        else:
            out = (phi(w[:j]) * (_moment(mu2, q) - _moment(nu2, q)) * phi(w[j + 1:])
                   + _moment(nu2, q) * phi(normalize(w[:j] + w[j + 1:])))
        if rng is None:
            memo[w] = out
        return out

    return phi(word)


def sum_moments(p1, p2, mode: str, n: int, rng: random.Random | None = None) -> Fraction:
    """n-th moment of a + b: sum of the mixed moments of all 2^n letter patterns.

    mode 'monotone' takes plain moment sequences, mode 'cmonotone' takes
    (mu, nu) pairs and returns the phi-moment.
    """
    if mode == "monotone":
        depth = min(len(p1), len(p2)) - 1
        f = lambda w: monotone_mixed_moment(p1, p2, w, rng)
    elif mode == "cmonotone":
        depth = min(len(s) for s in (*p1, *p2)) - 1
        f = lambda w: cmonotone_mixed_moment(p1, p2, w, rng)
    else:
        raise ValueError(f"mode must be 'monotone' or 'cmonotone', got {mode!r}")
    if not 0 <= n <= depth:
        raise ValueError(f"n={n} exceeds available moments ({depth})")
    if n == 0:
        return Fraction(1)
    return sum((f(from_tags(tags)) for tags in itertools.product((1, 2), repeat=n)), Fraction(0))


def moment_list(f) -> list[Fraction]:
    """[1, m1, ..., mN] from a univariate character."""
    from .shuffle import sequence
    return [Fraction(1)] + sequence(f)
