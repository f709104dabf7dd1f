"""Shared strategies and an extra oracle used only by the tests."""
import math
import random
from fractions import Fraction

from hypothesis import strategies as st

from ncshuffle.cumulants import CumulantFamily, PairState
from ncshuffle.sampling import random_character, random_infchar
from ncshuffle.shuffle import log_map, r_iter

seeds = st.integers(min_value=0, max_value=2**32 - 1)
small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def characters(N=5, k=1):
    return seeds.map(lambda s: random_character(random.Random(s), N, k))


def infchars(N=5, k=1):
    return seeds.map(lambda s: random_infchar(random.Random(s), N, k))


def pairs(N=5, k=1):
    def build(s):
        rng = random.Random(s)
        return PairState(random_character(rng, N, k), random_character(rng, N, k))
    return seeds.map(build)


def cmonotone_by_w_inversion(p: PairState) -> CumulantFamily:
    """Solve W_{rho'}(P) = beta for P by fixed-point iteration on the W series.

    P = beta - sum_{n>=1} r_iter(P, rho', n) / (n+1)!; each pass fixes one more
    degree, so N passes suffice. Shares no code with the Bernoulli-series
    operator used by the library.
    """
    beta = log_map("right", p.phi)
    rho = log_map("star", p.psi)
    N = p.truncation
    P = beta
    for _ in range(N):
        corr = beta * 0
        for n in range(1, N):
            corr = corr + r_iter(P, rho, n) * Fraction(1, math.factorial(n + 1))
        P = beta - corr
    return CumulantFamily("cmonotone", P)
