import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from helpers import pairs, seeds
from ncshuffle import convolutions as cv
from ncshuffle import independence as ind
from ncshuffle.shuffle import sequence

BER = [1, 0, 1, 0, 1, 0]


def test_normalize_and_tags():
    assert ind.normalize([(1, 1), (1, 2), (2, 0), (2, 1)]) == ((1, 3), (2, 1))
    assert ind.from_tags((1, 2, 2, 1)) == ((1, 1), (2, 2), (1, 1))
    with pytest.raises(ind.MalformedWord):
        ind.normalize([(3, 1)])
    with pytest.raises(ind.MalformedWord):
        ind.monotone_mixed_moment(BER, BER, ((1, 1), (1, 1)))


def test_monotone_peak_rule():
    nu1 = [1, 2, 7, 0]
    nu2 = [1, 3, 5, 0]
    # phi(a b a) = nu2(1) nu1(2)
    assert ind.monotone_mixed_moment(nu1, nu2, ((1, 1), (2, 1), (1, 1))) == 3 * 7
    # phi(b a b) = phi(b) phi(a) phi(b) under monotone rules with b the peak
    assert ind.monotone_mixed_moment(nu1, nu2, ((2, 1), (1, 1), (2, 1))) == 3 * 3 * 2


def test_cmonotone_interior_rule():
    mu1, mu2, nu2 = [1, 2, 7], [1, 4, 0], [1, 3, 0]
    # phi(a b a) = phi(a) (mu2 - nu2)(b) phi(a) + nu2(b) phi(a^2)
    assert ind.cmonotone_mixed_moment((mu1, None), (mu2, nu2), ((1, 1), (2, 1), (1, 1))) == 2 * 1 * 2 + 3 * 7


def test_bernoulli_monotone_m4():
    assert ind.sum_moments(BER, BER, "monotone", 4) == 5


@given(pairs(N=5))
def test_cmonotone_axioms_match_convolution(p):
    ml = ind.moment_list
    out = cv.cmonotone_convolve(p, p)
    pair = (ml(p.phi), ml(p.psi))
    assert [ind.sum_moments(pair, pair, "cmonotone", n) for n in range(1, 6)] == sequence(out.phi)


@given(pairs(N=5), pairs(N=5), seeds)
def test_rule_order_does_not_matter(p1, p2, seed):
    ml = ind.moment_list
    a, b = (ml(p1.phi), ml(p1.psi)), (ml(p2.phi), ml(p2.psi))
    rng = random.Random(seed)
    for tags in [(2, 1, 2, 1, 2), (1, 2, 1, 2, 1), (2, 2, 1, 2)]:
        w = ind.from_tags(tags)
        assert ind.cmonotone_mixed_moment(a, b, w, rng) == ind.cmonotone_mixed_moment(a, b, w)


@given(st.lists(st.fractions(-3, 3, max_denominator=4), min_size=5, max_size=5),
       st.lists(st.fractions(-3, 3, max_denominator=4), min_size=5, max_size=5))
def test_monotone_axioms_match_convolution(m1, m2):
    from ncshuffle.shuffle import convolve, moments_character
    a, b = [Fraction(1)] + m1, [Fraction(1)] + m2
    conv = sequence(convolve(moments_character(m1), moments_character(m2)))
    assert [ind.sum_moments(a, b, "monotone", n) for n in range(1, 6)] == conv


def test_depth_check():
    with pytest.raises(ValueError):
        ind.sum_moments(BER, BER, "monotone", 9)
    with pytest.raises(ValueError):
        ind.sum_moments(BER, BER, "boolean", 2)
