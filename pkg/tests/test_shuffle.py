import random
from fractions import Fraction

import pytest
from hypothesis import given

from helpers import characters, infchars, seeds
from ncshuffle import shuffle as sh
from ncshuffle.sampling import random_functional


def test_bernoulli_numbers():
    assert [sh.bernoulli(n) for n in range(7)] == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0,
                                                    Fraction(1, 42)]


def test_coproduct_of_single_letter():
    terms = sh.coproduct(((0,),))
    assert sorted((l, r) for l, r, _ in terms) == [((), ((0,),)), (((0,),), ())]


def test_coproduct_splits_word_into_gaps():
    # a1 a2 a3 with S = {1, 3}: left a1a3, right a2
    terms = [(l, r) for l, r, _ in sh.coproduct(((0, 1, 2),))]
    assert (((0, 2),), ((1,),)) in terms
    assert len(terms) == 8


def test_left_terms_keep_first_letter():
    for l, r in sh.coproduct_terms(((0, 1), (2,)), "left"):
        assert l and l[0][0] == 0


@given(seeds)
def test_shuffle_axioms(seed):
    rng = random.Random(seed)
    f, g, h = (random_functional(rng, 4) for _ in range(3))
    L = lambda a, b: sh.half_shuffle(a, b, "left")
    R = lambda a, b: sh.half_shuffle(a, b, "right")
    assert L(L(f, g), h) == L(f, sh.convolve(g, h))
    assert L(R(f, g), h) == R(f, L(g, h))
    assert R(f, R(g, h)) == R(sh.convolve(f, g), h)


@given(seeds)
def test_half_shuffles_split_convolution_away_from_unit(seed):
    rng = random.Random(seed)
    f, g = random_functional(rng, 4), random_functional(rng, 4)
    split = (sh.half_shuffle(f, g, "left") + sh.half_shuffle(f, g, "right")).full_table()
    conv = sh.convolve(f, g).full_table()
    for x in sh.all_monomials(1, 4):
        if x:
            assert split.get(x, 0) == conv.get(x, 0)
    assert split.get((), 0) == 0


def test_counit_is_neutral():
    f = random_functional(random.Random(3), 4)
    e = sh.counit(("a",), 4)
    assert sh.convolve(f, e) == f and sh.convolve(e, f) == f


@given(characters(N=5, k=2))
def test_character_inverse(phi):
    e = sh.counit(phi.alphabet, phi.truncation)
    assert sh.convolve(phi, sh.conv_inverse(phi)) == e
    assert sh.conv_inverse(phi) == sh.conv_inverse_series(phi)


@given(characters(N=5))
def test_exp_log_round_trips(phi):
    for mode in ("star", "left", "right"):
        alpha = sh.log_map(mode, phi)
        assert alpha.is_infchar()
        assert sh.exp_map(mode, alpha) == phi


@given(infchars(N=5))
def test_exponentials_are_characters(alpha):
    for mode in ("star", "left", "right"):
        assert sh.exp_map(mode, alpha).is_character()


@given(characters(N=4), characters(N=4))
def test_characters_form_a_group(phi, psi):
    assert sh.convolve(phi, psi).is_character()


@given(infchars(N=5), infchars(N=5))
def test_pre_lie_against_half_shuffles(a, b):
    assert sh.pre_lie(a, b) == sh.half_shuffle(a, b, "left") - sh.half_shuffle(b, a, "right")


@given(infchars(N=5), infchars(N=5))
def test_w_and_omega_inverse(a, g):
    assert sh.omega_operator(g, sh.w_operator(g, a)) == a
    assert sh.magnus(sh.magnus_inverse(a)) == a


@given(characters(N=5))
def test_triple_via_magnus(phi):
    rho = sh.log_map("star", phi)
    assert sh.magnus_inverse(rho) == sh.log_map("right", phi)
    assert -sh.magnus_inverse(-rho) == sh.log_map("left", phi)
    assert sh.adjoint(phi, sh.log_map("left", phi)) == sh.log_map("right", phi)


def test_univariate_free_cumulants_of_semicircle():
    # Catalan moments on even orders: only kappa_2 = 1 survives
    phi = sh.moments_character([0, 1, 0, 2, 0, 5])
    assert sh.sequence(sh.log_map("left", phi)) == [0, 1, 0, 0, 0, 0]


def test_univariate_boolean_cumulants_of_bernoulli():
    phi = sh.moments_character([0, 1, 0, 1, 0, 1])
    assert sh.sequence(sh.log_map("right", phi)) == [0, 1, 0, 0, 0, 0]


def test_parse_and_format():
    ab = ("a", "b")
    assert sh.parse_word("aba", ab) == (0, 1, 0)
    assert sh.parse_monomial("ab|b", ab) == ((0, 1), (1,))
    assert sh.parse_monomial("", ab) == () == sh.parse_monomial("1", ab)
    assert sh.format_monomial(((0, 1), (1,)), ab) == "ab|b"
    with pytest.raises(ValueError):
        sh.parse_word("abc", ab)


def test_errors():
    f = sh.moments_character([1, 2, 3])
    g = sh.moments_character([1, 2, 3, 4])
    with pytest.raises(sh.MismatchError):
        sh.convolve(f, g)
    with pytest.raises(sh.TruncationError):
        f("aaaa")
    with pytest.raises(sh.KindError):
        sh.log_map("left", sh.univariate("infchar", [1, 2, 3]))
    with pytest.raises(ValueError):
        sh.lift("character", {"a": 1}, ("a",), 2)


def test_infinitesimal_character_vanishes_on_products():
    a = sh.univariate("infchar", [1, 2, 3])
    assert a("a|a") == 0 and a("") == 0 and a("aa") == 2
