from fractions import Fraction

import pytest
from hypothesis import given

from helpers import characters, pairs, small_rationals
from ncshuffle import convolutions as cv
from ncshuffle import cumulants as cu
from ncshuffle.shuffle import MismatchError, convolve, counit, log_map, moments_character, sequence

BERNOULLI = moments_character([0, 1, 0, 1, 0, 1])


@pytest.mark.parametrize("kind,m4", [("free", 6), ("boolean", 4), ("monotone", 5)])
def test_bernoulli_self_convolution(kind, m4):
    m = sequence(cv.additive_convolve(BERNOULLI, BERNOULLI, kind))
    assert m[1] == 2 and m[3] == m4


@given(small_rationals, small_rationals)
def test_diracs_add(s, t):
    ds = moments_character([s ** n for n in range(1, 6)])
    dt = moments_character([t ** n for n in range(1, 6)])
    target = moments_character([(s + t) ** n for n in range(1, 6)])
    for kind in cv.KINDS:
        assert cv.additive_convolve(ds, dt, kind) == target


@given(characters(N=5), characters(N=5))
def test_additive_cumulants(phi, psi):
    assert log_map("left", cv.additive_convolve(phi, psi, "free")) == log_map("left", phi) + log_map("left", psi)
    assert log_map("right", cv.additive_convolve(phi, psi, "boolean")) == \
        log_map("right", phi) + log_map("right", psi)


@given(pairs(N=5), pairs(N=5), pairs(N=5))
def test_cmonotone_associative(p1, p2, p3):
    c = cv.cmonotone_convolve
    assert c(c(p1, p2), p3) == c(p1, c(p2, p3))


@given(pairs(N=5))
def test_power_additivity(p):
    P = cu.cmonotone_cumulants(p).values
    for M in range(1, 5):
        assert cu.cmonotone_cumulants(cv.cmonotone_power(p, M)).values == P * M


@given(pairs(N=5), pairs(N=5))
def test_cfree_cumulants_add(p1, p2):
    out = cv.cfree_convolve(p1, p2)
    assert cu.cfree_cumulants(out).values == cu.cfree_cumulants(p1).values + cu.cfree_cumulants(p2).values


@given(characters(N=5), characters(N=5))
def test_orthogonal_decomposition(phi, psi):
    ortho = cv.orthogonal(phi, psi)
    assert ortho == cv.orthogonal(phi, psi, "pre-lie")
    assert convolve(phi, psi) == cv.additive_convolve(ortho, psi, "boolean")


@given(characters(N=5), characters(N=5))
def test_subordination(psi1, psi2):
    assert cv.additive_convolve(psi1, psi2, "free") == convolve(psi1, cv.subordination(psi2, psi1))


@given(characters(N=5), characters(N=5), characters(N=5))
def test_collapses(phi, psi, lam):
    eps = counit(phi.alphabet, phi.truncation)
    P = cu.PairState
    assert cv.cmonotone_convolve(P(phi, phi), P(psi, psi)).phi == convolve(phi, psi)
    assert cv.cmonotone_convolve(P(phi, eps), P(psi, eps)) == P(cv.additive_convolve(phi, psi, "boolean"), eps)
    assert cv.cmonotone_convolve(P(phi, lam), P(eps, psi)) == P(cv.orthogonal(phi, psi), convolve(lam, psi))


@given(characters(N=5), small_rationals.map(abs), small_rationals.map(abs))
def test_belinschi_nica(phi, s, t):
    bt = cv.belinschi_nica(phi, t)
    assert bt == cv.belinschi_nica(phi, t, "boolean")
    assert cu.t_boolean(bt, t).values == log_map("right", phi)
    assert cv.belinschi_nica(bt, s) == cv.belinschi_nica(phi, s + t)


def test_belinschi_nica_reversed_conjugation_differs():
    phi = moments_character([1, 3, -2, 5, 7])
    t = Fraction(1, 2)
    assert cv.belinschi_nica(phi, t, "boolean-reversed") != cv.belinschi_nica(phi, t)


def test_mismatch():
    with pytest.raises(MismatchError):
        cv.additive_convolve(BERNOULLI, moments_character([1, 2]), "free")
    with pytest.raises(ValueError):
        cv.additive_convolve(BERNOULLI, BERNOULLI, "tensor")
    with pytest.raises(ValueError):
        cv.cmonotone_power(cu.PairState(BERNOULLI, BERNOULLI), 0)
