from fractions import Fraction

import pytest
from hypothesis import given

from helpers import characters, cmonotone_by_w_inversion, pairs, small_rationals
from ncshuffle import cumulants as cu
from ncshuffle.shuffle import counit, log_map, moments_character, sequence, w_operator


@given(characters(N=5))
def test_shuffle_transforms_match_partition_recursions(phi):
    for kind in cu.BASIC_KINDS:
        fam = cu.cumulants_of(phi, kind)
        assert fam.values == cu.cumulants_oracle(phi, kind).values
        assert cu.moments_from(fam) == phi
        assert cu.moments_via_partitions(fam) == phi


@given(characters(N=4, k=2))
def test_multivariate_transforms(phi):
    for kind in cu.BASIC_KINDS:
        assert cu.cumulants_of(phi, kind).values == cu.cumulants_oracle(phi, kind).values


@given(characters(N=6))
def test_cross_formulas(phi):
    fams = {k: cu.cumulants_of(phi, k) for k in cu.BASIC_KINDS}
    for src in cu.BASIC_KINDS:
        for dst in cu.BASIC_KINDS:
            assert cu.cumulant_cross(fams[src], dst).values == fams[dst].values


def test_known_univariate_values():
    # Catalan moments belong to the free Poisson law: every free cumulant is 1
    phi = moments_character([1, 2, 5, 14])
    assert sequence(cu.cumulants_of(phi, "boolean").values)[:2] == [1, 1]
    assert sequence(cu.cumulants_of(phi, "free").values) == [1, 1, 1, 1]


@given(pairs(N=5))
def test_cmonotone_three_ways(p):
    P = cu.cmonotone_cumulants(p).values
    assert P == cu.cmonotone_oracle(p).values
    assert P == cu.cmonotone_lemma(p).values
    assert P == cmonotone_by_w_inversion(p).values
    assert w_operator(log_map("star", p.psi), P) == cu.wrho_sum(P, log_map("star", p.psi))


@given(pairs(N=5))
def test_cfree_and_relation(p):
    K = cu.cfree_cumulants(p).values
    assert K == cu.cfree_oracle(p).values
    for method in ("operator", "partition"):
        assert cu.cfree_from_cmonotone(p, method).values == K
        assert cu.cmonotone_from_cfree(p, method).values == cu.cmonotone_cumulants(p).values


@given(characters(N=5))
def test_pair_degenerations(phi):
    eps = counit(phi.alphabet, phi.truncation)
    same, boolean = cu.PairState(phi, phi), cu.PairState(phi, eps)
    assert cu.cfree_cumulants(same).values == log_map("left", phi)
    assert cu.cmonotone_cumulants(same).values == log_map("star", phi)
    assert cu.cfree_cumulants(boolean).values == log_map("right", phi)
    assert cu.cmonotone_cumulants(boolean).values == log_map("right", phi)


@given(characters(N=5), small_rationals)
def test_t_boolean(phi, t):
    fam = cu.t_boolean(phi, t)
    assert fam.values == cu.t_boolean_oracle(phi, t).values
    assert cu.moments_from(fam) == phi


@given(characters(N=5), small_rationals, small_rationals)
def test_t_boolean_shift(phi, s, t):
    assert cu.t_boolean_shift(cu.t_boolean(phi, s), s, t).values == cu.t_boolean(phi, t).values


@given(characters(N=5), small_rationals)
def test_t_monotone(phi, t):
    fam = cu.t_monotone(phi, t)
    assert fam.values == cu.t_monotone_oracle(phi, t).values
    assert cu.moments_via_partitions(fam) == phi
    assert cu.moments_from(fam) == phi


def test_t_endpoints():
    phi = moments_character([1, 3, -2, 5, Fraction(1, 3)])
    assert cu.t_boolean(phi, 0).values == log_map("right", phi)
    assert cu.t_boolean(phi, 1).values == log_map("left", phi)
    assert cu.t_monotone(phi, 0).values == log_map("right", phi)
    assert cu.t_monotone(phi, 1).values == log_map("star", phi)


def test_family_validation():
    phi = moments_character([1, 2])
    with pytest.raises(ValueError):
        cu.CumulantFamily("tboolean", log_map("left", phi))
    with pytest.raises(ValueError):
        cu.CumulantFamily("classical", log_map("left", phi))
    with pytest.raises(TypeError):
        cu.PairState(phi, log_map("left", phi))
    with pytest.raises(ValueError):
        cu.transform(phi, "cfree")
