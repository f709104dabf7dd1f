"""Additive convolutions of characters and of pair states."""
from __future__ import annotations

from fractions import Fraction

from .cumulants import PairState, cfree_cumulants, cmonotone_cumulants
from .shuffle import (Functional, KindError, adjoint, conv_inverse, convolve, exp_map, exp_r,
                      log_map, sandwich)

KINDS = ("free", "boolean", "monotone")


def _chars(*fs: Functional):
    for f in fs:
        if f.kind != "character":
            raise KindError(f"convolution expects characters, got {f.kind}")
    for f in fs[1:]:
        fs[0]._check(f)


def additive_convolve(phi1: Functional, phi2: Functional, kind: str) -> Functional:
    _chars(phi1, phi2)
    if kind == "free":
        return exp_map("left", log_map("left", phi1) + log_map("left", phi2))
    if kind == "boolean":
        return exp_map("right", log_map("right", phi1) + log_map("right", phi2))
    if kind == "monotone":
        return convolve(phi1, phi2)
    raise ValueError(f"unknown convolution {kind!r}; expected one of {KINDS}")


def cfree_convolve(p1: PairState, p2: PairState) -> PairState:
    """Second components free-convolve; c-free cumulants add."""
    p1.phi._check(p2.phi)
    psi = additive_convolve(p1.psi, p2.psi, "free")
    K = cfree_cumulants(p1).values + cfree_cumulants(p2).values
    return PairState(exp_map("right", adjoint(psi, K)), psi)


def cmonotone_convolve(p1: PairState, p2: PairState) -> PairState:
    """(Phi1, Psi1) * (Phi2, Psi2) = (E_>(beta2 + theta_{Psi2}(beta1)), Psi1 * Psi2)."""
    p1.phi._check(p2.phi)
    beta1 = log_map("right", p1.phi)
    beta2 = log_map("right", p2.phi)
    phi = exp_map("right", beta2 + adjoint(p2.psi, beta1))
    return PairState(phi, convolve(p1.psi, p2.psi))


def cmonotone_power(p: PairState, M: int) -> PairState:
    if M < 1:
        raise ValueError("power must be >= 1")
    out = p
    for _ in range(M - 1):
        out = cmonotone_convolve(out, p)
    return out


def orthogonal(phi: Functional, psi: Functional, method: str = "adjoint") -> Functional:
    """Phi |- Psi, either as E_>(theta_Psi(beta)) or as E_>(e^{r_{<|rho'}}(beta))."""
    _chars(phi, psi)
    beta = log_map("right", phi)
    if method == "adjoint":
        return exp_map("right", adjoint(psi, beta))
    if method == "pre-lie":
        return exp_map("right", exp_r(log_map("star", psi), beta))
    raise ValueError(f"unknown method {method!r}")


def subordination(psi2: Functional, psi1: Functional) -> Functional:
    """Psi2 |> Psi1 = E_<(theta_{Psi1}(alpha2)) with alpha2 the free cumulants of Psi2."""
    _chars(psi2, psi1)
    return exp_map("left", adjoint(psi1, log_map("left", psi2)))


def belinschi_nica(phi: Functional, t, form: str = "free") -> Functional:
    """B_t(Phi).

    form='free' conjugates kappa by E_<(t kappa); form='boolean' uses the
    right half-shuffle logarithm, E_>(E_<(t beta)^{-1} > beta < E_<(t beta)).
    form='boolean-reversed' has the conjugation the other way round.
    """
    _chars(phi)
    t = Fraction(t)
    if form == "free":
        kappa = log_map("left", phi)
        return exp_map("left", adjoint(exp_map("left", kappa * t), kappa))
    beta = log_map("right", phi)
    g = exp_map("left", beta * t)
    if form == "boolean":
        return exp_map("right", adjoint(g, beta))
    if form == "boolean-reversed":
        return exp_map("right", sandwich(g, beta, conv_inverse(g)))
    raise ValueError(f"unknown form {form!r}")


def pair_convolve(p1: PairState, p2: PairState, kind: str) -> PairState:
    if kind == "cfree":
        return cfree_convolve(p1, p2)
    if kind == "cmonotone":
        return cmonotone_convolve(p1, p2)
    raise ValueError(f"unknown pair convolution {kind!r}")


__all__ = ["additive_convolve", "cfree_convolve", "cmonotone_convolve", "cmonotone_power",
           "orthogonal", "subordination", "belinschi_nica", "pair_convolve",
           "cmonotone_cumulants"]
