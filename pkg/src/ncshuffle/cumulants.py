"""Cumulant transforms, each available as a shuffle formula and as a partition sum.

Shuffle side: free = L_<, Boolean = L_>, monotone = log*, c-free
K = Psi > beta < Psi^{-1}, c-monotone P = Omega_{rho'}(beta), plus the
one-parameter t-Boolean / t-monotone families. Partition side: the
moment-cumulant recursions over NC(n) and its interval or irreducible parts, solved for
the top cumulant degree by degree. The two sides share nothing but
the coproduct-free combinatorics module.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from . import combinatorics as comb
from .shuffle import (Functional, KindError, MismatchError, adjoint, all_words, conv_inverse,
                      exp_map, log_map, omega_operator, sandwich, w_operator, zero_infchar)

ZERO = Fraction(0)
ONE = Fraction(1)

BASIC_KINDS = ("free", "boolean", "monotone")
FAMILY_KINDS = BASIC_KINDS + ("cfree", "cmonotone", "tboolean", "tmonotone")


@dataclass(frozen=True)
class CumulantFamily:
    kind: str
    values: Functional
    t: Fraction | None = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown cumulant family {self.kind!r}")
        if self.values.kind != "infchar":
            raise KindError("cumulant values must be an infinitesimal character")
        if self.kind in ("tboolean", "tmonotone") and self.t is None:
            raise ValueError(f"{self.kind} needs a parameter t")

    def __call__(self, w) -> Fraction:
        return self.values.word(w)

    @property
    def alphabet(self):
        return self.values.alphabet

    @property
    def truncation(self):
        return self.values.truncation


@dataclass(frozen=True)
class PairState:
    """Pair of characters (Phi, Psi) on a common alphabet and truncation."""
    phi: Functional
    psi: Functional

    def __post_init__(self):
        for name, f in (("phi", self.phi), ("psi", self.psi)):
            if f.kind != "character":
                raise KindError(f"pair component {name} must be a character, got {f.kind}")
        self.phi._check(self.psi)

    @property
    def alphabet(self):
        return self.phi.alphabet

    @property
    def truncation(self):
        return self.phi.truncation


# -- shuffle side ----------------------------------------------------------------

def cumulants_of(phi: Functional, kind: str) -> CumulantFamily:
    if kind == "free":
        vals = log_map("left", phi)
    elif kind == "boolean":
        vals = log_map("right", phi)
    elif kind == "monotone":
        vals = log_map("star", phi)
    else:
        raise ValueError(f"cumulants_of handles {BASIC_KINDS}, got {kind!r}")
    return CumulantFamily(kind, vals)


def moments_from(fam: CumulantFamily) -> Functional:
    """Shuffle-side inverse of every transform in this module (single-state families)."""
    v = fam.values
    if fam.kind == "free":
        return exp_map("left", v)
    if fam.kind == "boolean":
        return exp_map("right", v)
    if fam.kind == "monotone":
        return exp_map("star", v)
    if fam.kind == "tboolean":
        phi_t = exp_map("left", v * fam.t)
        return exp_map("right", adjoint(phi_t, v))
    if fam.kind == "tmonotone":
        return exp_map("right", w_operator(v * fam.t, v))
    raise ValueError(f"{fam.kind} cumulants need a pair state to invert")


def cfree_cumulants(p: PairState) -> CumulantFamily:
    beta = log_map("right", p.phi)
    return CumulantFamily("cfree", sandwich(p.psi, beta, conv_inverse(p.psi)))


def cmonotone_cumulants(p: PairState) -> CumulantFamily:
    beta = log_map("right", p.phi)
    rho_prime = log_map("star", p.psi)
    return CumulantFamily("cmonotone", omega_operator(rho_prime, beta))


def cfree_from_cmonotone(p: PairState, method: str = "operator") -> CumulantFamily:
    """c-free cumulants from the c-monotone ones: K = W_{-rho'}(P)."""
    P = cmonotone_cumulants(p).values
    rho_prime = log_map("star", p.psi)
    if method == "operator":
        return CumulantFamily("cfree", w_operator(-rho_prime, P))
    if method == "partition":
        vals = irreducible_sum(P, rho_prime,
                               lambda q: Fraction((-1) ** (len(q) - 1), comb.partition_tree_factorial(q)))
        return CumulantFamily("cfree", vals)
    raise ValueError(f"unknown method {method!r}")


def cmonotone_from_cfree(p: PairState, method: str = "operator") -> CumulantFamily:
    """c-monotone cumulants from the c-free ones: P = Omega_{-rho'}(K)."""
    K = cfree_cumulants(p).values
    if method == "operator":
        return CumulantFamily("cmonotone", omega_operator(-log_map("star", p.psi), K))
    if method == "partition":
        kappa_prime = log_map("left", p.psi)
        vals = irreducible_sum(K, kappa_prime, lambda q: (-1) ** (len(q) - 1) * comb.omega(q))
        return CumulantFamily("cmonotone", vals)
    raise ValueError(f"unknown method {method!r}")


def boolean_flow(phi: Functional, t) -> Functional:
    """Phi_t = E_>(t beta), the reference state behind the t-families."""
    t = Fraction(t)
    return exp_map("right", log_map("right", phi) * t)


def t_boolean(phi: Functional, t) -> CumulantFamily:
    t = Fraction(t)
    beta = log_map("right", phi)
    phi_t = exp_map("right", beta * t)
    return CumulantFamily("tboolean", sandwich(phi_t, beta, conv_inverse(phi_t)), t)


def t_boolean_shift(src: CumulantFamily, s, t) -> CumulantFamily:
    """t-Boolean cumulants from s-Boolean ones via the irreducible NC sum weighted (s-t)^{|pi|-1}."""
    s, t = Fraction(s), Fraction(t)
    if src.kind != "tboolean" or src.t != s:
        raise ValueError(f"expected a tboolean family at s={s}")
    d = s - t
    vals = irreducible_sum(src.values, src.values, lambda q: d ** (len(q) - 1))
    return CumulantFamily("tboolean", vals, t)


def t_monotone(phi: Functional, t) -> CumulantFamily:
    """c-monotone cumulants of (Phi, E_>(t beta)); t = 0 gives the Boolean cumulants."""
    t = Fraction(t)
    fam = cmonotone_cumulants(PairState(phi, boolean_flow(phi, t)))
    return CumulantFamily("tmonotone", fam.values, t)


def transform(phi: Functional, kind: str, t=None) -> CumulantFamily:
    if kind in BASIC_KINDS:
        return cumulants_of(phi, kind)
    if kind == "tboolean":
        return t_boolean(phi, t)
    if kind == "tmonotone":
        return t_monotone(phi, t)
    raise ValueError(f"kind {kind!r} needs a pair state")


def pair_transform(p: PairState, kind: str) -> CumulantFamily:
    if kind == "cfree":
        return cfree_cumulants(p)
    if kind == "cmonotone":
        return cmonotone_cumulants(p)
    raise ValueError(f"pair transform handles cfree/cmonotone, got {kind!r}")


# -- partition side ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _shape(p: comb.NoncrossingPartition):
    """0-based blocks plus an outer flag per block."""
    parents = p.parents()
    return tuple((tuple(i - 1 for i in b), parents[j] is None) for j, b in enumerate(p.blocks))


@lru_cache(maxsize=None)
def _monotone_shape(n: int):
    """M^irr(n) as (0-based blocks ordered by label) tuples."""
    return tuple(tuple(tuple(i - 1 for i in b) for b in mp.ordered_blocks())
                 for mp in comb.enumerate_partitions(n, "monotone_irr"))


def _is_top(shape) -> bool:
    return len(shape) == 1


def _words(f: Functional) -> Callable:
    t = f.table
    return lambda u: t[(u,)]


def _solve(target: Functional, partitions: Callable[[int], tuple], weight: Callable,
           inner: Functional | None = None) -> dict:
    """Solve target(w) = sum_pi weight(pi) prod c_outer prod c_inner for c, degree by degree.

    Inner blocks use ``inner`` when given (conditional theories) and c itself
    otherwise. The single-block partition has weight 1 and carries c(w).
    """
    tv = _words(target)
    c: dict = {}
    cin = _words(inner) if inner is not None else None
    for w in all_words(target.k, target.truncation):
        acc = ZERO
        for p in partitions(len(w)):
            shape = _shape(p)
            if _is_top(shape):
                continue
            term = weight(p)
            for blk, outer in shape:
                u = tuple(w[i] for i in blk)
                term *= c[u] if (outer or cin is None) else cin(u)
                if not term:
                    break
            acc += term
        c[w] = tv(w) - acc
    return c


def _weights(kind: str, t: Fraction | None = None):
    tf = comb.partition_tree_factorial
    if kind in ("free", "cfree"):
        return comb.nc_partitions, lambda p: ONE
    if kind == "boolean":
        return comb.interval_partitions, lambda p: ONE
    if kind in ("monotone", "cmonotone"):
        return comb.nc_partitions, lambda p: Fraction(1, tf(p))
    if kind == "tboolean":
        return comb.nc_partitions, lambda p: t ** p.inner()
    if kind == "tmonotone":
        return comb.nc_partitions, lambda p: t ** p.inner() / tf(p)
    raise ValueError(f"no partition formula for {kind!r}")


def cumulants_oracle(phi: Functional, kind: str, t=None) -> CumulantFamily:
    """Cumulants from the moment-cumulant recursion alone."""
    t = None if t is None else Fraction(t)
    parts, weight = _weights(kind, t)
    vals = _solve(phi, parts, weight)
    return CumulantFamily(kind, Functional(phi.alphabet, phi.truncation, "infchar", vals), t)


def moments_via_partitions(fam: CumulantFamily) -> Functional:
    """Forward moment-cumulant sum; the partition counterpart of the exponentials."""
    if fam.kind not in BASIC_KINDS + ("tboolean", "tmonotone"):
        raise ValueError(f"{fam.kind} moments need a pair state")
    parts, weight = _weights(fam.kind, fam.t)
    c = _words(fam.values)
    out = {}
    for w in all_words(fam.values.k, fam.truncation):
        acc = ZERO
        for p in parts(len(w)):
            term = weight(p)
            for blk, _ in _shape(p):
                term *= c(tuple(w[i] for i in blk))
                if not term:
                    break
            acc += term
        out[w] = acc
    return Functional(fam.alphabet, fam.truncation, "character", out)


def irreducible_sum(first: Functional, others: Functional, weight: Callable) -> Functional:
    """w -> sum over irreducible NC(n) of weight(pi) first(w_{pi_1}) prod others(w_{pi_j})."""
    f, g = _words(first), _words(others)
    out = {}
    for w in all_words(first.k, first.truncation):
        acc = ZERO
        for p in comb.nc_irreducible(len(w)):
            term = weight(p)
            for j, (blk, _) in enumerate(_shape(p)):
                u = tuple(w[i] for i in blk)
                term *= f(u) if j == 0 else g(u)
                if not term:
                    break
            acc += term
        if acc:
            out[w] = acc
    return Functional(first.alphabet, first.truncation, "infchar", out)


_CROSS = {
    ("free", "boolean"): lambda p: ONE,
    ("boolean", "free"): lambda p: Fraction((-1) ** (len(p) - 1)),
    ("monotone", "boolean"): lambda p: Fraction(1, comb.partition_tree_factorial(p)),
    ("monotone", "free"): lambda p: Fraction((-1) ** (len(p) - 1), comb.partition_tree_factorial(p)),
    ("boolean", "monotone"): lambda p: comb.omega(p),
    ("free", "monotone"): lambda p: (-1) ** (len(p) - 1) * comb.omega(p),
}


def cumulant_cross(src: CumulantFamily, to_kind: str) -> CumulantFamily:
    """Convert between two of the basic cumulant families with an irreducible NC sum."""
    if src.kind == to_kind and to_kind in BASIC_KINDS:
        return src
    try:
        weight = _CROSS[(src.kind, to_kind)]
    except KeyError:
        raise ValueError(f"no cross formula from {src.kind!r} to {to_kind!r}") from None
    return CumulantFamily(to_kind, irreducible_sum(src.values, src.values, weight))


def adjoint_oracle(phi: Functional, alpha: Functional, inverse_left: bool = True) -> Functional:
    """Partition form of Phi^{-1} > alpha < Phi (or Phi > alpha < Phi^{-1} when inverse_left=False).

    Inner blocks carry the free (resp. Boolean, signed) cumulants of Phi, computed
    by the partition recursion.
    """
    if inverse_left:
        kappa = cumulants_oracle(phi, "free").values
        return irreducible_sum(alpha, kappa, lambda p: ONE)
    beta = cumulants_oracle(phi, "boolean").values
    return irreducible_sum(alpha, beta, lambda p: Fraction((-1) ** (len(p) - 1)))


def cfree_oracle(p: PairState) -> CumulantFamily:
    kappa_prime = cumulants_oracle(p.psi, "free").values
    vals = _solve(p.phi, comb.nc_partitions, lambda q: ONE, inner=kappa_prime)
    return CumulantFamily("cfree", Functional(p.alphabet, p.truncation, "infchar", vals))


def cmonotone_oracle(p: PairState) -> CumulantFamily:
    h_prime = cumulants_oracle(p.psi, "monotone").values
    vals = _solve(p.phi, comb.nc_partitions,
                  lambda q: Fraction(1, comb.partition_tree_factorial(q)), inner=h_prime)
    return CumulantFamily("cmonotone", Functional(p.alphabet, p.truncation, "infchar", vals))


def iterated_oracle(alphas: list[Functional], N: int | None = None) -> Functional:
    """Sum over irreducible monotone partitions with len(alphas) blocks, block of label j
    evaluated on alphas[j]; the partition form of the right-iterated pre-Lie product."""
    first = alphas[0]
    nblocks = len(alphas)
    getters = [_words(a) for a in alphas]
    out = {}
    for w in all_words(first.k, N or first.truncation):
        acc = ZERO
        for blocks in _monotone_shape(len(w)):
            if len(blocks) != nblocks:
                continue
            term = ONE
            for get, blk in zip(getters, blocks):
                term *= get(tuple(w[i] for i in blk))
                if not term:
                    break
            acc += term
        if acc:
            out[w] = acc
    return Functional(first.alphabet, first.truncation, "infchar", out)


def wrho_sum(P: Functional, rho_prime: Functional) -> Functional:
    """sum over irreducible monotone partitions of P(w_{pi_1}) prod rho'(w_{pi_j}) / |pi|!."""
    f, g = _words(P), _words(rho_prime)
    out = {}
    for w in all_words(P.k, P.truncation):
        acc = ZERO
        for blocks in _monotone_shape(len(w)):
            term = Fraction(1, math.factorial(len(blocks)))
            for j, blk in enumerate(blocks):
                u = tuple(w[i] for i in blk)
                term *= f(u) if j == 0 else g(u)
                if not term:
                    break
            acc += term
        if acc:
            out[w] = acc
    return Functional(P.alphabet, P.truncation, "infchar", out)


def cmonotone_lemma(p: PairState) -> CumulantFamily:
    """c-monotone cumulants by solving the monotone-partition form of W_{rho'}(P) = beta.

    Boolean cumulants and rho' come from partition recursions, so no shuffle
    product is involved.
    """
    beta = _words(cumulants_oracle(p.phi, "boolean").values)
    rp = _words(cumulants_oracle(p.psi, "monotone").values)
    P: dict = {}
    for w in all_words(p.phi.k, p.truncation):
        acc = ZERO
        for blocks in _monotone_shape(len(w)):
            if len(blocks) == 1:
                continue
            term = Fraction(1, math.factorial(len(blocks)))
            for j, blk in enumerate(blocks):
                u = tuple(w[i] for i in blk)
                term *= P[u] if j == 0 else rp(u)
                if not term:
                    break
            acc += term
        P[w] = beta(w) - acc
    return CumulantFamily("cmonotone", Functional(p.alphabet, p.truncation, "infchar", P))


def t_boolean_oracle(phi: Functional, t) -> CumulantFamily:
    return cumulants_oracle(phi, "tboolean", t)


def t_monotone_oracle(phi: Functional, t) -> CumulantFamily:
    return cumulants_oracle(phi, "tmonotone", t)


def zero_family(kind: str, like: Functional, t=None) -> CumulantFamily:
    return CumulantFamily(kind, zero_infchar(like.alphabet, like.truncation),
                          None if t is None else Fraction(t))


__all__ = [
    "CumulantFamily", "PairState", "MismatchError",
    "cumulants_of", "moments_from", "cfree_cumulants", "cmonotone_cumulants",
    "cfree_from_cmonotone", "cmonotone_from_cfree", "boolean_flow", "t_boolean",
    "t_boolean_shift", "t_monotone", "transform", "pair_transform",
    "cumulants_oracle", "moments_via_partitions", "irreducible_sum", "cumulant_cross",
    "adjoint_oracle", "cfree_oracle", "cmonotone_oracle", "iterated_oracle", "wrho_sum",
    "cmonotone_lemma", "t_boolean_oracle", "t_monotone_oracle", "zero_family",
]
