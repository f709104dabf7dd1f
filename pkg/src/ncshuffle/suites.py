"""Named identity suites on seeded random inputs, reporting the first counterexample on failure.

Every suite takes (seed, degree, cases, letters) and returns a list of Check
records, one per identity. Suite names follow the result being exercised.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import combinatorics as comb
from . import cumulants as cu
from . import convolutions as cv
from . import expansions as ex
from . import independence as ind
from . import reference
from .sampling import random_character, random_functional, random_infchar, random_rationals
from .shuffle import (Functional, adjoint, conv_inverse, convolve, counit, exp_map, format_monomial,
                      half_shuffle, log_map, magnus, magnus_inverse, moments_character, omega_operator,
                      pre_lie, r_iter, sandwich, sequence, w_operator)

Q = Fraction


@dataclass
class Check:
    suite: str
    identity: str
    passed: bool = True
    cases: int = 0
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.suite}: {self.identity} [{self.cases} cases]"
        if self.counterexample:
            text += f" first counterexample: {self.counterexample}"
        return text


@dataclass
class _Recorder:
    suite: str
    checks: dict = field(default_factory=dict)

    def _get(self, identity: str) -> Check:
        if identity not in self.checks:
            self.checks[identity] = Check(self.suite, identity)
        return self.checks[identity]

    def equal(self, identity: str, lhs, rhs, case=None):
        c = self._get(identity)
        c.cases += 1
        if not c.passed:
            return
        diff = _difference(lhs, rhs)
        if diff is not None:
            c.passed = False
            c.counterexample = diff if case is None else f"case {case}: {diff}"

    def holds(self, identity: str, ok: bool, detail: str = "", case=None):
        c = self._get(identity)
        c.cases += 1
        if c.passed and not ok:
            c.passed = False
            c.counterexample = detail if case is None else f"case {case}: {detail}"

    def result(self) -> list[Check]:
        return list(self.checks.values())


def _difference(lhs, rhs) -> str | None:
    if isinstance(lhs, Functional) and isinstance(rhs, Functional):
        if lhs == rhs:
            return None
        if lhs.alphabet != rhs.alphabet or lhs.truncation != rhs.truncation:
            return "alphabet/truncation differ"
        x = lhs.first_difference(rhs)
        word = format_monomial(x, lhs.alphabet) or "1"
        return f"{word}: {lhs.table[x]} != {rhs.table[x]}"
    if isinstance(lhs, cu.PairState) and isinstance(rhs, cu.PairState):
        return _difference(lhs.phi, rhs.phi) or _difference(lhs.psi, rhs.psi)
    return None if lhs == rhs else f"{lhs} != {rhs}"


# -- suites ------------------------------------------------------------------------------------

def shuffle_axioms(seed, degree=5, cases=100, letters=1):
    rec, rng = _Recorder("shuffle-axioms"), random.Random(seed)
    L = lambda f, g: half_shuffle(f, g, "left")
    R = lambda f, g: half_shuffle(f, g, "right")
    for i in range(cases):
        f, g, h = (random_functional(rng, degree, letters) for _ in range(3))
        rec.equal("(f<g)<h = f<(g*h)", L(L(f, g), h), L(f, convolve(g, h)), i)
        rec.equal("(f>g)<h = f>(g<h)", L(R(f, g), h), R(f, L(g, h)), i)
        rec.equal("f>(g>h) = (f*g)>h", R(f, R(g, h)), R(convolve(f, g), h), i)
        split = L(f, g) + R(f, g)
        conv = convolve(f, g)
        off_unit = all(split.table[x] == conv.table[x] for x in conv.table if x)
        off_unit = off_unit and all(split.table[x] == conv.table[x] for x in split.table if x)
        rec.holds("f<g + f>g = f*g off the unit", off_unit, case=i)
    return rec.result()


def triple(seed, degree=6, cases=50, letters=1):
    rec, rng = _Recorder("triple"), random.Random(seed)
    for i in range(cases):
        phi = random_character(rng, degree, letters)
        rec.equal("exp*(log* Phi) = Phi", exp_map("star", log_map("star", phi)), phi, i)
        rec.equal("E<(L< Phi) = Phi", exp_map("left", log_map("left", phi)), phi, i)
        rec.equal("E>(L> Phi) = Phi", exp_map("right", log_map("right", phi)), phi, i)
        alpha = random_infchar(rng, degree, letters)
        for mode in ("star", "left", "right"):
            rec.equal(f"log_{mode}(exp_{mode} alpha) = alpha",
                      log_map(mode, exp_map(mode, alpha)), alpha, i)
        rec.equal("Phi * Phi^-1 = eps", convolve(phi, conv_inverse(phi)), counit(phi.alphabet, degree), i)
    return rec.result()


def adjoint_suite(seed, degree=6, cases=50, letters=1):
    rec, rng = _Recorder("adjoint"), random.Random(seed)
    for i in range(cases):
        phi = random_character(rng, degree, letters)
        kappa, beta = log_map("left", phi), log_map("right", phi)
        rec.equal("beta = Phi^-1 > kappa < Phi", adjoint(phi, kappa), beta, i)
        rec.equal("kappa = Phi > beta < Phi^-1", sandwich(phi, beta, conv_inverse(phi)), kappa, i)
        alpha = random_infchar(rng, degree, letters)
        rec.equal("Phi^-1 > alpha < Phi = irreducible NC sum (free)",
                  adjoint(phi, alpha), cu.adjoint_oracle(phi, alpha), i)
        rec.equal("Phi > alpha < Phi^-1 = irreducible NC sum (signed Boolean)",
                  sandwich(phi, alpha, conv_inverse(phi)), cu.adjoint_oracle(phi, alpha, False), i)
    return rec.result()


def pre_lie_suite(seed, degree=6, cases=20, letters=1):
    rec, rng = _Recorder("pre-lie"), random.Random(seed)
    for i in range(cases):
        a, b, c = (random_infchar(rng, degree, letters) for _ in range(3))
        general = half_shuffle(a, b, "left") - half_shuffle(b, a, "right")
        rec.holds("a<|b is infinitesimal", general.is_infchar(), case=i)
        rec.equal("a<|b matches the half-shuffle definition", general, pre_lie(a, b), i)
        lhs = pre_lie(pre_lie(a, b), c) - pre_lie(a, pre_lie(b, c))
        rhs = pre_lie(pre_lie(a, c), b) - pre_lie(a, pre_lie(c, b))
        rec.equal("right pre-Lie identity", lhs, rhs, i)
        for n in range(1, degree):
            rec.equal("r_iter = irreducible monotone partition sum",
                      r_iter(a, b, n), cu.iterated_oracle([a] + [b] * n), i)
        rec.equal("Omega_g(W_g(a)) = a", omega_operator(b, w_operator(b, a)), a, i)
        rec.equal("W_g(Omega_g(a)) = a", w_operator(b, omega_operator(b, a)), a, i)
        rec.equal("Omega(W(a)) = a", magnus(magnus_inverse(a)), a, i)
        phi = random_character(rng, degree, letters)
        rho = log_map("star", phi)
        rec.equal("beta = W(rho)", magnus_inverse(rho), log_map("right", phi), i)
        rec.equal("kappa = -W(-rho)", -magnus_inverse(-rho), log_map("left", phi), i)
    return rec.result()


def cumulant_oracles(seed, degree=6, cases=20, letters=1):
    rec, rng = _Recorder("cumulant-oracles"), random.Random(seed)
    for i in range(cases):
        phi = random_character(rng, degree, letters)
        fams = {k: cu.cumulants_of(phi, k) for k in cu.BASIC_KINDS}
        for k, fam in fams.items():
            rec.equal(f"{k} cumulants = moment-cumulant recursion",
                      fam.values, cu.cumulants_oracle(phi, k).values, i)
            rec.equal(f"{k} moments from partitions = Phi", cu.moments_via_partitions(fam), phi, i)
            for k2 in cu.BASIC_KINDS:
                if k2 != k:
                    rec.equal(f"{k2} <- {k} irreducible NC formula",
                              cu.cumulant_cross(fam, k2).values, fams[k2].values, i)
    return rec.result()


def omega_suite(seed, degree=7, cases=10, letters=1):
    rec, rng = _Recorder("omega"), random.Random(seed)
    two_chain = comb.NoncrossingPartition(3, ((1, 3), (2,)))
    vee = comb.NoncrossingPartition(4, ((1, 4), (2,), (3,)))
    rec.equal("omega of the 2-chain = -1/2", comb.omega(two_chain), Q(-1, 2))
    rec.equal("omega of the V-poset = 1/6", comb.omega(vee), Q(1, 6))
    for i in range(cases):
        phi = random_character(rng, degree, letters)
        rho = log_map("star", phi)
        for src in ("boolean", "free"):
            fam = cu.cumulants_of(phi, src)
            rec.equal(f"monotone <- {src} with omega coefficients = log*",
                      cu.cumulant_cross(fam, "monotone").values, rho, i)
    return rec.result()


def _pair(rng, degree, letters):
    return cu.PairState(random_character(rng, degree, letters), random_character(rng, degree, letters))


def cfree_def(seed, degree=6, cases=50, letters=1):
    rec, rng = _Recorder("cfree-def"), random.Random(seed)
    for i in range(cases):
        p = _pair(rng, degree, letters)
        rec.equal("Psi > beta < Psi^-1 = c-free recursion",
                  cu.cfree_cumulants(p).values, cu.cfree_oracle(p).values, i)
        eps = counit(p.alphabet, degree)
        rec.equal("c-free(Phi, Phi) = free", cu.cfree_cumulants(cu.PairState(p.phi, p.phi)).values,
                  log_map("left", p.phi), i)
        rec.equal("c-free(Phi, eps) = Boolean", cu.cfree_cumulants(cu.PairState(p.phi, eps)).values,
                  log_map("right", p.phi), i)
    return rec.result()


def cmonotone_def(seed, degree=6, cases=50, letters=1):
    rec, rng = _Recorder("cmonotone-def"), random.Random(seed)
    for i in range(cases):
        p = _pair(rng, degree, letters)
        P = cu.cmonotone_cumulants(p).values
        rec.equal("Omega_{rho'}(beta) = c-monotone recursion", P, cu.cmonotone_oracle(p).values, i)
        rec.equal("Omega_{rho'}(beta) = irreducible monotone partition solve", P,
                  cu.cmonotone_lemma(p).values, i)
        rec.equal("W_{rho'}(P) = monotone partition sum",
                  w_operator(log_map("star", p.psi), P), cu.wrho_sum(P, log_map("star", p.psi)), i)
        eps = counit(p.alphabet, degree)
        rec.equal("c-monotone(Phi, Phi) = monotone",
                  cu.cmonotone_cumulants(cu.PairState(p.phi, p.phi)).values, log_map("star", p.phi), i)
        rec.equal("c-monotone(Phi, eps) = Boolean",
                  cu.cmonotone_cumulants(cu.PairState(p.phi, eps)).values, log_map("right", p.phi), i)
    return rec.result()


def relation(seed, degree=6, cases=50, letters=1):
    rec, rng = _Recorder("relation"), random.Random(seed)
    for i in range(cases):
        p = _pair(rng, degree, letters)
        K = cu.cfree_oracle(p).values
        P = cu.cmonotone_oracle(p).values
        rec.equal("K = W_{-rho'}(P)", cu.cfree_from_cmonotone(p, "operator").values, K, i)
        rec.equal("K = signed irreducible NC sum with 1/t(pi)!",
                  cu.cfree_from_cmonotone(p, "partition").values, K, i)
        rec.equal("P = Omega_{-rho'}(K)", cu.cmonotone_from_cfree(p, "operator").values, P, i)
        rec.equal("P = signed irreducible NC sum with omega",
                  cu.cmonotone_from_cfree(p, "partition").values, P, i)
    return rec.result()


def cmonotone_assoc(seed, degree=6, cases=10, letters=1):
    rec, rng = _Recorder("cmonotone-assoc"), random.Random(seed)
    for i in range(cases):
        p1, p2, p3 = (_pair(rng, degree, letters) for _ in range(3))
        rec.equal("(p1*p2)*p3 = p1*(p2*p3)",
                  cv.cmonotone_convolve(cv.cmonotone_convolve(p1, p2), p3),
                  cv.cmonotone_convolve(p1, cv.cmonotone_convolve(p2, p3)), i)
    return rec.result()


def power_additivity(seed, degree=6, cases=5, letters=1, max_power=5):
    rec, rng = _Recorder("power-additivity"), random.Random(seed)
    for i in range(cases):
        p = _pair(rng, degree, letters)
        P = cu.cmonotone_cumulants(p).values
        power = p
        for M in range(1, max_power + 1):
            if M > 1:
                power = cv.cmonotone_convolve(power, p)
            rec.equal("P(p^{*M}) = M P(p)", cu.cmonotone_cumulants(power).values, P * M, i)
    return rec.result()


def orthogonal_decomposition(seed, degree=6, cases=10, letters=1):
    rec, rng = _Recorder("orthogonal-decomposition"), random.Random(seed)
    for i in range(cases):
        phi, psi = random_character(rng, degree, letters), random_character(rng, degree, letters)
        eps = counit(phi.alphabet, degree)
        ortho = cv.orthogonal(phi, psi)
        rec.equal("E>(theta_Psi(beta)) = E>(e^{r_{<|rho'}}(beta))", ortho, cv.orthogonal(phi, psi, "pre-lie"), i)
        rec.equal("Phi*Psi = (Phi |- Psi) Boolean-convolved with Psi",
                  convolve(phi, psi), cv.additive_convolve(ortho, psi, "boolean"), i)
        rec.equal("Phi |- eps = Phi", cv.orthogonal(phi, eps), phi, i)
        rec.equal("eps |- Psi = eps", cv.orthogonal(eps, psi), eps, i)
    return rec.result()


def subordination(seed, degree=6, cases=10, letters=1):
    rec, rng = _Recorder("subordination"), random.Random(seed)
    for i in range(cases):
        psi1, psi2 = random_character(rng, degree, letters), random_character(rng, degree, letters)
        rec.equal("Psi1 free-convolved with Psi2 = Psi1 * (Psi2 |> Psi1)",
                  cv.additive_convolve(psi1, psi2, "free"), convolve(psi1, cv.subordination(psi2, psi1)), i)
    return rec.result()


def cmonotone_collapses(seed, degree=6, cases=10, letters=1):
    rec, rng = _Recorder("cmonotone-collapses"), random.Random(seed)
    for i in range(cases):
        phi, psi, lam = (random_character(rng, degree, letters) for _ in range(3))
        eps = counit(phi.alphabet, degree)
        P = cu.PairState
        rec.equal("(Phi,Phi)*(Psi,Psi) = (Phi*Psi, Phi*Psi)",
                  cv.cmonotone_convolve(P(phi, phi), P(psi, psi)), P(convolve(phi, psi), convolve(phi, psi)), i)
        rec.equal("(Phi,eps)*(Psi,eps) = (Boolean convolution, eps)",
                  cv.cmonotone_convolve(P(phi, eps), P(psi, eps)),
                  P(cv.additive_convolve(phi, psi, "boolean"), eps), i)
        rec.equal("(Phi,Lambda)*(eps,Psi) = (Phi |- Psi, Lambda*Psi)",
                  cv.cmonotone_convolve(P(phi, lam), P(eps, psi)),
                  P(cv.orthogonal(phi, psi), convolve(lam, psi)), i)
    return rec.result()


def cfree_convolution(seed, degree=6, cases=10, letters=1):
    rec, rng = _Recorder("cfree-convolution"), random.Random(seed)
    for i in range(cases):
        p1, p2 = _pair(rng, degree, letters), _pair(rng, degree, letters)
        out = cv.cfree_convolve(p1, p2)
        rec.equal("c-free cumulants add", cu.cfree_cumulants(out).values,
                  cu.cfree_cumulants(p1).values + cu.cfree_cumulants(p2).values, i)
        rec.equal("second component is the free convolution", out.psi,
                  cv.additive_convolve(p1.psi, p2.psi, "free"), i)
        eps = counit(p1.alphabet, degree)
        rec.equal("(eps, eps) is neutral", cv.cfree_convolve(p1, cu.PairState(eps, eps)), p1, i)
        same = cv.cfree_convolve(cu.PairState(p1.phi, p1.phi), cu.PairState(p2.phi, p2.phi))
        fr = cv.additive_convolve(p1.phi, p2.phi, "free")
        rec.equal("identical pairs collapse to free convolution", same, cu.PairState(fr, fr), i)
    return rec.result()


def bch(seed, degree=6, cases=10, letters=1):
    rec, rng = _Recorder("bch"), random.Random(seed)
    for i in range(cases):
        b1, b2 = random_infchar(rng, degree, letters), random_infchar(rng, degree, letters)
        psi2 = exp_map("right", b2)
        rec.equal("E>(b1)*E>(b2) = E>(b2 + Psi2^-1 > b1 < Psi2)",
                  convolve(exp_map("right", b1), psi2), exp_map("right", b2 + adjoint(psi2, b1)), i)
    return rec.result()


def additive(seed, degree=8, cases=5, letters=1):
    rec, rng = _Recorder("additive"), random.Random(seed)
    ber = moments_character([1 if n % 2 == 0 else 0 for n in range(1, degree + 1)])
    got = {k: sequence(cv.additive_convolve(ber, ber, k))[3] for k in cv.KINDS}
    rec.equal("Bernoulli free-convolved with itself: m4 = 6", got["free"], 6)
    rec.equal("Bernoulli Boolean-convolved with itself: m4 = 4", got["boolean"], 4)
    rec.equal("Bernoulli monotone-convolved with itself: m4 = 5", got["monotone"], 5)
    for i in range(cases):
        s, t = random_rationals(rng, 2)
        ds = moments_character([s ** n for n in range(1, degree + 1)])
        dt = moments_character([t ** n for n in range(1, degree + 1)])
        target = moments_character([(s + t) ** n for n in range(1, degree + 1)])
        for k in cv.KINDS:
            rec.equal(f"Dirac {k} Dirac = Dirac at the sum", cv.additive_convolve(ds, dt, k), target, i)
        eps = counit(ds.alphabet, degree)
        rec.equal("Dirac pairs: c-monotone", cv.cmonotone_convolve(cu.PairState(ds, ds), cu.PairState(dt, dt)).phi,
                  target, i)
        rec.equal("Dirac pairs: c-free", cv.cfree_convolve(cu.PairState(ds, eps), cu.PairState(dt, eps)).phi,
                  target, i)
    return rec.result()


def t_boolean(seed, degree=6, cases=10, letters=1):
    rec, rng = _Recorder("t-boolean"), random.Random(seed)
    for i in range(cases):
        phi = random_character(rng, degree, letters)
        rec.equal("t = 0 gives Boolean cumulants", cu.t_boolean(phi, 0).values, log_map("right", phi), i)
        rec.equal("t = 1 gives free cumulants", cu.t_boolean(phi, 1).values, log_map("left", phi), i)
        t = random_rationals(rng, 1)[0]
        fam = cu.t_boolean(phi, t)
        rec.equal("shuffle form = t-Boolean recursion", fam.values, cu.t_boolean_oracle(phi, t).values, i)
        rec.equal("equals c-free cumulants of (Phi, E>(t beta))", fam.values,
                  cu.cfree_cumulants(cu.PairState(phi, cu.boolean_flow(phi, t))).values, i)
    return rec.result()


def ts_boolean_shift(seed, degree=6, cases=7, letters=1):
    rec, rng = _Recorder("ts-boolean-shift"), random.Random(seed)
    phi = random_character(rng, degree, letters)
    for i in range(cases):
        s, t = random_rationals(rng, 2, distinct=True)
        rec.equal("b^(t) = sum over irreducible NC of (s-t)^{inner} b^(s)",
                  cu.t_boolean_shift(cu.t_boolean(phi, s), s, t).values, cu.t_boolean(phi, t).values,
                  f"{i} (s={s}, t={t})")
    return rec.result()


def t_monotone(seed, degree=6, cases=5, letters=1):
    rec, rng = _Recorder("t-monotone"), random.Random(seed)
    phi = random_character(rng, degree, letters)
    beta = log_map("right", phi)
    rec.equal("t = 1 gives monotone cumulants", cu.t_monotone(phi, 1).values, log_map("star", phi))
    rec.equal("t = 0 gives Boolean cumulants", cu.t_monotone(phi, 0).values, beta)
    tf = comb.partition_tree_factorial
    for i, t in enumerate(random_rationals(rng, cases, distinct=True)):
        fam = cu.t_monotone(phi, t)
        h = fam.values
        rec.equal("b = sum over irreducible NC of t^{|pi|-1}/t(pi)! h^(t)",
                  cu.irreducible_sum(h, h, lambda p: t ** (len(p) - 1) / tf(p)), beta, f"{i} (t={t})")
        rec.equal("m = sum over NC of t^{inner}/t(pi)! h^(t)", cu.moments_via_partitions(fam), phi,
                  f"{i} (t={t})")
        rec.equal("log*(E>(t beta)) = t h^(t)", log_map("star", cu.boolean_flow(phi, t)), h * t,
                  f"{i} (t={t})")
        rec.equal("shuffle form = t-monotone recursion", h, cu.t_monotone_oracle(phi, t).values,
                  f"{i} (t={t})")
    return rec.result()


def belinschi_nica(seed, degree=5, cases=5, letters=1):
    rec, rng = _Recorder("belinschi-nica"), random.Random(seed)
    for i in range(cases):
        phi = random_character(rng, degree, letters)
        s, t = (abs(q) for q in random_rationals(rng, 2))
        bt = cv.belinschi_nica(phi, t)
        rec.equal("free-cumulant form = right half-shuffle form", bt,
                  cv.belinschi_nica(phi, t, "boolean"), i)
        rec.equal("t-Boolean cumulants of B_t(Phi) = beta", cu.t_boolean(bt, t).values,
                  log_map("right", phi), i)
        rec.equal("B_0 = id", cv.belinschi_nica(phi, 0), phi, i)
        rec.equal("B_s(B_t(Phi)) = B_{s+t}(Phi)", cv.belinschi_nica(bt, s), cv.belinschi_nica(phi, s + t), i)
        a = random_rationals(rng, 1)[0]
        dirac = moments_character([a ** n for n in range(1, degree + 1)])
        rec.equal("B_t fixes Dirac states", cv.belinschi_nica(dirac, t), dirac, i)
    return rec.result()


def independence_axioms(seed, degree=5, cases=20, letters=1):
    rec, rng = _Recorder("independence-axioms"), random.Random(seed)
    ber = [1, 0, 1, 0, 1, 0]
    rec.equal("Bernoulli monotone m4 from the axioms = 5", ind.sum_moments(ber, ber, "monotone", 4), 5)
    for i in range(cases):
        p1, p2 = _pair(rng, degree, 1), _pair(rng, degree, 1)
        ml = ind.moment_list
        pairs = ((ml(p1.phi), ml(p1.psi)), (ml(p2.phi), ml(p2.psi)))
        conv = cv.cmonotone_convolve(p1, p2)
        axioms = [ind.sum_moments(*pairs, "cmonotone", n) for n in range(1, degree + 1)]
        rec.equal("moments of a+b from c-monotone rules = Phi of the pair convolution",
                  axioms, sequence(conv.phi), i)
        mono = [ind.sum_moments(pairs[0][1], pairs[1][1], "monotone", n) for n in range(1, degree + 1)]
        rec.equal("moments of a+b from monotone rules = Psi1 * Psi2", mono, sequence(conv.psi), i)
        shuffled = random.Random(seed * 1000 + i)
        again = [ind.sum_moments(*pairs, "cmonotone", n, shuffled) for n in range(1, degree + 1)]
        rec.equal("reduction order does not matter", again, axioms, i)
    return rec.result()


def cmonotone_tables(seed=0, degree=4, cases=1, letters=1):
    rec = _Recorder("cmonotone-tables")
    for n in range(1, 5):
        rec.equal(f"beta(a^{n}) in terms of P and rho'", ex.cmonotone_expansion(n, "boolean"),
                  reference.BOOLEAN_TABLE[n])
        rec.equal(f"Phi(a^{n}) in terms of P and rho'", ex.cmonotone_expansion(n, "moment"),
                  reference.MOMENT_TABLE[n])
    return rec.result()


def ts_expansion(seed, degree=5, cases=3, letters=1):
    rec, rng = _Recorder("ts-expansion"), random.Random(seed)
    report = ex.ts_report(reference.TS_TABLE, 4)
    for n, entry in report["orders"].items():
        rec.holds(f"engine series reduces to rho_s at t = s (order {n})", entry["engine_diagonal_ok"])
    expansion = report["expansion"]
    for i in range(cases):
        phi = random_character(rng, degree, letters)
        t, s = random_rationals(rng, 2)
        rec.equal("truncated series reproduces t-monotone cumulants on words of length <= 5",
                  ex.evaluate_expansion(expansion, cu.t_monotone(phi, s).values, t, s),
                  cu.t_monotone(phi, t).values, f"{i} (t={t}, s={s})")
    return rec.result()


def combinatorial_counts(seed=0, degree=10, cases=1, letters=1):
    rec = _Recorder("counts")
    for n in range(1, min(degree, 10) + 1):
        catalan = math.comb(2 * n, n) // (n + 1)
        rec.equal("|NC(n)| = Catalan", len(comb.enumerate_partitions(n, "nc")), catalan, n)
        rec.equal("|NCirr(n)| = previous Catalan", len(comb.enumerate_partitions(n, "nc_irr")),
                  math.comb(2 * n - 2, n - 1) // n, n)
        if n <= 8:
            rec.equal("|NC(n)| = brute-force filter", len(comb.nc_by_filter(n)), catalan, n)
            total = sum(comb.monotone_count(p) for p in comb.enumerate_partitions(n, "nc"))
            rec.equal("sum of m(pi) = |M(n)|", total, len(comb.enumerate_partitions(n, "monotone")), n)
    return rec.result()


SUITES: dict[str, Callable] = {
    "shuffle-axioms": shuffle_axioms,
    "triple": triple,
    "adjoint": adjoint_suite,
    "pre-lie": pre_lie_suite,
    "cumulant-oracles": cumulant_oracles,
    "omega": omega_suite,
    "cfree-def": cfree_def,
    "cmonotone-def": cmonotone_def,
    "relation": relation,
    "cmonotone-assoc": cmonotone_assoc,
    "power-additivity": power_additivity,
    "orthogonal-decomposition": orthogonal_decomposition,
    "subordination": subordination,
    "cmonotone-collapses": cmonotone_collapses,
    "cfree-convolution": cfree_convolution,
    "bch": bch,
    "additive": additive,
    "t-boolean": t_boolean,
    "ts-boolean-shift": ts_boolean_shift,
    "t-monotone": t_monotone,
    "belinschi-nica": belinschi_nica,
    "independence-axioms": independence_axioms,
    "cmonotone-tables": cmonotone_tables,
    "ts-expansion": ts_expansion,
    "counts": combinatorial_counts,
}

# light defaults for `verify --suite all`; individual suites keep their own
QUICK_CASES = 5


def run_suite(name: str, seed: int = 0, degree: int | None = None, cases: int | None = None,
              letters: int = 1) -> list[Check]:
    if name == "all":
        out = []
        for n in SUITES:
            out.extend(run_suite(n, seed, degree, cases if cases is not None else QUICK_CASES, letters))
        return out
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; available: {', '.join(list(SUITES) + ['all'])}") from None
    kwargs = {"letters": letters}
    if degree is not None:
        kwargs["degree"] = degree
    if cases is not None:
        kwargs["cases"] = cases
    return fn(seed, **kwargs)


def timed(name: str, **kw) -> tuple[list[Check], float]:
    start = time.perf_counter()
    res = run_suite(name, **kw)
    return res, time.perf_counter() - start
