"""Coefficient expansions computed by the engine and recovered by exact interpolation.

* c-monotone: Boolean cumulants and moments as polynomials in the univariate
  c-monotone cumulants P(a^j) and the monotone cumulants rho'(a^j) of the
  reference state.
* (t, s): the t-monotone cumulant form as a pre-Lie series in the s-monotone
  one, rho_t = Omega_{t rho_t}(W_{s rho_s}(rho_s)), computed in the free right
  pre-Lie algebra on rooted trees (grafting) up to a fixed number of vertices.
"""
from __future__ import annotations

import math
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import polyfit
from .shuffle import Functional, bernoulli, exp_map, pre_lie, univariate, w_operator


# -- c-monotone coefficients ---------------------------------------------------------------

def cmonotone_variables(n: int) -> list[str]:
    return [f"P{j}" for j in range(1, n + 1)] + [f"r{j}" for j in range(1, n)]


def cmonotone_expansion(n: int, target: str = "boolean") -> polyfit.Poly:
    """beta(a^n) = W_{rho'}(P)(a^n) (target 'boolean') or Phi(a^n) = E_>(beta)(a^n)
    (target 'moment') as a polynomial in P1..Pn, r1..r_{n-1} (r_j = rho'(a^j))."""
    if target not in ("boolean", "moment"):
        raise ValueError("target must be 'boolean' or 'moment'")

    def value(*xs):
        ps, rs = list(xs[:n]), list(xs[n:]) + [0]
        P = univariate("infchar", ps)
        rho = univariate("infchar", rs)
        beta = w_operator(rho, P)
        f = beta if target == "boolean" else exp_map("right", beta)
        return f.word((0,) * n)

    # weighted homogeneity: a variable of weight j appears at most n // j times
    degrees = [n // j for j in range(1, n + 1)] + [n // j for j in range(1, n)]
    if target == "boolean":
        degrees = [1] * n + degrees[n:]
    return polyfit.fit_polynomial(value, degrees)


# -- rooted trees ------------------------------------------------------------------------------

LEAF: tuple = ()


def tree_size(t) -> int:
    return 1 + sum(tree_size(c) for c in t)


@lru_cache(maxsize=None)
def graft(x: tuple, y: tuple) -> tuple[tuple, ...]:
    """All trees obtained by attaching the root of y below one vertex of x (with multiplicity)."""
    out = [tuple(sorted(x + (y,)))]
    for i, child in enumerate(x):
        if i and x[i - 1] == child:
            continue  # equal siblings handled together below
        mult = x.count(child)
        rest = x[:i] + x[i + 1:]
        for g in graft(child, y):
            out.extend([tuple(sorted(rest + (g,)))] * mult)
    return tuple(out)


def tree_str(t) -> str:
    """Bracket notation: a vertex followed by its children in brackets, e.g. o[o,o[o]]."""
    if not t:
        return "o"
    return "o[" + ",".join(tree_str(c) for c in t) + "]"


def _pl(X: dict, Y: dict, order: int) -> dict:
    out = defaultdict(Fraction)
    for x, a in X.items():
        for y, b in Y.items():
            if tree_size(x) + tree_size(y) > order:
                continue
            for g in graft(x, y):
                out[g] += a * b
    return {k: v for k, v in out.items() if v}


def _lin(*terms) -> dict:
    out = defaultdict(Fraction)
    for c, X in terms:
        for k, v in X.items():
            out[k] += c * v
    return {k: v for k, v in out.items() if v}


def _series(gamma: dict, alpha: dict, coeff, order: int) -> dict:
    total, term = {}, alpha
    for n in range(order):
        if not term:
            break
        total = _lin((1, total), (coeff(n), term))
        term = _pl(term, gamma, order)
    return total


def _w(gamma, alpha, order):
    return _series(gamma, alpha, lambda n: Fraction(1, math.factorial(n + 1)), order)


def _omega(gamma, alpha, order):
    return _series(gamma, alpha, lambda n: bernoulli(n) / math.factorial(n), order)


def ts_series_at(t, s, order: int = 4) -> dict:
    """Tree expansion of rho_t in terms of x = rho_s for numeric t, s."""
    t, s = Fraction(t), Fraction(s)
    x = {LEAF: Fraction(1)}
    beta = _w(_lin((s, x)), x, order)
    y = x
    for _ in range(order + 1):
        nxt = _omega(_lin((t, y)), beta, order)
        if nxt == y:
            break
        y = nxt
    return y


# -- pre-Lie monomials -------------------------------------------------------------------------
# A monomial is "x" or a pair (u, v) standing for u <| v.

X = "x"


def monomial_degree(m) -> int:
    return 1 if m == X else monomial_degree(m[0]) + monomial_degree(m[1])


def monomial_str(m) -> str:
    if m == X:
        return "x"
    u, v = m
    left = monomial_str(u) if u == X else f"({monomial_str(u)})"
    right = monomial_str(v) if v == X else f"({monomial_str(v)})"
    return f"{left}<|{right}"


def tree_expand(m) -> dict:
    if m == X:
        return {LEAF: Fraction(1)}
    return _pl(tree_expand(m[0]), tree_expand(m[1]), monomial_degree(m))


def monomial_eval(m, x: Functional) -> Functional:
    if m == X:
        return x
    return pre_lie(monomial_eval(m[0], x), monomial_eval(m[1], x))


XX = (X, X)
BASIS = {
    1: [X],
    2: [XX],
    3: [(XX, X), (X, XX)],
    4: [((XX, X), X), (X, (XX, X)), (X, (X, XX)), (XX, XX)],
}


def trees_of_order(n: int) -> list:
    found = set()
    for m in BASIS[n]:
        found.update(tree_expand(m))
    return sorted(found)


def to_basis(tree_coeffs: dict, order: int) -> list[polyfit.Poly]:
    """Rewrite a tree-indexed combination (coefficients are polynomials) of a
    single order in the monomial basis of that order."""
    basis = BASIS[order]
    trees = trees_of_order(order)
    if len(trees) != len(basis):
        raise ValueError(f"basis of order {order} does not span the trees")
    # columns = monomials expressed in trees; solve A c = b for each polynomial term
    a = [[tree_expand(m).get(tr, Fraction(0)) for m in basis] for tr in trees]
    inv = polyfit.solve(a, [[int(i == j) for j in range(len(trees))] for i in range(len(trees))])
    out = []
    for bi in range(len(basis)):
        poly: polyfit.Poly = {}
        for ti, tr in enumerate(trees):
            if inv[bi][ti]:
                poly = polyfit.add(poly, tree_coeffs.get(tr, {}), inv[bi][ti])
        out.append(poly)
    return out


def from_monomials(terms: Sequence[tuple], order: int) -> dict:
    """Tree coefficients (polynomials) of a combination [(monomial, poly), ...]."""
    out: dict = defaultdict(dict)
    for m, poly in terms:
        if monomial_degree(m) != order:
            continue
        for tr, c in tree_expand(m).items():
            out[tr] = polyfit.add(out[tr], poly, c)
    return {tr: p for tr, p in out.items() if p}


def ts_tree_coefficients(order: int = 4) -> dict:
    """tree -> polynomial in (t, s): exact coefficients of the (t, s) expansion."""
    cache = {}

    def sample(t, s):
        if (t, s) not in cache:
            cache[(t, s)] = ts_series_at(t, s, order)
        return cache[(t, s)]

    trees = [tr for n in range(1, order + 1) for tr in trees_of_order(n)]
    out = {}
    for tr in trees:
        d = tree_size(tr) - 1
        poly = polyfit.fit_polynomial(lambda t, s: sample(t, s).get(tr, Fraction(0)), [d, d])
        if poly:
            out[tr] = poly
    return out


def ts_expansion(order: int = 4) -> dict[int, list[tuple]]:
    """order -> [(monomial, polynomial in (t, s))] in the fixed monomial basis."""
    coeffs = ts_tree_coefficients(order)
    out = {}
    for n in range(1, order + 1):
        sub = {tr: p for tr, p in coeffs.items() if tree_size(tr) == n}
        out[n] = list(zip(BASIS[n], to_basis(sub, n)))
    return out


def evaluate_expansion(expansion: dict[int, list[tuple]], x: Functional, t, s) -> Functional:
    """Sum of poly(t, s) * monomial(x) over the expansion."""
    total = x * 0
    for terms in expansion.values():
        for m, poly in terms:
            c = polyfit.evaluate(poly, (t, s))
            if c:
                total = total + monomial_eval(m, x) * c
    return total


def vanishes_on_diagonal(terms: Sequence[tuple]) -> bool:
    """True when every coefficient becomes zero after substituting t = s."""
    return all(not polyfit.identify(p, 0, 1) for _, p in terms)


def tree_diagonal_defect(tree_coeffs: dict, order: int) -> dict:
    """Trees of the given order whose coefficient survives t = s."""
    return {tr: polyfit.identify(p, 0, 1) for tr, p in tree_coeffs.items()
            if tree_size(tr) == order and polyfit.identify(p, 0, 1)}


def _diagonal_ok(tree_coeffs: dict, n: int) -> bool:
    """At t = s the series must reduce to x: order 1 is exactly x, higher orders vanish."""
    diag = {tr: polyfit.identify(p, 0, 1) for tr, p in tree_coeffs.items()}
    if n == 1:
        return diag == {LEAF: {(0, 0): Fraction(1)}}
    return not any(diag.values())


def ts_report(reference: Sequence[tuple] | None = None, order: int = 4) -> dict:
    """Engine expansion per order, its t = s check and, if given, a tree-by-tree
    comparison with a reference table [(monomial, polynomial in (t, s)), ...]."""
    engine = ts_tree_coefficients(order)
    expansion = ts_expansion(order)
    names = ("t", "s")
    orders = {}
    for n in range(1, order + 1):
        eng = {tr: p for tr, p in engine.items() if tree_size(tr) == n}
        entry = {
            "engine": [(monomial_str(m), polyfit.format_poly(p, names)) for m, p in expansion[n]],
            "engine_trees": {tree_str(tr): polyfit.format_poly(p, names) for tr, p in sorted(eng.items())},
            "engine_diagonal_ok": _diagonal_ok(eng, n),
        }
        if reference is not None:
            ref = from_monomials(reference, n)
            diffs = {}
            for tr in sorted(set(eng) | set(ref)):
                a, b = eng.get(tr, {}), ref.get(tr, {})
                if a != b:
                    diffs[tree_str(tr)] = {"engine": polyfit.format_poly(a, names),
                                           "reference": polyfit.format_poly(b, names)}
            entry["reference_agrees"] = not diffs
            entry["differences"] = diffs
            entry["reference_diagonal_ok"] = _diagonal_ok(ref, n)
        orders[n] = entry
    return {"order": order, "orders": orders, "expansion": expansion}
