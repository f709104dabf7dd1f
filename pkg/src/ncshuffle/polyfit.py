"""Exact polynomial recovery by tensor-grid interpolation over the rationals.

A polynomial is a dict mapping exponent tuples to Fractions.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Sequence

Poly = dict


def solve(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    """X with A X = B for square invertible A (exact Gauss-Jordan)."""
    n = len(a)
    m = [[Fraction(v) for v in a[i]] + [Fraction(v) for v in b[i]] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def _vandermonde_inverse(d: int) -> list[list[Fraction]]:
    """Inverse of V[i][j] = i**j on the nodes 0..d."""
    n = d + 1
    return solve([[Fraction(i) ** j for j in range(n)] for i in range(n)],
                 [[int(i == r) for r in range(n)] for i in range(n)])


def fit_polynomial(f: Callable[..., Fraction], degrees: Sequence[int]) -> Poly:
    """Coefficients of f, assuming deg_{x_i} f <= degrees[i].

    f is sampled on the grid prod {0..degrees[i]}; exact when the bound holds.
    """
    degrees = list(degrees)
    grid = {pt: Fraction(f(*pt)) for pt in itertools.product(*(range(d + 1) for d in degrees))}
    for axis, d in enumerate(degrees):
        inv = _vandermonde_inverse(d)
        new = {}
        for pt in grid:
            if pt[axis] != 0:
                continue
            column = [grid[pt[:axis] + (i,) + pt[axis + 1:]] for i in range(d + 1)]
            for j in range(d + 1):
                new[pt[:axis] + (j,) + pt[axis + 1:]] = sum(
                    (inv[j][i] * column[i] for i in range(d + 1)), Fraction(0))
        grid = new
    return {e: c for e, c in grid.items() if c}


def evaluate(p: Poly, point: Sequence) -> Fraction:
    total = Fraction(0)
    for e, c in p.items():
        term = c
        for x, k in zip(point, e):
            term *= Fraction(x) ** k
        total += term
    return total


def add(p: Poly, q: Poly, scale=1) -> Poly:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, Fraction(0)) + scale * c
    return {e: c for e, c in out.items() if c}


def identify(p: Poly, i: int, j: int) -> Poly:
    """Substitute x_j := x_i (e.g. t = s)."""
    out: Poly = {}
    for e, c in p.items():
        e2 = list(e)
        e2[i] += e2[j]
        e2[j] = 0
        key = tuple(e2)
        out[key] = out.get(key, Fraction(0)) + c
    return {e: c for e, c in out.items() if c}


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(e: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(p: Poly, names: Sequence[str], order=None) -> str:
    if not p:
        return "0"
    keys = sorted(p, key=order or (lambda e: (-sum(e), tuple(-k for k in e))))
    out = []
    for e in keys:
        c = p[e]
        mono = format_monomial(e, names)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not mono:
            body = _frac_str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_frac_str(mag)}*{mono}"
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text
