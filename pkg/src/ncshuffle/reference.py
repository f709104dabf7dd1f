"""Reference coefficient tables the engine is compared against.

Polynomials use the exponent-dict convention of ``polyfit``. Variables for the
c-monotone tables are P1..Pn, r1..r_{n-1} (see ``expansions.cmonotone_variables``).
"""
from __future__ import annotations

from fractions import Fraction as Q

from .expansions import X, XX


def _mono(n: int, **powers) -> tuple:
    """Exponent tuple over P1..Pn, r1..r_{n-1} from keywords like P2=1, r1=2."""
    names = [f"P{j}" for j in range(1, n + 1)] + [f"r{j}" for j in range(1, n)]
    return tuple(powers.get(name, 0) for name in names)


# beta(a^n) = W_{rho'}(P)(a^n)
BOOLEAN_TABLE = {
    1: {_mono(1, P1=1): Q(1)},
    2: {_mono(2, P2=1): Q(1)},
    3: {_mono(3, P3=1): Q(1), _mono(3, P2=1, r1=1): Q(1, 2)},
    4: {_mono(4, P4=1): Q(1), _mono(4, P3=1, r1=1): Q(1), _mono(4, P2=1, r2=1): Q(1, 2),
        _mono(4, P2=1, r1=2): Q(1, 3)},
}

# Phi(a^n) = E_>(beta)(a^n)
MOMENT_TABLE = {
    1: {_mono(1, P1=1): Q(1)},
    2: {_mono(2, P2=1): Q(1), _mono(2, P1=2): Q(1)},
    3: {_mono(3, P3=1): Q(1), _mono(3, P2=1, P1=1): Q(2), _mono(3, P2=1, r1=1): Q(1, 2),
        _mono(3, P1=3): Q(1)},
    4: {_mono(4, P4=1): Q(1), _mono(4, P2=2): Q(1), _mono(4, P3=1, P1=1): Q(2),
        _mono(4, P3=1, r1=1): Q(1), _mono(4, P2=1, P1=2): Q(3), _mono(4, P2=1, r1=2): Q(1, 3),
        _mono(4, P2=1, r2=1): Q(1, 2), _mono(4, P2=1, P1=1, r1=1): Q(1), _mono(4, P1=4): Q(1)},
}


def _ts(*terms) -> dict:
    """Polynomial in (t, s) from (coefficient, t-power, s-power) triples."""
    return {(i, j): Q(c) for c, i, j in terms}


# (t, s) expansion of rho_t in x = rho_s, reference values for orders 1-4
TS_TABLE = [
    (X, _ts((1, 0, 0))),
    (XX, _ts((Q(-1, 2), 1, 0), (Q(1, 2), 0, 1))),
    ((XX, X), _ts((Q(1, 12), 2, 0), (Q(-1, 4), 1, 1))),
    ((X, XX), _ts((Q(1, 4), 2, 0), (Q(-1, 4), 1, 1), (Q(1, 6), 0, 2))),
    ((X, (XX, X)), _ts((Q(-1, 24), 3, 0), (Q(1, 8), 2, 1))),
    ((X, (X, XX)), _ts((Q(-1, 8), 3, 0), (Q(1, 8), 2, 1), (Q(-1, 12), 1, 2), (Q(1, 24), 0, 3))),
    ((XX, XX), _ts((Q(-1, 24), 3, 0), (Q(1, 6), 2, 1), (Q(-1, 8), 1, 2))),
    (((X, XX), X), _ts((Q(-1, 24), 3, 0), (Q(1, 24), 2, 1), (Q(-1, 12), 1, 2))),
]
