import random
from fractions import Fraction

import pytest

from ncshuffle import expansions as ex
from ncshuffle import polyfit, reference
from ncshuffle.cumulants import t_monotone
from ncshuffle.sampling import random_character


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cmonotone_tables(n):
    assert ex.cmonotone_expansion(n, "boolean") == reference.BOOLEAN_TABLE[n]
    assert ex.cmonotone_expansion(n, "moment") == reference.MOMENT_TABLE[n]


def test_graft_counts():
    # grafting a leaf onto a cherry: once at the root, twice onto the equal children
    out = ex.graft(((), ()), ())
    assert out.count(((), (), ())) == 1 and out.count(((), ((),))) == 2


def test_pre_lie_identity_on_trees():
    a, b, c = {ex.LEAF: 1}, {((),): 1}, {((), ()): 1}
    pl = lambda x, y: ex._pl(x, y, 10)
    lhs = ex._lin((1, pl(pl(a, b), c)), (-1, pl(a, pl(b, c))))
    rhs = ex._lin((1, pl(pl(a, c), b)), (-1, pl(a, pl(c, b))))
    assert lhs == rhs


def test_ts_expansion_low_orders():
    exp = ex.ts_expansion(4)
    assert exp[1] == [(ex.X, {(0, 0): 1})]
    assert exp[2] == [(ex.XX, {(1, 0): Fraction(-1, 2), (0, 1): Fraction(1, 2)})]


def test_ts_expansion_reduces_on_diagonal():
    coeffs = ex.ts_tree_coefficients(4)
    for n in range(1, 5):
        assert ex._diagonal_ok({t: p for t, p in coeffs.items() if ex.tree_size(t) == n}, n)


def test_ts_expansion_at_t_zero_is_w_series():
    # rho_0 = beta = W_{s x}(x): s^2/6 sits on (x<|x)<|x
    terms = dict(ex.ts_expansion(3)[3])
    assert polyfit.evaluate(terms[(ex.XX, ex.X)], (0, 1)) == Fraction(1, 6)
    assert polyfit.evaluate(terms[(ex.X, ex.XX)], (0, 1)) == 0


@pytest.mark.parametrize("t,s", [(Fraction(1, 2), Fraction(1, 3)), (2, -1), (0, 1)])
def test_ts_expansion_numerically(t, s):
    phi = random_character(random.Random(5), 5)
    expansion = ex.ts_expansion(4)
    got = ex.evaluate_expansion(expansion, t_monotone(phi, s).values, t, s)
    assert got == t_monotone(phi, t).values


def test_report_against_reference_table():
    rep = ex.ts_report(reference.TS_TABLE, 4)["orders"]
    assert rep[1]["reference_agrees"] and rep[2]["reference_agrees"]
    # the reference orders 3 and 4 do not reduce to rho_s at t = s; the engine's do
    for n in (3, 4):
        assert rep[n]["engine_diagonal_ok"]
        assert not rep[n]["reference_diagonal_ok"]
        assert not rep[n]["reference_agrees"]
