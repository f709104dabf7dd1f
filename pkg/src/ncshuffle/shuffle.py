"""Degree-truncated linear forms on the double tensor Hopf algebra T(T+(A)).

A word is a tuple of letter indices; a bar-monomial is a tuple of words, the
empty tuple being the unit. All arithmetic is exact (``fractions.Fraction``)
and every operation is exact modulo degree > N: coproducts, products and
exponentials never lower the degree.

Characters and infinitesimal characters store only their word values; values
on bar-monomials are derived (products, resp. zero). General functionals store
a full table.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

Word = tuple[int, ...]
Mono = tuple[Word, ...]
UNIT: Mono = ()
ZERO = Fraction(0)
ONE = Fraction(1)

KINDS = ("general", "character", "infchar")


class MismatchError(ValueError):
    """Functionals live on different alphabets or truncations."""


class KindError(TypeError):
    """An operation received the wrong kind of functional."""


class TruncationError(ValueError):
    pass


def degree(x: Mono) -> int:
    return sum(len(w) for w in x)


def mono_key(x: Mono):
    return (degree(x), x)


# -- coproduct ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _word_splits(n: int) -> tuple[tuple[tuple[int, ...], tuple[tuple[int, ...], ...], bool], ...]:
    """For each subset S of positions 0..n-1: (S, connected components of the complement, 0 in S)."""
    out = []
    for mask in range(1 << n):
        s = tuple(i for i in range(n) if mask >> i & 1)
        comps, run = [], []
        for i in range(n):
            if mask >> i & 1:
                if run:
                    comps.append(tuple(run))
                    run = []
            else:
                run.append(i)
        if run:
            comps.append(tuple(run))
        out.append((s, tuple(comps), bool(mask & 1)))
    return tuple(out)


@lru_cache(maxsize=None)
def _word_terms(w: Word):
    terms = []
    for s, comps, first in _word_splits(len(w)):
        left = tuple(w[i] for i in s)
        right = tuple(tuple(w[i] for i in c) for c in comps)
        terms.append((left, right, first))
    return tuple(terms)


@lru_cache(maxsize=None)
def coproduct(x: Mono) -> tuple[tuple[Mono, Mono, str | None], ...]:
    """All terms of Delta(x) as (left, right, side), side in {'L', 'R'}.

    'L' marks the terms of the left half coproduct: on a word, the subsets
    containing the first letter; on w1|...|wr, Delta_<(w1) Delta(w2|...|wr).
    The unit carries side None: both half coproducts vanish on it.
    """
    if not x:
        return ((UNIT, UNIT, None),)
    out = []
    for combo in itertools.product(*(_word_terms(w) for w in x)):
        left = tuple(l for l, _, _ in combo if l)
        right = tuple(r for _, rs, _ in combo for r in rs)
        out.append((left, right, "L" if combo[0][2] else "R"))
    return tuple(out)


def coproduct_terms(x: Mono, part: str = "full", truncation: int | None = None) -> list[tuple[Mono, Mono]]:
    """Delta, Delta_< or Delta_> of a bar-monomial as an explicit list (multiplicities kept)."""
    if truncation is not None and degree(x) > truncation:
        raise TruncationError(f"degree {degree(x)} exceeds truncation {truncation}")
    if part not in ("full", "left", "right"):
        raise ValueError(f"unknown coproduct part {part!r}")
    want = {"full": ("L", "R", None), "left": ("L",), "right": ("R",)}[part]
    return [(l, r) for l, r, side in coproduct(x) if side in want]


# -- bases ------------------------------------------------------------------

def _compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def words_of_length(k: int, n: int) -> tuple[Word, ...]:
    return tuple(itertools.product(range(k), repeat=n))


@lru_cache(maxsize=None)
def all_words(k: int, N: int) -> tuple[Word, ...]:
    """Words of length 1..N, by length then lexicographically."""
    return tuple(w for n in range(1, N + 1) for w in words_of_length(k, n))


@lru_cache(maxsize=None)
def monomials_of_degree(k: int, n: int) -> tuple[Mono, ...]:
    out = []
    for comp in _compositions(n):
        out.extend(itertools.product(*(words_of_length(k, c) for c in comp)))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def all_monomials(k: int, N: int) -> tuple[Mono, ...]:
    """Unit first, then by degree, then lexicographically."""
    return tuple(x for n in range(N + 1) for x in monomials_of_degree(k, n))


# -- tables -----------------------------------------------------------------

class _Table(dict):
    """Value table; absent monomials are zero."""

    def __missing__(self, key):
        return ZERO


class _WordTable(dict):
    """Table known only on the unit and single words; asking for more is a bug."""

    def __missing__(self, key):
        if len(key) <= 1:
            return ZERO
        raise KeyError(f"intermediate only evaluated on words, asked for {key}")


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, str):
        return Fraction(v)
    return Fraction(v)


class Functional:
    """Linear form on T(T+(A)) modulo degree > N.

    ``kind`` is 'character' (unital, multiplicative across bars), 'infchar'
    (zero on the unit and on every monomial with two or more bars) or
    'general'. Characters and infchars keep ``words``; general ones keep a
    full ``table``. Instances are treated as immutable values.
    """

    def __init__(self, alphabet: Sequence[str], truncation: int, kind: str,
                 values: Mapping):
        if kind not in KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        if truncation < 1:
            raise ValueError("truncation must be >= 1")
        self.alphabet = tuple(alphabet)
        self.truncation = int(truncation)
        self.kind = kind
        data = {}
        for x, v in values.items():
            v = _frac(v)
            if kind == "general":
                if degree(x) > truncation:
                    raise TruncationError(f"{x} beyond truncation {truncation}")
            elif len(x) == 0 or len(x) > truncation:
                raise ValueError(f"{kind} stores words of length 1..N, got {x}")
            if v or kind == "character":
                data[x] = v
        self._data = data
        self._table = None

    # values
    @property
    def k(self) -> int:
        return len(self.alphabet)

    @property
    def words(self) -> dict[Word, Fraction]:
        if self.kind == "general":
            return {x[0]: v for x, v in self._data.items() if len(x) == 1}
        return dict(self._data)

    @property
    def table(self) -> _Table:
        if self._table is None:
            if self.kind == "general":
                t = _Table(self._data)
            elif self.kind == "infchar":
                t = _Table({(w,): v for w, v in self._data.items()})
            else:
                d = self._data
                t = _Table()
                for x in all_monomials(self.k, self.truncation):
                    v = ONE
                    for w in x:
                        v *= d.get(w, ZERO)
                        if not v:
                            break
                    if v:
                        t[x] = v
            self._table = t
        return self._table

    def __call__(self, x) -> Fraction:
        if isinstance(x, str):
            x = parse_monomial(x, self.alphabet)
        elif x and isinstance(x[0], int):
            x = (tuple(x),)
        if degree(x) > self.truncation:
            raise TruncationError(f"degree {degree(x)} beyond truncation {self.truncation}")
        return self.table[x]

    def word(self, w) -> Fraction:
        if isinstance(w, str):
            w = parse_word(w, self.alphabet)
        return self((tuple(w),))

    def full_table(self) -> dict[Mono, Fraction]:
        return {x: v for x, v in self.table.items() if v}

    # linear structure
    def _check(self, other: "Functional"):
        if not isinstance(other, Functional):
            raise TypeError(f"expected Functional, got {type(other).__name__}")
        if self.alphabet != other.alphabet or self.truncation != other.truncation:
            raise MismatchError(
                f"alphabet/truncation mismatch: {self.alphabet}/{self.truncation} "
                f"vs {other.alphabet}/{other.truncation}")

    def _linear(self, other: "Functional", sign: int) -> "Functional":
        self._check(other)
        if self.kind == other.kind == "infchar":
            out = dict(self._data)
            for w, v in other._data.items():
                out[w] = out.get(w, ZERO) + sign * v
            return Functional(self.alphabet, self.truncation, "infchar", out)
        out = dict(self.table)
        for x, v in other.table.items():
            out[x] = out.get(x, ZERO) + sign * v
        return Functional(self.alphabet, self.truncation, "general", out)

    def __add__(self, other):
        return self._linear(other, 1)

    def __sub__(self, other):
        return self._linear(other, -1)

    def __neg__(self):
        return self * -1

    def __mul__(self, c):
        c = _frac(c)
        if self.kind == "infchar":
            return Functional(self.alphabet, self.truncation, "infchar",
                              {w: c * v for w, v in self._data.items()})
        return Functional(self.alphabet, self.truncation, "general",
                          {x: c * v for x, v in self.table.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Functional):
            return NotImplemented
        if self.alphabet != other.alphabet or self.truncation != other.truncation:
            return False
        if self.kind == other.kind and self.kind != "general":
            if self.kind == "infchar":
                return self._data == other._data
            return all(self._data.get(w, ZERO) == other._data.get(w, ZERO)
                       for w in all_words(self.k, self.truncation))
        return self.full_table() == other.full_table()

    __hash__ = None

    def first_difference(self, other: "Functional") -> Mono | None:
        """First monomial (canonical order) on which the two forms differ."""
        self._check(other)
        a, b = self.table, other.table
        for x in all_monomials(self.k, self.truncation):
            if a[x] != b[x]:
                return x
        return None

    def is_zero(self) -> bool:
        return not any(self.table.values())

    def __repr__(self):
        shown = sorted(self.words.items(), key=lambda kv: (len(kv[0]), kv[0]))[:6]
        body = ", ".join(f"{format_word(w, self.alphabet)}: {v}" for w, v in shown)
        return f"Functional({self.kind}, N={self.truncation}, {{{body}{', ...' if len(self.words) > 6 else ''}}})"

    def is_character(self) -> bool:
        """Check the character axioms on the full table (not just trust the tag)."""
        t = self.table
        if t[UNIT] != 1:
            return False
        for x in all_monomials(self.k, self.truncation):
            if len(x) >= 2 and t[x] != math.prod((t[(w,)] for w in x), start=ONE):
                return False
        return True

    def is_infchar(self) -> bool:
        t = self.table
        return t[UNIT] == 0 and all(not v for x, v in t.items() if len(x) >= 2)


# -- constructors -----------------------------------------------------------

def parse_word(s: str, alphabet: Sequence[str]) -> Word:
    index = {a: i for i, a in enumerate(alphabet)}
    try:
        return tuple(index[c] for c in s)
    except KeyError as e:
        raise ValueError(f"letter {e} not in alphabet {list(alphabet)}") from None


def parse_monomial(s: str, alphabet: Sequence[str]) -> Mono:
    if s in ("", "1"):
        return UNIT
    return tuple(parse_word(part, alphabet) for part in s.split("|"))


def format_word(w: Word, alphabet: Sequence[str]) -> str:
    return "".join(alphabet[i] for i in w)


def format_monomial(x: Mono, alphabet: Sequence[str]) -> str:
    return "|".join(format_word(w, alphabet) for w in x)


def counit(alphabet: Sequence[str], N: int) -> Functional:
    """epsilon: the character that is 1 on the unit and 0 on every word."""
    return Functional(alphabet, N, "character", {w: ZERO for w in all_words(len(alphabet), N)})


def zero_infchar(alphabet: Sequence[str], N: int) -> Functional:
    return Functional(alphabet, N, "infchar", {})


def lift(kind: str, word_values: Mapping, alphabet: Sequence[str], N: int) -> Functional:
    """Extend word values to a character (multiplicative) or infchar (zero off words).

    Keys may be letter strings ("ab") or index tuples. Every word of length
    <= N must be given.
    """
    if kind not in ("character", "infchar"):
        raise KindError(f"lift builds characters or infchars, not {kind!r}")
    vals = {}
    for key, v in word_values.items():
        w = parse_word(key, alphabet) if isinstance(key, str) else tuple(key)
        if not 1 <= len(w) <= N:
            continue
        vals[w] = _frac(v)
    missing = [w for w in all_words(len(alphabet), N) if w not in vals]
    if missing:
        raise ValueError(f"missing word value for {format_word(missing[0], alphabet)!r} "
                         f"(truncation {N})")
    return Functional(alphabet, N, kind, vals)


def univariate(kind: str, values: Sequence, letter: str = "a") -> Functional:
    """Single-letter form from a sequence (values[n-1] on a^n)."""
    N = len(values)
    return lift(kind, {(0,) * n: values[n - 1] for n in range(1, N + 1)}, (letter,), N)


def moments_character(moments: Sequence, letter: str = "a") -> Functional:
    return univariate("character", moments, letter)


def sequence(f: Functional, letter: int = 0) -> list[Fraction]:
    """Values on a, aa, aaa, ... for the given letter."""
    return [f.table[((letter,) * n,)] for n in range(1, f.truncation + 1)]


# -- products -----------------------------------------------------------------

_PART_SIDES = {"full": ("L", "R"), "left": ("L",), "right": ("R",)}


def _product(fget: Callable, gget: Callable, part: str, targets: Iterable[Mono]) -> dict:
    sides = _PART_SIDES[part]
    out = {}
    for x in targets:
        acc = ZERO
        for left, right, side in coproduct(x):
            if side is None:
                if part == "full":
                    acc += fget(left) * gget(right)
                continue
            if side not in sides:
                continue
            a = fget(left)
            if a:
                b = gget(right)
                if b:
                    acc += a * b
        if acc:
            out[x] = acc
    return out


def _word_targets(f: Functional, min_len: int = 1) -> list[Mono]:
    return [(w,) for w in all_words(f.k, f.truncation) if len(w) >= min_len]


def _words_view(words: Mapping[Mono, Fraction], unit_value=ZERO) -> _WordTable:
    t = _WordTable(words)
    if unit_value:
        t[UNIT] = unit_value
    return t


def _to_words(d: Mapping[Mono, Fraction]) -> dict[Word, Fraction]:
    return {x[0]: v for x, v in d.items()}


def convolve(f: Functional, g: Functional) -> Functional:
    """(f*g)(x) = sum f(x1) g(x2) over Delta(x)."""
    f._check(g)
    if f.kind == g.kind == "character":
        vals = _product(f.table.__getitem__, g.table.__getitem__, "full", _word_targets(f))
        return _character_from_words(f, _to_words(vals))
    vals = _product(f.table.__getitem__, g.table.__getitem__, "full",
                    all_monomials(f.k, f.truncation))
    return Functional(f.alphabet, f.truncation, "general", vals)


def half_shuffle(f: Functional, g: Functional, side: str) -> Functional:
    """f < g (side='left') or f > g (side='right'); both vanish on the unit."""
    f._check(g)
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    vals = _product(f.table.__getitem__, g.table.__getitem__, side,
                    all_monomials(f.k, f.truncation))
    return Functional(f.alphabet, f.truncation, "general", vals)


def _character_from_words(like: Functional, words: Mapping[Word, Fraction]) -> Functional:
    full = {w: words.get(w, ZERO) for w in all_words(like.k, like.truncation)}
    return Functional(like.alphabet, like.truncation, "character", full)


def _infchar_from_words(like: Functional, words: Mapping[Word, Fraction]) -> Functional:
    return Functional(like.alphabet, like.truncation, "infchar", words)


def _require(f: Functional, kind: str, what: str):
    if f.kind != kind:
        raise KindError(f"{what} expects a {kind}, got {f.kind}")


# -- inverses and exponentials --------------------------------------------------

def _char_value(words: Mapping[Word, Fraction], x: Mono) -> Fraction:
    v = ONE
    for w in x:
        v *= words[w]
        if not v:
            return ZERO
    return v


def conv_inverse(f: Functional) -> Functional:
    """Inverse for the convolution product.

    Characters are inverted degree by degree on words (the result is again a
    character); other unital forms by the terminating series sum (eps - f)^{*k}.
    """
    if f.table[UNIT] != 1:
        raise ValueError("convolution inverse needs f(1) = 1")
    if f.kind == "character":
        fw = f.table
        inv: dict[Word, Fraction] = {}
        for w in all_words(f.k, f.truncation):
            acc = ZERO
            for left, right, _ in coproduct((w,)):
                if left:
                    a = fw[left]
                    if a:
                        acc += a * _char_value(inv, right)
            inv[w] = -acc
        return _character_from_words(f, inv)
    return conv_inverse_series(f)


def conv_inverse_series(f: Functional) -> Functional:
    if f.table[UNIT] != 1:
        raise ValueError("convolution inverse needs f(1) = 1")
    eps = counit(f.alphabet, f.truncation)
    d = eps - f
    total = eps
    power = eps
    for _ in range(f.truncation):
        power = convolve(power, d)
        total = total + power
    return Functional(f.alphabet, f.truncation, "general", total.full_table())


def exp_map(mode: str, alpha: Functional) -> Functional:
    """exp* (mode 'star'), E_< ('left') or E_> ('right') of an infinitesimal character."""
    _require(alpha, "infchar", "exp_map")
    if mode == "star":
        return _exp_star(alpha)
    if mode == "left":
        return _exp_left(alpha)
    if mode == "right":
        return _exp_right(alpha)
    raise ValueError(f"unknown mode {mode!r}")


def _exp_star(alpha: Functional) -> Functional:
    at = alpha.table.__getitem__
    power = {(w,): v for w, v in alpha._data.items()}
    total = {w: v for w, v in alpha._data.items()}
    for n in range(2, alpha.truncation + 1):
        power = _product(_words_view(power).__getitem__, at, "full", _word_targets(alpha, n))
        if not power:
            break
        c = Fraction(1, math.factorial(n))
        for x, v in power.items():
            total[x[0]] = total.get(x[0], ZERO) + c * v
    return _character_from_words(alpha, total)


def _exp_left(kappa: Functional) -> Functional:
    # Phi = eps + kappa < Phi, solved for increasing word length
    kw = kappa._data
    phi: dict[Word, Fraction] = {}
    for w in all_words(kappa.k, kappa.truncation):
        acc = ZERO
        for left, right, side in coproduct((w,)):
            if side == "L":
                a = kw.get(left[0], ZERO)
                if a:
                    acc += a * _char_value(phi, right)
        phi[w] = acc
    return _character_from_words(kappa, phi)


def _exp_right(beta: Functional) -> Functional:
    # Phi = eps + Phi > beta
    bw = beta._data
    phi: dict[Word, Fraction] = {}
    for w in all_words(beta.k, beta.truncation):
        acc = ZERO
        for left, right, side in coproduct((w,)):
            if side == "R" and len(right) == 1:
                b = bw.get(right[0], ZERO)
                if b:
                    acc += (_char_value(phi, left)) * b
        phi[w] = acc
    return _character_from_words(beta, phi)


def _minus_counit(phi: Functional) -> _Table:
    t = _Table(phi.table)
    t.pop(UNIT, None)
    return t


def log_map(mode: str, phi: Functional) -> Functional:
    """log* ('star'), L_< ('left') or L_> ('right') of a character."""
    _require(phi, "character", "log_map")
    if mode == "star":
        return _log_star(phi)
    d = _minus_counit(phi)
    inv = conv_inverse(phi).table
    targets = _word_targets(phi)
    if mode == "left":
        vals = _product(_words_view({(w,): v for w, v in phi._data.items()}).__getitem__,
                        inv.__getitem__, "left", targets)
    elif mode == "right":
        vals = _product(inv.__getitem__, d.__getitem__, "right", targets)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return _infchar_from_words(phi, _to_words(vals))


def _log_star(phi: Functional) -> Functional:
    d = _minus_counit(phi)
    dget = d.__getitem__
    power = {(w,): v for w, v in phi._data.items() if v}
    total = {w: v for w, v in phi._data.items() if v}
    for n in range(2, phi.truncation + 1):
        power = _product(_words_view(power).__getitem__, dget, "full", _word_targets(phi, n))
        if not power:
            break
        c = Fraction((-1) ** (n - 1), n)
        for x, v in power.items():
            total[x[0]] = total.get(x[0], ZERO) + c * v
    return _infchar_from_words(phi, total)


# -- shuffle adjoint action --------------------------------------------------

def sandwich(left: Functional, alpha: Functional, right: Functional) -> Functional:
    """left > alpha < right, as an infinitesimal character (word values only).

    Meant for left/right characters and alpha infinitesimal, where the result
    is again infinitesimal.
    """
    _require(alpha, "infchar", "sandwich")
    left._check(alpha)
    alpha._check(right)
    targets = _word_targets(alpha)
    inner = _product(left.table.__getitem__, alpha.table.__getitem__, "right", targets)
    vals = _product(_words_view(inner).__getitem__, right.table.__getitem__, "left", targets)
    return _infchar_from_words(alpha, _to_words(vals))


def adjoint(phi: Functional, alpha: Functional) -> Functional:
    """theta_Phi(alpha) = Phi^{*-1} > alpha < Phi."""
    _require(phi, "character", "adjoint")
    return sandwich(conv_inverse(phi), alpha, phi)


# -- pre-Lie structure ----------------------------------------------------------

def pre_lie(alpha: Functional, gamma: Functional) -> Functional:
    """alpha <| gamma = alpha < gamma - gamma > alpha."""
    _require(alpha, "infchar", "pre_lie")
    _require(gamma, "infchar", "pre_lie")
    alpha._check(gamma)
    targets = _word_targets(alpha, 2)
    a, g = alpha.table.__getitem__, gamma.table.__getitem__
    lhs = _product(a, g, "left", targets)
    rhs = _product(g, a, "right", targets)
    out = {}
    for x in set(lhs) | set(rhs):
        v = lhs.get(x, ZERO) - rhs.get(x, ZERO)
        if v:
            out[x[0]] = v
    return _infchar_from_words(alpha, out)


def r_iter(alpha: Functional, gamma: Functional, n: int) -> Functional:
    """n-fold right iteration (...(alpha <| gamma) <| ...) <| gamma."""
    out = alpha
    for _ in range(n):
        if out.is_zero():
            break
        out = pre_lie(out, gamma)
    return out


def _operator_series(gamma: Functional, alpha: Functional, coeff: Callable[[int], Fraction]):
    _require(alpha, "infchar", "operator series")
    _require(gamma, "infchar", "operator series")
    total = zero_infchar(alpha.alphabet, alpha.truncation)
    term = alpha
    for n in range(alpha.truncation):
        if term.is_zero():
            break
        c = coeff(n)
        if c:
            total = total + term * c
        term = pre_lie(term, gamma)
    return total


def w_operator(gamma: Functional, alpha: Functional) -> Functional:
    """W_gamma(alpha) = sum_n r^{(n)}_{<|gamma}(alpha) / (n+1)!."""
    return _operator_series(gamma, alpha, lambda n: Fraction(1, math.factorial(n + 1)))


def omega_operator(gamma: Functional, alpha: Functional) -> Functional:
    """Omega_gamma(alpha) = sum_n B_n/n! r^{(n)}_{<|gamma}(alpha); inverse of W_gamma."""
    return _operator_series(gamma, alpha, lambda n: bernoulli(n) / math.factorial(n))


def exp_r(gamma: Functional, alpha: Functional) -> Functional:
    """e^{r_{<|gamma}}(alpha) = sum_n r^{(n)}_{<|gamma}(alpha) / n!."""
    return _operator_series(gamma, alpha, lambda n: Fraction(1, math.factorial(n)))


def magnus(alpha: Functional) -> Functional:
    """Pre-Lie Magnus expansion: the fixed point Omega = Omega_Omega(alpha).

    Each round fixes one more degree, so at most N rounds are needed.
    """
    current = alpha
    for _ in range(alpha.truncation + 1):
        nxt = omega_operator(current, alpha)
        if nxt == current:
            return nxt
        current = nxt
    return current


def magnus_inverse(alpha: Functional) -> Functional:
    """W(alpha) = W_alpha(alpha)."""
    return w_operator(alpha, alpha)


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli numbers with B_1 = -1/2 (generating function x/(e^x - 1))."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return ONE
    return -sum((math.comb(n + 1, k) * bernoulli(k) for k in range(n)), ZERO) / (n + 1)
