"""JSON forms for functionals, cumulant families, pair states and partitions.

Rationals are always strings "p/q"; nothing goes through floats.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .cumulants import CumulantFamily, PairState
from .shuffle import (Functional, all_monomials, all_words, format_monomial, format_word,
                      lift, parse_monomial, parse_word)


class SchemaError(ValueError):
    pass


def rational_str(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, bool) or isinstance(s, float):
        raise SchemaError(f"rationals must be strings or integers, got {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise SchemaError(f"rationals must be strings or integers, got {s!r}")
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError):
        raise SchemaError(f"not a rational: {s!r}") from None


def _check_alphabet(alphabet) -> tuple[str, ...]:
    if not isinstance(alphabet, list) or not alphabet:
        raise SchemaError("alphabet must be a non-empty list of letters")
    for a in alphabet:
        if not isinstance(a, str) or len(a) != 1 or a == "|":
            raise SchemaError(f"letters must be single characters other than '|', got {a!r}")
    if len(set(alphabet)) != len(alphabet):
        raise SchemaError("alphabet has repeated letters")
    return tuple(alphabet)


def functional_to_json(f: Functional) -> dict:
    out: dict[str, Any] = {"alphabet": list(f.alphabet), "truncation": f.truncation, "kind": f.kind}
    if f.kind == "general":
        t = f.table
        out["values"] = {format_monomial(x, f.alphabet): rational_str(t[x])
                         for x in all_monomials(f.k, f.truncation) if t[x]}
    else:
        t = f.table
        out["words"] = {format_word(w, f.alphabet): rational_str(t[(w,)])
                        for w in all_words(f.k, f.truncation)
                        if f.kind == "character" or t[(w,)]}
    return out


def functional_from_json(d: dict) -> Functional:
    if not isinstance(d, dict):
        raise SchemaError("functional must be a JSON object")
    if "moments" in d and "words" not in d:
        return _from_moments(d)
    try:
        alphabet = _check_alphabet(d["alphabet"])
        N = d["truncation"]
        kind = d["kind"]
    except KeyError as e:
        raise SchemaError(f"missing field {e.args[0]!r}") from None
    if not isinstance(N, int) or isinstance(N, bool) or N < 1:
        raise SchemaError("truncation must be a positive integer")
    try:
        if kind == "general":
            vals = {parse_monomial(k, alphabet): parse_rational(v)
                    for k, v in d.get("values", {}).items()}
            return Functional(alphabet, N, "general", vals)
        if kind not in ("character", "infchar"):
            raise SchemaError(f"unknown kind {kind!r}")
        words = {k: parse_rational(v) for k, v in d.get("words", {}).items()}
        if kind == "infchar":
            vals = {}
            for k, v in words.items():
                w = parse_word(k, alphabet)
                if not 1 <= len(w) <= N:
                    raise SchemaError(f"word {k!r} outside truncation {N}")
                vals[w] = v
            return Functional(alphabet, N, "infchar", vals)
        return lift("character", words, alphabet, N)
    except SchemaError:
        raise
    except ValueError as e:
        raise SchemaError(str(e)) from None


def _from_moments(d: dict) -> Functional:
    """Univariate shorthand {"moments": ["1", "2", ...], "letter": "a"}."""
    ms = d["moments"]
    if not isinstance(ms, list) or not ms:
        raise SchemaError("moments must be a non-empty list")
    letter = d.get("letter", "a")
    _check_alphabet([letter])
    vals = {letter * (n + 1): parse_rational(v) for n, v in enumerate(ms)}
    return lift("character", vals, (letter,), len(ms))


def family_to_json(fam: CumulantFamily) -> dict:
    out = functional_to_json(fam.values)
    out["family"] = fam.kind
    if fam.t is not None:
        out["t"] = rational_str(fam.t)
    return out


def family_from_json(d: dict) -> CumulantFamily:
    f = functional_from_json(d)
    if f.kind != "infchar":
        raise SchemaError("cumulant family values must have kind 'infchar'")
    t = parse_rational(d["t"]) if "t" in d else None
    try:
        return CumulantFamily(d["family"], f, t)
    except (ValueError, TypeError) as e:
        raise SchemaError(str(e)) from None


def pair_to_json(p: PairState) -> dict:
    return {"phi": functional_to_json(p.phi), "psi": functional_to_json(p.psi)}


def pair_from_json(d: dict) -> PairState:
    try:
        phi, psi = functional_from_json(d["phi"]), functional_from_json(d["psi"])
    except KeyError as e:
        raise SchemaError(f"pair state needs field {e.args[0]!r}") from None
    try:
        return PairState(phi, psi)
    except (ValueError, TypeError) as e:
        raise SchemaError(str(e)) from None


def to_json(obj) -> dict:
    if isinstance(obj, Functional):
        return functional_to_json(obj)
    if isinstance(obj, CumulantFamily):
        return family_to_json(obj)
    if isinstance(obj, PairState):
        return pair_to_json(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def from_json(d: dict):
    """Dispatch on shape: pair state, cumulant family or functional."""
    if not isinstance(d, dict):
        raise SchemaError("expected a JSON object")
    if "phi" in d:
        return pair_from_json(d)
    if "family" in d:
        return family_from_json(d)
    return functional_from_json(d)


def dumps(obj) -> str:
    return json.dumps(to_json(obj), indent=2)


def loads(text: str):
    try:
        return from_json(json.loads(text))
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON: {e}") from None
