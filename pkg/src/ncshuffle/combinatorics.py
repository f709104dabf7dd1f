"""Non-crossing partitions together with their interval and monotone variants.

Partitions are stored by their blocks (1-based, sorted, ordered by minimum);
the canonical key is the restricted-growth vector giving the block index of
each position.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

FAMILIES = ("nc", "nc_irr", "interval", "monotone", "monotone_irr")
DEFAULT_LIMITS = {"nc": 12, "nc_irr": 12, "interval": 12, "monotone": 10, "monotone_irr": 10}


class LimitError(ValueError):
    pass


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class NoncrossingPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        blocks = tuple(sorted(blocks, key=lambda b: b[0] if b else 0))
        object.__setattr__(self, "blocks", blocks)
        if self.n < 1:
            raise ValueError("n must be positive")
        seen = [x for b in blocks for x in b]
        if any(not b for b in blocks) or sorted(seen) != list(range(1, self.n + 1)):
            raise ValueError(f"blocks {blocks} do not partition [1..{self.n}]")
        if _crosses(blocks):
            raise ValueError(f"partition {blocks} is crossing")

    def __len__(self):
        return len(self.blocks)

    def __str__(self):
        return "{" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"

    @cached_property
    def rgs(self) -> tuple[int, ...]:
        """Block index (0-based, by minimum) of every position."""
        out = [0] * self.n
        for i, b in enumerate(self.blocks):
            for x in b:
                out[x - 1] = i
        return tuple(out)

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> "NoncrossingPartition":
        groups: dict[int, list[int]] = {}
        for pos, b in enumerate(rgs, start=1):
            groups.setdefault(b, []).append(pos)
        return cls(len(rgs), tuple(tuple(v) for v in groups.values()))

    def is_irreducible(self) -> bool:
        return self.rgs[0] == self.rgs[-1]

    def is_interval(self) -> bool:
        return all(b[-1] - b[0] + 1 == len(b) for b in self.blocks)

    @cached_property
    def _parents(self) -> tuple[int | None, ...]:
        out: list[int | None] = []
        for b in self.blocks:
            best = None
            for j, a in enumerate(self.blocks):
                if a[0] < b[0] and b[-1] < a[-1]:
                    if best is None or a[0] > self.blocks[best][0]:
                        best = j
            out.append(best)
        return tuple(out)

    def parents(self) -> tuple[int | None, ...]:
        """Index of the innermost block enclosing each block, or None for outer blocks."""
        return self._parents

    def outer_blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(b for b, p in zip(self.blocks, self.parents()) if p is None)

    def inner_blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(b for b, p in zip(self.blocks, self.parents()) if p is not None)

    def inner(self) -> int:
        return len(self.inner_blocks())

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}


@dataclass(frozen=True)
class MonotonePartition:
    base: NoncrossingPartition
    labels: tuple[int, ...]  # labels[i] is the label of base.blocks[i], in 1..|pi|

    def __post_init__(self):
        k = len(self.base)
        if sorted(self.labels) != list(range(1, k + 1)):
            raise ValueError("labeling is not a bijection onto [1..|pi|]")
        for i, p in enumerate(self.base.parents()):
            if p is not None and self.labels[p] >= self.labels[i]:
                raise ValueError("labeling is not increasing along nesting")

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def blocks(self):
        return self.base.blocks

    def __len__(self):
        return len(self.base)

    def ordered_blocks(self) -> tuple[tuple[int, ...], ...]:
        """Blocks sorted by label."""
        return tuple(b for _, b in sorted(zip(self.labels, self.base.blocks)))

    def to_json(self) -> dict:
        d = self.base.to_json()
        d["labels"] = {_block_key(b): lab for b, lab in zip(self.base.blocks, self.labels)}
        return d


def _block_key(block) -> str:
    return "[" + ",".join(map(str, block)) + "]"


@dataclass(frozen=True)
class RootedForest:
    """Nesting forest: ``children[i]`` lists the child nodes of node ``i``."""

    blocks: tuple[tuple[int, ...], ...]
    children: tuple[tuple[int, ...], ...]
    roots: tuple[int, ...] = field(default=())

    def __len__(self):
        return len(self.blocks)

    def subtree_size(self, v: int) -> int:
        return 1 + sum(self.subtree_size(c) for c in self.children[v])


def _crosses(blocks) -> bool:
    # stack scan: a block may only be revisited when it is the innermost open one
    where, last = {}, {}
    for i, b in enumerate(blocks):
        for x in b:
            where[x] = i
        last[i] = b[-1]
    stack: list[int] = []
    started = set()
    for x in sorted(where):
        b = where[x]
        if b not in started:
            started.add(b)
            stack.append(b)
        elif stack[-1] != b:
            return True
        if x == last[b]:
            stack.pop()
    return False


def crosses_brute_force(blocks) -> bool:
    """Direct a<b<c<d search; kept as the oracle for ``_crosses``."""
    where = {x: i for i, b in enumerate(blocks) for x in b}
    n = len(where)
    for a, b, c, d in itertools.combinations(range(1, n + 1), 4):
        if where[a] == where[c] and where[b] == where[d] and where[a] != where[b]:
            return True
    return False


# -- enumeration -----------------------------------------------------------

def set_partitions_rgs(n: int) -> Iterator[tuple[int, ...]]:
    """All restricted-growth strings of length n (every set partition of [n])."""
    def rec(prefix, m):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(m + 1):
            prefix.append(b)
            yield from rec(prefix, max(m, b + 1))
            prefix.pop()
    if n == 0:
        yield ()
        return
    yield from rec([0], 1)


def _nc_block_lists(lo: int, hi: int) -> Iterator[list[tuple[int, ...]]]:
    """Non-crossing partitions of {lo..hi} by choice of the block containing lo."""
    if lo > hi:
        yield []
        return
    rest = list(range(lo + 1, hi + 1))
    for r in range(len(rest) + 1):
        for others in itertools.combinations(rest, r):
            first = (lo,) + others
            # gaps between consecutive elements of the first block, plus the tail
            bounds = list(first) + [hi + 1]
            gaps = [(bounds[i] + 1, bounds[i + 1] - 1) for i in range(len(first))]
            for parts in itertools.product(*[list(_nc_block_lists(a, b)) for a, b in gaps]):
                yield [first] + [blk for p in parts for blk in p]


@lru_cache(maxsize=None)
def _nc(n: int) -> tuple[NoncrossingPartition, ...]:
    parts = [NoncrossingPartition(n, tuple(bl)) for bl in _nc_block_lists(1, n)]
    parts.sort(key=lambda p: p.rgs)
    return tuple(parts)


def nc_by_filter(n: int) -> list[NoncrossingPartition]:
    """Brute force: every set partition of [n], keeping the non-crossing ones."""
    out = []
    for rgs in set_partitions_rgs(n):
        groups: dict[int, list[int]] = {}
        for pos, b in enumerate(rgs, start=1):
            groups.setdefault(b, []).append(pos)
        blocks = tuple(tuple(v) for v in groups.values())
        if not crosses_brute_force(blocks):
            out.append(NoncrossingPartition(n, blocks))
    return out


def linear_extensions(parents: Sequence[int | None]) -> Iterator[tuple[int, ...]]:
    """Increasing labelings of a forest given by parent pointers.

    Backtracking assigns labels 1, 2, ... in turn, trying available nodes in
    index order, so emission order is fixed.
    """
    k = len(parents)
    labels = [0] * k

    def rec(next_label):
        if next_label > k:
            yield tuple(labels)
            return
        for v in range(k):
            if labels[v] == 0 and (parents[v] is None or labels[parents[v]] != 0):
                labels[v] = next_label
                yield from rec(next_label + 1)
                labels[v] = 0

    yield from rec(1)


def enumerate_partitions(n: int, family: str, limit: int | None = None) -> list:
    """Every member of ``family`` on [n] once, in canonical order."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    bound = DEFAULT_LIMITS[family] if limit is None else limit
    if not 1 <= n <= bound:
        raise LimitError(f"n={n} out of range for family {family!r} (1 <= n <= {bound})")
    base = _nc(n)
    if family == "nc":
        return list(base)
    if family == "nc_irr":
        return [p for p in base if p.is_irreducible()]
    if family == "interval":
        return [p for p in base if p.is_interval()]
    pool = base if family == "monotone" else [p for p in base if p.is_irreducible()]
    out = []
    for p in pool:
        for labels in linear_extensions(p.parents()):
            out.append(MonotonePartition(p, labels))
    return out


def nc_partitions(n: int) -> tuple[NoncrossingPartition, ...]:
    """Unchecked, cached NC(n); used by the formula evaluators."""
    return _nc(n)


@lru_cache(maxsize=None)
def nc_irreducible(n: int) -> tuple[NoncrossingPartition, ...]:
    return tuple(p for p in _nc(n) if p.is_irreducible())


@lru_cache(maxsize=None)
def interval_partitions(n: int) -> tuple[NoncrossingPartition, ...]:
    return tuple(p for p in _nc(n) if p.is_interval())


# -- structure -------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    outer_blocks: tuple[tuple[int, ...], ...]
    inner_blocks: tuple[tuple[int, ...], ...]
    irreducible_components: tuple[NoncrossingPartition, ...]
    spans: tuple[tuple[int, int], ...]


def classify(p: NoncrossingPartition) -> Classification:
    comps, spans = [], []
    start = 1
    while start <= p.n:
        head = next(b for b in p.blocks if b[0] == start)
        lo, hi = head[0], head[-1]
        sub = [tuple(x - lo + 1 for x in b) for b in p.blocks if lo <= b[0] and b[-1] <= hi]
        comps.append(NoncrossingPartition(hi - lo + 1, tuple(sub)))
        spans.append((lo, hi))
        start = hi + 1
    return Classification(p.outer_blocks(), p.inner_blocks(), tuple(comps), tuple(spans))


def concatenate(parts: Sequence[NoncrossingPartition]) -> NoncrossingPartition:
    blocks, offset = [], 0
    for q in parts:
        blocks.extend(tuple(x + offset for x in b) for b in q.blocks)
        offset += q.n
    return NoncrossingPartition(offset, tuple(blocks))


def nesting_forest(p: NoncrossingPartition) -> RootedForest:
    parents = p.parents()
    children = [[] for _ in p.blocks]
    for i, par in enumerate(parents):
        if par is not None:
            children[par].append(i)
    roots = tuple(i for i, par in enumerate(parents) if par is None)
    return RootedForest(p.blocks, tuple(tuple(c) for c in children), roots)


def tree_factorial(forest: RootedForest) -> int:
    return math.prod(forest.subtree_size(v) for v in range(len(forest)))


@lru_cache(maxsize=None)
def _tree_factorial_of(p: NoncrossingPartition) -> int:
    return tree_factorial(nesting_forest(p))


def partition_tree_factorial(p: NoncrossingPartition) -> int:
    return _tree_factorial_of(p)


def monotone_count(p: NoncrossingPartition) -> int:
    return math.factorial(len(p)) // _tree_factorial_of(p)


def omega_k(p: NoncrossingPartition, k: int) -> int:
    """Surjections blocks -> [k] that strictly increase along nesting (plain enumeration)."""
    if not p.is_irreducible():
        raise DomainError(f"omega is only defined on irreducible partitions, got {p}")
    parents = p.parents()
    m = len(p)
    count = 0
    for f in itertools.product(range(1, k + 1), repeat=m):
        if len(set(f)) != k:
            continue
        if all(par is None or f[par] < f[i] for i, par in enumerate(parents)):
            count += 1
    return count


@lru_cache(maxsize=None)
def omega(p: NoncrossingPartition) -> Fraction:
    return sum((Fraction((-1) ** (k - 1), k) * omega_k(p, k) for k in range(1, len(p) + 1)),
               Fraction(0))


def restrict(word: Sequence, block: Sequence[int]) -> tuple:
    """Letters of ``word`` at the (1-based) positions of ``block``."""
    n = len(word)
    for i in block:
        if not 1 <= i <= n:
            raise IndexError(f"position {i} out of range for word of length {n}")
    return tuple(word[i - 1] for i in sorted(block))
