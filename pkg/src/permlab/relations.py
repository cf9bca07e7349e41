"""Equivalence relations on S_n: conjugacy, order, Knuth, toric, descent.

Each relation is a (canonical key, class generator) pair plus the list of
r/c/i compositions that transport its classes to classes (so class-avoider
counts are invariant under them). Censuses aggregate class sizes; conjugacy,
order and Knuth have exact partition-indexed censuses, toric and descent are
keyed by streaming over S_n.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Hashable, Iterator, Sequence

from .core import Word, cycle_type, descent_set, order, s_n, toric_class
from .errors import BudgetExceeded, InternalCheckError
from .pattern import BivincularPattern, shift_orbit
from .tableau import count_syt, inverse_rsk, knuth_class, partitions, rsk, shape_of, standard_tableaux

DEFAULT_BUDGET_N = 9
BUDGET_ENV_VAR = "PERMLAB_BUDGET_N"


def resolve_budget(budget: int | None = None) -> int:
    """Explicit argument beats the PERMLAB_BUDGET_N env var beats the default."""
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV_VAR)
    return int(env) if env else DEFAULT_BUDGET_N


def check_budget(n: int, budget: int | None = None) -> None:
    cap = resolve_budget(budget)
    if n > cap:
        raise BudgetExceeded(f"degree {n} exceeds the exhaustive-scan budget {cap}")


@dataclass(frozen=True)
class Relation:
    """A named equivalence relation with key, class generator, and the r/c/i
    compositions compatible with it."""

    name: str
    key: Callable[[Word], Hashable]
    class_of: Callable[[Word], frozenset[Word]]
    symmetries: tuple[str, ...]
    extends_to_patterns: bool = False
    pattern_class: Callable[[BivincularPattern], frozenset[BivincularPattern]] | None = None


@dataclass
class ClassCensus:
    """Class-size histogram of a relation on S_n."""

    relation: str
    n: int
    by_size: dict[int, int]

    def __post_init__(self) -> None:
        total = sum(size * count for size, count in self.by_size.items())
        if total != math.factorial(self.n):
            raise InternalCheckError(
                f"{self.relation} census of S_{self.n} covers {total} != {self.n}!"
            )

    @property
    def class_count(self) -> int:
        return sum(self.by_size.values())


def perms_with_cycle_type(n: int, parts: Sequence[int]) -> Iterator[Word]:
    """All permutations of S_n with the given cycle lengths.

    Cycles are rooted at their smallest element and built in increasing leader
    order, so each permutation appears exactly once.

    >>> sorted(perms_with_cycle_type(3, (3,)))
    [(2, 3, 1), (3, 1, 2)]
    """
    parts = tuple(sorted(parts, reverse=True))
    if sum(parts) != n:
        raise ValueError(f"cycle lengths {parts} do not sum to {n}")

    def rec(unused: tuple[int, ...], lengths: tuple[int, ...]) -> Iterator[tuple[Word, ...]]:
        if not unused:
            yield ()
            return
        leader, rest = unused[0], unused[1:]
        for length in sorted(set(lengths)):
            idx = lengths.index(length)
            remaining = lengths[:idx] + lengths[idx + 1 :]
            for companions in combinations(rest, length - 1):
                taken = set(companions)
                left = tuple(v for v in rest if v not in taken)
                for arrangement in permutations(companions):
                    head = ((leader,) + arrangement,)
                    for tail in rec(left, remaining):
                        yield head + tail

    for cycs in rec(tuple(range(1, n + 1)), parts):
        word = list(range(1, n + 1))
        for cyc in cycs:
            for i, v in enumerate(cyc):
                word[v - 1] = cyc[(i + 1) % len(cyc)]
        yield tuple(word)


def _conjugacy_class(pi: Word) -> frozenset[Word]:
    return frozenset(perms_with_cycle_type(len(pi), cycle_type(pi)))


def _order_class(pi: Word) -> frozenset[Word]:
    n = len(pi)
    target = order(pi)
    members: set[Word] = set()
    for lam in partitions(n):
        if math.lcm(*lam) == target:
            members.update(perms_with_cycle_type(n, lam))
    return frozenset(members)


def _knuth_key(pi: Word) -> Hashable:
    return rsk(pi)[0]


def _knuth_class(pi: Word) -> frozenset[Word]:
    p = rsk(pi)[0]
    return frozenset(inverse_rsk(p, q) for q in standard_tableaux(shape_of(p)))


def _toric_key(pi: Word) -> Hashable:
    return min(toric_class(pi))


@lru_cache(maxsize=256)
def _descent_class(n: int, key: frozenset[int]) -> frozenset[Word]:
    return frozenset(w for w in s_n(n) if descent_set(w) == key)


def _knuth_pattern_class(pat: BivincularPattern) -> frozenset[BivincularPattern]:
    return frozenset(BivincularPattern(q, pat.x, pat.y) for q in knuth_class(pat.p))


def _toric_pattern_class(pat: BivincularPattern) -> frozenset[BivincularPattern]:
    return frozenset(shift_orbit(pat))


CONJUGACY = Relation(
    name="conjugacy",
    key=cycle_type,
    class_of=_conjugacy_class,
    symmetries=("", "i", "rc", "irc"),
)

ORDER = Relation(
    name="order",
    key=order,
    class_of=_order_class,
    symmetries=("", "i", "rc", "irc"),
)

KNUTH = Relation(
    name="knuth",
    key=_knuth_key,
    class_of=_knuth_class,
    symmetries=("", "r", "c", "rc"),
    extends_to_patterns=True,
    pattern_class=_knuth_pattern_class,
)

TORIC = Relation(
    name="toric",
    key=_toric_key,
    class_of=toric_class,
    symmetries=("", "r", "c", "rc", "i", "ir", "ic", "irc"),
    extends_to_patterns=True,
    pattern_class=_toric_pattern_class,
)

DESCENT = Relation(
    name="descent",
    key=descent_set,
    class_of=lambda pi: _descent_class(len(pi), descent_set(pi)),
    symmetries=("", "r", "c", "rc"),
)

RELATIONS: dict[str, Relation] = {
    rel.name: rel for rel in (CONJUGACY, ORDER, KNUTH, TORIC, DESCENT)
}


def _cycle_index_size(n: int, lam: Sequence[int]) -> int:
    """Number of permutations of S_n with cycle type lam: n! / prod(l^m * m!)."""
    z = 1
    for length, mult in Counter(lam).items():
        z *= length**mult * math.factorial(mult)
    return math.factorial(n) // z


def census(rel: Relation, n: int, budget: int | None = None) -> ClassCensus:
    """Class-size histogram of the relation on S_n."""
    check_budget(n, budget)
    by_size: Counter[int] = Counter()
    if rel.name == "conjugacy":
        for lam in partitions(n):
            by_size[_cycle_index_size(n, lam)] += 1
    elif rel.name == "order":
        size_by_order: Counter[int] = Counter()
        for lam in partitions(n):
            size_by_order[math.lcm(*lam)] += _cycle_index_size(n, lam)
        for size in size_by_order.values():
            by_size[size] += 1
    elif rel.name == "knuth":
        for lam in partitions(n):
            f = count_syt(lam)
            by_size[f] += f
    elif rel.name == "toric":
        for pi in s_n(n):
            cls = toric_class(pi)
            if min(cls) == pi:
                by_size[len(cls)] += 1
    else:
        key_counts = Counter(rel.key(pi) for pi in s_n(n))
        for size in key_counts.values():
            by_size[size] += 1
    return ClassCensus(relation=rel.name, n=n, by_size=dict(sorted(by_size.items())))


def brute_census(rel: Relation, n: int, budget: int | None = None) -> ClassCensus:
    """Census by exhaustively keying S_n; reference path for any relation."""
    check_budget(n, budget)
    key_counts = Counter(rel.key(pi) for pi in s_n(n))
    by_size: Counter[int] = Counter()
    for size in key_counts.values():
        by_size[size] += 1
    return ClassCensus(relation=rel.name, n=n, by_size=dict(sorted(by_size.items())))


def class_representatives(rel: Relation, n: int) -> Iterator[Word]:
    """One canonical (key-minimal) member per class, in lex order."""
    seen: set[Hashable] = set()
    for pi in s_n(n):
        k = rel.key(pi)
        if k not in seen:
            seen.add(k)
            yield pi
