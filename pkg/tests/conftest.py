"""Shared oracles and fixtures.

The oracles here deliberately avoid the code paths they are meant to check:
occurrence search is a plain filter over position subsets, divisor sums come
from a sieve, class structure from exhaustive key grouping. Expected values
frozen into the tests were produced by these oracles or quoted from the
embedded reference rows.
"""

from __future__ import annotations

import itertools

import pytest

from permlab.core import Word, s_n
from permlab.pattern import BivincularPattern, all_patterns, avoids
from permlab.relations import RELATIONS


def oracle_occurrences(pat: BivincularPattern, w: Word) -> list[tuple[int, ...]]:
    """Occurrences by brute filter: every position subset of size k, checked
    against the order-isomorphism and both adjacency rules with the boundary
    conventions i0 = j0 = 0 and i_{k+1} = j_{k+1} = n+1."""
    n = len(w)
    k = pat.k
    out = []
    for comb in itertools.combinations(range(1, n + 1), k):
        vals = tuple(w[i - 1] for i in comb)
        ranks = sorted(vals)
        if tuple(ranks.index(v) + 1 for v in vals) != pat.p:
            continue
        ei = (0,) + comb + (n + 1,)
        if any(ei[x + 1] != ei[x] + 1 for x in pat.x):
            continue
        js = (0,) + tuple(ranks) + (n + 1,)
        if any(js[y + 1] != js[y] + 1 for y in pat.y):
            continue
        out.append(comb)
    return out


def sieve_sigma(limit: int) -> list[int]:
    """Divisor sums 0..limit by the harmonic sieve."""
    out = [0] * (limit + 1)
    for d in range(1, limit + 1):
        for m in range(d, limit + 1, d):
            out[m] += d
    return out


def lis_length(w: Word) -> int:
    """Longest increasing subsequence length, patience-style."""
    import bisect

    piles: list[int] = []
    for v in w:
        i = bisect.bisect_left(piles, v)
        if i == len(piles):
            piles.append(v)
        else:
            piles[i] = v
    return len(piles)


def place_by_steps(k: int, n: int) -> Word:
    """Independent construction of the degree-n word with index k: drop the
    letters 1, 2, ... at positions k, 2k, ... around a cycle of length n+1,
    skipping the empty slot 0."""
    slots: list[int] = [0] * (n + 1)
    pos = 0
    for v in range(1, n + 1):
        pos = (pos + k) % (n + 1)
        slots[pos] = v
    assert slots[0] == 0
    return tuple(slots[1:])


PERMS_BY_N = {n: list(s_n(n)) for n in range(0, 7)}


@pytest.fixture(scope="session")
def avoid_masks() -> dict[BivincularPattern, dict[int, int]]:
    """For every pattern of length 1..3 and every degree 1..6, the bitmask of
    avoiding permutations over lex-ordered S_n."""
    masks: dict[BivincularPattern, dict[int, int]] = {}
    for k in (1, 2, 3):
        for pat in all_patterns(k):
            per_n = {}
            for n in range(1, 7):
                m = 0
                for idx, w in enumerate(PERMS_BY_N[n]):
                    if avoids(pat, w):
                        m |= 1 << idx
                per_n[n] = m
            masks[pat] = per_n
    return masks


@pytest.fixture(scope="session")
def class_masks():
    """Callable (relation name, n) -> list of class bitmasks over lex S_n."""
    cache: dict[tuple[str, int], list[int]] = {}

    def build(rel_name: str, n: int) -> list[int]:
        key = (rel_name, n)
        if key not in cache:
            perms = PERMS_BY_N[n]
            index = {w: i for i, w in enumerate(perms)}
            rel = RELATIONS[rel_name]
            seen: set[Word] = set()
            out = []
            for w in perms:
                if w in seen:
                    continue
                cls = rel.class_of(w)
                seen |= cls
                m = 0
                for u in cls:
                    m |= 1 << index[u]
                out.append(m)
            cache[key] = out
        return cache[key]

    return build
