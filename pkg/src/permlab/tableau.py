"""Row-insertion RSK, elementary Knuth moves, and hook-length counting.

Tableaux are ragged tuples of row tuples; equality is structural. Knuth moves
act on words of distinct letters through windows of three consecutive letters:
the middle pair swaps when the first letter lies strictly between the other
two, the first pair swaps when the last letter does.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .core import Word

Rows = tuple[tuple[int, ...], ...]
Shape = tuple[int, ...]


def rsk(pi: Sequence[int]) -> tuple[Rows, Rows]:
    """Row-insertion RSK: (insertion tableau P, recording tableau Q).

    >>> rsk((2, 4, 1, 3))
    (((1, 3), (2, 4)), ((1, 2), (3, 4)))
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, value in enumerate(pi, start=1):
        cur = value
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([cur])
                q_rows.append([step])
                break
            row = p_rows[r]
            idx = bisect_right(row, cur)
            if idx == len(row):
                row.append(cur)
                q_rows[r].append(step)
                break
            row[idx], cur = cur, row[idx]
            r += 1
    return tuple(map(tuple, p_rows)), tuple(map(tuple, q_rows))


def shape_of(rows: Rows) -> Shape:
    return tuple(len(r) for r in rows)


def is_standard(rows: Rows) -> bool:
    """Standard tableau check: partition shape, rows and columns strictly
    increasing, letters exactly 1..n."""
    shape = shape_of(rows)
    if list(shape) != sorted(shape, reverse=True) or (shape and shape[-1] == 0):
        return False
    letters = [v for row in rows for v in row]
    if sorted(letters) != list(range(1, len(letters) + 1)):
        return False
    for row in rows:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if any(upper[c] >= lower[c] for c in range(len(lower))):
            return False
    return True


def format_tableau(rows: Rows) -> str:
    """Rows on separate lines, entries space-separated."""
    return "\n".join(" ".join(str(v) for v in row) for row in rows)


def inverse_rsk(p: Rows, q: Rows) -> Word:
    """The permutation with insertion tableau p and recording tableau q.

    >>> inverse_rsk(((1, 3), (2, 4)), ((1, 2), (3, 4)))
    (2, 4, 1, 3)
    """
    if shape_of(p) != shape_of(q):
        raise ValueError("shape mismatch")
    if not is_standard(p) or not is_standard(q):
        raise ValueError("nonstandard tableau")
    work = [list(row) for row in p]
    where = {label: r for r, row in enumerate(q) for label in row}
    out: list[int] = []
    for step in range(sum(shape_of(p)), 0, -1):
        r = where[step]
        cur = work[r].pop()
        for t in range(r - 1, -1, -1):
            row = work[t]
            idx = bisect_left(row, cur) - 1
            row[idx], cur = cur, row[idx]
        out.append(cur)
    while work and not work[-1]:
        work.pop()
    return tuple(reversed(out))


def knuth_neighbors(w: Sequence[int]) -> set[Word]:
    """Words one elementary Knuth move away from w.

    >>> sorted(knuth_neighbors((2, 4, 1, 3, 5)))
    [(2, 1, 4, 3, 5)]
    """
    w = tuple(w)
    out: set[Word] = set()
    for t in range(len(w) - 2):
        a, b, c = w[t], w[t + 1], w[t + 2]
        if min(b, c) < a < max(b, c):
            out.add(w[:t] + (a, c, b) + w[t + 3 :])
        if min(a, b) < c < max(a, b):
            out.add(w[:t] + (b, a, c) + w[t + 3 :])
    out.discard(w)
    return out


def knuth_class(w: Sequence[int]) -> frozenset[Word]:
    """BFS closure of w under elementary Knuth moves."""
    w = tuple(w)
    seen = {w}
    frontier = [w]
    while frontier:
        cur = frontier.pop()
        for nxt in knuth_neighbors(cur):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


def check_partition(shape: Sequence[int]) -> Shape:
    shape = tuple(shape)
    if any(a < b for a, b in zip(shape, shape[1:])) or any(p <= 0 for p in shape):
        raise ValueError(f"not a partition: {shape}")
    return shape


def is_hook(shape: Sequence[int]) -> bool:
    """True iff shape = (a, 1, 1, ..., 1) (or is empty)."""
    shape = check_partition(shape)
    return all(p == 1 for p in shape[1:])


def count_syt(shape: Sequence[int]) -> int:
    """Number of standard Young tableaux of the shape, by hook lengths.

    >>> count_syt((2, 2, 2))
    5
    """
    shape = check_partition(shape)
    n = sum(shape)
    denom = 1
    for i, part in enumerate(shape):
        for j in range(part):
            leg = sum(1 for p in shape[i + 1 :] if p > j)
            denom *= part - j + leg
    count, rem = divmod(factorial(n), denom)
    if rem:
        raise ValueError(f"hook product does not divide {n}! for {shape}")
    return count


def partitions(n: int) -> Iterator[Shape]:
    """All partitions of n, largest part first, in lex-decreasing order."""

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for part in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - part, part):
                yield (part,) + rest

    return rec(n, n)


@lru_cache(maxsize=None)
def standard_tableaux(shape: Shape) -> tuple[Rows, ...]:
    """All standard Young tableaux of the shape."""
    shape = check_partition(shape)
    n = sum(shape)
    if n == 0:
        return ((),)
    out: list[Rows] = []
    for r, part in enumerate(shape):
        below = shape[r + 1] if r + 1 < len(shape) else 0
        if part == below:
            continue
        smaller = shape[:r] + ((part - 1,) if part > 1 else ()) + shape[r + 1 :]
        for sub in standard_tableaux(smaller):
            rows = list(sub)
            if r < len(rows):
                rows[r] = rows[r] + (n,)
            else:
                rows.append((n,))
            out.append(tuple(rows))
    return tuple(out)


def hook_shapes(n: int) -> Iterator[Shape]:
    """All hook shapes of n: (a, 1^(n-a)) for a = 1..n."""
    for a in range(1, n + 1):
        yield (a,) + (1,) * (n - a)
