"""Class-closed avoidance and containment enumeration.

Everything here is built on one two-pass scheme: first scan S_n with the
occurrence engine to get the per-permutation verdicts, then walk equivalence
classes only as needed, expanding each class at most once. A class is counted
for avoidance when every member avoids, and for containment when every member
matches; counts report permutations in the union of counted classes, with the
class tally carried alongside.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import CATALOG, DIVISOR_PATTERN, SEQUENCE_TABLES, match_tables
from .core import Word, s_n
from .pattern import (
    BivincularPattern,
    all_patterns,
    apply_symmetry,
    avoids,
    matches,
    pat_shift,
)
from .relations import RELATIONS, Relation, census, check_budget, resolve_budget


def _as_relation(relation: Relation | str) -> Relation:
    if isinstance(relation, Relation):
        return relation
    try:
        return RELATIONS[relation]
    except KeyError:
        raise ValueError(f"unknown relation {relation!r}") from None


@dataclass(frozen=True)
class EnumerationResult:
    """Outcome of one enumeration: counts always, members on request."""

    mode: str
    relation: str
    patterns: tuple[BivincularPattern, ...]
    n: int
    count: int
    class_count: int
    members: tuple[Word, ...] | None

    def to_payload(self) -> dict:
        from .core import format_perm

        payload: dict = {
            "mode": self.mode,
            "relation": self.relation,
            "patterns": [str(p) for p in self.patterns],
            "n": self.n,
            "count": self.count,
            "class_count": self.class_count,
        }
        if self.members is not None:
            payload["members"] = [format_perm(w) for w in self.members]
        return payload


def avoid_all(pats: list[BivincularPattern] | tuple[BivincularPattern, ...], n: int,
              *, budget: int | None = None) -> list[Word]:
    """Permutations of 1..n avoiding every given pattern, in lex order."""
    check_budget(n, budget)
    return [w for w in s_n(n) if all(avoids(p, w) for p in pats)]


def match_all(pats: list[BivincularPattern] | tuple[BivincularPattern, ...], n: int,
              *, budget: int | None = None) -> list[Word]:
    """Permutations of 1..n containing every given pattern, in lex order."""
    check_budget(n, budget)
    return [w for w in s_n(n) if all(matches(p, w) for p in pats)]


def _class_closed(kept: list[Word], rel: Relation, want_members: bool) -> tuple[int, int, list[Word] | None]:
    kept_set = set(kept)
    processed: set[Word] = set()
    count = 0
    class_count = 0
    members: list[Word] = []
    for w in kept:
        if w in processed:
            continue
        cls = rel.class_of(w)
        processed.update(cls & kept_set)
        if cls <= kept_set:
            class_count += 1
            count += len(cls)
            if want_members:
                members.extend(cls)
    if not want_members:
        return count, class_count, None
    members.sort()
    return count, class_count, members


def class_avoiders(pats, relation: Relation | str, n: int, *,
                   want_members: bool = False, budget: int | None = None) -> EnumerationResult:
    """Union of relation classes in which every member avoids every pattern."""
    rel = _as_relation(relation)
    kept = avoid_all(pats, n, budget=budget)
    count, class_count, members = _class_closed(kept, rel, want_members)
    return EnumerationResult("class-avoid", rel.name, tuple(pats), n, count, class_count,
                             tuple(members) if members is not None else None)


def class_matchers(pats, relation: Relation | str, n: int, *,
                   want_members: bool = False, budget: int | None = None) -> EnumerationResult:
    """Union of relation classes in which every member contains every pattern."""
    rel = _as_relation(relation)
    kept = match_all(pats, n, budget=budget)
    count, class_count, members = _class_closed(kept, rel, want_members)
    return EnumerationResult("class-match", rel.name, tuple(pats), n, count, class_count,
                             tuple(members) if members is not None else None)


def plain_avoiders(pats, n: int, *, want_members: bool = False,
                   budget: int | None = None) -> EnumerationResult:
    """Ordinary avoidance, no relation: each permutation is its own class."""
    kept = avoid_all(pats, n, budget=budget)
    return EnumerationResult("avoid", "none", tuple(pats), n, len(kept), len(kept),
                             tuple(kept) if want_members else None)


def plain_matchers(pats, n: int, *, want_members: bool = False,
                   budget: int | None = None) -> EnumerationResult:
    """Ordinary containment, no relation: each permutation is its own class."""
    kept = match_all(pats, n, budget=budget)
    return EnumerationResult("class-match", "none", tuple(pats), n, len(kept), len(kept),
                             tuple(kept) if want_members else None)


def sigma_via_avoiders(n: int, *, budget: int | None = None) -> int:
    """Divisor sum recovered by full enumeration: total the position of the
    letter 1 over the class-closed avoiders of the divisor pattern under the
    cyclic relation."""
    result = class_avoiders([DIVISOR_PATTERN], "toric", n, want_members=True, budget=budget)
    return sum(w.index(1) + 1 for w in result.members)


@dataclass(frozen=True)
class StabilityReport:
    """Whether class-closed avoidance agrees with plain avoidance of the
    pattern's own class, degree by degree up to n_max."""

    pat: BivincularPattern
    relation: str
    n_max: int
    pattern_class: tuple[BivincularPattern, ...]
    stable: bool
    witness_n: int | None
    witness: Word | None

    def to_payload(self) -> dict:
        from .core import format_perm

        payload: dict = {
            "pattern": str(self.pat),
            "relation": self.relation,
            "n_max": self.n_max,
            "pattern_class": [str(p) for p in self.pattern_class],
            "stable": self.stable,
        }
        if not self.stable:
            payload["witness_n"] = self.witness_n
            payload["witness"] = format_perm(self.witness)
        return payload


def _pat_key(pat: BivincularPattern):
    return (pat.p, tuple(sorted(pat.x)), tuple(sorted(pat.y)))


def stability(pat: BivincularPattern, relation: Relation | str, n_max: int, *,
              budget: int | None = None) -> StabilityReport:
    """Compare class-closed avoiders of `pat` with plain avoiders of its
    induced pattern class for every degree up to n_max.

    Containment of the class-closed side in the plain side always holds; the
    check fails exactly when some permutation avoids the whole pattern class
    while a relation classmate of it contains `pat`.
    """
    rel = _as_relation(relation)
    if not rel.extends_to_patterns or rel.pattern_class is None:
        raise ValueError(f"relation {rel.name!r} does not act on patterns")
    ptilde = tuple(sorted(rel.pattern_class(pat), key=_pat_key))
    for n in range(1, n_max + 1):
        check_budget(n, budget)
        closed = set(class_avoiders([pat], rel, n, want_members=True, budget=budget).members)
        plain = set(avoid_all(ptilde, n, budget=budget))
        if closed != plain:
            witness = min(closed.symmetric_difference(plain))
            return StabilityReport(pat, rel.name, n_max, ptilde, False, n, witness)
    return StabilityReport(pat, rel.name, n_max, ptilde, True, None, None)


@dataclass
class SurveyRow:
    pat: BivincularPattern
    orbit_size: int
    counts: dict[int, int]
    tables: tuple[str, ...]

    def to_payload(self) -> dict:
        return {
            "pattern": str(self.pat),
            "orbit_size": self.orbit_size,
            "counts": {str(n): c for n, c in sorted(self.counts.items())},
            "tables": list(self.tables),
        }


@dataclass
class SurveyResult:
    relation: str
    length: int
    pattern_count: int
    rows: list[SurveyRow]

    @property
    def orbit_count(self) -> int:
        return len(self.rows)

    def to_payload(self) -> dict:
        return {
            "relation": self.relation,
            "length": self.length,
            "pattern_count": self.pattern_count,
            "orbit_count": self.orbit_count,
            "rows": [row.to_payload() for row in self.rows],
        }


def _symmetry_orbit_for(rel: Relation, pat: BivincularPattern) -> set[BivincularPattern]:
    return {apply_symmetry(pat, ops) for ops in rel.symmetries}


def survey(relation: Relation | str, length: int, *, n_range=range(1, 6),
           merge_shift: bool = False, budget: int | None = None) -> SurveyResult:
    """Class-closed avoidance counts for all patterns of one length, reduced
    to one representative per symmetry orbit of the relation.

    `merge_shift` additionally merges orbits linked by the shift map where it
    preserves counts (the rank lies in Y); this trims rows that repeat an
    earlier row's numbers.
    """
    rel = _as_relation(relation)
    pats = list(all_patterns(length))
    seen: set[BivincularPattern] = set()
    reps: list[tuple[BivincularPattern, int]] = []
    for pat in pats:
        if pat in seen:
            continue
        orbit = _symmetry_orbit_for(rel, pat)
        seen.update(orbit)
        reps.append((min(orbit, key=_pat_key), len(orbit)))

    groups: list[list[tuple[BivincularPattern, int]]] = [[rc] for rc in reps]
    if merge_shift:
        index = {rep: i for i, (rep, _) in enumerate(reps)}
        parent = list(range(len(reps)))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for rep, _ in reps:
            cur = rep
            for _ in range(length + 2):
                # The shift preserves counts only when the rank lies in Y.
                if not cur.p or length not in cur.y:
                    break
                nxt = pat_shift(cur)
                a = find(index[rep])
                b = find(index[min(_symmetry_orbit_for(rel, nxt), key=_pat_key)])
                if a != b:
                    parent[b] = a
                cur = nxt
        merged: dict[int, list[tuple[BivincularPattern, int]]] = {}
        for i, rc in enumerate(reps):
            merged.setdefault(find(i), []).append(rc)
        groups = list(merged.values())

    rows: list[SurveyRow] = []
    for group in groups:
        rep = min((p for p, _ in group), key=_pat_key)
        size = sum(c for _, c in group)
        counts = {n: class_avoiders([rep], rel, n, budget=budget).count for n in n_range}
        rows.append(SurveyRow(rep, size, counts, tuple(match_tables(counts))))
    rows.sort(key=lambda row: _pat_key(row.pat))
    return SurveyResult(rel.name, length, len(pats), rows)


@dataclass
class SequenceCheckReport:
    id: str
    start: int
    expected: tuple[int, ...]
    computed: dict[int, int]
    skipped: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return all(self.computed[n] == self.expected[n - self.start] for n in self.computed)

    def to_payload(self) -> dict:
        return {
            "id": self.id,
            "start": self.start,
            "expected": list(self.expected),
            "computed": {str(n): c for n, c in sorted(self.computed.items())},
            "skipped": list(self.skipped),
            "ok": self.ok,
        }


_CLASS_COUNT_IDS = {"A000041": "conjugacy", "A009490": "order", "A002619": "toric"}


def sequence_check(table_id: str, values=None, *, budget: int | None = None) -> SequenceCheckReport:
    """Compare values against an embedded reference row, degree by degree.

    `values` may be a degree -> count mapping or a list aligned to the row's
    first degree; when omitted, the row is recomputed from scratch instead.
    Degrees not covered (or beyond the enumeration budget) are reported as
    skipped.
    """
    try:
        table = SEQUENCE_TABLES[table_id]
    except KeyError:
        raise ValueError(f"unknown sequence id {table_id!r}") from None
    degrees = range(table.start, table.start + len(table.values))
    if values is not None:
        if not isinstance(values, dict):
            values = {table.start + i: v for i, v in enumerate(values)}
        computed = {n: values[n] for n in degrees if n in values}
        skipped = tuple(n for n in degrees if n not in values)
        return SequenceCheckReport(table_id, table.start, table.values, computed, skipped)
    limit = resolve_budget(budget)
    computed = {}
    skipped_list: list[int] = []
    for n in degrees:
        if n > limit:
            skipped_list.append(n)
            continue
        computed[n] = _recompute(table_id, n, budget)
    return SequenceCheckReport(table_id, table.start, table.values, computed, tuple(skipped_list))


def _recompute(table_id: str, n: int, budget: int | None) -> int:
    if table_id in _CLASS_COUNT_IDS:
        return census(RELATIONS[_CLASS_COUNT_IDS[table_id]], n, budget=budget).class_count
    for entry in CATALOG:
        if entry.table == table_id:
            fn = class_matchers if entry.mode == "class-match" else class_avoiders
            return fn([entry.pat], entry.relation, n, budget=budget).count
    raise ValueError(f"no recomputation rule for sequence {table_id!r}")
