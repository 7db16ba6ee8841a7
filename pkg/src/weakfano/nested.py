"""Nested sets of a building set and the nested complex.

A nested set is a subfamily of non-maximal members that is pairwise
nested-or-disjoint and contains no pairwise-disjoint subfamily of two or
more members whose union is again a member.  Maximal nested sets all
have size |S| - |B_max|, and they index the maximal cones of the fan.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .core import BuildingSet, frozenset_of, mask_of
from .errors import MaximalMember, NotAMember


@dataclass(frozen=True)
class NestedCheck:
    """Outcome of a nested-set test; truthy iff the family is nested.

    On failure exactly one of bad_pair (two members neither nested nor
    disjoint) or bad_family (pairwise-disjoint members whose union is a
    member) is set.
    """

    ok: bool
    bad_pair: tuple[frozenset[int], frozenset[int]] | None = None
    bad_family: tuple[frozenset[int], ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _canon_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


def _to_mask(b: BuildingSet, member: Iterable[int] | int) -> int:
    return member if isinstance(member, int) else mask_of(member, b.ground_size)


def is_nested(b: BuildingSet, family: Iterable[Iterable[int] | int]) -> NestedCheck:
    """Decide whether the given members form a nested set of b.

    Raises NotAMember for a set outside the building set and
    MaximalMember for a maximal member (those are excluded by
    definition).  Duplicates collapse.
    """
    maximal = set(b.max_masks)
    masks: set[int] = set()
    for member in family:
        m = _to_mask(b, member)
        if not b.has_mask(m):
            raise NotAMember(f"{set(frozenset_of(m))} is not a member")
        if m in maximal:
            raise MaximalMember(f"{set(frozenset_of(m))} is a maximal member")
        masks.add(m)
    ordered = sorted(masks, key=_canon_key)

    for i in range(len(ordered)):
        for j in range(i + 1, len(ordered)):
            x, y = ordered[i], ordered[j]
            if x & y and x & ~y and y & ~x:
                return NestedCheck(False, bad_pair=(frozenset_of(x), frozenset_of(y)))

    # One representative disjoint subfamily per reachable union mask.
    # First found wins: members arrive smallest first, so a union formed
    # by combination is always recorded before the same mask can show up
    # as a member of the family itself.
    unions: dict[int, tuple[int, ...]] = {}
    for m in ordered:
        fresh = {} if m in unions else {m: (m,)}
        for u, fam in unions.items():
            if u & m == 0 and (u | m) not in unions and (u | m) not in fresh:
                fresh[u | m] = fam + (m,)
        unions.update(fresh)
    viols = [fam for u, fam in unions.items() if len(fam) >= 2 and b.has_mask(u)]
    if viols:
        fam = min(viols, key=lambda f: tuple(_canon_key(m) for m in f))
        return NestedCheck(False, bad_family=tuple(frozenset_of(m) for m in fam))
    return NestedCheck(True)


def _maximal_sets(verts: Iterable[int], has_mask: Callable[[int], bool]) -> list[tuple[int, ...]]:
    """All maximal nested sets over the given vertex masks.

    Walks increasing chains in canonical vertex order; a node keeps the
    unions of every disjoint subfamily chosen so far plus the candidates
    still compatible, so maximality is simply "no candidate left".
    """
    order = sorted(verts, key=_canon_key)
    results: list[tuple[int, ...]] = []

    def walk(cur: list[int], unions: frozenset[int], cands: list[tuple[int, int]], last: int) -> None:
        if not cands:
            results.append(tuple(cur))
            return
        for idx, c in cands:
            if idx <= last:
                continue
            u2 = unions | {c} | {u | c for u in unions if u & c == 0}
            c2 = []
            for jdx, v in cands:
                if jdx == idx:
                    continue
                if v & c and v & ~c and c & ~v:
                    continue
                if any(u & v == 0 and has_mask(u | v) for u in u2):
                    continue
                c2.append((jdx, v))
            cur.append(c)
            walk(cur, u2, c2, idx)
            cur.pop()

    walk([], frozenset(), list(enumerate(order)), -1)
    return results


def maximal_nested_sets_within(b: BuildingSet, cmask: int) -> list[tuple[int, ...]]:
    """Maximal nested sets of the restriction to cmask, kept in original labels.

    Unions of subsets of cmask stay inside cmask, so membership in the
    restriction coincides with membership in b.
    """
    top = set(b.max_members_within(cmask))
    verts = [m for m in b.members_within(cmask) if m not in top]
    return _maximal_sets(verts, b.has_mask)


def maximal_nested_sets(b: BuildingSet) -> list[tuple[int, ...]]:
    """All maximal nested sets of b as mask tuples, lexicographic order."""
    return maximal_nested_sets_within(b, b.full_mask)


def link(b: BuildingSet, member: Iterable[int] | int) -> list[tuple[int, ...]]:
    """Maximal faces of the link of a member in the nested complex."""
    cm = _to_mask(b, member)
    if not b.has_mask(cm):
        raise NotAMember(f"{set(frozenset_of(cm))} is not a member")
    if cm in b.max_masks:
        raise MaximalMember(f"{set(frozenset_of(cm))} is a maximal member")
    return [
        tuple(m for m in ns if m != cm)
        for ns in maximal_nested_sets(b)
        if cm in ns
    ]


def link_companion(b: BuildingSet, cmask: int) -> BuildingSet:
    """The disjoint union of the restriction to C and the contraction of C.

    Both parts keep their original labels, so the result is a building
    set on the same ground set with C and the contraction components as
    maximal members.
    """
    rest = b.full_mask & ~cmask
    masks = set(b.members_within(cmask))
    for m in b.masks:
        if m & ~rest == 0:
            masks.add(m)
        elif m & cmask == cmask and m & rest:
            masks.add(m & rest)
    return BuildingSet(b.ground_size, tuple(sorted(masks, key=_canon_key)))


def check_link_isomorphism(b: BuildingSet, member: Iterable[int] | int) -> bool:
    """Verify that deleting C from members containing it maps the link of C
    onto the nested complex of the companion building set, maximal faces
    to maximal faces."""
    cm = _to_mask(b, member)
    faces = link(b, cm)
    companion = link_companion(b, cm)
    image = {
        frozenset((m & ~cm) if (m & cm == cm and m != cm) else m for m in face)
        for face in faces
    }
    target = {frozenset(ns) for ns in maximal_nested_sets(companion)}
    return image == target
