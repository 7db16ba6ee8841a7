"""Building sets on a finite ground set.

Elements are labeled 1..ground_size and subsets are stored as bitmasks
(element i lives on bit i-1).  A building set is a family of nonempty
subsets that contains every singleton and contains I | J whenever two
members I, J overlap.  Canonical member order everywhere is
(cardinality, mask value).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from random import Random
from typing import Iterable, Iterator

from .errors import (
    ElementOutOfRange,
    EmptyMember,
    EmptySubset,
    GroundSetTooLarge,
    MissingSingleton,
    NotProperSubset,
    NotUnionClosed,
    ParseError,
)

# Masks are plain Python ints, so the cap is a sanity bound, not a word size.
MAX_GROUND = 24
# Enumeration walks families over 2^S; beyond this it is hopeless anyway.
MAX_ENUMERATION_GROUND = 5


def mask_of(items: Iterable[int], ground_size: int | None = None) -> int:
    """Bitmask of a collection of 1-based elements."""
    mask = 0
    for i in items:
        i = int(i)
        if i < 1 or (ground_size is not None and i > ground_size):
            raise ElementOutOfRange(f"element {i} outside ground set")
        mask |= 1 << (i - 1)
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based elements of a bitmask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def frozenset_of(mask: int) -> frozenset[int]:
    return frozenset(elements_of(mask))


def project_mask(mask: int, labels: tuple[int, ...]) -> int:
    """Rewrite a mask over `labels` into the contiguous sub-ground 1..len(labels).

    labels[i] is the original element playing the role of i+1 in the
    sub-ground set; every element of `mask` must appear in labels.
    """
    out = 0
    for newbit, element in enumerate(labels):
        if mask >> (element - 1) & 1:
            out |= 1 << newbit
            mask &= ~(1 << (element - 1))
    if mask:
        raise ElementOutOfRange("mask has elements outside the label map")
    return out


def embed_mask(mask: int, labels: tuple[int, ...]) -> int:
    """Inverse of project_mask: carry a sub-ground mask back to original labels."""
    out = 0
    for newbit, element in enumerate(labels):
        if mask >> newbit & 1:
            out |= 1 << (element - 1)
    return out


def _canonical(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(masks, key=lambda m: (m.bit_count(), m)))


@dataclass(frozen=True)
class BuildingSet:
    """A validated building set; construct via validate_building_set.

    Direct construction trusts the caller (used by enumeration and by
    restriction/contraction, whose outputs are building sets whenever
    the input is one).
    """

    ground_size: int
    masks: tuple[int, ...]

    @property
    def full_mask(self) -> int:
        return (1 << self.ground_size) - 1

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.masks)

    @cached_property
    def members(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset_of(m) for m in self.masks)

    @cached_property
    def max_masks(self) -> tuple[int, ...]:
        """Maximal members; pairwise disjoint and covering the ground set."""
        kept: list[int] = []
        for m in sorted(self.masks, key=lambda m: -m.bit_count()):
            if not any(m & ~k == 0 for k in kept):
                kept.append(m)
        return tuple(sorted(kept))

    @cached_property
    def components(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset_of(m) for m in self.max_masks)

    @property
    def is_connected(self) -> bool:
        return self.full_mask in self.member_set

    def has_mask(self, mask: int) -> bool:
        return mask in self.member_set

    def has_member(self, items: Iterable[int]) -> bool:
        return mask_of(items) in self.member_set

    def members_within(self, cmask: int) -> list[int]:
        """Member masks contained in cmask, canonical order (the restriction family)."""
        return [m for m in self.masks if m & ~cmask == 0]

    def max_members_within(self, cmask: int) -> list[int]:
        """Maximal members of the restriction to cmask, sorted by mask.

        Overlapping members inside cmask union within cmask, so the
        maximal ones are pairwise disjoint and partition the union of
        the restriction, which is cmask itself (singletons).
        """
        kept: list[int] = []
        for m in sorted(self.members_within(cmask), key=lambda m: -m.bit_count()):
            if not any(m & ~k == 0 for k in kept):
                kept.append(m)
        return sorted(kept)

    def restriction(self, csubset: Iterable[int] | int) -> tuple["BuildingSet", tuple[int, ...]]:
        """Members inside the given subset, relabeled to 1..|C|.

        Returns the restriction and the label map: labels[i] is the
        original element renamed to i+1.
        """
        cmask = csubset if isinstance(csubset, int) else mask_of(csubset)
        if cmask == 0:
            raise EmptySubset("restriction to the empty set")
        if cmask & ~self.full_mask:
            raise ElementOutOfRange("subset has elements outside the ground set")
        labels = elements_of(cmask)
        sub = [project_mask(m, labels) for m in self.members_within(cmask)]
        return BuildingSet(len(labels), _canonical(sub)), labels

    def contraction(self, csubset: Iterable[int] | int) -> tuple["BuildingSet", tuple[int, ...]]:
        """Traces of members on the complement of C, relabeled to 1..|S \\ C|.

        The family {I nonempty, disjoint from C : I in B or C|I in B};
        every such I arises as m & ~C for a member m contained in the
        complement or containing C, which keeps this linear in |B|.
        """
        cmask = csubset if isinstance(csubset, int) else mask_of(csubset)
        if cmask == 0:
            raise EmptySubset("contraction of the empty set")
        if cmask & ~self.full_mask:
            raise ElementOutOfRange("subset has elements outside the ground set")
        if cmask == self.full_mask:
            raise NotProperSubset("cannot contract the full ground set")
        rest = self.full_mask & ~cmask
        traces = set()
        for m in self.masks:
            if m & ~rest == 0:
                traces.add(m)
            elif m & cmask == cmask and m & rest:
                traces.add(m & rest)
        labels = elements_of(rest)
        sub = [project_mask(m, labels) for m in traces]
        return BuildingSet(len(labels), _canonical(sub)), labels

    def relabeled(self, perm: dict[int, int]) -> "BuildingSet":
        """Apply a ground-set permutation {old: new} to every member."""
        out = []
        for m in self.masks:
            out.append(mask_of(perm[i] for i in elements_of(m)))
        return BuildingSet(self.ground_size, _canonical(out))


def validate_building_set(ground_size: int, family: Iterable[Iterable[int]]) -> BuildingSet:
    """Check both defining conditions and return the canonical building set.

    Members are deduplicated and sorted by (size, mask).  Raises
    EmptyMember, ElementOutOfRange, MissingSingleton, or NotUnionClosed
    (reporting the first violating pair in canonical order).
    """
    ground_size = int(ground_size)
    if ground_size < 1:
        raise ElementOutOfRange("ground set must have at least one element")
    if ground_size > MAX_GROUND:
        raise GroundSetTooLarge(f"ground set capped at {MAX_GROUND} elements")
    seen = set()
    for member in family:
        items = tuple(member)
        if not items:
            raise EmptyMember("the empty set is not a valid member")
        seen.add(mask_of(items, ground_size))
    for i in range(ground_size):
        if (1 << i) not in seen:
            raise MissingSingleton(f"singleton {{{i + 1}}} is missing")
    masks = _canonical(seen)
    for a in range(len(masks)):
        for b in range(a + 1, len(masks)):
            x, y = masks[a], masks[b]
            if x & y and (x | y) not in seen:
                raise NotUnionClosed(frozenset_of(x), frozenset_of(y))
    return BuildingSet(ground_size, masks)


def _close_unions(masks: set[int]) -> set[int]:
    """Smallest superfamily closed under unions of overlapping members."""
    out = set(masks)
    work = list(masks)
    while work:
        x = work.pop()
        for y in list(out):
            if x != y and x & y:
                u = x | y
                if u not in out:
                    out.add(u)
                    work.append(u)
    return out


def _family_key(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(masks))


def enumerate_building_sets(
    ground_size: int,
    connected_only: bool = False,
    up_to_relabeling: bool = False,
) -> Iterator[BuildingSet]:
    """Yield every building set on the ground set exactly once.

    Walks the non-singleton subsets in (size, mask) order deciding
    include/exclude, propagating forced unions on include.  A forced
    union always has strictly larger cardinality than both parents, so
    it sits later in the order than every decision already made; no
    branch is ever pruned and each family appears exactly once, in
    lexicographic order of its indicator over the candidate list.

    With connected_only, the full ground set is forced as a member.
    With up_to_relabeling, only the lexicographically least family in
    its relabeling orbit is yielded.
    """
    ground_size = int(ground_size)
    if ground_size < 1:
        raise ElementOutOfRange("ground set must have at least one element")
    if ground_size > MAX_ENUMERATION_GROUND:
        raise GroundSetTooLarge(
            f"enumeration capped at ground sets of {MAX_ENUMERATION_GROUND} elements"
        )
    full = (1 << ground_size) - 1
    singles = [1 << i for i in range(ground_size)]
    cands = _canonical(m for m in range(1, full + 1) if m.bit_count() >= 2)
    perms = None
    if up_to_relabeling:
        perms = [
            {i + 1: p[i] for i in range(ground_size)}
            for p in permutations(range(1, ground_size + 1))
        ]

    def emit(included: frozenset[int]) -> BuildingSet | None:
        b = BuildingSet(ground_size, _canonical(set(singles) | included))
        if perms is not None:
            key = _family_key(b.masks)
            for perm in perms:
                if _family_key(b.relabeled(perm).masks) < key:
                    return None
        return b

    def walk(idx: int, included: frozenset[int]) -> Iterator[BuildingSet]:
        if idx == len(cands):
            b = emit(included)
            if b is not None:
                yield b
            return
        c = cands[idx]
        if c in included:
            yield from walk(idx + 1, included)
            return
        yield from walk(idx + 1, included)
        yield from walk(idx + 1, frozenset(_close_unions(set(included) | {c})))

    seed = frozenset({full}) if connected_only and ground_size >= 2 else frozenset()
    yield from walk(0, seed)


def random_building_set(ground_size: int, rng: Random) -> BuildingSet:
    """Union-closure of a few random non-singleton subsets.

    Deterministic in the rng state; mixes sparse, dense, connected and
    disconnected outputs, which is what the oracle sweeps want.
    """
    ground_size = int(ground_size)
    if ground_size < 2:
        raise ElementOutOfRange("random sampling needs at least two elements")
    if ground_size > MAX_GROUND:
        raise GroundSetTooLarge(f"ground set capped at {MAX_GROUND} elements")
    count = rng.randint(0, ground_size + 2)
    gens: set[int] = set()
    for _ in range(count):
        while True:
            m = rng.randrange(1, 1 << ground_size)
            if m.bit_count() >= 2:
                gens.add(m)
                break
    masks = set(1 << i for i in range(ground_size)) | _close_unions(gens)
    return BuildingSet(ground_size, _canonical(masks))


# ---------------------------------------------------------------------------
# Simple graphs and the graphical construction.


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected loop-free graph on nodes 1..node_count."""

    node_count: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        node_count = int(node_count)
        if node_count < 1:
            raise ElementOutOfRange("graph needs at least one node")
        if node_count > MAX_GROUND:
            raise GroundSetTooLarge(f"graphs capped at {MAX_GROUND} nodes")
        norm = set()
        for a, b in edges:
            a, b = int(a), int(b)
            if a == b:
                raise ElementOutOfRange(f"loop at node {a}")
            if not (1 <= a <= node_count and 1 <= b <= node_count):
                raise ElementOutOfRange(f"edge ({a},{b}) outside node range")
            norm.add((min(a, b), max(a, b)))
        return cls(node_count, frozenset(norm))

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, [(i, i + 1) for i in range(1, n)])

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        if n < 3:
            raise ElementOutOfRange("cycles need at least 3 nodes")
        return cls.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """adjacency[i] is the neighbor mask of node i+1."""
        adj = [0] * self.node_count
        for a, b in self.edges:
            adj[a - 1] |= 1 << (b - 1)
            adj[b - 1] |= 1 << (a - 1)
        return tuple(adj)

    def induced_connected(self, mask: int) -> bool:
        if mask == 0:
            return False
        adj = self.adjacency
        start = mask & -mask
        reached = start
        frontier = start
        while frontier:
            grow = 0
            m = frontier
            while m:
                bit = m & -m
                grow |= adj[bit.bit_length() - 1] & mask
                m &= m - 1
            frontier = grow & ~reached
            reached |= grow
        return reached == mask

    @cached_property
    def component_masks(self) -> tuple[int, ...]:
        left = (1 << self.node_count) - 1
        comps = []
        adj = self.adjacency
        while left:
            start = left & -left
            reached = start
            frontier = start
            while frontier:
                grow = 0
                m = frontier
                while m:
                    bit = m & -m
                    grow |= adj[bit.bit_length() - 1]
                    m &= m - 1
                frontier = grow & ~reached
                reached |= grow
            comps.append(reached)
            left &= ~reached
        return tuple(sorted(comps))


def graphical_building_set(g: SimpleGraph) -> BuildingSet:
    """Vertex sets of the nonempty connected induced subgraphs."""
    if g.node_count > 16:
        raise GroundSetTooLarge("graphical construction scans 2^n subsets; 16-node cap")
    masks = [m for m in range(1, 1 << g.node_count) if g.induced_connected(m)]
    return BuildingSet(g.node_count, _canonical(masks))


def is_graph_weak_fano_criterion(g: SimpleGraph) -> bool:
    """Forbidden-pattern test used to cross-validate the building-set criterion.

    True iff no connected component has, as a proper induced subgraph,
    a cycle of length >= 4 or a diamond (K4 minus an edge).
    """
    if g.node_count > 16:
        raise GroundSetTooLarge("induced-subgraph scan capped at 16 nodes")
    adj = g.adjacency
    for comp in g.component_masks:
        sub = comp
        while sub:
            k = sub.bit_count()
            if sub != comp and k >= 4:
                degs = []
                m = sub
                while m:
                    bit = m & -m
                    degs.append((adj[bit.bit_length() - 1] & sub).bit_count())
                    m &= m - 1
                edge_count = sum(degs) // 2
                if k == 4 and edge_count == 5:
                    return False
                if all(d == 2 for d in degs) and g.induced_connected(sub):
                    return False
            sub = (sub - 1) & comp
    return True


# ---------------------------------------------------------------------------
# Text and JSON formats.


def format_building_set(b: BuildingSet) -> str:
    lines = [f"ground {b.ground_size}"]
    for m in b.masks:
        lines.append(" ".join(str(i) for i in elements_of(m)))
    return "\n".join(lines) + "\n"


def building_set_json(b: BuildingSet) -> dict:
    return {
        "ground": b.ground_size,
        "sets": [list(elements_of(m)) for m in b.masks],
    }


def _parse_int(token: str, where: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{where}: expected an integer, got {token!r}") from None


def parse_building_set(text: str) -> BuildingSet:
    """Parse either the line format or the JSON object format.

    Line format: `ground <k>`, then one member per line as
    space-separated elements.  JSON: {"ground": k, "sets": [[..], ..]}.
    Duplicate members are rejected by both parsers.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from None
        if not isinstance(doc, dict) or "ground" not in doc or "sets" not in doc:
            raise ParseError("JSON document needs fields 'ground' and 'sets'")
        ground = doc["ground"]
        if not isinstance(ground, int):
            raise ParseError("'ground' must be an integer")
        sets = doc["sets"]
        if not isinstance(sets, list) or any(not isinstance(s, list) for s in sets):
            raise ParseError("'sets' must be an array of integer arrays")
        seen = set()
        for s in sets:
            key = tuple(sorted(set(s)))
            if key in seen:
                raise ParseError(f"duplicate member {list(key)}")
            seen.add(key)
        return validate_building_set(ground, sets)

    ground = None
    members: list[list[int]] = []
    seen_masks: set[tuple[int, ...]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if ground is None:
            if tokens[0] != "ground" or len(tokens) != 2:
                raise ParseError(f"line {lineno}: expected 'ground <k>'")
            ground = _parse_int(tokens[1], f"line {lineno}")
            continue
        member = [_parse_int(t, f"line {lineno}") for t in tokens]
        key = tuple(sorted(set(member)))
        if key in seen_masks:
            raise ParseError(f"line {lineno}: duplicate member {list(key)}")
        seen_masks.add(key)
        members.append(member)
    if ground is None:
        raise ParseError("missing 'ground <k>' header line")
    return validate_building_set(ground, members)
