"""Anticanonical wall degrees and the weak Fano decision.

Every wall tau of the fan carries the number (-K . V(tau)) = 2 + sum of
the coefficients in the unique relation v + v' + sum a_i v_i = 0 over
the wall's rays, where v, v' generate the two flanking cones.  The
variety is weak Fano iff every wall degree is nonnegative, and Fano iff
every wall degree is positive.

The combinatorial criterion avoids the fan entirely: it only inspects
overlapping incomparable member pairs inside each component.  When the
criterion fails, a descent through repaired member pairs produces an
explicit wall of negative degree; negative_witness follows one
canonical descent and witness_final_pairs explores every admissible
branch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import BuildingSet, elements_of, embed_mask, frozenset_of, mask_of
from .errors import (
    CaseNotMatched,
    CriterionSatisfied,
    NotAMember,
    NotConnected,
    StalledRecursion,
    WallPairingError,
)
from .fan import Fan, Wall, fan_from_building_set
from .nested import maximal_nested_sets, maximal_nested_sets_within


@dataclass(frozen=True)
class WallDegree:
    """Degree of the wall curve with the relation coefficients.

    coefficients[i] is the multiplier of the i-th shared ray in the
    relation flank_a + flank_b + sum coefficients[i] * shared[i] = 0.
    """

    wall: Wall
    degree: int
    coefficients: tuple[int, ...]


def wall_degree(fan: Fan, wall: Wall) -> WallDegree:
    """Compute the wall degree through the flanking cone's dual basis."""
    ca = wall.cones[0]
    cone = fan.cones[ca]
    vb = fan.ray_vectors[fan.ray_index[wall.flank_masks[1]]]
    x = fan.cone_coordinates(ca, vb)
    pos = cone.member_masks.index(wall.flank_masks[0])
    if x[pos] != -1:
        raise WallPairingError(
            "opposite ray has coefficient "
            f"{x[pos]} on the leaving ray; the wall is not interior"
        )
    coeff = {}
    for i, m in enumerate(cone.member_masks):
        if i != pos:
            coeff[m] = -x[i]
    ordered = tuple(coeff[m] for m in wall.shared)
    return WallDegree(wall, 2 + sum(ordered), ordered)


def solve_wall_relation(fan: Fan, wall: Wall) -> tuple[int, tuple[int, ...]]:
    """Independent wall degree via exact elimination on the raw relation.

    Solves the overdetermined system sum a_i v_i = -(v + v') with
    Fractions and no cone bases; used to cross-check wall_degree.
    """
    n = fan.dimension
    shared_vecs = [fan.ray_vectors[fan.ray_index[m]] for m in wall.shared]
    va = fan.ray_vectors[fan.ray_index[wall.flank_masks[0]]]
    vb = fan.ray_vectors[fan.ray_index[wall.flank_masks[1]]]
    cols = len(shared_vecs)
    rows = [
        [Fraction(shared_vecs[j][i]) for j in range(cols)]
        + [Fraction(-(va[i] + vb[i]))]
        for i in range(n)
    ]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        rows[r] = [v / rows[r][c] for v in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * bv for a, bv in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if r != cols or any(rows[i][cols] != 0 for i in range(r, n)):
        raise WallPairingError("wall relation is not unique and consistent")
    sol = [rows[pivots.index(c)][cols] for c in range(cols)]
    if any(v.denominator != 1 for v in sol):
        raise WallPairingError("wall relation has non-integer coefficients")
    coeffs = tuple(int(v) for v in sol)
    return 2 + sum(coeffs), coeffs


def closed_form_wall_degree(b: BuildingSet, wall: Wall) -> int:
    """Wall degree straight from the member combinatorics, no linear algebra.

    b must be the connected building set whose fan owns the wall.  The
    relation always reads: flanks plus the members completing their
    union up to some shared member (or the whole ground set), minus the
    maximal members inside the flanks' intersection, minus the completed
    union if it is a proper member.
    """
    i1, i2 = wall.flank_masks
    shared = wall.shared
    coeff = {m: 0 for m in shared}

    inter = i1 & i2
    mcount = 0
    if inter:
        pieces = b.max_members_within(inter)
        if any(m not in coeff for m in pieces):
            raise CaseNotMatched(
                "intersection pieces missing from the wall; not a fan wall"
            )
        for m in pieces:
            coeff[m] -= 1
        mcount = len(pieces)

    union = i1 | i2
    targets = [m for m in shared if m & union == union and m != union]
    targets.sort(key=lambda m: (m.bit_count(), m))
    if union in coeff:
        targets.insert(0, union)
    targets.append(b.full_mask)
    for t in targets:
        diff = t & ~union
        inside = [m for m in shared if m & ~diff == 0]
        family = []
        for m in sorted(inside, key=lambda m: -m.bit_count()):
            if not any(m & ~k == 0 for k in family):
                family.append(m)
        covered = 0
        for m in family:
            covered |= m
        if covered != diff:
            continue
        for m in family:
            coeff[m] += 1
        if t != b.full_mask:
            coeff[t] -= 1
        return 2 + sum(coeff.values())
    raise CaseNotMatched("no shared member or the full set completes the flank union")


# ---------------------------------------------------------------------------
# The pairwise criterion and the brute-force survey.


@dataclass(frozen=True)
class FailingPair:
    """A member pair violating the weak Fano condition in its component."""

    component: frozenset[int]
    first: frozenset[int]
    second: frozenset[int]
    union_is_component: bool
    piece_count: int


@dataclass(frozen=True)
class WallReport:
    """One wall of a component fan, spelled in the original labels."""

    component: frozenset[int]
    shared: tuple[frozenset[int], ...]
    flanks: tuple[frozenset[int], frozenset[int]]
    degree: int
    coefficients: tuple[int, ...]


@dataclass(frozen=True)
class ComponentVerdict:
    """Weak Fano answer for one component of size at least two."""

    component: frozenset[int]
    verdict: bool
    failing_pair: FailingPair | None = None
    wall_count: int | None = None
    min_degree: int | None = None
    first_negative: WallReport | None = None
    min_wall: WallReport | None = None


@dataclass(frozen=True)
class WeakFanoReport:
    """Verdict with its witness; size-1 components carry no data and are
    omitted from per_component (a point factor changes nothing)."""

    verdict: bool
    method: str
    witness: FailingPair | WallReport | None
    per_component: tuple[ComponentVerdict, ...]
    min_degree: int | None = None


def _component_failing_pair(
    b: BuildingSet, comp: int
) -> tuple[frozenset[int], frozenset[int], int] | None:
    """First pair (canonical order) inside comp breaking the condition.

    A pair of overlapping incomparable members passes iff their
    intersection is a member, or their union is the whole component and
    the intersection splits into at most two maximal pieces.
    """
    members = b.members_within(comp)
    for a in range(len(members)):
        for c in range(a + 1, len(members)):
            x, y = members[a], members[c]
            if not (x & y) or x & ~y == 0 or y & ~x == 0:
                continue
            if b.has_mask(x & y):
                continue
            pieces = len(b.max_members_within(x & y))
            if (x | y) == comp and pieces <= 2:
                continue
            return frozenset_of(x), frozenset_of(y), pieces
    return None


def weak_fano_criterion(b: BuildingSet) -> WeakFanoReport:
    """Decide weak Fano from member pairs alone; no fan is built."""
    verdicts = []
    witness = None
    for comp in b.max_masks:
        if comp.bit_count() < 2:
            continue
        hit = _component_failing_pair(b, comp)
        if hit is None:
            verdicts.append(ComponentVerdict(frozenset_of(comp), True))
            continue
        x, y, pieces = hit
        pair = FailingPair(
            frozenset_of(comp), x, y,
            frozenset_of(comp) == x | y, pieces,
        )
        verdicts.append(ComponentVerdict(frozenset_of(comp), False, failing_pair=pair))
        if witness is None:
            witness = pair
    return WeakFanoReport(
        verdict=witness is None,
        method="criterion",
        witness=witness,
        per_component=tuple(verdicts),
    )


def is_weak_fano_criterion(b: BuildingSet) -> bool:
    return weak_fano_criterion(b).verdict


def _embed_wall(
    comp: frozenset[int], labels: tuple[int, ...], wd: WallDegree
) -> WallReport:
    wall = wd.wall
    return WallReport(
        component=comp,
        shared=tuple(frozenset_of(embed_mask(m, labels)) for m in wall.shared),
        flanks=(
            frozenset_of(embed_mask(wall.flank_masks[0], labels)),
            frozenset_of(embed_mask(wall.flank_masks[1], labels)),
        ),
        degree=wd.degree,
        coefficients=wd.coefficients,
    )


def weak_fano_bruteforce(b: BuildingSet) -> WeakFanoReport:
    """Decide weak Fano by computing every wall degree on every component.

    The witness is the first negative wall in construction order, not
    the most negative one; min_degree still reports the overall minimum.
    """
    verdicts = []
    witness = None
    overall: int | None = None
    for comp in b.max_masks:
        if comp.bit_count() < 2:
            continue
        sub, labels = b.restriction(comp)
        fan = fan_from_building_set(sub)
        comp_set = frozenset_of(comp)
        first_neg = None
        best: WallDegree | None = None
        for wall in fan.walls:
            wd = wall_degree(fan, wall)
            if best is None or wd.degree < best.degree:
                best = wd
            if wd.degree < 0 and first_neg is None:
                first_neg = wd
        min_deg = None if best is None else best.degree
        verdicts.append(
            ComponentVerdict(
                comp_set,
                first_neg is None,
                wall_count=len(fan.walls),
                min_degree=min_deg,
                first_negative=(
                    None if first_neg is None else _embed_wall(comp_set, labels, first_neg)
                ),
                min_wall=(
                    None if best is None else _embed_wall(comp_set, labels, best)
                ),
            )
        )
        if first_neg is not None and witness is None:
            witness = verdicts[-1].first_negative
        if min_deg is not None and (overall is None or min_deg < overall):
            overall = min_deg
    return WeakFanoReport(
        verdict=witness is None,
        method="bruteforce",
        witness=witness,
        per_component=tuple(verdicts),
        min_degree=overall,
    )


def fano_bruteforce(b: BuildingSet) -> bool:
    """Fano needs every wall degree positive; no walls means a point."""
    report = weak_fano_bruteforce(b)
    return report.min_degree is None or report.min_degree >= 1


# ---------------------------------------------------------------------------
# Witness descent: from a bad pair to an explicit negative wall.


@dataclass(frozen=True)
class TraceStep:
    first: frozenset[int]
    second: frozenset[int]
    tag: str


@dataclass(frozen=True)
class WitnessLayer:
    first: frozenset[int]
    second: frozenset[int]
    mode: str
    pivots: tuple[int, int]


@dataclass(frozen=True)
class WitnessTrace:
    steps: tuple[TraceStep, ...]
    layers: tuple[WitnessLayer, ...]
    final_first: frozenset[int]
    final_second: frozenset[int]
    pivots: tuple[int, int]
    shared: tuple[frozenset[int], ...]
    final_wall: WallDegree
    degree: int
    coefficients: tuple[int, ...]


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length()


def _bit_elements(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask &= mask - 1
    return out


def _canon_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


def _flank_family(
    b: BuildingSet, side: int, nset: tuple[int, ...], imax: list[int],
    npset: tuple[int, ...], dmax: list[int],
) -> list[int]:
    return [side, *nset, *imax, *npset, *dmax]


def _violations(
    b: BuildingSet, fam: list[int], side: int, pivot: int
) -> tuple[list[int], list[int], list[int]]:
    """Break a candidate flank family into its defects.

    Returns (partners, grow_unions, swallow_unions): partners are the
    members overlapping the side incomparably; grow unions are member
    unions of disjoint subfamilies avoiding the pivot; swallow unions
    contain the pivot (hence the side itself).  All lists are in
    canonical order and empty iff the family is nested.
    """
    ordered = sorted(set(fam), key=_canon_key)
    partners = []
    for i in range(len(ordered)):
        for j in range(i + 1, len(ordered)):
            x, y = ordered[i], ordered[j]
            if x & y and x & ~y and y & ~x:
                if x == side:
                    partners.append(y)
                elif y == side:
                    partners.append(x)
                else:
                    raise StalledRecursion(
                        "an overlap away from the side member; descent broken"
                    )
    unions: dict[int, tuple[int, ...]] = {}
    for m in ordered:
        fresh = {m: (m,)}
        for u, f in unions.items():
            if u & m == 0 and (u | m) not in unions and (u | m) not in fresh:
                fresh[u | m] = f + (m,)
        unions.update(fresh)
    bad = [
        (tuple(_canon_key(m) for m in f), u)
        for u, f in unions.items()
        if len(f) >= 2 and b.has_mask(u)
    ]
    bad.sort()
    pivot_bit = 1 << (pivot - 1)
    grow = [u for _, u in bad if not u & pivot_bit]
    swallow = [u for _, u in bad if u & pivot_bit]
    return partners, grow, swallow


def _apply_defect(
    kind: str, k: int, sides: tuple[int, int], payload: int, deltap: int
) -> tuple[int, int]:
    """One repair move on the ordered pair; returns the repaired pair."""
    s1, s2 = sides
    side = sides[k]
    if kind == "absorb-partner":
        repaired = side | payload
        return (repaired, s2) if k == 0 else (s1, repaired)
    if kind == "grow-both":
        add = payload & deltap
        if add == 0 or payload & ~(s1 | s2):
            raise StalledRecursion("a growing union escaping the pair")
        return (s1 | add, s2 | add)
    if payload & ~side & ~deltap:
        raise StalledRecursion("a swallowing union escaping the side")
    return (payload, s2) if k == 0 else (s1, payload)


def _layer_data(b: BuildingSet, s1: int, s2: int, i1: int, i2: int):
    inter = s1 & s2
    piv = (1 << (i1 - 1)) | (1 << (i2 - 1))
    deltap = (s1 ^ s2) & ~piv
    nset = maximal_nested_sets_within(b, inter)[0]
    imax = b.max_members_within(inter)
    npset = maximal_nested_sets_within(b, deltap)[0] if deltap else ()
    dmax = b.max_members_within(deltap) if deltap else []
    return inter, deltap, nset, imax, npset, dmax


def _first_defect(
    b: BuildingSet, s1: int, s2: int, i1: int, i2: int,
    nset, imax, npset, dmax, deltap: int,
) -> tuple[str, int, int, int] | None:
    """Deterministic defect choice: lower side first, then partner,
    growing union, swallowing union, each in canonical order."""
    for k, (side, pivot) in enumerate(((s1, i1), (s2, i2))):
        fam = _flank_family(b, side, nset, imax, npset, dmax)
        partners, grow, swallow = _violations(b, fam, side, pivot)
        if partners:
            return ("absorb-partner", k, partners[0], 0)
        if grow:
            return ("grow-both", k, grow[0], 0)
        if swallow:
            return ("swallow-side", k, swallow[0], 0)
    return None


def _measure(s1: int, s2: int) -> tuple[int, int]:
    return ((s1 | s2).bit_count(), (s1 ^ s2).bit_count())


def _descend(
    b: BuildingSet, mode: str, s1: int, s2: int,
    steps: list[TraceStep], layers: list[WitnessLayer],
):
    """Run the canonical descent; returns the terminal layer data."""
    previous = None
    while True:
        if s1 & ~s2 == 0 or s2 & ~s1 == 0 or s1 & s2 == 0:
            raise StalledRecursion("descent reached a comparable or disjoint pair")
        measure = _measure(s1, s2)
        if previous is not None and measure >= previous:
            raise StalledRecursion("descent measure failed to decrease")
        previous = measure
        i1 = _lowest(s1 & ~s2)
        i2 = _lowest(s2 & ~s1)
        layers.append(
            WitnessLayer(frozenset_of(s1), frozenset_of(s2), mode, (i1, i2))
        )
        inter, deltap, nset, imax, npset, dmax = _layer_data(b, s1, s2, i1, i2)
        if mode == "missing-overlap" and b.has_mask(inter):
            raise StalledRecursion(
                "missing-overlap descent entered with a member overlap")
        if mode == "full-union" and len(imax) < 3:
            raise StalledRecursion("full-union descent entered with few pieces")

        defect = _first_defect(b, s1, s2, i1, i2, nset, imax, npset, dmax, deltap)
        if defect is None:
            steps.append(TraceStep(frozenset_of(s1), frozenset_of(s2), "base"))
            return s1, s2, i1, i2, nset, imax, npset, dmax

        kind, k, payload, _ = defect
        j1, j2 = _apply_defect(kind, k, (s1, s2), payload, deltap)
        if j1 & j2 == inter or (j1 | j2) != (s1 | s2):
            raise StalledRecursion("repair did not grow the overlap in place")
        steps.append(TraceStep(frozenset_of(j1), frozenset_of(j2), kind))

        if mode == "missing-overlap":
            if not b.has_mask(j1 & j2):
                s1, s2 = j1, j2
                continue
            if j1 == s1 and j2 == s2:
                raise StalledRecursion("repair changed nothing")
            if j1 == s1:
                s1, s2 = s2, s1
                j1, j2 = j2, j1
            cut = j1 & s2
            if b.has_mask(cut):
                steps.append(TraceStep(frozenset_of(s1), frozenset_of(cut), "overlap-cut"))
                s2 = cut
            else:
                steps.append(TraceStep(frozenset_of(j1), frozenset_of(s2), "overlap-grow"))
                s1 = j1
            continue

        pieces = b.max_members_within(j1 & j2)
        if len(pieces) >= 3:
            s1, s2 = j1, j2
            continue
        old = imax
        hub = next(
            (m for m in pieces if sum(1 for o in old if o & ~m == 0) >= 2), None
        )
        if hub is None:
            raise StalledRecursion("no piece absorbed two old pieces")
        if hub & ~s1 == 0:
            s1, s2 = s2, s1
        cut = s1 & hub
        if b.has_mask(cut):
            steps.append(TraceStep(frozenset_of(cut), frozenset_of(s2), "hub-cut"))
            s1, s2, mode = cut, s2, "missing-overlap"
        else:
            steps.append(TraceStep(frozenset_of(s1), frozenset_of(hub), "hub-swap"))
            s1, s2, mode = s1, hub, "missing-overlap"


def _assemble_shared(b: BuildingSet, terminal) -> list[int]:
    s1, s2, i1, i2, nset, imax, npset, dmax = terminal
    shared = [*nset, *imax, *npset, *dmax]
    union = s1 | s2
    if union != b.full_mask:
        sub, labels = b.contraction(union)
        chosen = maximal_nested_sets(sub)[0]
        lifted = []
        for y in chosen:
            ym = embed_mask(y, labels)
            full = union | ym
            if b.has_mask(full):
                lifted.append(full)
            elif b.has_mask(ym):
                lifted.append(ym)
            else:
                raise StalledRecursion("a contraction member lifted to nothing")
        shared = [union, *shared, *lifted]
    if len(set(shared)) != b.ground_size - 2:
        raise StalledRecursion(
            f"terminal wall has {len(set(shared))} rays; "
            f"expected {b.ground_size - 2}"
        )
    return shared


def _locate_wall(b: BuildingSet, shared: list[int], s1: int, s2: int):
    fan = fan_from_building_set(b)
    idx = fan.wall_lookup.get(frozenset(shared))
    if idx is None:
        raise StalledRecursion("terminal rays do not span a wall of the fan")
    wall = fan.walls[idx]
    if set(wall.flank_masks) != {s1, s2}:
        raise StalledRecursion("terminal wall is flanked by other members")
    return fan, wall


def _witness_entry(b: BuildingSet, first, second) -> tuple[int, int, str]:
    if not b.is_connected:
        raise NotConnected("witness descent needs a connected building set")
    m1 = first if isinstance(first, int) else mask_of(first, b.ground_size)
    m2 = second if isinstance(second, int) else mask_of(second, b.ground_size)
    for m in (m1, m2):
        if not b.has_mask(m):
            raise NotAMember(f"{set(frozenset_of(m))} is not a member")
    if not (m1 & m2) or m1 & ~m2 == 0 or m2 & ~m1 == 0:
        raise CriterionSatisfied("the pair is comparable or disjoint; nothing to do")
    if b.has_mask(m1 & m2):
        raise CriterionSatisfied("the intersection is a member; the pair is fine")
    full_union = (m1 | m2) == b.full_mask
    pieces = len(b.max_members_within(m1 & m2))
    mode = "full-union" if full_union and pieces >= 3 else "missing-overlap"
    return m1, m2, mode


def negative_witness(b: BuildingSet, first, second) -> WitnessTrace:
    """Canonical descent from a bad pair to an explicit wall with its degree.

    Accepts any overlapping incomparable pair whose intersection is not
    a member; when the pair additionally breaks the weak Fano condition
    the resulting wall degree is at most -1.
    """
    m1, m2, mode = _witness_entry(b, first, second)
    steps: list[TraceStep] = []
    layers: list[WitnessLayer] = []
    terminal = _descend(b, mode, m1, m2, steps, layers)
    shared = _assemble_shared(b, terminal)
    fan, wall = _locate_wall(b, shared, terminal[0], terminal[1])
    wd = wall_degree(fan, wall)
    return WitnessTrace(
        steps=tuple(steps),
        layers=tuple(layers),
        final_first=frozenset_of(terminal[0]),
        final_second=frozenset_of(terminal[1]),
        pivots=(terminal[2], terminal[3]),
        shared=tuple(frozenset_of(m) for m in wall.shared),
        final_wall=wd,
        degree=wd.degree,
        coefficients=wd.coefficients,
    )


def witness_final_pairs(b: BuildingSet, first, second) -> set[frozenset[frozenset[int]]]:
    """Every terminal pair reachable through admissible descent choices.

    Branches over both pivot elements, every maximal nested set on both
    sides, both defective flanks, every defect, and every allowed
    relabeling; terminal pairs are those some choice leaves defect-free.
    """
    m1, m2, mode = _witness_entry(b, first, second)
    seen: set[tuple[str, frozenset[int]]] = set()
    finals: set[frozenset[frozenset[int]]] = set()
    stack: list[tuple[str, int, int]] = [(mode, m1, m2)]
    while stack:
        mode, s1, s2 = stack.pop()
        key = (mode, frozenset((s1, s2)))
        if key in seen:
            continue
        seen.add(key)
        inter = s1 & s2
        for a, c in ((s1, s2), (s2, s1)):
            for i1 in _bit_elements(a & ~c):
                for i2 in _bit_elements(c & ~a):
                    piv = (1 << (i1 - 1)) | (1 << (i2 - 1))
                    deltap = (a ^ c) & ~piv
                    npsets = (
                        maximal_nested_sets_within(b, deltap) if deltap else [()]
                    )
                    dmax = b.max_members_within(deltap) if deltap else []
                    for nset in maximal_nested_sets_within(b, inter):
                        imax = b.max_members_within(inter)
                        for npset in npsets:
                            defects = []
                            for k, (side, pivot) in enumerate(((a, i1), (c, i2))):
                                fam = _flank_family(b, side, nset, imax, npset, dmax)
                                partners, grow, swallow = _violations(
                                    b, fam, side, pivot
                                )
                                defects.extend(("absorb-partner", k, p) for p in partners)
                                defects.extend(("grow-both", k, u) for u in grow)
                                defects.extend(("swallow-side", k, u) for u in swallow)
                            if not defects:
                                finals.add(
                                    frozenset((frozenset_of(a), frozenset_of(c)))
                                )
                                continue
                            for kind, k, payload in defects:
                                j1, j2 = _apply_defect(
                                    kind, k, (a, c), payload, deltap
                                )
                                for child in _branch_children(
                                    b, mode, a, c, j1, j2, imax
                                ):
                                    if _measure(child[1], child[2]) >= _measure(a, c):
                                        raise StalledRecursion(
                                            "a branch failed to shrink the pair"
                                        )
                                    stack.append(child)
    return finals


def _branch_children(
    b: BuildingSet, mode: str, s1: int, s2: int, j1: int, j2: int, old: list[int]
) -> list[tuple[str, int, int]]:
    """All admissible next states after one repair, mirroring _descend."""
    out = []
    if mode == "missing-overlap":
        if not b.has_mask(j1 & j2):
            return [("missing-overlap", j1, j2)]
        labelings = []
        if j1 != s1:
            labelings.append((s1, s2, j1))
        if j2 != s2:
            labelings.append((s2, s1, j2))
        for base, other, grown in labelings:
            cut = grown & other
            if b.has_mask(cut):
                out.append(("missing-overlap", base, cut))
            else:
                out.append(("missing-overlap", grown, other))
        return out
    pieces = b.max_members_within(j1 & j2)
    if len(pieces) >= 3:
        return [("full-union", j1, j2)]
    hubs = [m for m in pieces if sum(1 for o in old if o & ~m == 0) >= 2]
    for hub in hubs:
        for base, other in ((s1, s2), (s2, s1)):
            if hub & ~base == 0:
                continue
            cut = base & hub
            if b.has_mask(cut):
                out.append(("missing-overlap", cut, other))
            else:
                out.append(("missing-overlap", base, hub))
    return out
