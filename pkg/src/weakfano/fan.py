"""The smooth complete fan attached to a connected building set.

For a connected building set on n+1 elements the fan lives in R^n: the
member I gets the ray generated by sum of e_i over i in I, written in
the basis where e_{n+1} = -(e_1 + ... + e_n), and the maximal cones are
spanned by the maximal nested sets.  Walls are the shared codimension-1
faces; each one separates exactly two maximal cones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from random import Random
from typing import Callable, Iterable

from ._linalg import determinant, mat_vec, unimodular_inverse
from .core import BuildingSet, mask_of
from .errors import ElementOutOfRange, FullSetRay, NotConnected, WallPairingError
from .nested import maximal_nested_sets


def ray_vector(member: int | Iterable[int], n: int) -> tuple[int, ...]:
    """Primitive ray generator of a subset of {1..n+1}, in n coordinates.

    Coordinate j is [j in member] minus [n+1 in member]; the full set
    would map to zero and is rejected.
    """
    mask = member if isinstance(member, int) else mask_of(member, n + 1)
    full = (1 << (n + 1)) - 1
    if mask <= 0 or mask & ~full:
        raise ElementOutOfRange(f"subset does not fit inside 1..{n + 1}")
    if mask == full:
        raise FullSetRay("the full ground set spans no ray")
    last = (mask >> n) & 1
    return tuple(((mask >> (j - 1)) & 1) - last for j in range(1, n + 1))


@dataclass(frozen=True)
class MaximalCone:
    """A maximal cone; member_masks and ray_indexes are aligned."""

    member_masks: tuple[int, ...]
    ray_indexes: tuple[int, ...]


@dataclass(frozen=True)
class Wall:
    """A codimension-1 face between two maximal cones.

    shared holds the n-1 common member masks; cones and flank_masks are
    aligned, flank_masks[i] being the member of cones[i] not on the wall.
    """

    shared: tuple[int, ...]
    cones: tuple[int, int]
    flank_masks: tuple[int, int]


@dataclass(frozen=True)
class Fan:
    building_set: BuildingSet
    ray_masks: tuple[int, ...]
    cones: tuple[MaximalCone, ...]
    walls: tuple[Wall, ...]

    @property
    def dimension(self) -> int:
        return self.building_set.ground_size - 1

    @cached_property
    def ray_vectors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(ray_vector(m, self.dimension) for m in self.ray_masks)

    @cached_property
    def ray_index(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.ray_masks)}

    @cached_property
    def wall_lookup(self) -> dict[frozenset[int], int]:
        return {frozenset(w.shared): i for i, w in enumerate(self.walls)}

    @cached_property
    def coefficient_matrices(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """Per cone, the matrix turning a vector into its ray coordinates.

        Rows of the inverse transpose of the generator matrix; cones of a
        nonsingular fan have unimodular generators, so entries are integers.
        """
        out = []
        for cone in self.cones:
            rows = [self.ray_vectors[i] for i in cone.ray_indexes]
            inv = unimodular_inverse(rows)
            n = len(rows)
            out.append(tuple(tuple(inv[j][i] for j in range(n)) for i in range(n)))
        return tuple(out)

    def cone_coordinates(self, cone_idx: int, vec: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(mat_vec(self.coefficient_matrices[cone_idx], vec))


def fan_from_building_set(b: BuildingSet) -> Fan:
    """Build the fan; requires a connected building set."""
    if not b.is_connected:
        raise NotConnected("the fan needs a connected building set")
    ray_masks = tuple(m for m in b.masks if m != b.full_mask)
    ray_pos = {m: i for i, m in enumerate(ray_masks)}
    cones = []
    for ns in maximal_nested_sets(b):
        cones.append(MaximalCone(ns, tuple(ray_pos[m] for m in ns)))

    ridges: dict[frozenset[int], list[tuple[int, int]]] = {}
    if b.ground_size >= 2:
        for ci, cone in enumerate(cones):
            for drop in cone.member_masks:
                key = frozenset(m for m in cone.member_masks if m != drop)
                ridges.setdefault(key, []).append((ci, drop))
    walls = []
    for key, hits in sorted(ridges.items(), key=lambda kv: sorted(kv[1])):
        if len(hits) != 2:
            raise WallPairingError(
                f"ridge shared by {len(hits)} cones; expected exactly 2"
            )
        (ca, fa), (cb, fb) = sorted(hits)
        shared = tuple(sorted(key, key=lambda m: (m.bit_count(), m)))
        walls.append(Wall(shared, (ca, cb), (fa, fb)))
    return Fan(b, ray_masks, tuple(cones), tuple(walls))


def check_nonsingular(fan: Fan) -> bool:
    """True iff every maximal cone has a unimodular generator matrix."""
    for cone in fan.cones:
        rows = [fan.ray_vectors[i] for i in cone.ray_indexes]
        if determinant(rows) not in (1, -1):
            return False
    return True


@dataclass(frozen=True)
class CompletenessResult:
    ok: bool
    samples: int
    failing_face: tuple[int, ...] | None = None
    failing_point: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_complete(
    fan: Fan,
    samples: int = 1000,
    seed: int = 0,
    point_source: Callable[[Random, int], tuple[int, ...]] | None = None,
    drop_cone: int | None = None,
) -> CompletenessResult:
    """Test that the maximal cones cover the whole space.

    Structural pass first: every ridge must lie on exactly two cones.
    Then random points all have to land in some cone.  point_source and
    drop_cone exist so tests can break the fan on purpose.
    """
    n = fan.dimension
    live = [i for i in range(len(fan.cones)) if i != drop_cone]
    if n == 0:
        return CompletenessResult(bool(live), 0)

    ridges: dict[frozenset[int], int] = {}
    for ci in live:
        cone = fan.cones[ci]
        for drop in cone.member_masks:
            key = frozenset(m for m in cone.member_masks if m != drop)
            ridges[key] = ridges.get(key, 0) + 1
    for key, count in sorted(ridges.items(), key=lambda kv: sorted(kv[0])):
        if count != 2:
            face = tuple(sorted(key, key=lambda m: (m.bit_count(), m)))
            return CompletenessResult(False, 0, failing_face=face)

    rng = Random(seed)
    src = point_source or (lambda r, dim: tuple(r.randint(-9, 9) for _ in range(dim)))
    for done in range(samples):
        p = src(rng, n)
        if not any(
            all(x >= 0 for x in fan.cone_coordinates(ci, p)) for ci in live
        ):
            return CompletenessResult(False, done + 1, failing_point=tuple(p))
    return CompletenessResult(True, samples)


@dataclass(frozen=True)
class ComponentFan:
    """Fan of one connected component, with its original element labels."""

    labels: tuple[int, ...]
    fan: Fan


@dataclass(frozen=True)
class ProductFanReport:
    parts: tuple[ComponentFan, ...]
    dimension: int


def product_fan_report(b: BuildingSet) -> ProductFanReport:
    """Per-component fans of a possibly disconnected building set.

    Size-1 components contribute a point factor and no fan, so they are
    dropped; an all-singleton building set yields an empty report.
    """
    parts = []
    for comp in b.max_masks:
        if comp.bit_count() < 2:
            continue
        sub, labels = b.restriction(comp)
        parts.append(ComponentFan(labels, fan_from_building_set(sub)))
    return ProductFanReport(tuple(parts), sum(p.fan.dimension for p in parts))
