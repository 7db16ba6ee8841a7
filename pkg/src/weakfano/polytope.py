"""Reflexive lattice polytopes from building sets and directed graphs.

A weak Fano building set yields the convex hull of its fan's primitive
ray generators; a digraph yields the convex hull of the arrow vectors
e_i - e_j inside the zero-sum hyperplane, written in the basis
f_k = e_k - e_{n+1}.  Facets are stored as inequalities
<normal, x> >= -offset with primitive integer normals, so a polytope is
reflexive exactly when every offset is 1.

Two construction routes and when each applies:
  * polytope_from_points scans point subsets for supporting hyperplanes;
    exact and dependency-free, fine for the digraph sizes here.
  * polytope_from_building_set reads the facet normals off the fan: on
    each maximal cone the anticanonical support function is the vector
    pairing to -1 with every generator, and nefness (the weak Fano gate)
    makes those vectors the complete facet candidate list.  This stays
    fast when the hull has hundreds of facets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product

from ._linalg import (
    affine_rank,
    cross_normal,
    determinant,
    matrix_rank,
    primitive_vector,
    solve_exact,
)
from .core import BuildingSet
from .errors import (
    DimensionMismatch,
    ElementOutOfRange,
    NoArrows,
    NotFullDimensional,
    NotReflexive,
    NotWeakFano,
    OriginNotInterior,
    ParseError,
)
from .fan import fan_from_building_set
from .intersect import weak_fano_criterion

Vec = tuple[int, ...]
Facet = tuple[Vec, int]


@dataclass(frozen=True)
class LatticePolytope:
    """Full-dimensional integral polytope, vertices and facets sorted.

    Facet (normal, offset) encodes <normal, x> >= -offset; normals are
    primitive and point inward.
    """

    ambient_dim: int
    vertices: tuple[Vec, ...]
    facets: tuple[Facet, ...]


def _facets_from_points(points: list[Vec], n: int) -> list[Facet]:
    """Supporting hyperplanes spanned by n-subsets of the points.

    Every facet of a full-dimensional hull contains n affinely
    independent input points, so the scan is exhaustive; subsets of
    lower affine rank contribute nothing and duplicates collapse.
    """
    if n == 1:
        lo = min(p[0] for p in points)
        hi = max(p[0] for p in points)
        return [((1,), -lo), ((-1,), hi)]
    found: set[Facet] = set()
    for subset in combinations(points, n):
        base = subset[0]
        diffs = [[q[j] - base[j] for j in range(n)] for q in subset[1:]]
        normal = primitive_vector(cross_normal(diffs))
        if not any(normal):
            continue
        dots = [sum(u * x for u, x in zip(normal, p)) for p in points]
        val = sum(u * x for u, x in zip(normal, base))
        if all(d >= val for d in dots):
            found.add((tuple(normal), -val))
        elif all(d <= val for d in dots):
            found.add((tuple(-u for u in normal), val))
    return sorted(found)


def _tight_rank_vertices(points: list[Vec], facets: list[Facet], n: int) -> list[Vec]:
    """Points whose tight facet normals span the whole space."""
    out = []
    for p in points:
        tight = [
            list(normal)
            for normal, off in facets
            if sum(u * x for u, x in zip(normal, p)) == -off
        ]
        if len(tight) >= n and matrix_rank(tight) == n:
            out.append(p)
    return sorted(out)


def polytope_from_points(points) -> LatticePolytope:
    """Exact hull of integer points; requires a full-dimensional span."""
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        raise NotFullDimensional("no points given")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatch("points of mixed lengths")
    rank = affine_rank(pts)
    if rank != n:
        raise NotFullDimensional(
            f"points span an affine space of dimension {rank}, not {n}"
        )
    facets = _facets_from_points(pts, n)
    return LatticePolytope(n, tuple(_tight_rank_vertices(pts, facets, n)), tuple(facets))


def _cone_support_vector(fan, cone_idx: int) -> Vec:
    """The vector pairing to -1 with every generator of one cone.

    Rows of the cone's coefficient matrix are the dual basis, so the
    answer is minus their sum; smoothness keeps it integral.
    """
    m = fan.coefficient_matrices[cone_idx]
    n = fan.dimension
    return tuple(-sum(m[i][j] for i in range(n)) for j in range(n))


def _component_geometry(sub: BuildingSet) -> tuple[list[Vec], list[Vec]]:
    """Rays and deduplicated facet-candidate normals of one component fan."""
    fan = fan_from_building_set(sub)
    rays = [tuple(v) for v in fan.ray_vectors]
    normals: list[Vec] = []
    seen: set[Vec] = set()
    for idx in range(len(fan.cones)):
        u = _cone_support_vector(fan, idx)
        if u in seen:
            continue
        seen.add(u)
        if min(sum(a * x for a, x in zip(u, r)) for r in rays) < -1:
            raise NotWeakFano(
                "a cone support vector cuts below a ray; some wall degree is negative"
            )
        normals.append(u)
    return rays, normals


def polytope_from_building_set(b: BuildingSet) -> LatticePolytope:
    """Convex hull of the fan's ray generators, one block per component.

    Size-1 components contribute no rays; disconnected building sets
    give the free sum of their component polytopes, whose facet normals
    are the concatenations of per-component facet normals.
    """
    report = weak_fano_criterion(b)
    if not report.verdict:
        raise NotWeakFano(
            "the variety is not weak Fano; its ray hull is not reflexive",
            pair=report.witness,
        )
    blocks = []
    for comp in b.max_masks:
        if comp.bit_count() < 2:
            continue
        sub, _labels = b.restriction(comp)
        blocks.append(_component_geometry(sub))
    if not blocks:
        raise NotFullDimensional("every component is a point; there are no rays")
    dims = [len(rays[0]) for rays, _ in blocks]
    total = sum(dims)
    points: list[Vec] = []
    offset = 0
    for (rays, _), d in zip(blocks, dims):
        for r in rays:
            points.append((0,) * offset + r + (0,) * (total - offset - d))
        offset += d
    candidates = [
        tuple(x for part in combo for x in part)
        for combo in product(*(normals for _, normals in blocks))
    ]
    facets = []
    for u in candidates:
        tight = [
            list(p) for p in points if sum(a * x for a, x in zip(u, p)) == -1
        ]
        if len(tight) >= total and matrix_rank(tight) == total:
            facets.append((u, 1))
    facets.sort()
    vertices = _tight_rank_vertices(points, facets, total)
    return LatticePolytope(total, tuple(vertices), tuple(facets))


def is_reflexive(p: LatticePolytope) -> bool:
    """All facets at lattice distance one; implies 0 strictly interior."""
    return all(off == 1 for _, off in p.facets)


def lattice_points(p: LatticePolytope) -> list[Vec]:
    """All integer points of the polytope, bounding box filtered by facets."""
    n = p.ambient_dim
    lows = [min(v[j] for v in p.vertices) for j in range(n)]
    highs = [max(v[j] for v in p.vertices) for j in range(n)]
    out = []
    for cand in product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs))):
        if all(
            sum(u * x for u, x in zip(normal, cand)) >= -off
            for normal, off in p.facets
        ):
            out.append(cand)
    return out


def dual_polytope(p: LatticePolytope) -> LatticePolytope:
    """Vertices of the dual are the facet normals; needs reflexivity."""
    if any(off < 1 for _, off in p.facets):
        raise OriginNotInterior("0 is not strictly inside; the dual is unbounded-ish")
    if not is_reflexive(p):
        raise NotReflexive("a facet sits at lattice distance above one")
    vertices = tuple(sorted(normal for normal, _ in p.facets))
    facets = tuple(sorted((v, 1) for v in p.vertices))
    return LatticePolytope(p.ambient_dim, vertices, facets)


# ---------------------------------------------------------------------------
# Lattice-linear equivalence.


@dataclass(frozen=True)
class EquivalenceWitness:
    """Unimodular matrix carrying one vertex set onto the other."""

    matrix: tuple[Vec, ...]
    maps: tuple[tuple[Vec, Vec], ...]


def _facet_profile(p: LatticePolytope) -> dict[Vec, list[int]]:
    """Per vertex, the sorted vertex counts of its incident facets."""
    facet_sizes = {}
    incident: dict[Vec, list[int]] = {v: [] for v in p.vertices}
    for normal, off in p.facets:
        members = [
            v for v in p.vertices
            if sum(u * x for u, x in zip(normal, v)) == -off
        ]
        facet_sizes[(normal, off)] = len(members)
        for v in members:
            incident[v].append(len(members))
    return {v: sorted(sizes) for v, sizes in incident.items()}


def _screen(p: LatticePolytope, q: LatticePolytope) -> bool:
    if len(p.vertices) != len(q.vertices) or len(p.facets) != len(q.facets):
        return False
    if sorted(off for _, off in p.facets) != sorted(off for _, off in q.facets):
        return False
    if len(lattice_points(p)) != len(lattice_points(q)):
        return False
    pp, qp = _facet_profile(p), _facet_profile(q)
    return sorted(pp.values()) == sorted(qp.values())


def _apply(matrix: list[list], vec: Vec):
    return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in matrix)


def lattice_equivalent(
    p: LatticePolytope, q: LatticePolytope
) -> EquivalenceWitness | None:
    """A determinant +-1 integer map with matrix @ P-vertices = Q-vertices.

    Cheap invariants prune first; then a linearly independent vertex
    tuple of p is assigned to profile-compatible vertex tuples of q and
    each induced matrix is tested exactly.
    """
    if p.ambient_dim != q.ambient_dim:
        raise DimensionMismatch(
            f"dimensions {p.ambient_dim} and {q.ambient_dim} differ"
        )
    n = p.ambient_dim
    if p.vertices == q.vertices:
        ident = tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
        )
        return EquivalenceWitness(ident, tuple((v, v) for v in p.vertices))
    if not _screen(p, q):
        return None

    base: list[Vec] = []
    for v in p.vertices:
        if matrix_rank([list(w) for w in base + [v]]) > len(base):
            base.append(v)
        if len(base) == n:
            break
    cols = [[base[j][i] for j in range(n)] for i in range(n)]
    inv_cols = [
        solve_exact(cols, [1 if i == j else 0 for i in range(n)])
        for j in range(n)
    ]

    pp, qp = _facet_profile(p), _facet_profile(q)
    pool = [
        [w for w in q.vertices if qp[w] == pp[v]]
        for v in base
    ]
    qset = set(q.vertices)
    pverts = list(p.vertices)
    for image in product(*pool):
        if len(set(image)) != n:
            continue
        rows = []
        integral = True
        for i in range(n):
            row = []
            for j in range(n):
                entry = sum(image[k][i] * inv_cols[j][k] for k in range(n))
                if entry.denominator != 1:
                    integral = False
                    break
                row.append(int(entry))
            if not integral:
                break
            rows.append(row)
        if not integral:
            continue
        if abs(determinant(rows)) != 1:
            continue
        mapped = [_apply(rows, v) for v in pverts]
        if set(mapped) != qset:
            continue
        return EquivalenceWitness(
            tuple(tuple(r) for r in rows),
            tuple(sorted(zip(pverts, mapped))),
        )
    return None


# ---------------------------------------------------------------------------
# Directed graphs and their polytopes.


@dataclass(frozen=True)
class Digraph:
    """Loop-free digraph on nodes 1..node_count, no repeated arrows."""

    node_count: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.node_count < 1:
            raise ElementOutOfRange("a digraph needs at least one node")
        seen = set()
        for i, j in self.arrows:
            if not (1 <= i <= self.node_count and 1 <= j <= self.node_count):
                raise ElementOutOfRange(
                    f"arrow ({i}, {j}) leaves 1..{self.node_count}"
                )
            if i == j:
                raise ValueError(f"loop at node {i}")
            if (i, j) in seen:
                raise ValueError(f"repeated arrow ({i}, {j})")
            seen.add((i, j))
        object.__setattr__(self, "arrows", tuple(sorted(self.arrows)))


@dataclass(frozen=True)
class DigraphPolytope:
    """Arrow vectors with their hull; polytope is None when degenerate."""

    node_count: int
    ambient_dim: int
    points: tuple[Vec, ...]
    affine_dim: int
    polytope: LatticePolytope | None


def arrow_vector(arrow: tuple[int, int], node_count: int) -> Vec:
    """e_i - e_j in the basis f_k = e_k - e_{last}; f_last is zero."""
    n = node_count - 1
    i, j = arrow
    vec = [0] * n
    if i <= n:
        vec[i - 1] += 1
    if j <= n:
        vec[j - 1] -= 1
    return tuple(vec)


def polytope_from_digraph(g: Digraph) -> DigraphPolytope:
    """Hull of the arrow vectors; degenerate hulls report their dimension."""
    if not g.arrows:
        raise NoArrows("the digraph has no arrows, so there are no points")
    n = g.node_count - 1
    points = sorted({arrow_vector(a, g.node_count) for a in g.arrows})
    dim = affine_rank(points)
    poly = polytope_from_points(points) if n >= 1 and dim == n else None
    return DigraphPolytope(g.node_count, n, tuple(points), dim, poly)


@dataclass(frozen=True)
class RealizabilityBound:
    """Vertex count of the ray hull against the digraph arrow budget.

    A digraph on n+1 nodes has at most n(n+1) arrows, so a ray hull
    with more vertices than that cannot be any digraph polytope.
    """

    ground_size: int
    dim: int
    vertex_count: int
    arrow_budget: int
    obstructed: bool


def digraph_realizability_bound(b: BuildingSet) -> RealizabilityBound:
    poly = polytope_from_building_set(b)
    n = poly.ambient_dim
    count = len(poly.vertices)
    budget = n * (n + 1)
    return RealizabilityBound(b.ground_size, n, count, budget, count > budget)


# ---------------------------------------------------------------------------
# Text formats.


def format_digraph(g: Digraph) -> str:
    lines = [f"nodes {g.node_count}"]
    for i, j in g.arrows:
        lines.append(f"{i} {j}")
    return "\n".join(lines) + "\n"


def digraph_json(g: Digraph) -> dict:
    return {"nodes": g.node_count, "arrows": [list(a) for a in g.arrows]}


def parse_digraph(text: str) -> Digraph:
    """Parse `nodes <k>` plus one `i j` line per arrow, or the JSON form."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from None
        if not isinstance(doc, dict) or "nodes" not in doc or "arrows" not in doc:
            raise ParseError("JSON document needs fields 'nodes' and 'arrows'")
        nodes = doc["nodes"]
        arrows = doc["arrows"]
        if not isinstance(nodes, int):
            raise ParseError("'nodes' must be an integer")
        if not isinstance(arrows, list) or any(
            not isinstance(a, list) or len(a) != 2 for a in arrows
        ):
            raise ParseError("'arrows' must be an array of [i, j] pairs")
        return _digraph_checked(nodes, [tuple(a) for a in arrows], where="arrows")

    nodes = None
    arrows: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if nodes is None:
            if tokens[0] != "nodes" or len(tokens) != 2:
                raise ParseError(f"line {lineno}: expected `nodes <count>`")
            nodes = _int_token(tokens[1], lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected `i j`")
        arrows.append((_int_token(tokens[0], lineno), _int_token(tokens[1], lineno)))
    if nodes is None:
        raise ParseError("missing `nodes <count>` line")
    return _digraph_checked(nodes, arrows, where="arrow list")


def _int_token(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: expected an integer, got {token!r}") from None


def _digraph_checked(nodes: int, arrows: list[tuple[int, int]], where: str) -> Digraph:
    try:
        return Digraph(nodes, tuple((int(i), int(j)) for i, j in arrows))
    except (ValueError, ElementOutOfRange) as exc:
        raise ParseError(f"{where}: {exc}") from None


def format_polytope(p: LatticePolytope) -> str:
    lines = [f"dim {p.ambient_dim}"]
    for v in p.vertices:
        lines.append("vertex " + " ".join(str(x) for x in v))
    for normal, off in p.facets:
        lines.append("facet " + " ".join(str(x) for x in normal) + f" {off}")
    return "\n".join(lines) + "\n"


def polytope_json(p: LatticePolytope) -> dict:
    return {
        "dim": p.ambient_dim,
        "vertices": [list(v) for v in p.vertices],
        "facets": [{"normal": list(u), "offset": off} for u, off in p.facets],
    }


def parse_polytope(text: str) -> LatticePolytope:
    """Parse `dim` and `vertex` lines; facets are rederived from scratch.

    Lines containing `:` are report metadata and are skipped, so the
    CLI's own polytope output parses back unchanged.
    """
    dim = None
    points: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line or ":" in line:
            continue
        tokens = line.split()
        if dim is None:
            if tokens[0] != "dim" or len(tokens) != 2:
                raise ParseError(f"line {lineno}: expected `dim <n>`")
            dim = _int_token(tokens[1], lineno)
            continue
        if tokens[0] == "facet":
            continue
        if tokens[0] != "vertex":
            raise ParseError(f"line {lineno}: expected `vertex` or `facet`")
        coords = [_int_token(t, lineno) for t in tokens[1:]]
        if len(coords) != dim:
            raise ParseError(f"line {lineno}: expected {dim} coordinates")
        points.append(tuple(coords))
    if dim is None:
        raise ParseError("missing `dim <n>` line")
    if not points:
        raise ParseError("no vertex lines")
    return polytope_from_points(points)
