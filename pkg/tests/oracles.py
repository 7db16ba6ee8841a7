"""Definition-level reference implementations.

Everything here restates a definition as directly as possible and pays
no attention to speed; the package is checked against these on inputs
small enough for brute force.  Nothing in this module imports package
internals beyond plain data (masks in, sets out).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import networkx as nx


def sets_of(ground_size: int, masks) -> list[frozenset[int]]:
    return [
        frozenset(i + 1 for i in range(ground_size) if m >> i & 1) for m in masks
    ]


def is_building_set(ground_size: int, family) -> bool:
    fam = {frozenset(s) for s in family}
    if any(not s for s in fam):
        return False
    if any(min(s) < 1 or max(s) > ground_size for s in fam):
        return False
    if any(frozenset({i}) not in fam for i in range(1, ground_size + 1)):
        return False
    for a, b in combinations(fam, 2):
        if a & b and not (a <= b or b <= a) and (a | b) not in fam:
            return False
    return True


def maximal_members(family) -> set[frozenset[int]]:
    fam = set(family)
    return {a for a in fam if not any(a < b for b in fam)}


def is_nested(family, candidate) -> bool:
    """Literal definition over a family of frozensets."""
    fam = set(family)
    cand = set(candidate)
    if not cand <= fam - maximal_members(fam):
        return False
    for a, b in combinations(cand, 2):
        if a & b and not (a <= b or b <= a):
            return False
    for k in range(2, len(cand) + 1):
        for sub in combinations(cand, k):
            if all(x & y == set() for x, y in combinations(sub, 2)):
                if frozenset().union(*sub) in fam:
                    return False
    return True


def maximal_nested_sets(family) -> set[frozenset[frozenset[int]]]:
    """All maximal nested sets by subset enumeration.  Exponential."""
    fam = set(family)
    verts = sorted(fam - maximal_members(fam), key=lambda s: (len(s), sorted(s)))
    nested = []
    for k in range(len(verts) + 1):
        for sub in combinations(verts, k):
            if is_nested(fam, sub):
                nested.append(frozenset(sub))
    return {n for n in nested if not any(n < m for m in nested)}


def restriction(family, csub) -> set[frozenset[int]]:
    c = frozenset(csub)
    return {m for m in family if m <= c}


def contraction(ground_size: int, family, csub) -> set[frozenset[int]]:
    """Nonempty subsets of the complement that are members or become one
    after joining the contracted set."""
    fam = {frozenset(s) for s in family}
    c = frozenset(csub)
    rest = sorted(set(range(1, ground_size + 1)) - c)
    out = set()
    for k in range(1, len(rest) + 1):
        for sub in combinations(rest, k):
            s = frozenset(sub)
            if s in fam or (s | c) in fam:
                out.add(s)
    return out


def ray(member, n: int) -> tuple[int, ...]:
    m = frozenset(member)
    return tuple((1 if j in m else 0) - (1 if n + 1 in m else 0) for j in range(1, n + 1))


def wall_relation_degree(shared_rays, left_ray, right_ray) -> int:
    """Solve left + right + sum a_i shared_i = 0 with exact arithmetic
    and return 2 + sum a_i.  Raises on an unsolvable or ambiguous system."""
    cols = [tuple(v) for v in shared_rays]
    n = len(left_ray)
    if len(cols) != n - 1:
        raise ValueError("a wall needs n - 1 shared rays")
    rhs = [-(l + r) for l, r in zip(left_ray, right_ray)]
    mat = [[Fraction(cols[j][i]) for j in range(n - 1)] + [Fraction(rhs[i])]
           for i in range(n)]
    pivots = []
    row = 0
    for col in range(n - 1):
        p = next((r for r in range(row, n) if mat[r][col]), None)
        if p is None:
            raise ValueError("shared rays are dependent")
        mat[row], mat[p] = mat[p], mat[row]
        pv = mat[row][col]
        mat[row] = [x / pv for x in mat[row]]
        for r in range(n):
            if r != row and mat[r][col]:
                mat[r] = [x - mat[r][col] * y for x, y in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
    for r in range(row, n):
        if mat[r][n - 1]:
            raise ValueError("inconsistent wall relation")
    coeffs = [mat[i][n - 1] for i in range(n - 1)]
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError("non-integer wall relation")
    return 2 + sum(int(c) for c in coeffs)


def vertex_certificates(vertices, facets) -> bool:
    """Every claimed vertex strictly minimizes the sum of its tight facet
    normals over the other vertices.  Facet normals point inward, so the
    sum points into the polytope and the vertex sits at its minimum; ties
    would mean the tight facets fail to pin down a zero-dimensional face.
    A genuinely independent convexity certificate: it never inspects how
    the hull was computed."""
    for v in vertices:
        tight = [nrm for nrm, off in facets
                 if sum(a * x for a, x in zip(nrm, v)) == -off]
        if not tight:
            return False
        d = tuple(sum(col) for col in zip(*tight))
        dv = sum(a * x for a, x in zip(d, v))
        for w in vertices:
            if w != v and sum(a * x for a, x in zip(d, w)) <= dv:
                return False
    return True


def hull_consistent(points, vertices, facets) -> bool:
    """All input points satisfy all facet inequalities, every facet is
    tight somewhere, and every vertex is an input point."""
    pts = set(points)
    if not set(vertices) <= pts:
        return False
    for nrm, off in facets:
        vals = [sum(a * x for a, x in zip(nrm, p)) for p in points]
        if any(val < -off for val in vals):
            return False
        if all(val > -off for val in vals):
            return False
    return True


def graph_weak_fano(adj: dict[int, set[int]]) -> bool:
    """Forbidden-subgraph scan done through networkx isomorphism tests:
    no connected component may contain a diamond or a cycle of length at
    least four as a proper induced subgraph."""
    g = nx.Graph()
    g.add_nodes_from(adj)
    for u, vs in adj.items():
        for v in vs:
            g.add_edge(u, v)
    diamond = nx.Graph([(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
    for comp in nx.connected_components(g):
        sub = g.subgraph(comp)
        for k in range(4, len(comp)):
            for nodes in combinations(sorted(comp), k):
                ind = sub.subgraph(nodes)
                if k == 4 and nx.is_isomorphic(ind, diamond):
                    return False
                if nx.is_isomorphic(ind, nx.cycle_graph(k)):
                    return False
    return True
