"""
Reflexive polytopes from building sets and from digraphs
========================================================

"""

from itertools import combinations

from weakfano import (
    validate_building_set,
    polytope_from_building_set,
    is_reflexive,
    lattice_points,
    dual_polytope,
    Digraph,
    polytope_from_digraph,
    lattice_equivalent,
    digraph_realizability_bound,
)

# Hull of the fan rays of the full power set on {1..4}: a reflexive
# 3-polytope with 2^4 - 2 = 14 vertices.
power = validate_building_set(4, [
    s for k in (1, 2, 3, 4) for s in combinations((1, 2, 3, 4), k)
])
p = polytope_from_building_set(power)
print("vertices:", len(p.vertices))
print("reflexive:", is_reflexive(p))
print("lattice points:", len(lattice_points(p)))
print("dual facets:", len(dual_polytope(p).facets))

# The same power set cannot come from a digraph on 4 nodes: a digraph
# polytope has at most n(n+1) = 12 vertices there.
bound = digraph_realizability_bound(power)
print("vertex count", bound.vertex_count, "vs budget", bound.arrow_budget,
      "-> obstructed:", bound.obstructed)

# Digraph polytopes: one lattice point per arrow, hull taken in the
# quotient where the last coordinate is eliminated.
g = Digraph(4, ((1, 2), (2, 3), (3, 1), (1, 4), (4, 3)))
dp = polytope_from_digraph(g)
print("digraph polytope dim:", dp.affine_dim)
print("reflexive:", is_reflexive(dp.polytope))
print("lattice points:", len(lattice_points(dp.polytope)))

q = polytope_from_building_set(
    validate_building_set(4, [(1,), (2,), (3,), (4,), (1, 2), (1, 2, 3, 4)]))
print("equivalent to a listed building set polytope:",
      lattice_equivalent(dp.polytope, q) is not None)
