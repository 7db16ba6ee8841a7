"""
Nested sets, the fan, and wall degrees
======================================

The projective plane arises from the smallest connected building set on
three elements.
"""

from weakfano import (
    frozenset_of,
    validate_building_set,
    maximal_nested_sets,
    fan_from_building_set,
    check_nonsingular,
    check_complete,
    wall_degree,
)

plane = validate_building_set(3, [(1,), (2,), (3,), (1, 2, 3)])

# Maximal nested sets index the maximal cones of the fan.  They come
# back as tuples of bitmasks; frozenset_of turns a mask into elements.
for fam in maximal_nested_sets(plane):
    print("nested set:", [sorted(frozenset_of(m)) for m in fam])

fan = fan_from_building_set(plane)
print("rays:", fan.ray_vectors)
print("cones:", len(fan.cones), "walls:", len(fan.walls))

assert check_nonsingular(fan)
assert check_complete(fan, samples=200, seed=7)

# Each wall carries a degree; the variety is weak Fano when none is
# negative, Fano when all are positive.  For the plane every wall has
# degree 3.
for wall in fan.walls:
    print("wall degree:", wall_degree(fan, wall).degree)
