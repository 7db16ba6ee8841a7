"""
Building sets and the weak Fano criterion
=========================================

"""

from weakfano import (
    validate_building_set,
    weak_fano_criterion,
    weak_fano_bruteforce,
)

# A building set on {1..5}: singletons are always required, and whenever
# two members overlap their union must be present too.
b = validate_building_set(5, [
    (1,), (2,), (3,), (4,), (5,),
    (1, 2, 3, 4),
    (2, 3, 4, 5),
    (1, 2, 3, 4, 5),
])
print("ground size:", b.ground_size)
print("members:", [sorted(m) for m in b.members])
print("connected:", b.is_connected)

# The combinatorial criterion scans overlapping incomparable pairs.
report = weak_fano_criterion(b)
print("weak Fano (criterion):", report.verdict)
if report.witness is not None:
    w = report.witness
    print("failing pair:", sorted(w.first), sorted(w.second))
    print("union is the whole component:", w.union_is_component)

# Brute force agrees: it builds the fan and solves every wall relation.
brute = weak_fano_bruteforce(b)
print("weak Fano (brute force):", brute.verdict)
print("minimal wall degree:", brute.min_degree)
