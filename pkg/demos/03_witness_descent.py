"""
Tracing a negative wall from an overlapping pair
================================================

When a building set is not weak Fano, an overlapping incomparable pair
whose intersection is missing from the set can be walked down to a
concrete wall of negative degree.  Each step shrinks the symmetric
difference of the pair, so the walk always terminates.
"""

from weakfano import validate_building_set, weak_fano_criterion, negative_witness

b = validate_building_set(6, [
    (1,), (2,), (3,), (4,), (5,), (6,),
    (1, 2, 3, 4), (2, 3, 4, 5), (3, 4, 5, 6),
    (1, 2, 3, 4, 5), (2, 3, 4, 5, 6),
    (1, 2, 3, 4, 5, 6),
])

report = weak_fano_criterion(b)
print("weak Fano:", report.verdict)
pair = report.witness
print("criterion witness:", sorted(pair.first), sorted(pair.second))

# The criterion witness descends in one step, so walk a different pair
# whose route needs a genuine replacement first.
first, second = {1, 2, 3, 4}, {3, 4, 5, 6}
print(f"start: {sorted(first)} {sorted(second)}"
      f"  (symmetric difference {len(first ^ second)})")
trace = negative_witness(b, first, second)
for step in trace.steps:
    size = len(step.first ^ step.second)
    print(f"  step {step.tag}: {sorted(step.first)} {sorted(step.second)}"
          f"  (symmetric difference {size})")
print("final pair:", sorted(trace.final_first), sorted(trace.final_second))
print("wall shared members:", [sorted(m) for m in trace.shared])
print("wall degree:", trace.degree, "coefficients:", trace.coefficients)
assert trace.degree <= -1
