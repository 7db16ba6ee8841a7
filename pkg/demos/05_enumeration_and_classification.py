"""
Enumeration, graphical building sets, and the six-point classification
======================================================================

"""

import tempfile

from weakfano import (
    enumerate_building_sets,
    SimpleGraph,
    graphical_building_set,
    is_graph_weak_fano_criterion,
    weak_fano_criterion,
    classify_six_point,
)

# All connected building sets on four elements, one per relabeling orbit.
reps = list(enumerate_building_sets(4, connected_only=True,
                                    up_to_relabeling=True))
print("connected orbits on 4 elements:", len(reps))
print("weak Fano among them:",
      sum(weak_fano_criterion(b).verdict for b in reps))

# Graphical building sets: connected induced subgraphs of a graph.  The
# graph criterion only has to look for induced cycles and diamonds.
c4 = SimpleGraph.cycle(4)
print("4-cycle weak Fano:", is_graph_weak_fano_criterion(c4))
print("  criterion on its building set:",
      weak_fano_criterion(graphical_building_set(c4)).verdict)

k4 = SimpleGraph.complete(4)
c5 = SimpleGraph.cycle(5)
print("K4 weak Fano:", is_graph_weak_fano_criterion(k4))
print("5-cycle weak Fano:", is_graph_weak_fano_criterion(c5))

# Reflexive 3-polytopes with exactly six lattice points coming from
# building sets fall into three equivalence classes.
with tempfile.TemporaryDirectory() as outdir:
    report = classify_six_point(outdir)
    print("candidates:", report.candidate_count,
          "with six points:", report.kept_count,
          "classes:", len(report.classes))
    for i, cls in enumerate(report.classes):
        print(f"  class {i}: {cls.members} member(s),",
              len(cls.polytope.vertices), "vertices")
