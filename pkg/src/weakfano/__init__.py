"""Weak Fano analysis of toric varieties built from building sets.

The pipeline: validate a building set, form its nested-set fan, decide
the weak Fano property either by the local pair criterion or by solving
every wall relation, descend from a criterion violation to an explicit
negative wall, and build the reflexive lattice polytopes attached to
weak Fano building sets and to digraphs.
"""

from .core import (
    MAX_ENUMERATION_GROUND,
    MAX_GROUND,
    BuildingSet,
    SimpleGraph,
    building_set_json,
    elements_of,
    enumerate_building_sets,
    format_building_set,
    frozenset_of,
    graphical_building_set,
    is_graph_weak_fano_criterion,
    mask_of,
    parse_building_set,
    random_building_set,
    validate_building_set,
)
from .errors import (
    CaseNotMatched,
    CriterionSatisfied,
    DimensionMismatch,
    ElementOutOfRange,
    EmptyMember,
    EmptySubset,
    Error,
    FullSetRay,
    GroundSetTooLarge,
    MaximalMember,
    MissingSingleton,
    NoArrows,
    NotAMember,
    NotConnected,
    NotFullDimensional,
    NotProperSubset,
    NotReflexive,
    NotUnionClosed,
    NotWeakFano,
    OriginNotInterior,
    ParseError,
    SingularSystem,
    StalledRecursion,
    WallPairingError,
)
from .fan import (
    ComponentFan,
    CompletenessResult,
    Fan,
    MaximalCone,
    ProductFanReport,
    Wall,
    check_complete,
    check_nonsingular,
    fan_from_building_set,
    product_fan_report,
    ray_vector,
)
from .intersect import (
    ComponentVerdict,
    FailingPair,
    WallDegree,
    WallReport,
    WeakFanoReport,
    WitnessLayer,
    WitnessTrace,
    TraceStep,
    closed_form_wall_degree,
    fano_bruteforce,
    is_weak_fano_criterion,
    negative_witness,
    solve_wall_relation,
    wall_degree,
    weak_fano_bruteforce,
    weak_fano_criterion,
    witness_final_pairs,
)
from .nested import (
    NestedCheck,
    check_link_isomorphism,
    is_nested,
    link,
    link_companion,
    maximal_nested_sets,
    maximal_nested_sets_within,
)
from .polytope import (
    Digraph,
    DigraphPolytope,
    EquivalenceWitness,
    LatticePolytope,
    RealizabilityBound,
    arrow_vector,
    digraph_json,
    digraph_realizability_bound,
    dual_polytope,
    format_digraph,
    format_polytope,
    is_reflexive,
    lattice_equivalent,
    lattice_points,
    parse_digraph,
    parse_polytope,
    polytope_from_building_set,
    polytope_from_digraph,
    polytope_from_points,
    polytope_json,
)
from .cli import SixPointClass, SixPointReport, classify_six_point, run

__all__ = [
    "MAX_ENUMERATION_GROUND",
    "MAX_GROUND",
    "BuildingSet",
    "SimpleGraph",
    "building_set_json",
    "elements_of",
    "enumerate_building_sets",
    "format_building_set",
    "frozenset_of",
    "graphical_building_set",
    "is_graph_weak_fano_criterion",
    "mask_of",
    "parse_building_set",
    "random_building_set",
    "validate_building_set",
    "CaseNotMatched",
    "CriterionSatisfied",
    "DimensionMismatch",
    "ElementOutOfRange",
    "EmptyMember",
    "EmptySubset",
    "Error",
    "FullSetRay",
    "GroundSetTooLarge",
    "MaximalMember",
    "MissingSingleton",
    "NoArrows",
    "NotAMember",
    "NotConnected",
    "NotFullDimensional",
    "NotProperSubset",
    "NotReflexive",
    "NotUnionClosed",
    "NotWeakFano",
    "OriginNotInterior",
    "ParseError",
    "SingularSystem",
    "StalledRecursion",
    "WallPairingError",
    "ComponentFan",
    "CompletenessResult",
    "Fan",
    "MaximalCone",
    "ProductFanReport",
    "Wall",
    "check_complete",
    "check_nonsingular",
    "fan_from_building_set",
    "product_fan_report",
    "ray_vector",
    "ComponentVerdict",
    "FailingPair",
    "WallDegree",
    "WallReport",
    "WeakFanoReport",
    "WitnessLayer",
    "WitnessTrace",
    "TraceStep",
    "closed_form_wall_degree",
    "fano_bruteforce",
    "is_weak_fano_criterion",
    "negative_witness",
    "solve_wall_relation",
    "wall_degree",
    "weak_fano_bruteforce",
    "weak_fano_criterion",
    "witness_final_pairs",
    "NestedCheck",
    "check_link_isomorphism",
    "is_nested",
    "link",
    "link_companion",
    "maximal_nested_sets",
    "maximal_nested_sets_within",
    "Digraph",
    "DigraphPolytope",
    "EquivalenceWitness",
    "LatticePolytope",
    "RealizabilityBound",
    "arrow_vector",
    "digraph_json",
    "digraph_realizability_bound",
    "dual_polytope",
    "format_digraph",
    "format_polytope",
    "is_reflexive",
    "lattice_equivalent",
    "lattice_points",
    "parse_digraph",
    "parse_polytope",
    "polytope_from_building_set",
    "polytope_from_digraph",
    "polytope_from_points",
    "polytope_json",
    "SixPointClass",
    "SixPointReport",
    "classify_six_point",
    "run",
]
