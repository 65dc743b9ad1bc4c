"""Cube groups from decorated graphs of involutions.

Construct groups generated by involutions whose Cayley graph is a hypercube
skeleton, verify admissibility of the defining decorated graph, compute orbit
decompositions and boolean normal forms, and work with the signed-permutation
geometric representation.
"""

from .decompose import (
    NormalForm,
    OrbitPartition,
    OrbitTree,
    decomposition_ordering,
    normal_form,
    orbit_tree,
    orbits,
    perm_image,
    planar_orderings,
    two_orbit_check,
)
from .graphs import (
    AdmissibilityReport,
    DecoratedGraph,
    EdgeGroup,
    Trajectory,
    TrajectoryKind,
    edge_partition,
    holonomy,
    is_admissible,
    presentation_relators,
    trajectory,
)
from .group import (
    CubeGroup,
    GroupElement,
    HypercubeResult,
    LabeledGraph,
    decorated_graph_from_group,
    generate_group,
    generator_rho,
    is_hypercube,
    standard_subgroup,
    word_matrix,
)
from .rep import (
    SignCount,
    embed_vertex,
    invariant_coordinate_subspaces,
    is_reducible,
    rho_via_formula,
    sign_count,
)
from .signedperm import Perm, SignedPermutation
from .sweep import SweepReport, enumerate_decorated_graphs, sweep

__all__ = [
    "AdmissibilityReport",
    "CubeGroup",
    "DecoratedGraph",
    "EdgeGroup",
    "GroupElement",
    "HypercubeResult",
    "LabeledGraph",
    "NormalForm",
    "OrbitPartition",
    "OrbitTree",
    "Perm",
    "SignCount",
    "SignedPermutation",
    "SweepReport",
    "Trajectory",
    "TrajectoryKind",
    "decomposition_ordering",
    "decorated_graph_from_group",
    "edge_partition",
    "embed_vertex",
    "enumerate_decorated_graphs",
    "generate_group",
    "generator_rho",
    "holonomy",
    "invariant_coordinate_subspaces",
    "is_admissible",
    "is_hypercube",
    "is_reducible",
    "normal_form",
    "orbit_tree",
    "orbits",
    "perm_image",
    "planar_orderings",
    "presentation_relators",
    "rho_via_formula",
    "sign_count",
    "standard_subgroup",
    "sweep",
    "trajectory",
    "two_orbit_check",
    "word_matrix",
]
