"""Graph family that is k-connected and vertex-pancyclic yet has no pancyclic edge.

The package builds the family, synthesizes an explicit cycle of every length
through every vertex, verifies connectivity and the edge obstructions exactly,
and cross-checks everything against an independent brute-force oracle.
"""

from pancert.group import PARTITION, add, classify, label_str, parse_label, verify_sumfree
from pancert.construction import (
    AuxGraph,
    AuxVertex,
    ConstructedGraph,
    Edge,
    PortedVertex,
    adjacent,
    build_aux,
    build_graph,
    vertex_index,
)
from pancert.serialize import from_json, to_dot, to_json
from pancert.cycles import (
    ColoredAuxCycle,
    CycleCertificate,
    PathTemplate,
    cycle_through,
    decompose,
    lift,
    path_template,
    proper_cycle,
    short_cycle,
)
from pancert.connectivity import ConnectivityReport, layer_connectivity, vertex_connectivity
from pancert.verify import (
    CertificationResult,
    ObstructionReport,
    VerificationReport,
    certify_vertex_pancyclic,
    degree_audit,
    edge_in_4cycle,
    edge_in_triangle,
    no_pancyclic_edge,
    run_checks,
    validate_certificate,
)
from pancert.oracle import (
    CycleLengthProfile,
    OracleGuardError,
    OracleReport,
    cross_check,
    lengths_through_edge,
    lengths_through_vertex,
)

__version__ = "0.1.0"

__all__ = [
    "PARTITION",
    "add",
    "classify",
    "label_str",
    "parse_label",
    "verify_sumfree",
    "AuxGraph",
    "AuxVertex",
    "ConstructedGraph",
    "Edge",
    "PortedVertex",
    "adjacent",
    "build_aux",
    "build_graph",
    "vertex_index",
    "from_json",
    "to_dot",
    "to_json",
    "ColoredAuxCycle",
    "CycleCertificate",
    "PathTemplate",
    "cycle_through",
    "decompose",
    "lift",
    "path_template",
    "proper_cycle",
    "short_cycle",
    "ConnectivityReport",
    "layer_connectivity",
    "vertex_connectivity",
    "CertificationResult",
    "ObstructionReport",
    "VerificationReport",
    "certify_vertex_pancyclic",
    "degree_audit",
    "edge_in_4cycle",
    "edge_in_triangle",
    "no_pancyclic_edge",
    "run_checks",
    "validate_certificate",
    "CycleLengthProfile",
    "OracleGuardError",
    "OracleReport",
    "cross_check",
    "lengths_through_edge",
    "lengths_through_vertex",
]
