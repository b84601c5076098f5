"""P3-isolation numbers: exact solver, extremal constructions, the
floor((n+1)/4) certificate algorithm and an exhaustive verifier."""

from .constructions import build_bk_star, build_bn, build_bn_k3_h, build_cycle, build_k4_minus, build_path
from .constructive import (
    BoundedSetResult,
    InternalInvariantError,
    PreconditionError,
    isolating_set_bounded,
    reduce_tight,
)
from .enumeration import VerificationReport, compute_f, enumerate_connected, ingest_graph6_stream, verify_theorem
from .exact import ExactResult, iota_exact, is_tight, min_isolating_upto
from .graph import DeletionResult, Graph, GraphError, members, parse_graph6, to_graph6, vset
from .patterns import contains_p3, find_induced_cycle, is_matching, is_p3_isolating

__all__ = [
    "BoundedSetResult",
    "DeletionResult",
    "ExactResult",
    "Graph",
    "GraphError",
    "InternalInvariantError",
    "PreconditionError",
    "VerificationReport",
    "build_bk_star",
    "build_bn",
    "build_bn_k3_h",
    "build_cycle",
    "build_k4_minus",
    "build_path",
    "compute_f",
    "contains_p3",
    "enumerate_connected",
    "find_induced_cycle",
    "ingest_graph6_stream",
    "iota_exact",
    "is_matching",
    "is_p3_isolating",
    "is_tight",
    "isolating_set_bounded",
    "members",
    "min_isolating_upto",
    "parse_graph6",
    "reduce_tight",
    "to_graph6",
    "verify_theorem",
    "vset",
]
