"""Dichotomy toolkit for h-free edge modification problems.

Classify a forbidden pattern as polynomial or NP-complete for deletion,
completion, and editing; build and replay the hardness reduction chains
behind the NP-complete verdicts; solve small instances exactly; and verify
every reduction's equivalence claim by exhaustive small-scale campaigns.
"""
__version__ = "0.1.0"

from .classify import (
    Classification,
    ChurnStep,
    SparseLH,
    build_chain,
    classify,
    deletion_churn,
    editing_churn,
    recognize_sparse_lh,
    sparse_case,
)
from .formats import (
    GraphParseError,
    graph_from_obj,
    graph_to_obj,
    parse_graph,
    parse_graph6,
    parse_graph_json,
    serialize_graph,
    serialize_graph6,
    serialize_graph_json,
)
from .graphs import (
    EditSet,
    Embedding,
    Graph,
    apply_edits,
    are_isomorphic,
    complement,
    cycle,
    edge,
    enumerate_induced_copies,
    find_induced_copy,
    graph_from_edges,
    induced_subgraph,
    is_induced_copy_free,
    join,
    make_named,
    null_graph,
    path,
    star,
    sunlet,
    t_diamond,
)
from .problems import (
    BaseProblem,
    ContractViolationError,
    Instance,
    ModificationKind,
    ReductionStep,
    instance_from_obj,
    kind_from_str,
)
from .reductions import (
    BranchRecord,
    CliqueRecord,
    apply_step,
    complement_reduce,
    construct_adj,
    construct_nonadj,
    construct_tdiamond,
    reduce_degree,
    reduce_degree_max,
    reduce_sparse_case1,
    reduce_sparse_vh,
    reduce_sparse_vl,
    reduce_tdiamond,
    replay_chain,
)
from .smallgraphs import find_sparse_witness, graphs_up_to, graphs_with_vertex_count
from .solve import (
    BruteForceCapExceeded,
    SolveResult,
    check_witness,
    solve_branching,
    solve_bruteforce,
    solve_instance,
)
from .verify import run_suite, run_suites, verify_equivalence

__all__ = [
    "__version__",
    "BaseProblem",
    "BranchRecord",
    "BruteForceCapExceeded",
    "Classification",
    "ChurnStep",
    "CliqueRecord",
    "ContractViolationError",
    "EditSet",
    "Embedding",
    "Graph",
    "GraphParseError",
    "Instance",
    "ModificationKind",
    "ReductionStep",
    "SolveResult",
    "SparseLH",
    "apply_edits",
    "apply_step",
    "are_isomorphic",
    "build_chain",
    "check_witness",
    "classify",
    "complement",
    "complement_reduce",
    "construct_adj",
    "construct_nonadj",
    "construct_tdiamond",
    "cycle",
    "deletion_churn",
    "edge",
    "editing_churn",
    "enumerate_induced_copies",
    "find_induced_copy",
    "find_sparse_witness",
    "graph_from_edges",
    "graph_from_obj",
    "graph_to_obj",
    "graphs_up_to",
    "graphs_with_vertex_count",
    "induced_subgraph",
    "instance_from_obj",
    "is_induced_copy_free",
    "join",
    "kind_from_str",
    "make_named",
    "null_graph",
    "parse_graph",
    "parse_graph6",
    "parse_graph_json",
    "path",
    "recognize_sparse_lh",
    "reduce_degree",
    "reduce_degree_max",
    "reduce_sparse_case1",
    "reduce_sparse_vh",
    "reduce_sparse_vl",
    "reduce_tdiamond",
    "replay_chain",
    "run_suite",
    "run_suites",
    "serialize_graph",
    "serialize_graph6",
    "serialize_graph_json",
    "solve_branching",
    "solve_bruteforce",
    "solve_instance",
    "sparse_case",
    "star",
    "sunlet",
    "t_diamond",
    "verify_equivalence",
]
