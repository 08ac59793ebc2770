"""Shared problem types: modification kinds, instances, reduction steps,
and the anchor problems that terminate hardness chains."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .formats import graph_from_obj, graph_to_obj
from .graphs import (
    Graph,
    are_isomorphic,
    connected_components,
    induced_subgraph,
    is_forest,
    is_regular,
    path,
    t_diamond,
)


class ModificationKind(enum.Enum):
    DELETION = "deletion"
    COMPLETION = "completion"
    EDITING = "editing"

    def flipped(self) -> "ModificationKind":
        """The kind after moving to the complement world."""
        if self is ModificationKind.DELETION:
            return ModificationKind.COMPLETION
        if self is ModificationKind.COMPLETION:
            return ModificationKind.DELETION
        return ModificationKind.EDITING


def kind_from_str(s: str) -> ModificationKind:
    try:
        return ModificationKind(s.lower())
    except ValueError:
        raise ValueError(
            f"unknown modification kind {s!r}; expected deletion, completion, or editing"
        ) from None


class ContractViolationError(RuntimeError):
    """A structural guarantee the procedures rely on failed for a concrete
    input.  This marks an internal inconsistency, not bad user input."""


@dataclass(frozen=True)
class Instance:
    """One decision-problem input: may g be made h-free with at most k edits
    of the given kind?"""

    g: Graph
    k: int
    h: Graph
    kind: ModificationKind

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("budget k must be non-negative")
        if self.h.n < 1:
            raise ValueError("pattern h needs at least 1 vertex")

    def summary(self) -> dict[str, Any]:
        return {
            "vertices": self.g.n,
            "edges": self.g.m,
            "k": self.k,
            "pattern_vertices": self.h.n,
            "pattern_edges": self.h.m,
            "kind": self.kind.value,
        }

    def to_obj(self) -> dict[str, Any]:
        return {
            "graph": graph_to_obj(self.g),
            "k": self.k,
            "h": graph_to_obj(self.h),
            "kind": self.kind.value,
        }


def instance_from_obj(obj: Any) -> Instance:
    if not isinstance(obj, dict):
        raise ValueError("instance must be a JSON object")
    for key in ("graph", "k", "h", "kind"):
        if key not in obj:
            raise ValueError(f'instance missing "{key}"')
    k = obj["k"]
    if not isinstance(k, int) or isinstance(k, bool):
        raise ValueError('"k" must be an integer')
    return Instance(
        g=graph_from_obj(obj["graph"]),
        k=k,
        h=graph_from_obj(obj["h"]),
        kind=kind_from_str(obj["kind"]),
    )


# ---------------------------------------------------------------------------
# anchor problems

BASE_P3_EDITING = "p3-editing"
BASE_P4_EDITING = "p4-editing"
BASE_DIAMOND_EDITING = "diamond-editing"
BASE_CYCLE_EDITING = "cycle-editing"
BASE_2K2_EDITING = "2k2-editing"
BASE_REGULAR_EDITING = "regular-editing"
BASE_P3_DELETION = "p3-deletion"
BASE_DIAMOND_DELETION = "diamond-deletion"
BASE_TREE_OR_REGULAR_DELETION = "tree-or-regular-deletion"
BASE_TDIAMOND_DELETION = "tdiamond-deletion"
BASE_SPARSE_CASE1_DELETION = "sparse-case1-deletion"

_EDITING_BASES = {
    BASE_P3_EDITING,
    BASE_P4_EDITING,
    BASE_DIAMOND_EDITING,
    BASE_CYCLE_EDITING,
    BASE_2K2_EDITING,
    BASE_REGULAR_EDITING,
}
_DELETION_BASES = {
    BASE_P3_DELETION,
    BASE_DIAMOND_DELETION,
    BASE_TREE_OR_REGULAR_DELETION,
    BASE_TDIAMOND_DELETION,
    BASE_SPARSE_CASE1_DELETION,
}


@dataclass(frozen=True)
class BaseProblem:
    """A problem whose hardness is taken as known; chains end here.

    `graph` is the concrete pattern the chain bottomed out at; `param`
    carries the family parameter where one exists (cycle length, t)."""

    name: str
    graph: Graph
    param: int | None = None

    @property
    def kind(self) -> ModificationKind:
        if self.name in _EDITING_BASES:
            return ModificationKind.EDITING
        if self.name in _DELETION_BASES:
            return ModificationKind.DELETION
        raise ValueError(f"unknown base problem {self.name!r}")

    def validate(self) -> None:
        """Check the premise attached to this anchor; raise on mismatch."""
        g = self.graph
        name = self.name
        if name in (BASE_P3_EDITING, BASE_P3_DELETION):
            ok = are_isomorphic(g, path(3))
        elif name == BASE_P4_EDITING:
            ok = are_isomorphic(g, path(4))
        elif name in (BASE_DIAMOND_EDITING, BASE_DIAMOND_DELETION):
            ok = are_isomorphic(g, t_diamond(2))
        elif name == BASE_CYCLE_EDITING:
            from .graphs import cycle

            ok = self.param is not None and self.param >= 3 and are_isomorphic(g, cycle(self.param))
        elif name == BASE_2K2_EDITING:
            ok = g.n == 4 and g.m == 2 and set(g.degrees) == {1}
        elif name == BASE_REGULAR_EDITING:
            ok = is_regular(g) and g.m >= 2
        elif name == BASE_TREE_OR_REGULAR_DELETION:
            ok = g.m >= 2 and _largest_component_regular_or_tree(g)
        elif name == BASE_TDIAMOND_DELETION:
            ok = self.param is not None and self.param >= 2 and are_isomorphic(g, t_diamond(self.param))
        elif name == BASE_SPARSE_CASE1_DELETION:
            from .classify import recognize_sparse_lh, sparse_case

            shape = recognize_sparse_lh(g)
            ok = shape is not None and shape.low >= 2 and sparse_case(shape) == 1
        else:
            raise ValueError(f"unknown base problem {name!r}")
        if not ok:
            raise ContractViolationError(
                f"base problem {name} premise fails for its attached graph"
            )

    def to_obj(self) -> dict[str, Any]:
        obj: dict[str, Any] = {"name": self.name, "graph": graph_to_obj(self.graph)}
        if self.param is not None:
            obj["param"] = self.param
        return obj


def _largest_component_regular_or_tree(g: Graph) -> bool:
    comps = connected_components(g)
    top = max(len(c) for c in comps)
    for comp in comps:
        if len(comp) != top:
            continue
        sub, _ = induced_subgraph(g, comp)
        if is_regular(sub) or (is_forest(sub) and len(connected_components(sub)) == 1):
            return True
    return False


# ---------------------------------------------------------------------------
# reduction steps

STEP_COMPLEMENT = "complement-problem"
STEP_DEGREE = "degree-reduce"
STEP_TDIAMOND = "tdiamond-induction"
STEP_SPARSE_VL = "sparse-vl-strip"
STEP_SPARSE_VH = "sparse-vh-route"
STEP_SPARSE_CASE1 = "sparse-case1"
STEP_CONSTRUCT_NONADJ = "construct-nonadj"
STEP_CONSTRUCT_ADJ = "construct-adj"

STEP_KINDS = {
    STEP_COMPLEMENT,
    STEP_DEGREE,
    STEP_TDIAMOND,
    STEP_SPARSE_VL,
    STEP_SPARSE_VH,
    STEP_SPARSE_CASE1,
    STEP_CONSTRUCT_NONADJ,
    STEP_CONSTRUCT_ADJ,
}


@dataclass(frozen=True)
class StepExecution:
    """Record of one concrete application of a step."""

    input_summary: dict[str, Any]
    output_summary: dict[str, Any]
    metadata: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class ReductionStep:
    """One hop in a hardness chain.

    The step turns any instance of the source problem (pattern `source_h`,
    kind `source_kind`) into an equivalent instance of the target problem,
    keeping the budget k unchanged.  `params` holds whatever the transform
    needs to be replayed mechanically; `execution` is filled in when the
    step is actually applied to an instance.
    """

    step: str
    params: dict[str, Any]
    source_h: Graph
    source_kind: ModificationKind
    target_h: Graph
    target_kind: ModificationKind
    execution: StepExecution | None = None

    def __post_init__(self) -> None:
        if self.step not in STEP_KINDS:
            raise ValueError(f"unknown reduction step kind {self.step!r}")

    def to_obj(self, *, include_endpoints: bool = True) -> dict[str, Any]:
        obj: dict[str, Any] = {
            "step": self.step,
            "params": dict(self.params),
            "graph_after": graph_to_obj(self.source_h),
        }
        if include_endpoints:
            obj["source"] = {"h": graph_to_obj(self.source_h), "kind": self.source_kind.value}
            obj["target"] = {"h": graph_to_obj(self.target_h), "kind": self.target_kind.value}
        if self.execution is not None:
            obj["execution"] = {
                "input": dict(self.execution.input_summary),
                "output": dict(self.execution.output_summary),
                "metadata": dict(self.execution.metadata),
            }
        return obj


def step_from_obj(obj: Any) -> ReductionStep:
    if not isinstance(obj, dict) or "step" not in obj:
        raise ValueError("reduction step must be an object with a step name")
    if "source" not in obj or "target" not in obj:
        raise ValueError("serialized step must carry source and target problems")
    return ReductionStep(
        step=obj["step"],
        params=dict(obj.get("params", {})),
        source_h=graph_from_obj(obj["source"]["h"]),
        source_kind=kind_from_str(obj["source"]["kind"]),
        target_h=graph_from_obj(obj["target"]["h"]),
        target_kind=kind_from_str(obj["target"]["kind"]),
    )
