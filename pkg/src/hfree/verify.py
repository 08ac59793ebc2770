"""Verification campaigns: mechanized equivalence and property checks.

Each reduction in this package carries an if-and-only-if claim; the
campaigns here grind those claims against exhaustive small-instance
enumeration.  A campaign enumerates every host graph up to isomorphism
within a size cap, builds the source instance, applies the step, solves
both sides exactly, and reports every disagreement verbatim.  Sweeps for
the churn procedures, the classifier dichotomy, and randomized structural
audits of the constructions round out the suite set.

Campaign evaluation is embarrassingly parallel; reports are merged in
enumeration order so worker count never changes the output.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from typing import Any

from .classify import (
    REASON_AT_MOST_ONE_EDGE,
    REASON_AT_MOST_ONE_NON_EDGE,
    REASON_AT_MOST_TWO_VERTICES,
    CHURN_COMPLEMENT,
    CHURN_DELETE_MAX,
    CHURN_DELETE_MIN,
    classify,
    deletion_churn,
    editing_churn,
    recognize_sparse_lh,
)
from .formats import serialize_graph6
from .graphs import (
    Graph,
    are_isomorphic,
    complement,
    degree_profile,
    edge,
    graph_from_edges,
    induced_subgraph,
    is_forest,
    is_regular,
    join,
    null_graph,
    path,
    t_diamond,
)
from .problems import (
    STEP_COMPLEMENT,
    STEP_DEGREE,
    STEP_SPARSE_VH,
    STEP_SPARSE_VL,
    STEP_TDIAMOND,
    ContractViolationError,
    Instance,
    ModificationKind,
    ReductionStep,
)
from .reductions import (
    apply_step,
    audit_branch_construction,
    audit_clique_construction,
    construct_adj,
    construct_nonadj,
    construct_tdiamond,
    reduce_sparse_case1,
    replay_chain,
)
from .smallgraphs import find_sparse_witness, graphs_up_to, graphs_with_vertex_count
from .solve import (
    BruteForceCapExceeded,
    check_witness,
    solve_branching,
    solve_bruteforce,
)

SUITE_NAMES = (
    "classify",
    "churn",
    "degree",
    "tdiamond",
    "case1",
    "sparse-vl",
    "sparse-vh",
    "complement",
    "audits",
)

# acceptance-scale caps, per suite: (host_cap, k_cap, n_cap)
_SUITE_CAPS: dict[str, tuple[int, int, int]] = {
    "classify": (0, 0, 6),
    "churn": (0, 0, 6),
    "degree": (4, 2, 0),
    "tdiamond": (4, 2, 0),
    "case1": (4, 1, 0),
    "sparse-vl": (4, 1, 0),
    "sparse-vh": (4, 1, 0),
    "complement": (5, 2, 0),
    "audits": (5, 2, 0),
}


def _evaluate_case(args: tuple[ReductionStep, Graph, int]) -> dict[str, Any]:
    step, g, k = args
    inst = Instance(g=g, k=k, h=step.source_h, kind=step.source_kind)
    out = apply_step(step, inst)
    source = solve_branching(inst.g, inst.k, inst.h, inst.kind)
    target = solve_branching(out.g, out.k, out.h, out.kind)
    result: dict[str, Any] = {
        "host": serialize_graph6(g),
        "k": k,
        "source_answer": source.answer,
        "target_answer": target.answer,
        "k_preserved": out.k == inst.k,
        "oracle_checked": False,
        "oracle_agrees": True,
        "witness_ok": True,
    }
    try:
        oracle = solve_bruteforce(inst.g, inst.k, inst.h, inst.kind)
        result["oracle_checked"] = True
        result["oracle_agrees"] = oracle.answer == source.answer
    except BruteForceCapExceeded:
        pass
    if source.answer and not check_witness(
        inst.g, inst.k, inst.h, inst.kind, source.witness
    ):
        result["witness_ok"] = False
    if target.answer and not check_witness(
        out.g, out.k, out.h, out.kind, target.witness
    ):
        result["witness_ok"] = False
    if source.answer != target.answer:
        result["counterexample"] = {
            "source": inst.to_obj(),
            "target": out.to_obj(),
        }
    return result


def verify_equivalence(
    step: ReductionStep, host_cap: int, k_cap: int, workers: int = 1
) -> dict[str, Any]:
    """Check a step's yes/no equivalence over every source host up to
    isomorphism with at most host_cap vertices and budgets 1..k_cap."""
    cases = [
        (step, g, k)
        for n in range(1, host_cap + 1)
        for g in graphs_with_vertex_count(n)
        for k in range(1, k_cap + 1)
    ]
    if workers > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_evaluate_case, cases, chunksize=4))
    else:
        results = [_evaluate_case(c) for c in cases]
    disagreements = [r for r in results if r["source_answer"] != r["target_answer"]]
    oracle_mismatches = [r for r in results if not r["oracle_agrees"]]
    witness_failures = [r for r in results if not r["witness_ok"]]
    return {
        "step": step.to_obj(),
        "host_cap": host_cap,
        "k_cap": k_cap,
        "instances": len(results),
        "agree_yes": sum(
            1 for r in results if r["source_answer"] and r["target_answer"]
        ),
        "agree_no": sum(
            1 for r in results if not r["source_answer"] and not r["target_answer"]
        ),
        "oracle_checked": sum(1 for r in results if r["oracle_checked"]),
        "oracle_mismatches": oracle_mismatches,
        "witness_failures": witness_failures,
        "k_preserved": all(r["k_preserved"] for r in results),
        "disagreements": disagreements,
    }


def _campaign_problems(report: dict[str, Any]) -> int:
    return (
        len(report["disagreements"])
        + len(report["oracle_mismatches"])
        + len(report["witness_failures"])
        + (0 if report["k_preserved"] else 1)
    )


# ---------------------------------------------------------------------------
# suite definitions

def _degree_steps() -> list[ReductionStep]:
    steps = []
    for h, d in ((t_diamond(2), 2), (path(5), 1)):
        v_prime = [v for v in h.vertices if h.degree(v) > d]
        sub, _ = induced_subgraph(h, v_prime)
        for kind in ModificationKind:
            steps.append(
                ReductionStep(
                    step=STEP_DEGREE,
                    params={"d": d, "variant": "min"},
                    source_h=sub,
                    source_kind=kind,
                    target_h=h,
                    target_kind=kind,
                )
            )
    return steps


def _tdiamond_steps() -> list[ReductionStep]:
    return [
        ReductionStep(
            step=STEP_TDIAMOND,
            params={"t": 3},
            source_h=t_diamond(2),
            source_kind=ModificationKind.DELETION,
            target_h=t_diamond(3),
            target_kind=ModificationKind.DELETION,
        )
    ]


def _case1_steps() -> list[ReductionStep]:
    h = join(null_graph(2), null_graph(3))
    _, step = reduce_sparse_case1(null_graph(1), 1, h)
    return [
        ReductionStep(
            step=step.step,
            params=step.params,
            source_h=step.source_h,
            source_kind=step.source_kind,
            target_h=step.target_h,
            target_kind=step.target_kind,
        )
    ]


def _sparse_vl_steps() -> list[ReductionStep]:
    h = find_sparse_witness(edges_in_high=0, edges_in_low=1)
    shape = recognize_sparse_lh(h)
    pair = sorted(e for e in h.edges if e[0] in shape.v_low and e[1] in shape.v_low)[0]
    v_prime = [v for v in h.vertices if v not in pair]
    sub, _ = induced_subgraph(h, v_prime)
    return [
        ReductionStep(
            step=STEP_SPARSE_VL,
            params={"low_pair": list(pair)},
            source_h=sub,
            source_kind=ModificationKind.DELETION,
            target_h=h,
            target_kind=ModificationKind.DELETION,
        )
    ]


def _sparse_vh_steps() -> list[ReductionStep]:
    h = find_sparse_witness(edges_in_high=1, edges_in_low=0, exclude_t_diamond=True)
    shape = recognize_sparse_lh(h)
    pair = sorted(
        e for e in h.edges if e[0] in shape.v_high and e[1] in shape.v_high
    )[0]
    v_prime = sorted(shape.v_low | set(pair))
    sub, _ = induced_subgraph(h, v_prime)
    return [
        ReductionStep(
            step=STEP_SPARSE_VH,
            params={"high_pair": list(pair), "v_prime": v_prime},
            source_h=sub,
            source_kind=ModificationKind.DELETION,
            target_h=h,
            target_kind=ModificationKind.DELETION,
        )
    ]


def _complement_steps() -> list[ReductionStep]:
    steps = []
    for h in (path(3), graph_from_edges(3, [(0, 1), (1, 2), (0, 2)])):
        steps.append(
            ReductionStep(
                step=STEP_COMPLEMENT,
                params={},
                source_h=h,
                source_kind=ModificationKind.DELETION,
                target_h=complement(h),
                target_kind=ModificationKind.COMPLETION,
            )
        )
    return steps


_EQUIVALENCE_SUITES = {
    "degree": _degree_steps,
    "tdiamond": _tdiamond_steps,
    "case1": _case1_steps,
    "sparse-vl": _sparse_vl_steps,
    "sparse-vh": _sparse_vh_steps,
    "complement": _complement_steps,
}


def _check_churn_steps(g: Graph, steps, terminal: Graph) -> list[str]:
    """Re-derive each churn step's output from its input; any mismatch is a
    violation."""
    violations = []
    prev = g
    for i, cs in enumerate(steps):
        if cs.before != prev:
            violations.append(f"{serialize_graph6(g)}: step {i} input mismatch")
        if cs.kind == CHURN_COMPLEMENT:
            if cs.degree is not None or cs.after != complement(cs.before):
                violations.append(f"{serialize_graph6(g)}: step {i} bad toggle")
        elif cs.kind in (CHURN_DELETE_MIN, CHURN_DELETE_MAX):
            prof = degree_profile(cs.before)
            if cs.kind == CHURN_DELETE_MIN:
                if cs.degree != prof.min_degree:
                    violations.append(f"{serialize_graph6(g)}: step {i} wrong degree")
                keep = [v for v in cs.before.vertices if cs.before.degree(v) > cs.degree]
            else:
                if cs.degree != prof.max_degree:
                    violations.append(f"{serialize_graph6(g)}: step {i} wrong degree")
                keep = [v for v in cs.before.vertices if cs.before.degree(v) < cs.degree]
            expect, _ = induced_subgraph(cs.before, keep)
            if cs.after != expect:
                violations.append(f"{serialize_graph6(g)}: step {i} bad strip")
        else:
            violations.append(f"{serialize_graph6(g)}: step {i} unknown kind {cs.kind}")
        prev = cs.after
    if prev != terminal:
        violations.append(f"{serialize_graph6(g)}: terminal mismatch")
    return violations


def run_churn_suite(n_cap: int) -> dict[str, Any]:
    """Exhaustive termination and soundness sweep for both churn
    procedures over all graphs up to n_cap vertices (up to isomorphism)."""
    violations: list[str] = []
    editing_checked = 0
    deletion_checked = 0
    for g in graphs_up_to(n_cap):
        if g.n >= 3:
            editing_checked += 1
            terminal, steps = editing_churn(g)
            violations.extend(_check_churn_steps(g, steps, terminal))
            ok = (
                is_regular(terminal)
                or are_isomorphic(terminal, path(3))
                or are_isomorphic(terminal, path(4))
                or are_isomorphic(terminal, t_diamond(2))
            )
            if not ok or terminal.n < 3:
                violations.append(
                    f"{serialize_graph6(g)}: editing terminal "
                    f"{serialize_graph6(terminal)} not in the allowed set"
                )
        if g.m >= 2:
            deletion_checked += 1
            terminal, steps = deletion_churn(g)
            violations.extend(_check_churn_steps(g, steps, terminal))
            ok = (
                is_regular(terminal)
                or is_forest(terminal)
                or recognize_sparse_lh(terminal) is not None
            )
            if not ok or terminal.m < 2:
                violations.append(
                    f"{serialize_graph6(g)}: deletion terminal "
                    f"{serialize_graph6(terminal)} not in the allowed set"
                )
    return {
        "suite": "churn",
        "n_cap": n_cap,
        "editing_checked": editing_checked,
        "deletion_checked": deletion_checked,
        "violations": violations,
        "problems": len(violations),
    }


def _expected_verdict(h: Graph, kind: ModificationKind) -> tuple[str, str | None]:
    if kind is ModificationKind.EDITING:
        if h.n <= 2:
            return "Polynomial", REASON_AT_MOST_TWO_VERTICES
    elif kind is ModificationKind.DELETION:
        if h.m <= 1:
            return "Polynomial", REASON_AT_MOST_ONE_EDGE
    else:
        if complement(h).m <= 1:
            return "Polynomial", REASON_AT_MOST_ONE_NON_EDGE
    return "NPComplete", None


def run_classify_suite(n_cap: int) -> dict[str, Any]:
    """Dichotomy sweep: the verdict must match the degenerate-regime test
    for every pattern up to n_cap vertices and every kind, and every hard
    chain must replay cleanly (on a singleton host) with its budget kept."""
    violations: list[str] = []
    polynomial = 0
    npcomplete = 0
    for h in graphs_up_to(n_cap):
        for kind in ModificationKind:
            tag = f"{serialize_graph6(h)}/{kind.value}"
            expected, reason = _expected_verdict(h, kind)
            got = classify(h, kind)
            if got.verdict != expected:
                violations.append(f"{tag}: verdict {got.verdict}, expected {expected}")
                continue
            if expected == "Polynomial":
                polynomial += 1
                if got.reason != reason:
                    violations.append(f"{tag}: reason {got.reason}, expected {reason}")
                continue
            npcomplete += 1
            if got.chain is None or got.base is None:
                violations.append(f"{tag}: hard verdict without a chain")
                continue
            if got.chain and got.chain[0].target_h != h:
                violations.append(f"{tag}: chain does not start at the pattern")
            if got.chain and got.base.graph != got.chain[-1].source_h:
                violations.append(f"{tag}: chain does not end at the anchor")
            for i in range(len(got.chain) - 1):
                if got.chain[i].source_h != got.chain[i + 1].target_h:
                    violations.append(f"{tag}: chain breaks at index {i}")
            seed = Instance(
                g=null_graph(1), k=1, h=got.base.graph, kind=got.base.kind
            )
            try:
                replayed = replay_chain(got.chain, seed)
            except ContractViolationError as exc:
                violations.append(f"{tag}: replay failed: {exc}")
                continue
            if replayed.k != 1:
                violations.append(f"{tag}: replay changed the budget")
            if not are_isomorphic(replayed.h, h) or replayed.kind is not kind:
                violations.append(f"{tag}: replay ended at the wrong problem")
    return {
        "suite": "classify",
        "n_cap": n_cap,
        "polynomial": polynomial,
        "npcomplete": npcomplete,
        "violations": violations,
        "problems": len(violations),
    }


def run_audit_suite(seed: int, count: int = 100, host_cap: int = 5, k_cap: int = 2) -> dict[str, Any]:
    """Randomized structural audits of the three constructions."""
    rng = random.Random(seed)
    pool = [h for h in graphs_up_to(5, n_min=3)]
    violations: list[str] = []
    for trial in range(count):
        h = rng.choice(pool)
        k = rng.randint(1, k_cap)
        n = rng.randint(1, host_cap)
        edges = [
            edge(u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.5
        ]
        g = graph_from_edges(n, edges)
        size = rng.randint(1, h.n)
        v_prime = sorted(rng.sample(range(h.n), size))
        out, records = construct_nonadj(g, k, h, v_prime)
        for msg in audit_branch_construction(g, k, h, v_prime, out, records, False):
            violations.append(f"trial {trial} plain: {msg}")
        out, records = construct_adj(g, k, h, v_prime)
        for msg in audit_branch_construction(g, k, h, v_prime, out, records, True):
            violations.append(f"trial {trial} joined: {msg}")
        out, cliques = construct_tdiamond(g, k)
        for msg in audit_clique_construction(g, k, out, cliques):
            violations.append(f"trial {trial} clique: {msg}")
    return {
        "suite": "audits",
        "seed": seed,
        "inputs": count,
        "violations": violations,
        "problems": len(violations),
    }


def run_suite(
    name: str,
    host_cap: int | None = None,
    k_cap: int | None = None,
    n_cap: int | None = None,
    seed: int = 0,
    workers: int = 1,
) -> dict[str, Any]:
    """Run one named suite with its acceptance-scale default caps, unless
    overridden."""
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITE_NAMES}")
    default_host, default_k, default_n = _SUITE_CAPS[name]
    host_cap = default_host if host_cap is None else host_cap
    k_cap = default_k if k_cap is None else k_cap
    n_cap = default_n if n_cap is None else n_cap
    if name == "churn":
        return run_churn_suite(n_cap)
    if name == "classify":
        return run_classify_suite(n_cap)
    if name == "audits":
        return run_audit_suite(seed, host_cap=host_cap, k_cap=k_cap)
    campaigns = [
        verify_equivalence(step, host_cap, k_cap, workers=workers)
        for step in _EQUIVALENCE_SUITES[name]()
    ]
    return {
        "suite": name,
        "campaigns": campaigns,
        "problems": sum(_campaign_problems(c) for c in campaigns),
    }


def run_suites(
    names,
    host_cap: int | None = None,
    k_cap: int | None = None,
    n_cap: int | None = None,
    seed: int = 0,
    workers: int = 1,
) -> dict[str, Any]:
    """Run the named suites (or all of them) into one consolidated report."""
    from . import __version__

    chosen = list(SUITE_NAMES) if "all" in names else list(names)
    suites = {
        name: run_suite(
            name,
            host_cap=host_cap,
            k_cap=k_cap,
            n_cap=n_cap,
            seed=seed,
            workers=workers,
        )
        for name in chosen
    }
    problems = sum(s["problems"] for s in suites.values())
    return {
        "tool": "hfree",
        "version": __version__,
        "config": {
            "suites": chosen,
            "host_cap": host_cap,
            "k_cap": k_cap,
            "n_cap": n_cap,
            "seed": seed,
            "workers": workers,
        },
        "suites": suites,
        "problems": problems,
        "ok": problems == 0,
    }
