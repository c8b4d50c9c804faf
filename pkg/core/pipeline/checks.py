"""The check pipeline: named steps threaded through a shared context."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

from core.algebra.structure import check_associativity, check_components, check_unit
from core.config import get_settings
from core.decomp.criteria import (
    UnconstrainedEntries,
    bahturin_regev_check,
    component_block_sizes,
    determinant_check,
    matrix_rows_check,
    minimality_check,
    msquared_check,
    necessary_condition_check,
    qc_relations_check,
    root_order_bound,
    root_order_check,
)
from core.decomp.decomposition import (
    Decomposition,
    ThetaDetectionError,
    ThetaTable,
    check_direct_sum,
    detect_theta,
)
from core.decomp.witness import (
    RegularityWitness,
    central_invertibility_check,
    find_witness,
    tuple_product_check,
    witness_report,
)
from core.exactnum.cyclotomic import format_scalar
from core.gradedgroup.reconstruct import reconstruct_group_check, semisimple_set_grading_check
from core.gradedgroup.setgrading import (
    NotASetGrading,
    SetGradingTable,
    realizability_check,
    set_grading_detect,
)
from core.schema.report import CheckReport, PipelineReport
from infra.monitoring import record_outcome, track_check

logger = logging.getLogger(__name__)


@dataclass
class PipelineContext:
    decomposition: Decomposition
    seed: int
    budget: Optional[int] = None
    definitive: bool = False
    theta: Optional[ThetaTable] = None
    witness: Optional[RegularityWitness] = None
    set_grading: Optional[SetGradingTable] = None
    reports: Dict[str, CheckReport] = field(default_factory=dict)


StepFn = Callable[[PipelineContext], CheckReport]


def _needs_theta(name: str, fn: Callable[[PipelineContext, ThetaTable], CheckReport]) -> StepFn:
    def step(ctx: PipelineContext) -> CheckReport:
        if ctx.theta is None:
            return CheckReport.skipped(name, "theta table unavailable")
        try:
            return fn(ctx, ctx.theta)
        except UnconstrainedEntries as exc:
            return CheckReport.skipped(name, str(exc))

    return step


def _detect_theta(ctx: PipelineContext) -> CheckReport:
    decomposition = ctx.decomposition
    if not check_direct_sum(decomposition):
        return CheckReport.fail("detect-theta", {"reason": "components do not form a direct sum"})
    try:
        table = detect_theta(decomposition)
    except ThetaDetectionError as exc:
        certificate = {
            "kind": type(exc).__name__,
            "components": [exc.i + 1, exc.j + 1],
            "labels": [decomposition.label(exc.i), decomposition.label(exc.j)],
            "basis_pair": [p + 1 for p in exc.pair] if exc.pair else None,
        }
        return CheckReport.fail("detect-theta", certificate, [str(exc)])
    ctx.theta = table
    certificate = {
        "m": table.m,
        "labels": list(decomposition.labels),
        "theta": [[format_scalar(c) for c in row] for row in table.entries],
        "unconstrained": [
            [i + 1, j + 1]
            for i, row in enumerate(table.constrained)
            for j, flag in enumerate(row)
            if not flag
        ],
    }
    return CheckReport.ok("detect-theta", certificate)


def _witness(ctx: PipelineContext) -> CheckReport:
    if ctx.theta is None:
        return CheckReport.skipped("witness", "theta table unavailable")
    ctx.witness = find_witness(
        ctx.decomposition, ctx.theta, budget=ctx.budget, seed=ctx.seed, definitive=ctx.definitive
    )
    return witness_report(ctx.witness)


def _msquared(ctx: PipelineContext, table: ThetaTable) -> CheckReport:
    holds = msquared_check(table)
    certificate = {"m": table.m, "square_is_m_identity": holds}
    return CheckReport.ok("msquared", certificate) if holds else CheckReport.fail("msquared", certificate)


def _set_grading(ctx: PipelineContext) -> CheckReport:
    decomposition = ctx.decomposition
    try:
        ctx.set_grading = set_grading_detect(decomposition)
    except NotASetGrading as exc:
        certificate = {
            "pair": [decomposition.label(exc.i), decomposition.label(exc.j)],
            "positions": [exc.i + 1, exc.j + 1],
            "components": [decomposition.label(c) for c in exc.components],
        }
        return CheckReport.fail("set-grading", certificate)
    grading = ctx.set_grading
    certificate = {
        "total": grading.is_total,
        "f": [[None if v is None else v + 1 for v in row] for row in grading.f],
    }
    return CheckReport.ok("set-grading", certificate)


def _realizability(ctx: PipelineContext) -> CheckReport:
    if ctx.set_grading is None:
        return CheckReport.skipped("realizability", "not a set grading", vacuous=True)
    return realizability_check(ctx.set_grading)


def _necessary_condition(ctx: PipelineContext) -> CheckReport:
    blocks = component_block_sizes(ctx.decomposition)
    if blocks is None:
        return CheckReport.skipped("necessary-condition", "no simple-component metadata", vacuous=True)
    return necessary_condition_check(blocks, ctx.decomposition.m)


def _algebra_axioms(ctx: PipelineContext) -> CheckReport:
    algebra = ctx.decomposition.algebra
    for report in (check_associativity(algebra), check_unit(algebra), check_components(algebra)):
        if not report.passed:
            return CheckReport.fail("algebra-axioms", {"failed": report.check, **report.certificate})
    return CheckReport.ok("algebra-axioms", {"dim": algebra.dim})


def _with_witness(
    name: str, ctx: PipelineContext, fn: Callable[[RegularityWitness], CheckReport]
) -> CheckReport:
    if ctx.witness is None:
        return CheckReport.skipped(name, "witness step did not run")
    return fn(ctx.witness)


def _root_order(ctx: PipelineContext, table: ThetaTable) -> CheckReport:
    return root_order_check(table, root_order_bound(ctx.decomposition))


STEP_REGISTRY: Dict[str, StepFn] = {
    "algebra-axioms": _algebra_axioms,
    "detect-theta": _detect_theta,
    "qc-relations": _needs_theta("qc-relations", lambda ctx, t: qc_relations_check(t)),
    "witness": _witness,
    "minimality": _needs_theta("minimality", lambda ctx, t: minimality_check(t)),
    "determinant": _needs_theta("determinant", lambda ctx, t: determinant_check(t)),
    "bahturin-regev": _needs_theta("bahturin-regev", lambda ctx, t: bahturin_regev_check(t)),
    "msquared": _needs_theta("msquared", _msquared),
    "root-order": _needs_theta("root-order", _root_order),
    "set-grading": _set_grading,
    "realizability": _realizability,
    "reconstruct-group": _needs_theta(
        "reconstruct-group", lambda ctx, t: reconstruct_group_check(ctx.decomposition, t, ctx.witness)
    ),
    "necessary-condition": _necessary_condition,
    "matrix-rows": _needs_theta("matrix-rows", lambda ctx, t: matrix_rows_check(ctx.decomposition, t)),
    "tuple-products": lambda ctx: _with_witness(
        "tuple-products", ctx, lambda w: tuple_product_check(ctx.decomposition, w, seed=ctx.seed)
    ),
    "central-invertibility": lambda ctx: _with_witness(
        "central-invertibility", ctx, lambda w: central_invertibility_check(ctx.decomposition, w)
    ),
    "semisimple-set-grading": _needs_theta(
        "semisimple-set-grading",
        lambda ctx, t: semisimple_set_grading_check(ctx.decomposition, t, ctx.witness),
    ),
}

# theta and witness feed later steps, so steps always run in this order
CORE_STEPS: List[str] = [
    "detect-theta",
    "qc-relations",
    "witness",
    "minimality",
    "determinant",
    "bahturin-regev",
    "msquared",
    "root-order",
    "set-grading",
    "realizability",
    "reconstruct-group",
]
ALL_STEPS: List[str] = CORE_STEPS + [
    "necessary-condition",
    "matrix-rows",
    "tuple-products",
    "central-invertibility",
    "semisimple-set-grading",
]
STEP_ORDER: List[str] = ["algebra-axioms"] + ALL_STEPS
WITNESS_CONSUMERS = {
    "reconstruct-group",
    "tuple-products",
    "central-invertibility",
    "semisimple-set-grading",
}


@dataclass
class CheckPipeline:
    steps: List[str] = field(default_factory=lambda: list(CORE_STEPS))
    source: str = ""

    def __post_init__(self) -> None:
        unknown = [name for name in self.steps if name not in STEP_REGISTRY]
        if unknown:
            raise KeyError(f"Unknown check step(s) {unknown}")
        requested = set(self.steps)
        self.steps = [name for name in STEP_ORDER if name in requested]

    def run(
        self,
        decomposition: Decomposition,
        seed: Optional[int] = None,
        budget: Optional[int] = None,
        definitive: bool = False,
    ) -> PipelineReport:
        seed = seed if seed is not None else get_settings().seed
        ctx = PipelineContext(decomposition, seed, budget, definitive)
        report = PipelineReport(source=self.source, seed=seed)
        for name in self.steps:
            # unrequested prerequisites still run, without a report entry
            if name not in ("algebra-axioms", "detect-theta") and "detect-theta" not in ctx.reports:
                ctx.reports["detect-theta"] = _detect_theta(ctx)
            if name in WITNESS_CONSUMERS and "witness" not in ctx.reports:
                ctx.reports["witness"] = _witness(ctx)
            result = self._run_step(name, ctx)
            ctx.reports[name] = result
            report.steps.append(result)
        return report

    @staticmethod
    def _run_step(name: str, ctx: PipelineContext) -> CheckReport:
        with track_check(name):
            result = STEP_REGISTRY[name](ctx)
        record_outcome(name, result.status)
        logger.info("step %s: %s", name, result.status)
        return result


def parse_steps(
    all_steps: bool = False, steps: Optional[str] = None, skip: Optional[str] = None
) -> List[str]:
    if steps:
        selected = [s.strip() for s in steps.split(",") if s.strip()]
    else:
        selected = list(ALL_STEPS if all_steps else CORE_STEPS)
    skipped = {s.strip() for s in (skip or "").split(",") if s.strip()}
    unknown = sorted((skipped | set(selected)) - set(STEP_REGISTRY))
    if unknown:
        raise KeyError(f"Unknown check step(s) {unknown}")
    return [s for s in selected if s not in skipped]


def run_pipeline(
    decomposition: Decomposition,
    steps: Optional[Sequence[str]] = None,
    seed: Optional[int] = None,
    source: str = "",
    budget: Optional[int] = None,
    definitive: bool = False,
) -> PipelineReport:
    pipeline = CheckPipeline(list(steps) if steps is not None else list(CORE_STEPS), source)
    return pipeline.run(decomposition, seed=seed, budget=budget, definitive=definitive)
