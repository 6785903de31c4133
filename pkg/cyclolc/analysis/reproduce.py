"""Reproduction of the reference tables and examples, and grid sweeps over parameters."""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from cyclolc.analysis.predictor import Verdict
from cyclolc.analysis.reference_data import EXAMPLES, ReferenceTable, TableRow, expand, table_rows
from cyclolc.analysis.report import LCReport
from cyclolc.arith.numtheory import SequenceParams
from cyclolc.config import CycloConfig
from cyclolc.errors import GridTooLargeError, ParameterError
from cyclolc.sequences.cyclotomy import Variant
from cyclolc.sequences.sequence import generate
from cyclolc.workflows.analysis_graph import AnalysisWorkflow, analyze

logger = logging.getLogger(__name__)

Job = Tuple[SequenceParams, Variant]


class TableRowOutcome(BaseModel):
    """One (g, b) combination of a table row."""
    model_config = ConfigDict(frozen=True)

    table: ReferenceTable
    expected: int
    report: LCReport

    @property
    def passed(self) -> bool:
        return self.report.lc == self.expected

    def describe(self) -> str:
        status = "ok" if self.passed else "FAIL"
        return f"{self.table.value} {self.report.params.label()}: expected {self.expected}, got {self.report.lc} [{status}]"


class TableReproduction(BaseModel):
    model_config = ConfigDict(frozen=True)

    table: ReferenceTable
    outcomes: List[TableRowOutcome]

    @property
    def passed(self) -> bool:
        return all(outcome.passed for outcome in self.outcomes)

    def failures(self) -> List[TableRowOutcome]:
        return [outcome for outcome in self.outcomes if not outcome.passed]


class ExampleOutcome(BaseModel):
    """Regenerated example against its printed bitstring and LC."""
    model_config = ConfigDict(frozen=True)

    name: str
    variant: Variant
    expected_lc: int
    report: LCReport
    first_divergence: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.first_divergence is None and self.report.lc == self.expected_lc

    def describe(self) -> str:
        if self.first_divergence is not None:
            return f"{self.name} {self.variant.value}: bitstrings differ at index {self.first_divergence}"
        status = "ok" if self.passed else "FAIL"
        return f"{self.name} {self.variant.value}: LC {self.report.lc} (expected {self.expected_lc}) [{status}]"


class ExampleReproduction(BaseModel):
    model_config = ConfigDict(frozen=True)

    outcomes: List[ExampleOutcome]

    @property
    def passed(self) -> bool:
        return all(outcome.passed for outcome in self.outcomes)


def _analyze_job(job: Job, config: CycloConfig) -> LCReport:
    params, variant = job
    return analyze(params, variant, config=config)


def run_jobs(jobs: Sequence[Job], config: Optional[CycloConfig] = None,
             progress: Optional[Callable[[LCReport], None]] = None) -> List[LCReport]:
    """Analyze every job; results keep the input order."""
    config = config or CycloConfig()
    workers = config.analysis.workers
    reports: List[LCReport] = []
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for report in pool.map(_analyze_job, jobs, [config] * len(jobs)):
                reports.append(report)
                if progress:
                    progress(report)
    else:
        workflow = AnalysisWorkflow(config)
        for params, variant in jobs:
            report = workflow.run(params, variant)
            reports.append(report)
            if progress:
                progress(report)
    return reports


def table_jobs(which: ReferenceTable) -> List[Tuple[TableRow, Job]]:
    jobs = []
    for row in table_rows(which):
        if (row.p - 1) % row.e or row.f & (row.f - 1):
            raise ParameterError(f"table row p={row.p} e={row.e} gives f={row.f}, not a power of two")
        for g, b in expand(row):
            params = SequenceParams.build(row.p, row.m, e=row.e, b=b, g=g)
            jobs.append((row, (params, which.variant)))
    return jobs


def reproduce_table(which: ReferenceTable, config: Optional[CycloConfig] = None,
                    progress: Optional[Callable[[LCReport], None]] = None) -> TableReproduction:
    """Analyze every (g, b) combination of every row and compare with the LC column."""
    pairs = table_jobs(which)
    reports = run_jobs([job for _, job in pairs], config, progress)
    outcomes = [
        TableRowOutcome(table=which, expected=row.lc, report=report)
        for (row, _), report in zip(pairs, reports)
    ]
    result = TableReproduction(table=which, outcomes=outcomes)
    for outcome in result.failures():
        logger.error("table mismatch: %s", outcome.describe())
    return result


def first_divergence(expected: str, actual: str) -> Optional[int]:
    """Index of the first differing character, or None when identical."""
    for i, (x, y) in enumerate(zip(expected, actual)):
        if x != y:
            return i
    if len(expected) != len(actual):
        return min(len(expected), len(actual))
    return None


def reproduce_examples(config: Optional[CycloConfig] = None) -> ExampleReproduction:
    """Regenerate every printed period and LC; strings compare byte-exact."""
    jobs = []
    for example in EXAMPLES:
        params = SequenceParams.build(example.p, example.m, f=example.f, b=example.b, g=example.g)
        jobs.append((params, example.variant))
    reports = run_jobs(jobs, config)
    outcomes = []
    for example, (params, variant), report in zip(EXAMPLES, jobs, reports):
        bits = generate(params, variant).to_bitstring()
        outcome = ExampleOutcome(
            name=example.name,
            variant=variant,
            expected_lc=example.lc,
            report=report,
            first_divergence=first_divergence(example.bits, bits),
        )
        if not outcome.passed:
            logger.error("example mismatch: %s", outcome.describe())
        outcomes.append(outcome)
    return ExampleReproduction(outcomes=outcomes)


def grid_jobs(ps: Iterable[int], ms: Iterable[int], f: Optional[int] = None, e: Optional[int] = None,
              bs: Optional[Iterable[int]] = None, g: Optional[int] = None,
              variant: Variant = Variant.STANDARD, max_analyses: int = 10_000) -> List[Job]:
    """Parameter grid p x m x b; ``bs=None`` sweeps every b in [0, d_m)."""
    ps, ms = list(ps), list(ms)
    bs = None if bs is None else list(bs)
    sizes = []
    for p in ps:
        for m in ms:
            base = SequenceParams.build(p, m, f=f, e=e, g=g)
            sizes.append((base, range(base.d(m)) if bs is None else bs))
    total = sum(len(b_values) for _, b_values in sizes)
    if total > max_analyses:
        raise GridTooLargeError(f"grid has {total} analyses, cap is {max_analyses}")
    return [(base.with_shift(b), variant) for base, b_values in sizes for b in b_values]


class SweepSummary(BaseModel):
    """Verdict counts over a grid."""
    model_config = ConfigDict(frozen=True)

    reports: List[LCReport]

    @property
    def violations(self) -> List[LCReport]:
        return [r for r in self.reports if r.verdict == Verdict.VIOLATION]

    @property
    def conjecture_mismatches(self) -> List[LCReport]:
        return [r for r in self.reports if r.conjecture_mismatch]

    @property
    def passed(self) -> bool:
        return not self.violations

    def counts(self) -> dict:
        out = {verdict.value: 0 for verdict in Verdict}
        for report in self.reports:
            out[report.verdict.value] += 1
        return out
