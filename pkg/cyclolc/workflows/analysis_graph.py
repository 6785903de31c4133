"""LangGraph workflow for one linear complexity analysis."""
import logging
import operator
from typing import Annotated, Any, List, Optional, TypedDict

try:
    from langgraph.graph import END, START, StateGraph
    LANGGRAPH_AVAILABLE = True
except ImportError:
    LANGGRAPH_AVAILABLE = False

from cyclolc.analysis.field_check import FieldChecker
from cyclolc.analysis.predictor import Verdict, judge, predict
from cyclolc.analysis.report import LCReport
from cyclolc.arith.f2poly import berlekamp_massey, lc_via_gcd
from cyclolc.arith.numtheory import SequenceParams, classify_case
from cyclolc.config import CycloConfig
from cyclolc.errors import FieldTooLargeError, InconsistencyError
from cyclolc.sequences.cyclotomy import Variant
from cyclolc.sequences.sequence import generate

logger = logging.getLogger(__name__)


class AnalysisState(TypedDict, total=False):
    """State passed between the analysis nodes."""
    params: SequenceParams
    variant: Variant
    with_field_check: bool
    keep_minimal_poly: bool
    case: Any
    sequence: Any
    bm: Any
    gcd: Any
    field: Any
    prediction: Any
    report: LCReport
    notes: Annotated[List[str], operator.add]


class AnalysisWorkflow:
    """classify -> generate -> measure -> [field_check] -> predict -> verdict."""

    NODE_ORDER = ("classify", "generate", "measure", "field_check", "predict", "verdict")

    def __init__(self, config: Optional[CycloConfig] = None):
        self.config = config or CycloConfig()
        self.field_checker = FieldChecker(self.config.analysis)
        self._graph = None

    # Node functions

    def classify_node(self, state: AnalysisState) -> dict:
        return {"case": classify_case(state["params"])}

    def generate_node(self, state: AnalysisState) -> dict:
        return {"sequence": generate(state["params"], state["variant"])}

    def measure_node(self, state: AnalysisState) -> dict:
        seq = state["sequence"]
        bm = berlekamp_massey(seq, periods=self.config.analysis.bm_periods)
        gcd = lc_via_gcd(seq)
        if bm.lc != gcd.lc:
            raise InconsistencyError(
                f"Berlekamp-Massey LC {bm.lc} != gcd LC {gcd.lc} for "
                f"{state['params'].label()} ({state['variant'].value})"
            )
        return {"bm": bm, "gcd": gcd}

    def field_check_node(self, state: AnalysisState) -> dict:
        params = state["params"]
        try:
            field = self.field_checker.run(params, state["variant"], state["case"])
        except FieldTooLargeError as exc:
            logger.info("skipping field check for %s: %s", params.label(), exc)
            return {"field": None, "notes": [f"field check skipped: {exc}"]}

        failed = [check.name for check in field.identities if not check.passed]
        if field.membership is not None and not field.membership.passed:
            failed.append("subfield_membership")
        if failed:
            raise InconsistencyError(
                f"field identities failed for {params.label()}: {', '.join(failed)}"
            )
        gcd_degree = state["gcd"].gcd_degree
        z = field.zero_count
        if not z <= gcd_degree <= 2 * z:
            raise InconsistencyError(
                f"gcd degree {gcd_degree} outside [Z, 2Z] with Z={z} for {params.label()}"
            )
        notes = list(field.membership.observations) if field.membership else []
        return {"field": field, "notes": notes}

    def predict_node(self, state: AnalysisState) -> dict:
        return {"prediction": predict(state["params"], state["variant"], state["case"])}

    def verdict_node(self, state: AnalysisState) -> dict:
        params = state["params"]
        lc = state["gcd"].lc
        field = state.get("field")
        bracket = field.bracket(params.period) if field is not None else None
        verdict, mismatch = judge(state["prediction"], lc, bracket)
        minimal = state["gcd"].minimal_poly if state.get("keep_minimal_poly") else None
        report = LCReport(
            params=params,
            variant=state["variant"],
            case=state["case"],
            lc_bm=state["bm"].lc,
            lc_gcd=lc,
            prediction=state["prediction"],
            verdict=verdict,
            conjecture_mismatch=mismatch,
            zero_count=field.zero_count if field is not None else None,
            gcd_degree=state["gcd"].gcd_degree,
            minimal_poly=str(minimal) if minimal is not None else None,
            field=field,
            notes=list(state.get("notes", [])),
        )
        if mismatch:
            logger.warning("conjecture mismatch for %s: LC=%d, conjectured %d",
                           params.label(), lc, state["prediction"].conjectured)
        if report.verdict == Verdict.VIOLATION:
            logger.error("theorem violation: %s", report.to_record())
        return {"report": report}

    def _route_after_measure(self, state: AnalysisState) -> str:
        return "field_check" if state.get("with_field_check") else "predict"

    def build_graph(self):
        """Compile the LangGraph state machine."""
        if not LANGGRAPH_AVAILABLE:
            raise ImportError("LangGraph is required for the graph runner. Install: pip install langgraph")
        workflow = StateGraph(AnalysisState)
        workflow.add_node("classify", self.classify_node)
        workflow.add_node("generate", self.generate_node)
        workflow.add_node("measure", self.measure_node)
        workflow.add_node("field_check", self.field_check_node)
        workflow.add_node("predict", self.predict_node)
        workflow.add_node("verdict", self.verdict_node)

        workflow.add_edge(START, "classify")
        workflow.add_edge("classify", "generate")
        workflow.add_edge("generate", "measure")
        workflow.add_conditional_edges(
            "measure",
            self._route_after_measure,
            {"field_check": "field_check", "predict": "predict"},
        )
        workflow.add_edge("field_check", "predict")
        workflow.add_edge("predict", "verdict")
        workflow.add_edge("verdict", END)
        return workflow.compile()

    def _run_sequential(self, state: AnalysisState) -> AnalysisState:
        state = dict(state)
        for name in self.NODE_ORDER:
            if name == "field_check" and not state.get("with_field_check"):
                continue
            update = getattr(self, f"{name}_node")(state)
            for key, value in update.items():
                if key == "notes":
                    state["notes"] = state.get("notes", []) + value
                else:
                    state[key] = value
        return state

    def run(self, params: SequenceParams, variant: Variant = Variant.STANDARD,
            with_field_check: Optional[bool] = None, keep_minimal_poly: bool = False) -> LCReport:
        if with_field_check is None:
            with_field_check = self.config.analysis.field_check
        initial: AnalysisState = {
            "params": params,
            "variant": variant,
            "with_field_check": with_field_check,
            "keep_minimal_poly": keep_minimal_poly,
            "notes": [],
        }
        if LANGGRAPH_AVAILABLE:
            if self._graph is None:
                self._graph = self.build_graph()
            final = self._graph.invoke(initial)
        else:
            final = self._run_sequential(initial)
        return final["report"]


def analyze(params: SequenceParams, variant: Variant = Variant.STANDARD,
            with_field_check: Optional[bool] = None,
            config: Optional[CycloConfig] = None, keep_minimal_poly: bool = False) -> LCReport:
    """Classify, generate, measure both ways, optionally run the field check, predict and judge."""
    return AnalysisWorkflow(config).run(params, variant, with_field_check, keep_minimal_poly)
