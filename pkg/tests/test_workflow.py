"""Tests for the analysis workflow."""
import pytest

from cyclolc.arith.f2poly import LCMethod, LCResult
from cyclolc.arith.numtheory import SequenceParams
from cyclolc.errors import InconsistencyError
from cyclolc.sequences.cyclotomy import Variant
from cyclolc.workflows import analysis_graph
from cyclolc.workflows.analysis_graph import AnalysisWorkflow, analyze


def test_workflow_creation(config):
    """Test that the graph compiles when LangGraph is installed."""
    pytest.importorskip("langgraph")
    workflow = AnalysisWorkflow(config)
    assert workflow.build_graph() is not None


def test_sequential_fallback_matches_graph(monkeypatch, config, example1_params):
    """Test that the fallback runner gives the same report as the graph."""
    graph_report = AnalysisWorkflow(config).run(example1_params, Variant.MODIFIED)
    monkeypatch.setattr(analysis_graph, "LANGGRAPH_AVAILABLE", False)
    fallback_report = AnalysisWorkflow(config).run(example1_params, Variant.MODIFIED)
    assert fallback_report.to_record() == graph_report.to_record()


def test_build_graph_requires_langgraph(monkeypatch, config):
    """Test the import guard."""
    monkeypatch.setattr(analysis_graph, "LANGGRAPH_AVAILABLE", False)
    with pytest.raises(ImportError):
        AnalysisWorkflow(config).build_graph()


def test_field_check_branch(config, example2_params):
    """Test that the field check runs only when requested."""
    workflow = AnalysisWorkflow(config)
    assert workflow.run(example2_params).zero_count is None
    assert workflow.run(example2_params, with_field_check=True).zero_count == 4


def test_field_check_from_config(config, example2_params):
    """Test the configured default for the field check."""
    config.analysis.field_check = True
    assert analyze(example2_params, config=config).zero_count == 4


def test_field_check_skipped_for_large_degree(config):
    """Test that a large extension degree skips the field check with a note."""
    params = SequenceParams.build(31, 2, e=15, b=2, g=3)
    report = analyze(params, Variant.MODIFIED, with_field_check=True, config=config)
    assert report.zero_count is None
    assert any("field check skipped" in note for note in report.notes)
    assert report.lc == 1877


def test_method_disagreement_raises(monkeypatch, config, example1_params):
    """Test that a BM/gcd mismatch is an inconsistency."""
    monkeypatch.setattr(
        analysis_graph,
        "berlekamp_massey",
        lambda seq, periods=2: LCResult(lc=0, method=LCMethod.BM),
    )
    with pytest.raises(InconsistencyError) as excinfo:
        analyze(example1_params, config=config)
    assert excinfo.value.exit_code == 3
