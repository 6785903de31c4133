"""Workflow orchestration."""
from cyclolc.workflows.analysis_graph import AnalysisWorkflow, analyze

__all__ = ["AnalysisWorkflow", "analyze"]
