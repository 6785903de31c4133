"""Theorem predictions, reports and reference data."""
from cyclolc.analysis.predictor import Prediction, PredictionKind, Verdict, predict
from cyclolc.analysis.reference_data import ReferenceTable
from cyclolc.analysis.report import LCReport

__all__ = [
    "Prediction",
    "PredictionKind",
    "Verdict",
    "predict",
    "ReferenceTable",
    "LCReport",
]
