"""Output storage."""
from cyclolc.storage.report_store import ReportStore

__all__ = ["ReportStore"]
