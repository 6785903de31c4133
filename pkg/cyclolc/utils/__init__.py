"""Utility modules."""
from cyclolc.utils.log import JsonFormatter, setup_logging

__all__ = [
    "JsonFormatter",
    "setup_logging",
]
