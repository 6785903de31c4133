"""Logging setup shared by the library and the CLI."""
import logging
import sys

import coloredlogs
import orjson

from cyclolc.config import LoggingConfig

TEXT_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"


class JsonFormatter(logging.Formatter):
    """One orjson-encoded object per record."""

    def format(self, record: logging.LogRecord) -> str:
        payload = {
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        extra = getattr(record, "context", None)
        if isinstance(extra, dict):
            payload.update(extra)
        if record.exc_info:
            payload["exc_info"] = self.formatException(record.exc_info)
        return orjson.dumps(payload, option=orjson.OPT_SORT_KEYS).decode("utf-8")


def setup_logging(config: LoggingConfig) -> logging.Logger:
    """Configure the ``cyclolc`` logger tree; output goes to stderr only."""
    root = logging.getLogger("cyclolc")
    for handler in list(root.handlers):
        root.removeHandler(handler)
    root.setLevel(config.level)
    root.propagate = False

    if config.format == "json" or config.structured:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(JsonFormatter())
        root.addHandler(handler)
    else:
        coloredlogs.install(
            level=config.level,
            logger=root,
            stream=sys.stderr,
            fmt=TEXT_FORMAT,
            isatty=sys.stderr.isatty(),
        )
    return root
