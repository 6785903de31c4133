"""Writers for reports and generated sequences."""
import sys
from pathlib import Path
from typing import IO, Iterable, Optional, Union

import orjson

from cyclolc.analysis.report import LCReport
from cyclolc.sequences.sequence import BinarySequence


class ReportStore:
    """Writes JSON-lines reports and sequence exports to a file or standard output."""

    def __init__(self, path: Optional[Union[str, Path]] = None):
        self.path = Path(path) if path else None
        if self.path is not None:
            self.path.parent.mkdir(parents=True, exist_ok=True)

    def _open(self, binary: bool = False) -> IO:
        if self.path is None:
            return sys.stdout.buffer if binary else sys.stdout
        return open(self.path, "wb" if binary else "w", encoding=None if binary else "utf-8")

    def _close(self, handle: IO):
        if self.path is None:
            handle.flush()
        else:
            handle.close()

    @staticmethod
    def encode(report: LCReport) -> str:
        """One report as a sorted-key JSON object."""
        return orjson.dumps(report.to_record(), option=orjson.OPT_SORT_KEYS).decode("utf-8")

    def save_reports(self, reports: Iterable[LCReport]) -> Optional[Path]:
        handle = self._open()
        try:
            for report in reports:
                handle.write(self.encode(report) + "\n")
        finally:
            self._close(handle)
        return self.path

    def save_bitstring(self, seq: BinarySequence) -> Optional[Path]:
        handle = self._open()
        try:
            handle.write(seq.to_bitstring() + "\n")
        finally:
            self._close(handle)
        return self.path

    def save_binary(self, seq: BinarySequence) -> Optional[Path]:
        """8-byte little-endian period followed by the packed bits."""
        handle = self._open(binary=True)
        try:
            handle.write(seq.to_bytes())
        finally:
            self._close(handle)
        return self.path

    @staticmethod
    def load_reports(path: Union[str, Path]) -> list:
        """Records previously written by ``save_reports``."""
        with open(path, "rb") as f:
            return [orjson.loads(line) for line in f if line.strip()]
