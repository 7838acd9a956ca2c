"""
_report_repo.py

This module contains the ReportRepo class, which persists benchmark reports as
CSV or JSON and solver traces as CSV.

Classes:
    - ReportRepo: Repository for benchmark reports and traces.
"""

import csv
import io
import json
from pathlib import Path
from typing import List, Union

from models import BENCH_FIELDS, BenchRecord, BenchReport, TraceRecord
from repositories._base_repo import BaseRepo
from utils import converter
from utils.errors import FormatError
from utils.logger import logger

TRACE_FIELDS = ("iteration", "objective", "delta_u", "delta_v", "delta_w")


def _cell(value) -> str:
    return value.value if hasattr(value, "value") else str(value)


class ReportRepo(BaseRepo[BenchReport]):
    """
    Repository for benchmark reports. The suffix selects the encoding:
    `.csv` writes a header row plus one line per record, `.json` an array of
    records.
    """

    SUFFIX = ".csv"

    def __init__(self, root: Union[str, Path], suffix: str = ".csv"):
        super().__init__(root)
        if suffix not in (".csv", ".json"):
            raise ValueError(f"unsupported report suffix {suffix!r}")
        self.suffix = suffix

    @classmethod
    def for_path(cls, path: Union[str, Path]) -> "ReportRepo":
        path = Path(path)
        return cls(path.parent, suffix=path.suffix.lower())

    def encode(self, data: BenchReport) -> bytes:
        if self.suffix == ".json":
            records = [record.model_dump(mode="python") for record in data.records]
            return (json.dumps(records, indent=2) + "\n").encode("utf-8")

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(BENCH_FIELDS)
        for record in data.records:
            row = record.model_dump(mode="python")
            writer.writerow([_cell(row[field]) for field in BENCH_FIELDS])
        return buffer.getvalue().encode("utf-8")

    def decode(self, source: bytes) -> BenchReport:
        text = source.decode("utf-8")
        try:
            if self.suffix == ".json":
                rows = json.loads(text)
            else:
                rows = list(csv.DictReader(io.StringIO(text)))
        except ValueError as e:
            raise FormatError(f"report: {e}") from e
        return BenchReport(records=[BenchRecord.model_validate(row) for row in rows])

    def write_trace(self, trace: List[TraceRecord], path: Union[str, Path]) -> Path:
        """
        Write a solver trace as CSV with columns iteration, objective, delta_u,
        delta_v, delta_w.
        """
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(TRACE_FIELDS)
        for record in trace:
            writer.writerow([repr(getattr(record, field)) for field in TRACE_FIELDS])
        path = converter.bytes2file(buffer.getvalue().encode("utf-8"), path)
        logger.info(f'Wrote "{path}"')
        return path
