"""Versioned CSV reports.

Layout::

    # bilin-tf v<version> <experiment>
    row_kind,trial,<experiment columns...>,flagged,note
    trial,0,...
    summary,,...

Floats are written with ``repr`` so rereading gives back the same value, and
nothing time-dependent goes into a row.
"""

import csv
import logging
import math
from collections.abc import Collection, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Any

from filelock import FileLock

from bilin_tf.config.config import PACKAGE_NAME
from bilin_tf.errors import ParameterError

logger = logging.getLogger(__name__)

FALLBACK_VERSION = "0.1.0"
LEADING_COLUMNS = ("row_kind", "trial")
TRAILING_COLUMNS = ("flagged", "note")


@dataclass(frozen=True)
class ReportRow:
    kind: str
    trial: int | None
    values: Mapping[str, Any] = field(default_factory=dict)
    flagged: bool = False
    note: str = ""


def package_version() -> str:
    try:
        return version(PACKAGE_NAME)
    except PackageNotFoundError:
        return FALLBACK_VERSION


def header_line(experiment: str) -> str:
    return f"# {PACKAGE_NAME} v{package_version()} {experiment}"


def format_value(value: Any, *, verdict: bool = False) -> str:
    """Check columns print booleans as pass/fail, others as true/false."""
    match value:
        case None:
            return ""
        case bool() if verdict:
            return "pass" if value else "fail"
        case bool():
            return "true" if value else "false"
        case int():
            return str(value)
        case float():
            return repr(float(value)) if math.isfinite(value) else str(float(value))
        case _ if hasattr(value, "item"):
            return format_value(value.item(), verdict=verdict)
        case _:
            return str(value)


def report_columns(columns: Sequence[str]) -> tuple[str, ...]:
    clash = set(columns) & set(LEADING_COLUMNS + TRAILING_COLUMNS)
    if clash:
        raise ParameterError(f"experiment columns clash with reserved names: {sorted(clash)}")
    return (*LEADING_COLUMNS, *columns, *TRAILING_COLUMNS)


def write_report(
    path: Path,
    experiment: str,
    columns: Sequence[str],
    rows: Iterable[ReportRow],
    checks: Collection[str] = (),
) -> Path:
    """Write all rows in one pass while holding ``<path>.lock``."""
    names = report_columns(columns)
    path.parent.mkdir(parents=True, exist_ok=True)
    with FileLock(f"{path}.lock"):
        with path.open("w", newline="", encoding="utf-8") as handle:
            handle.write(header_line(experiment) + "\n")
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(names)
            count = 0
            for row in rows:
                writer.writerow(
                    (
                        row.kind,
                        "" if row.trial is None else str(row.trial),
                        *(
                            format_value(row.values.get(column), verdict=column in checks)
                            for column in columns
                        ),
                        format_value(row.flagged),
                        row.note,
                    )
                )
                count += 1
    logger.info(f"wrote {count} rows to {path}")
    return path


def read_report(path: Path) -> tuple[str, list[dict[str, str]]]:
    """(header comment, data rows as strings)."""
    with path.open(newline="", encoding="utf-8") as handle:
        header = handle.readline().rstrip("\n")
        if not header.startswith(f"# {PACKAGE_NAME} v"):
            raise ParameterError(f"{path}: missing report header, got {header!r}")
        return header, list(csv.DictReader(handle))
