"""CSV and JSON rendering of scan rows.

Both formats are byte-stable: fixed field order, ``\\n`` line endings, and
numbers rendered the same way on every run.  Failed values are empty cells
in CSV and ``null`` in JSON.
"""
import json
import math
import os

from .errors import OutputError
from .scan import FIELDS, ScanRow

__all__ = ["format_number", "csv_text", "json_text", "emit_csv", "emit_json", "parse_csv", "write_text"]


def format_number(x):
    """12 significant digits, or an empty string for NaN."""
    if math.isnan(x):
        return ""
    return f"{x:.12g}"


def csv_text(rows):
    lines = [",".join(FIELDS)]
    for row in rows:
        lines.append(",".join(format_number(v) for v in row.values()))
    return "\n".join(lines) + "\n"


def json_text(rows):
    records = [
        {name: (None if math.isnan(v) else v) for name, v in zip(FIELDS, row.values())}
        for row in rows
    ]
    return json.dumps(records, indent=2, allow_nan=False) + "\n"


def write_text(text, destination):
    """Write ``text`` to a path or to an open text stream."""
    if hasattr(destination, "write"):
        destination.write(text)
        return
    path = os.fspath(destination)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputError(exc.errno, f"cannot write {path}: {exc.strerror}", path) from exc


def emit_csv(rows, destination):
    write_text(csv_text(rows), destination)


def emit_json(rows, destination):
    write_text(json_text(rows), destination)


def parse_csv(source):
    """Read rows back from :func:`emit_csv` output (a string or a path)."""
    if isinstance(source, str) and "\n" in source:
        text = source
    else:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    lines = text.splitlines()
    if not lines or tuple(lines[0].split(",")) != FIELDS:
        raise ValueError("not a scan CSV: unexpected header")
    rows = []
    for line in lines[1:]:
        cells = line.split(",")
        values = [float(c) if c else math.nan for c in cells]
        rows.append(ScanRow(*values))
    return rows
