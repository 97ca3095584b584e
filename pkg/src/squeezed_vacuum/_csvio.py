from __future__ import annotations

import contextlib
import csv
import sys
from pathlib import Path


def fmt(x) -> str:
    """Float with 17 significant digits (round-trips exactly)."""
    return format(float(x), ".17g")


@contextlib.contextmanager
def open_output(dest):
    """Yield a text handle for a path, an open file, or ``None``/"-" (stdout)."""
    if dest is None or dest == "-":
        yield sys.stdout
    elif isinstance(dest, (str, Path)):
        with open(dest, "w", newline="") as fh:
            yield fh
    else:
        yield dest


def write_rows(dest, header, rows, summary: str | None = None) -> None:
    with open_output(dest) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([fmt(v) if isinstance(v, float) else v for v in row])
        if summary is not None:
            fh.write(f"# {summary}\n")


