"""CSV/JSON artifact writers and readers used by the command-line tool.

CSV artifacts carry a header row, comma separators, LF line endings and
floats printed with 17 significant digits (enough to round-trip binary64
exactly).  JSON artifacts are one object with a ``meta`` block describing
the run and a ``data`` array of records; re-reading one reproduces the
emitted structure exactly.
"""

from __future__ import annotations

import json
import sys
from typing import Any

from . import __version__


def format_float(x: float) -> str:
    return format(float(x), ".17g")


def artifact_meta(nu: int, q: float, threshold: float, **extra: Any) -> dict:
    meta: dict[str, Any] = {"nu": nu, "q": q, "threshold": threshold,
                            "version": __version__}
    meta.update(extra)
    return meta


def render_csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(
            format_float(v) if isinstance(v, float) else str(v) for v in row))
    return "\n".join(lines) + "\n"


def render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def write_text(text: str, output: str | None) -> None:
    """Write to a path, or to standard output when ``output`` is None or "-"."""
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", newline="\n") as fh:
            fh.write(text)


def load_artifact(path: str) -> dict:
    """Read back a JSON artifact produced by this tool."""
    with open(path) as fh:
        return json.load(fh)
