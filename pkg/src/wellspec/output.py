"""CSV writing shared by the CLI and the figure sidecars."""

from __future__ import annotations

import io


def fmt(x: float) -> str:
    """Full double precision, 17 significant digits."""
    return f"{float(x):.17g}"


def csv_text(header, rows, comments=()) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(c if isinstance(c, str) else (str(c) if isinstance(c, int) else fmt(c))
                           for c in row) + "\n")
    for line in comments:
        buf.write(f"# {line}\n")
    return buf.getvalue()


def write_text(path, text: str) -> None:
    # newline="" keeps \n line endings on every platform
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
