"""Plain-text instance files.

One self-describing block per matrix::

    matrix A 2 1
    0.5
    -0.25

Values are rendered with shortest round-trip decimals (``repr``), so a
write-then-read reproduces every 64-bit float exactly.  An instance file
holds the blocks A, B, and C.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import InstanceFormatError, ShapeError
from .transforms import ProblemInstance


def format_float(v: float) -> str:
    return repr(float(v))


def format_matrix(name: str, arr: np.ndarray) -> str:
    rows, cols = arr.shape
    lines = [f"matrix {name} {rows} {cols}"]
    for row in arr:
        lines.append(" ".join(format_float(v) for v in row))
    return "\n".join(lines)


def dump_instance(inst: ProblemInstance) -> str:
    blocks = [
        format_matrix("A", inst.a),
        format_matrix("B", inst.b),
        format_matrix("C", inst.c),
    ]
    return "\n".join(blocks) + "\n"


def write_instance(path, inst: ProblemInstance) -> None:
    Path(path).write_text(dump_instance(inst), encoding="ascii")


def parse_matrices(text: str) -> dict[str, np.ndarray]:
    """Parse matrix blocks, reporting the offending line on failure."""
    out: dict[str, np.ndarray] = {}
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        stripped = lines[i].strip()
        if not stripped:
            i += 1
            continue
        parts = stripped.split()
        if parts[0] != "matrix" or len(parts) != 4:
            raise InstanceFormatError(
                f"line {i + 1}: expected 'matrix <name> <rows> <cols>', got {lines[i]!r}"
            )
        name = parts[1]
        try:
            rows, cols = int(parts[2]), int(parts[3])
        except ValueError as exc:
            raise InstanceFormatError(f"line {i + 1}: bad dimensions in header") from exc
        if rows < 1 or cols < 1:
            raise InstanceFormatError(f"line {i + 1}: dimensions must be positive")
        if name in out:
            raise InstanceFormatError(f"line {i + 1}: duplicate matrix {name!r}")
        i += 1
        data = np.empty((rows, cols))
        for r in range(rows):
            if i >= len(lines):
                raise InstanceFormatError(
                    f"line {i + 1}: unexpected end of file inside matrix {name!r}"
                )
            tokens = lines[i].split()
            if len(tokens) != cols:
                raise InstanceFormatError(
                    f"line {i + 1}: expected {cols} values, got {len(tokens)}"
                )
            try:
                data[r] = [float(tok) for tok in tokens]
            except ValueError as exc:
                raise InstanceFormatError(f"line {i + 1}: unparseable value") from exc
            i += 1
        out[name] = data
    return out


def read_instance(path) -> ProblemInstance:
    try:
        text = Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc}") from exc
    mats = parse_matrices(text)
    missing = {"A", "B", "C"} - mats.keys()
    if missing:
        raise InstanceFormatError(
            f"instance file lacks matrices: {', '.join(sorted(missing))}"
        )
    try:
        return ProblemInstance(mats["A"], mats["B"], mats["C"])
    except (ShapeError, ValueError) as exc:
        raise InstanceFormatError(f"bad instance data: {exc}") from exc
