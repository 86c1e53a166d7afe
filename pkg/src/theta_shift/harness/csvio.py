"""Schema-versioned CSV artifacts with bit-stable float formatting."""

from __future__ import annotations

import os

SCHEMA = 1


def format_cell(v) -> str:
    if isinstance(v, float):
        return format(v, ".17g")
    if isinstance(v, complex):
        return f"{v.real:.17g}+{v.imag:.17g}j"
    return str(v)


def write_csv(path, command: str, seed: int, header, rows) -> str:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w") as fh:
        fh.write(f"# theta-shift csv schema={SCHEMA} command={command} seed={seed}\n")
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(format_cell(v) for v in row) + "\n")
    return path


def read_csv(path):
    """Read back one of our artifacts: (meta, header, rows as strings)."""
    with open(path) as fh:
        first = fh.readline().strip()
        if not first.startswith("# theta-shift csv"):
            raise ValueError(f"{path}: missing schema line")
        meta = dict(kv.split("=", 1) for kv in first.split()[3:])
        header = fh.readline().strip().split(",")
        rows = [line.strip().split(",") for line in fh if line.strip()]
    return meta, header, rows
