"""Plain-text serialization: SIMPLEXMAT matrices, catalog manifests, reports."""
from __future__ import annotations

import math
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from .errors import FormatError

MAGIC = "SIMPLEXMAT 1"


def format_matrix(m) -> str:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2:
        raise FormatError(f"expected a 2-d matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise FormatError("non-finite entries cannot be written")
    lines = [MAGIC, f"dim {m.shape[0]} {m.shape[1]}"]
    for row in m:
        lines.append(" ".join(f"{z.real:.17g},{z.imag:.17g}" for z in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    lines = text.splitlines()
    if not lines or lines[0].strip() != MAGIC:
        raise FormatError(f"malformed header: expected {MAGIC!r}")
    if len(lines) < 2:
        raise FormatError("malformed header: missing dim line")
    head = lines[1].split()
    if len(head) != 3 or head[0] != "dim":
        raise FormatError(f"malformed header: bad dim line {lines[1]!r}")
    try:
        rows, cols = int(head[1]), int(head[2])
    except ValueError as exc:
        raise FormatError(f"malformed header: bad dim line {lines[1]!r}") from exc
    if rows < 1 or cols < 1:
        raise FormatError("malformed header: dimensions must be positive")
    tokens = " ".join(lines[2:]).split()
    if len(tokens) != rows * cols:
        raise FormatError(f"entry count mismatch: expected {rows * cols}, found {len(tokens)}")
    body_rows = [ln.split() for ln in lines[2:] if ln.strip()]
    if len(body_rows) != rows or any(len(r) != cols for r in body_rows):
        raise FormatError("entry count mismatch: rows do not match the declared shape")
    out = np.empty(rows * cols, dtype=complex)
    for i, tok in enumerate(tokens):
        try:
            re, im = tok.split(",")
            out[i] = complex(float(re), float(im))
        except ValueError as exc:
            raise FormatError(f"bad entry {tok!r}") from exc
    if not np.all(np.isfinite(out)):
        raise FormatError("non-finite entry")
    return out.reshape(rows, cols)


def write_matrix(m, path):
    Path(path).write_text(format_matrix(m))


def read_matrix(path):
    return parse_matrix(Path(path).read_text())


@dataclass(frozen=True)
class CatalogRecord:
    family_id: str
    kind: str = "unitary"
    aliases: tuple = ()
    placement: str = ""
    parameters: tuple = ()
    constraints: tuple = ()
    eigenvalues: str = ""
    reference: str = ""


_LIST_FIELDS = {"aliases", "parameters", "constraints"}
_FIELD_NAMES = [f.name for f in fields(CatalogRecord)]


def format_manifest(records) -> str:
    seen = set()
    blocks = []
    for rec in records:
        if rec.family_id in seen:
            raise FormatError(f"duplicate family_id {rec.family_id!r}")
        seen.add(rec.family_id)
        lines = []
        for name in _FIELD_NAMES:
            value = getattr(rec, name)
            if name in _LIST_FIELDS:
                lines.extend(f"{name}: {v}" for v in value)
            else:
                lines.append(f"{name}: {value}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def parse_manifest(text: str):
    records, seen = [], set()
    for block in text.split("\n\n"):
        block = block.strip("\n")
        if not block.strip():
            continue
        data = {name: [] for name in _LIST_FIELDS}
        for line in block.splitlines():
            key, sep, value = line.partition(": ")
            if not sep:
                key, sep, value = line.partition(":")
            if not sep or key not in _FIELD_NAMES:
                raise FormatError(f"bad manifest line {line!r}")
            if key in _LIST_FIELDS:
                data[key].append(value)
            elif key in data:
                raise FormatError(f"repeated key {key!r}")
            else:
                data[key] = value
        if "family_id" not in data:
            raise FormatError("record without family_id")
        if data["family_id"] in seen:
            raise FormatError(f"duplicate family_id {data['family_id']!r}")
        seen.add(data["family_id"])
        records.append(CatalogRecord(**{k: tuple(v) if k in _LIST_FIELDS else v
                                        for k, v in data.items()}))
    return records


def write_manifest(records, path):
    Path(path).write_text(format_manifest(records))


def read_manifest(path):
    return parse_manifest(Path(path).read_text())


def format_report(items) -> str:
    """``key: value`` lines with floats in scientific notation."""
    out = []
    for key, value in dict(items).items():
        if isinstance(value, float):
            value = f"{value:.6e}" if math.isfinite(value) else str(value)
        out.append(f"{key}: {value}")
    return "\n".join(out) + "\n"
