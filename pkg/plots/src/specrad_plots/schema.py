"""Strict CSV schema validation for the specrad CLI artifacts.

Tolerant parsing is deliberately avoided: silent column drift would corrupt
scientific figures.  Any header mismatch aborts with an error that names the
offending columns.
"""

from __future__ import annotations

import csv

import numpy as np

RATES_COLUMNS = ("n", "gamma_n", "sup_exact", "sup_argmax", "w1_exact",
                 "be_leading", "w1_leading", "be_refined", "w1_refined",
                 "ratio_be_leading", "ratio_be_refined",
                 "ratio_w1_leading", "ratio_w1_refined")
MC_COLUMNS = ("index", "radius", "y_value")
CDF_COLUMNS = ("x", "gumbel", "exact", "asymptotic")


class SchemaError(Exception):
    """Input file does not match the CLI's fixed schema."""


def read_table(path: str, columns: tuple[str, ...],
               min_rows: int = 1) -> dict[str, np.ndarray]:
    """Read a CLI CSV artifact, enforcing the exact expected header.

    Returns a column-name -> float array mapping.  Raises SchemaError naming
    the missing/unexpected columns on any header mismatch, or on fewer than
    `min_rows` data rows.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file, expected header "
                              f"{','.join(columns)}") from None
        if tuple(header) != columns:
            missing = [c for c in columns if c not in header]
            unexpected = [c for c in header if c not in columns]
            parts = []
            if missing:
                parts.append(f"missing columns: {', '.join(missing)}")
            if unexpected:
                parts.append(f"unexpected columns: {', '.join(unexpected)}")
            if not parts:
                parts.append(f"column order must be {','.join(columns)}")
            raise SchemaError(f"{path}: {'; '.join(parts)}")
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(columns):
                raise SchemaError(f"{path}:{lineno}: expected "
                                  f"{len(columns)} fields, got {len(row)}")
            try:
                rows.append([float(v) for v in row])
            except ValueError as exc:
                raise SchemaError(f"{path}:{lineno}: {exc}") from None
    if len(rows) < min_rows:
        raise SchemaError(f"{path}: needs at least {min_rows} data row(s), "
                          f"got {len(rows)}")
    data = np.array(rows, dtype=float)
    return {name: data[:, i] for i, name in enumerate(columns)}
