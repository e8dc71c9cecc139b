"""CSV dumps for external audit."""

import csv
import logging
from pathlib import Path
from typing import Iterable, Optional

import numpy as np

from ..analysis.closed_forms import all_cases
from ..analysis.diffops import Calculus
from ..errors import UsageError
from ..models.grassmann import Grassmannian
from ..models.octonion import epsilon_entries

logger = logging.getLogger(__name__)


def _sign(value: int) -> str:
    return f"{value:+d}" if value else "0"


def epsilon_rows() -> Iterable[list]:
    yield ["i", "j", "k", "epsilon"]
    for i, j, k, value in epsilon_entries():
        yield [i, j, k, _sign(value)]


def tangent_basis_rows(grassmannian: Grassmannian) -> Iterable[list]:
    """e_j^ℓ at the base point: +1 at (j, ℓ), −1 at (ℓ, j)."""
    yield ["ell", "j", "plus_row", "plus_col", "minus_row", "minus_col", "norm"]
    for ell, j in grassmannian.indices():
        v = grassmannian.basis_tangent(ell, j)
        yield [ell, j, j, ell, ell, j, f"{v.norm():.12g}"]


def components(value: np.ndarray, tol: float = 1e-6) -> str:
    """Nonzero entries as "index:value", matrix entries as "row,col:value"; "0" when none survive."""
    value = np.asarray(value, dtype=float)
    entries = []
    for index in zip(*np.nonzero(np.abs(value) > tol)):
        label = ",".join(str(int(i)) for i in index)
        entries.append(f"{label}:{value[index]:+.6g}")
    return " ".join(entries) or "0"


def lemma_value_rows(calculus: Calculus) -> Iterable[list]:
    yield ["identity", "i", "k", "j", "ell", "expected", "computed", "residual"]
    for case in all_cases():
        computed = case.compute(calculus)
        yield [
            case.identity,
            "" if case.i is None else case.i,
            "" if case.k is None else case.k,
            case.j,
            case.ell,
            components(case.expected),
            components(computed),
            f"{case.residual(computed):.3e}",
        ]


def parse_grassmannian(shape: Optional[str]) -> Grassmannian:
    """Parse "k,n" into G(k, n); G(2,8) when unset."""
    if not shape:
        return Grassmannian(2, 8)
    try:
        k, n = (int(part) for part in shape.split(","))
        return Grassmannian(k, n)
    except ValueError as exc:
        raise UsageError(f"invalid Grassmannian {shape!r}, expected k,n") from exc


def export_table(kind: str, path: str, calculus: Optional[Calculus] = None, grassmannian: Optional[Grassmannian] = None) -> int:
    """Write one audit table as CSV; returns the number of data rows."""
    if kind == "epsilon-table":
        rows = epsilon_rows()
    elif kind == "tangent-basis":
        rows = tangent_basis_rows(grassmannian or Grassmannian(2, 8))
    elif kind == "lemma-values":
        rows = lemma_value_rows(calculus or Calculus(method="exact"))
    else:
        raise UsageError(f"unknown table {kind!r}")

    count = -1
    with Path(path).open("w", newline="") as handle:
        writer = csv.writer(handle)
        for row in rows:
            writer.writerow(row)
            count += 1
    logger.info("wrote %d rows of %s to %s", count, kind, path)
    return count
