"""Linear algebra over F_p, delegated to sympy's DomainMatrix."""

from __future__ import annotations

from typing import Sequence

from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from .errors import LegaugError
from .ncpoly import Ring


def _domain(ring: Ring):
    if ring.p is None:
        raise LegaugError("linear algebra needs a field; pass an Fp ring")
    return GF(ring.p)


def matrix(ring: Ring, rows: Sequence[Sequence[int]], ncols: int | None = None) -> DomainMatrix:
    dom = _domain(ring)
    nrows = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    data = [[dom(int(x) % ring.p) for x in row] for row in rows]
    return DomainMatrix(data, (nrows, ncols), dom)


def rank(ring: Ring, rows: Sequence[Sequence[int]], ncols: int | None = None) -> int:
    if not rows or (ncols is not None and ncols == 0) or (ncols is None and not rows[0]):
        return 0
    return matrix(ring, rows, ncols).rank()


def to_ints(ring: Ring, m: DomainMatrix) -> list[list[int]]:
    return [[int(x) % ring.p for x in row] for row in m.to_list()]


def nullspace(ring: Ring, rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Basis of {v : rows * v = 0}, as a list of vectors."""
    if ncols == 0:
        return []
    if not rows:
        return [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    ns = matrix(ring, rows, ncols).nullspace()
    return [row for row in to_ints(ring, ns) if any(row)]


def solve(ring: Ring, rows: Sequence[Sequence[int]], rhs: Sequence[int], ncols: int) -> list[int] | None:
    """One solution of rows * v = rhs, or None when inconsistent."""
    p = ring.p
    if p is None:
        raise LegaugError("linear algebra needs a field; pass an Fp ring")
    if not rows:
        return [0] * ncols if not any(rhs) else None
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = matrix(ring, aug, ncols + 1).rref()
    if ncols in pivots:
        return None
    red_rows = to_ints(ring, red)
    sol = [0] * ncols
    for i, c in enumerate(pivots):
        sol[c] = red_rows[i][ncols] % p
    return sol


def row_reduce_basis(ring: Ring, vectors: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """A basis (in reduced echelon form) of the span of ``vectors``."""
    if not vectors or ncols == 0:
        return []
    red, pivots = matrix(ring, vectors, ncols).rref()
    rows = to_ints(ring, red)
    return [rows[i] for i in range(len(pivots))]


def in_span(ring: Ring, vectors: Sequence[Sequence[int]], v: Sequence[int], ncols: int) -> bool:
    if not any(x % ring.p for x in v):  # type: ignore[operator]
        return True
    if not vectors:
        return False
    return rank(ring, list(vectors) + [list(v)], ncols) == rank(ring, vectors, ncols)


def transpose(rows: Sequence[Sequence[int]], nrows: int, ncols: int) -> list[list[int]]:
    return [[rows[i][j] for i in range(nrows)] for j in range(ncols)]
