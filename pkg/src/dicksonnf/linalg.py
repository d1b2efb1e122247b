"""Exact dense linear algebra over the prime field F_p."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

from .errors import DimensionMismatch
from .gf_core import FFElem, FieldCtx


@dataclass(frozen=True)
class MatFp:
    p: int
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples, residues mod p

    def row(self, i):
        return self.entries[i]

    @staticmethod
    def from_rows(p: int, rows: Sequence[Sequence[int]], cols=None) -> "MatFp":
        rows = [tuple(x % p for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return MatFp(p, len(rows), cols, tuple(rows))


def rref(m: MatFp) -> Tuple[MatFp, tuple]:
    """Reduced row echelon form with the ascending pivot column list."""
    p = m.p
    rows = [list(r) for r in m.entries]
    pivots = []
    r = 0
    for j in range(m.cols):
        pivot = None
        for i in range(r, m.rows):
            if rows[i][j]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][j], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][j]:
                c = rows[i][j]
                rows[i] = [(x - c * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(j)
        r += 1
    return MatFp(p, m.rows, m.cols, tuple(tuple(x) for x in rows)), tuple(pivots)


def rank(m: MatFp) -> int:
    return len(rref(m)[1])


def nullspace(m: MatFp) -> List[tuple]:
    """Basis of {v : M v = 0}, one vector per free column (unit pattern)."""
    p = m.p
    red, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for j in range(m.cols):
        if j in pivot_set:
            continue
        v = [0] * m.cols
        v[j] = 1
        for i, pj in enumerate(pivots):
            v[pj] = (-red.entries[i][j]) % p
        basis.append(tuple(v))
    return basis


def mat_vec(m: MatFp, v: Sequence[int]) -> tuple:
    if len(v) != m.cols:
        raise DimensionMismatch(f"vector length {len(v)} != cols {m.cols}")
    p = m.p
    return tuple(sum(a * b for a, b in zip(row, v)) % p for row in m.entries)


class SpanFp:
    """An F_p subspace kept in reduced echelon form for fast membership."""

    def __init__(self, vectors: Sequence[Sequence[int]], p: int, ncols=None):
        self.p = p
        if ncols is None:
            ncols = len(vectors[0]) if vectors else 0
        self.ncols = ncols
        m = MatFp.from_rows(p, vectors, cols=ncols)
        red, pivots = rref(m)
        self.rows = [red.entries[i] for i in range(len(pivots))]
        self.pivots = list(pivots)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector length {len(v)} != {self.ncols}")
        p = self.p
        v = [x % p for x in v]
        for row, pj in zip(self.rows, self.pivots):
            c = v[pj]
            if c:
                v = [(x - c * y) % p for x, y in zip(v, row)]
        return not any(v)


def in_span(basis: Sequence[Sequence[int]], v: Sequence[int], p: int) -> bool:
    """True iff v is an F_p-linear combination of the basis vectors."""
    return SpanFp(basis, p, ncols=len(v)).contains(v)


def linear_map_matrix(d: int, f: Callable[[FFElem], FFElem], ctx: FieldCtx) -> MatFp:
    """Matrix of an F_p-linear map on the power basis {1, x, ..., x^(d-1)}.

    Column j holds the coefficient vector of f(x^j).  The caller guarantees
    linearity; a non-linear f produces garbage.
    """
    cols = []
    for j in range(d):
        basis_j = [0] * d
        basis_j[j] = 1
        cols.append(f(ctx.element(basis_j)).coeffs)
    rows = tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))
    return MatFp(ctx.p, d, d, rows)


def vstack(mats: Sequence[MatFp]) -> MatFp:
    p = mats[0].p
    cols = mats[0].cols
    rows = []
    for m in mats:
        if m.cols != cols:
            raise DimensionMismatch("stacked matrices must share column count")
        rows.extend(m.entries)
    return MatFp(p, len(rows), cols, tuple(rows))
