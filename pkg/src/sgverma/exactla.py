"""Exact rational linear algebra on finite coordinate spaces.

Subspaces are kept in reduced row echelon form, which makes equality of
subspaces a comparison of bases.  Rows are stored sparsely as sorted
``(column, value)`` tuples; the weight gradings used downstream make the
matrices block diagonal, and sparse elimination never touches columns
outside a row's block.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InvalidInputError

SparseRow = tuple  # tuple[(col, Fraction), ...] sorted by col


def _as_sparse(row, width: int | None) -> dict:
    if isinstance(row, Mapping):
        out = {}
        for c, v in row.items():
            if width is not None and not 0 <= c < width:
                raise InvalidInputError(f"column {c} outside ambient dimension {width}")
            if v:
                out[c] = Fraction(v)
        return out
    if width is not None and len(row) != width:
        raise InvalidInputError(f"row of length {len(row)} in ambient dimension {width}")
    return {c: Fraction(v) for c, v in enumerate(row) if v}


class _Echelon:
    """Incremental reduced echelon builder (pivot = first nonzero column)."""

    def __init__(self):
        self.rows: dict[int, dict] = {}      # pivot column -> row with 1 at pivot
        self.col_users: dict[int, set] = {}  # column -> pivots of rows having it

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        for c in [c for c in row if c in self.rows]:
            f = row.get(c)
            if not f:
                continue
            for cc, v in self.rows[c].items():
                nv = row.get(cc, 0) - f * v
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
        return row

    def add(self, row: dict) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = 1 / row[p]
        if inv != 1:
            row = {c: v * inv for c, v in row.items()}
        for q in list(self.col_users.get(p, ())):
            other = self.rows[q]
            f = other[p]
            for c, v in row.items():
                nv = other.get(c, 0) - f * v
                if nv:
                    if c not in other:
                        self.col_users.setdefault(c, set()).add(q)
                    other[c] = nv
                else:
                    if c in other:
                        del other[c]
                        self.col_users[c].discard(q)
        self.rows[p] = row
        for c in row:
            if c != p:
                self.col_users.setdefault(c, set()).add(p)
        return True

    def result(self) -> tuple[SparseRow, ...]:
        return tuple(tuple(sorted(self.rows[p].items())) for p in sorted(self.rows))


class TruncatedSubspace:
    """Subspace of Q^ambient_dim in canonical reduced echelon form."""

    __slots__ = ("ambient_dim", "rows", "_pivots")

    def __init__(self, ambient_dim: int, rows: tuple[SparseRow, ...]):
        self.ambient_dim = ambient_dim
        self.rows = rows
        self._pivots = None

    @property
    def rank(self) -> int:
        return len(self.rows)

    dim = rank

    @property
    def pivots(self) -> tuple[int, ...]:
        if self._pivots is None:
            self._pivots = tuple(r[0][0] for r in self.rows)
        return self._pivots

    @property
    def basis(self) -> list[list[Fraction]]:
        """Dense rows."""
        out = []
        for r in self.rows:
            dense = [Fraction(0)] * self.ambient_dim
            for c, v in r:
                dense[c] = v
            out.append(dense)
        return out

    def sparse_rows(self) -> list[dict]:
        return [dict(r) for r in self.rows]

    def __eq__(self, other):
        return (isinstance(other, TruncatedSubspace) and self.ambient_dim == other.ambient_dim
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ambient_dim, self.rows))

    def __repr__(self):
        return f"TruncatedSubspace(ambient_dim={self.ambient_dim}, rank={self.rank})"

    def contains_vector(self, v) -> bool:
        row = _as_sparse(v, self.ambient_dim)
        ech = _Echelon()
        for r in self.rows:
            ech.rows[r[0][0]] = dict(r)
        return not ech.reduce(row)

    def issubspace(self, other: "TruncatedSubspace") -> bool:
        _same_ambient(self, other)
        return all(other.contains_vector(dict(r)) for r in self.rows)

    def reduce_modulo(self, v) -> dict:
        """Normal form of v modulo this subspace (zero on every pivot column)."""
        ech = _Echelon()
        for r in self.rows:
            ech.rows[r[0][0]] = dict(r)
        return ech.reduce(_as_sparse(v, self.ambient_dim))

    def embed(self, ambient_dim: int, positions: Sequence[int]) -> "TruncatedSubspace":
        """Image under the coordinate injection i -> positions[i].

        Canonical only when ``positions`` is increasing.
        """
        return TruncatedSubspace(ambient_dim, tuple(
            tuple((positions[c], v) for c, v in r) for r in self.rows))


def rref(rows: Iterable, ambient_dim: int | None = None) -> TruncatedSubspace:
    """Canonical reduced echelon basis of the span of ``rows``.

    Rows may be dense sequences or sparse ``{column: value}`` mappings; for
    sparse rows ``ambient_dim`` is required.
    """
    ech = _Echelon()
    width = ambient_dim
    for row in rows:
        if width is None:
            if isinstance(row, Mapping):
                raise InvalidInputError("ambient_dim is required for sparse rows")
            width = len(row)
        ech.add(_as_sparse(row, width))
    return TruncatedSubspace(width or 0, ech.result())


def kernel(matrix: Sequence, codomain_dim: int | None = None) -> TruncatedSubspace:
    """Null space of the map sending basis vector i to ``matrix[i]``.

    The result lives in Q^len(matrix); rank + nullity == len(matrix).
    """
    dom = len(matrix)
    if codomain_dim is None:
        if any(isinstance(r, Mapping) for r in matrix):
            raise InvalidInputError("codomain_dim is required for sparse rows")
        codomain_dim = len(matrix[0]) if dom else 0
    ech = _Echelon()
    for i, row in enumerate(matrix):
        aug = _as_sparse(row, codomain_dim)
        aug[codomain_dim + i] = Fraction(1)
        ech.add(aug)
    ker = []
    for p in sorted(ech.rows):
        if p >= codomain_dim:
            ker.append(tuple((c - codomain_dim, v) for c, v in sorted(ech.rows[p].items())))
    return TruncatedSubspace(dom, tuple(ker))


def _same_ambient(a: TruncatedSubspace, b: TruncatedSubspace):
    if a.ambient_dim != b.ambient_dim:
        raise InvalidInputError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def subspace_sum(a: TruncatedSubspace, b: TruncatedSubspace) -> TruncatedSubspace:
    _same_ambient(a, b)
    return rref([dict(r) for r in a.rows + b.rows], a.ambient_dim)


def intersect(a: TruncatedSubspace, b: TruncatedSubspace) -> TruncatedSubspace:
    """Zassenhaus: reduce [a | a] and [b | 0]; rows with zero left half span the meet."""
    _same_ambient(a, b)
    d = a.ambient_dim
    ech = _Echelon()
    for r in a.rows:
        row = dict(r)
        row.update({c + d: v for c, v in r})
        ech.add(row)
    for r in b.rows:
        ech.add(dict(r))
    meet = [{c - d: v for c, v in ech.rows[p].items()} for p in sorted(ech.rows) if p >= d]
    return rref(meet, d)


def coordinate_subspace(ambient_dim: int, columns: Iterable[int]) -> TruncatedSubspace:
    return TruncatedSubspace(ambient_dim, tuple(((c, Fraction(1)),) for c in sorted(set(columns))))


def direct_sum(ambient_dim: int, parts: Iterable[TruncatedSubspace]) -> TruncatedSubspace:
    """Combine subspaces already embedded on pairwise disjoint column sets."""
    rows = []
    for p in parts:
        if p.ambient_dim != ambient_dim:
            raise InvalidInputError("direct summand with wrong ambient dimension")
        rows.extend(p.rows)
    rows.sort(key=lambda r: r[0][0])
    return TruncatedSubspace(ambient_dim, tuple(rows))
