from __future__ import annotations

from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .elimination import sparse_kernel, sparse_rank, sparse_rref
from .matrix import CycMatrix
from .number import CycNum, Scalar


class SparseMatrix:
    """Row-sparse matrix over a cyclotomic field: ``data[i][j]`` for the nonzero entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Optional[Dict[int, Dict[int, CycNum]]] = None):
        self.rows = rows
        self.cols = cols
        self.data: Dict[int, Dict[int, CycNum]] = {}
        if data:
            for i, row in data.items():
                clean = {j: CycNum.coerce(v) for j, v in row.items() if v}
                if clean:
                    self.data[i] = clean

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        one = CycNum.one()
        return cls(n, n, {i: {i: one} for i in range(n)})

    @classmethod
    def from_dense(cls, m: CycMatrix) -> "SparseMatrix":
        return cls(m.rows, m.cols, dict(enumerate(m.sparse_rows())))

    @classmethod
    def from_columns(cls, rows: int, columns: List[Dict[int, CycNum]]) -> "SparseMatrix":
        data: Dict[int, Dict[int, CycNum]] = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v:
                    data.setdefault(i, {})[j] = v
        out = cls(rows, len(columns))
        out.data = data
        return out

    def to_dense(self) -> CycMatrix:
        return CycMatrix.from_sparse_rows(self.rows, self.cols, self.data)

    def __getitem__(self, index: Tuple[int, int]) -> CycNum:
        i, j = index
        return self.data.get(i, {}).get(j, CycNum.zero())

    def items(self) -> Iterator[Tuple[int, int, CycNum]]:
        for i, row in self.data.items():
            for j, v in row.items():
                yield i, j, v

    def nnz(self) -> int:
        return sum(len(r) for r in self.data.values())

    def column_map(self) -> Dict[int, Dict[int, CycNum]]:
        cols: Dict[int, Dict[int, CycNum]] = {}
        for i, j, v in self.items():
            cols.setdefault(j, {})[i] = v
        return cols

    def apply(self, vector: Dict[int, CycNum]) -> Dict[int, CycNum]:
        """Matrix times a sparse column vector."""
        cols = self.column_map()
        out: Dict[int, CycNum] = {}
        for j, x in vector.items():
            for i, v in cols.get(j, {}).items():
                out[i] = out[i] + v * x if i in out else v * x
        return {i: v for i, v in out.items() if v}

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"Shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out: Dict[int, Dict[int, CycNum]] = {}
        for i, row in self.data.items():
            acc: Dict[int, CycNum] = {}
            for k, a in row.items():
                for j, b in other.data.get(k, {}).items():
                    acc[j] = acc[j] + a * b if j in acc else a * b
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                out[i] = acc
        result = SparseMatrix(self.rows, other.cols)
        result.data = out
        return result

    def _combine(self, other: "SparseMatrix", sign: int) -> "SparseMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(f"Shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")
        out = {i: dict(r) for i, r in self.data.items()}
        for i, j, v in other.items():
            row = out.setdefault(i, {})
            term = v if sign > 0 else -v
            nv = row[j] + term if j in row else term
            if nv:
                row[j] = nv
            else:
                row.pop(j, None)
        result = SparseMatrix(self.rows, self.cols)
        result.data = {i: r for i, r in out.items() if r}
        return result

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self._combine(other, 1)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self._combine(other, -1)

    def scale(self, factor: Scalar) -> "SparseMatrix":
        f = CycNum.coerce(factor)
        return SparseMatrix(self.rows, self.cols, {i: {j: f * v for j, v in r.items()} for i, r in self.data.items()})

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        out: Dict[int, Dict[int, CycNum]] = {}
        for i1, r1 in self.data.items():
            for i2, r2 in other.data.items():
                row = out.setdefault(i1 * other.rows + i2, {})
                for j1, a in r1.items():
                    for j2, b in r2.items():
                        row[j1 * other.cols + j2] = a * b
        return SparseMatrix(self.rows * other.rows, self.cols * other.cols, out)

    def transpose(self) -> "SparseMatrix":
        result = SparseMatrix(self.cols, self.rows)
        result.data = self.column_map()
        return result

    def is_zero(self) -> bool:
        return not self.data

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.data == other.data

    def first_difference(self, other: "SparseMatrix") -> Optional[Tuple[int, int, CycNum, CycNum]]:
        """The least (row, col) where the two matrices differ, with both entries."""
        keys = sorted({(i, j) for i, j, _ in self.items()} | {(i, j) for i, j, _ in other.items()})
        for i, j in keys:
            a, b = self[i, j], other[i, j]
            if a != b:
                return i, j, a, b
        return None

    def rank(self) -> int:
        return sparse_rank([self.data[i] for i in sorted(self.data)])

    def rref(self) -> List[Tuple[int, Dict[int, CycNum]]]:
        return sparse_rref([self.data[i] for i in sorted(self.data)])

    def kernel(self) -> List[Dict[int, CycNum]]:
        return sparse_kernel([self.data[i] for i in sorted(self.data)], self.cols)


def sparse_from_entries(rows: int, cols: int, entries: Iterable[Tuple[int, int, Scalar]]) -> SparseMatrix:
    """Accumulate (row, col, value) triples, summing repeats."""
    data: Dict[int, Dict[int, CycNum]] = {}
    for i, j, v in entries:
        row = data.setdefault(i, {})
        row[j] = row[j] + v if j in row else CycNum.coerce(v)
    return SparseMatrix(rows, cols, data)
