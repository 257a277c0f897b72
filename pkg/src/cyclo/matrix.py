from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .elimination import sparse_kernel, sparse_rank
from .number import CycNum, Scalar, common_conductor


@dataclass(frozen=True)
class CycMatrix:
    """Dense row-major matrix over a cyclotomic field."""

    rows: int
    cols: int
    entries: Tuple[CycNum, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"CycMatrix expects {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "CycMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        entries: List[CycNum] = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("Ragged rows in CycMatrix.from_rows")
            entries.extend(CycNum.coerce(v) for v in r)
        return cls(nrows, ncols, tuple(entries))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "CycMatrix":
        return cls(rows, cols, (CycNum.zero(),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "CycMatrix":
        zero, one = CycNum.zero(), CycNum.one()
        return cls(n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def from_sparse_rows(cls, rows: int, cols: int, data: Dict[int, Dict[int, Scalar]]) -> "CycMatrix":
        entries = [CycNum.zero()] * (rows * cols)
        for i, row in data.items():
            for j, v in row.items():
                entries[i * cols + j] = CycNum.coerce(v)
        return cls(rows, cols, tuple(entries))

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Dict[int, Scalar]]) -> "CycMatrix":
        entries = [CycNum.zero()] * (rows * len(columns))
        ncols = len(columns)
        for j, col in enumerate(columns):
            for i, v in col.items():
                entries[i * ncols + j] = CycNum.coerce(v)
        return cls(rows, ncols, tuple(entries))

    # -- access -------------------------------------------------------

    def __getitem__(self, index: Tuple[int, int]) -> CycNum:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[CycNum, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[CycNum, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_lists(self) -> List[List[CycNum]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def sparse_rows(self) -> List[Dict[int, CycNum]]:
        return [{j: v for j, v in enumerate(self.row(i)) if v} for i in range(self.rows)]

    @property
    def conductor(self) -> int:
        return common_conductor(self.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    # -- algebra ------------------------------------------------------

    def __add__(self, other: "CycMatrix") -> "CycMatrix":
        self._check_shape(other)
        return CycMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "CycMatrix") -> "CycMatrix":
        self._check_shape(other)
        return CycMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "CycMatrix":
        return CycMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, factor: Scalar) -> "CycMatrix":
        f = CycNum.coerce(factor)
        return CycMatrix(self.rows, self.cols, tuple(f * a for a in self.entries))

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        if self.cols != other.rows:
            raise ValueError(f"Shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        left = self.sparse_rows()
        right = other.sparse_rows()
        out: Dict[int, Dict[int, CycNum]] = {}
        for i, row in enumerate(left):
            acc: Dict[int, CycNum] = {}
            for k, a in row.items():
                for j, b in right[k].items():
                    acc[j] = acc[j] + a * b if j in acc else a * b
            out[i] = {j: v for j, v in acc.items() if v}
        return CycMatrix.from_sparse_rows(self.rows, other.cols, out)

    def transpose(self) -> "CycMatrix":
        return CycMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def trace(self) -> CycNum:
        if self.rows != self.cols:
            raise ValueError("Trace of a non-square matrix")
        total = CycNum.zero()
        for i in range(self.rows):
            total = total + self[i, i]
        return total

    def _check_shape(self, other: "CycMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(
                f"Shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    # -- linear algebra ----------------------------------------------

    def rank(self) -> int:
        return mat_rank(self)

    def kernel(self) -> "CycMatrix":
        return mat_kernel(self)


def mat_rank(m: CycMatrix) -> int:
    """Exact rank over Q(zeta_N)."""
    return sparse_rank(m.sparse_rows())


def mat_kernel(m: CycMatrix) -> CycMatrix:
    """Kernel basis as the columns of a cols x (cols - rank) matrix."""
    basis = sparse_kernel(m.sparse_rows(), m.cols)
    return CycMatrix.from_columns(m.cols, basis)

