"""Exact arithmetic in cyclotomic fields and exact linear algebra over them."""

from .elimination import RowReducer, sparse_kernel, sparse_rank, sparse_rref
from .literal import format_literal, parse_literal
from .matrix import CycMatrix, mat_kernel, mat_rank
from .number import CycNum, common_conductor, cyc_arith
from .sparse import SparseMatrix, sparse_from_entries

__all__ = [
    'CycNum',
    'CycMatrix',
    'RowReducer',
    'SparseMatrix',
    'common_conductor',
    'cyc_arith',
    'format_literal',
    'mat_kernel',
    'mat_rank',
    'parse_literal',
    'sparse_from_entries',
    'sparse_kernel',
    'sparse_rank',
    'sparse_rref',
]
