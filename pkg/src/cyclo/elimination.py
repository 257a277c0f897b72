"""
Exact Gauss-Jordan elimination over sparse rows (dict column -> entry).

Entries are either all ``Fraction`` or all ``CycNum``; the public helpers
convert rational ``CycNum`` input to ``Fraction`` for speed and back.
Pivoting takes the first nonzero column of each row in input order, so the
echelon form is deterministic.
"""

from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .number import CycNum

SparseRow = Dict[int, Any]


class RowReducer:
    """Incremental echelon form; every stored pivot row has a 1 on its pivot column."""

    def __init__(self):
        self.pivots: Dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: SparseRow) -> SparseRow:
        """Return a copy of ``row`` with every pivot column eliminated."""
        row = dict(row)
        pivots = self.pivots
        while True:
            hits = [c for c in row if c in pivots]
            if not hits:
                return row
            c = min(hits)
            f = row[c]
            for k, v in pivots[c].items():
                if k in row:
                    nv = row[k] - f * v
                    if nv:
                        row[k] = nv
                    else:
                        del row[k]
                else:
                    row[k] = -(f * v)

    def add(self, row: SparseRow) -> bool:
        """Insert a row; True if it increased the rank."""
        row = self.reduce({k: v for k, v in row.items() if v})
        if not row:
            return False
        lead = min(row)
        piv = row[lead]
        if piv != 1:
            row = {k: v / piv for k, v in row.items()}
        self.pivots[lead] = row
        return True

    def contains(self, row: SparseRow) -> bool:
        """True if ``row`` lies in the span of the inserted rows."""
        return not self.reduce({k: v for k, v in row.items() if v})

    def rref(self) -> List[Tuple[int, SparseRow]]:
        """Reduced row echelon form as (pivot column, row) pairs sorted by column."""
        cols = sorted(self.pivots, reverse=True)
        for c in cols:
            prow = self.pivots[c]
            for other in cols:
                if other == c:
                    continue
                orow = self.pivots[other]
                f = orow.get(c)
                if not f:
                    continue
                for k, v in prow.items():
                    if k in orow:
                        nv = orow[k] - f * v
                        if nv:
                            orow[k] = nv
                        else:
                            del orow[k]
                    else:
                        orow[k] = -(f * v)
        return [(c, self.pivots[c]) for c in sorted(self.pivots)]


def _all_rational(rows: Sequence[SparseRow]) -> bool:
    for row in rows:
        for v in row.values():
            if isinstance(v, CycNum) and v.conductor != 1:
                return False
    return True


def _to_fraction_rows(rows: Sequence[SparseRow]) -> List[SparseRow]:
    out = []
    for row in rows:
        out.append({k: (v.to_fraction() if isinstance(v, CycNum) else Fraction(v)) for k, v in row.items() if v})
    return out


def _to_cyc_rows(rows: Iterable[SparseRow]) -> List[SparseRow]:
    return [{k: CycNum.coerce(v) for k, v in row.items()} for row in rows]


def _prepare(rows: Sequence[SparseRow]) -> Tuple[List[SparseRow], bool]:
    if _all_rational(rows):
        return _to_fraction_rows(rows), True
    return _to_cyc_rows(rows), False


def sparse_rank(rows: Sequence[SparseRow], on_row: Optional[Callable[[int], None]] = None) -> int:
    """Exact rank of the matrix whose rows are ``rows``."""
    work, _ = _prepare(rows)
    reducer = RowReducer()
    for i, row in enumerate(work):
        reducer.add(row)
        if on_row is not None:
            on_row(i)
    return reducer.rank


def sparse_rref(rows: Sequence[SparseRow]) -> List[Tuple[int, Dict[int, CycNum]]]:
    """Reduced row echelon form, entries returned as ``CycNum``."""
    work, _ = _prepare(rows)
    reducer = RowReducer()
    for row in work:
        reducer.add(row)
    return [(c, {k: CycNum.coerce(v) for k, v in row.items()}) for c, row in reducer.rref()]


def sparse_kernel(rows: Sequence[SparseRow], ncols: int) -> List[Dict[int, CycNum]]:
    """
    Basis of the right kernel as sparse column vectors: one vector per free
    column f (ascending), with a 1 at f and minus the rref entries on pivots.
    """
    rref = sparse_rref(rows)
    pivot_cols = {c for c, _ in rref}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        vec = {f: CycNum.one()}
        for c, row in rref:
            v = row.get(f)
            if v:
                vec[c] = -v
        basis.append(vec)
    return basis


def columns_to_rows(columns: Dict[int, SparseRow]) -> Dict[int, SparseRow]:
    """Transpose a column-sparse matrix to row-sparse form."""
    rows: Dict[int, SparseRow] = {}
    for j, col in columns.items():
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
    return rows
