from dataclasses import dataclass, field
from typing import Dict, List, Optional

from cyclo import CycNum, RowReducer, SparseMatrix, sparse_kernel
from utils.logger import logger

from .algebra import ExteriorData
from .forms import Form, check_d0, check_dd_zero, d_matrix, omega_dim, theta


@dataclass
class Cohomology:
    betti: List[int]
    ranks: List[int]
    field_conductor: int
    representatives: Dict[int, List[Form]] = field(default_factory=dict, repr=False)
    theta_class: Optional[bool] = None


def _kernel(matrix: SparseMatrix) -> List[Dict[int, CycNum]]:
    return sparse_kernel([matrix.data[i] for i in sorted(matrix.data)], matrix.cols)


def _representatives(
    ext: ExteriorData, degree: int, d_out: SparseMatrix, d_in: Optional[SparseMatrix]
) -> List[Form]:
    """Kernel vectors of d_out that extend a basis of the image of d_in, in kernel order."""
    reducer = RowReducer()
    if d_in is not None:
        for col in d_in.column_map().values():
            reducer.add(col)
    reps = []
    for vec in _kernel(d_out):
        if reducer.add(vec):
            reps.append(Form.from_vector(ext.calc.group, degree, vec))
    return reps


def is_exact(d_prev: SparseMatrix, form: Form) -> bool:
    reducer = RowReducer()
    for col in d_prev.column_map().values():
        reducer.add(col)
    return reducer.contains(form.vector())


def cohomology(ext: ExteriorData, h_max: int) -> Cohomology:
    """
    Betti numbers dim H^k = (dim Omega^k - rank d_k) - rank d_{k-1} for
    k = 0..h_max, representatives of H^0 and H^1, and whether theta is a
    nonzero class. Runs the degree-0 and d^2 = 0 gates on the same matrices.
    """
    top = max(h_max, ext.n_max - 1)
    matrices = [d_matrix(ext, k) for k in range(top + 1)]
    check_d0(ext, matrices[0])
    check_dd_zero(ext, matrices)
    ranks = [m.rank() for m in matrices[: h_max + 1]]
    betti = []
    for k in range(h_max + 1):
        previous = ranks[k - 1] if k > 0 else 0
        betti.append(omega_dim(ext, k) - ranks[k] - previous)
    result = Cohomology(betti=betti, ranks=ranks, field_conductor=ext.calc.sector.conductor)
    result.representatives[0] = _representatives(ext, 0, matrices[0], None)
    if h_max >= 1:
        result.representatives[1] = _representatives(ext, 1, matrices[1], matrices[0])
        th = theta(ext)
        closed = not matrices[1].apply(th.vector())
        result.theta_class = closed and not is_exact(matrices[0], th)
    logger.info(f"Betti numbers {betti} over Q(zeta_{result.field_conductor})")
    return result
