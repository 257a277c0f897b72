"""
Reported-only computations: the quadratic algebra on ker A_2, symmetry of
the Lambda dimensions, and the subalgebra generated by the e_a = sum_i e_{ai}^{ai}.
"""

from itertools import product
from typing import Dict, List, Optional

from cyclo import CycNum, RowReducer
from utils.logger import logger
from utils.progress import progress

from .algebra import ExteriorData, encode
from .antisymmetrizer import antisymmetrize, check_size, reduced_words


def quadratic_dims(ext: ExteriorData, n_max: Optional[int] = None, bound: Optional[int] = None) -> Dict:
    """
    dim of T(Lambda^1)/<ker A_2> in degrees 0..n_max: dim^n minus the rank of
    the span of T^i (x) r (x) T^{n-2-i}. Compared with the Lambda dimensions,
    never asserted.
    """
    n_max = n_max if n_max is not None else ext.n_max
    dim = ext.dim
    relations = ext.relations()
    dims = [1, dim]
    for n in range(2, n_max + 1):
        check_size(dim, n, bound)
        reducer = RowReducer()
        for i in range(n - 1):
            left = dim ** i
            right = dim ** (n - 2 - i)
            for r in progress(relations, desc=f"quadratic degree {n}, slot {i}"):
                for head in range(left):
                    for tail in range(right):
                        reducer.add({(head * dim * dim + t) * right + tail: v for t, v in r.items()})
        dims.append(dim ** n - reducer.rank)
    lam = ext.lambda_dims()[: n_max + 1]
    matches = dims[: len(lam)] == lam
    logger.info(f"Quadratic algebra dimensions {dims}; {'match' if matches else 'differ from'} Lambda")
    return {"quadratic_dims": dims, "matches_lambda": matches}


def hilbert_probe(dims: List[int]) -> Dict:
    """Whether the dimensions up to the first zero read the same backwards."""
    if 0 not in dims:
        return {"top_degree": None, "symmetric": None}
    top = dims.index(0) - 1
    nonzero = dims[: top + 1]
    return {"top_degree": top, "symmetric": nonzero == nonzero[::-1]}


def classical_dims(ext: ExteriorData, max_degree: Optional[int] = None) -> List[int]:
    """
    Dimensions of the subalgebra generated by e_a = sum_i e_{ai}^{ai}: rank of
    A_n on all n-fold products of the e_a, stopping at the first zero degree.
    """
    calc, sector = ext.calc, ext.calc.sector
    generators = []
    for a in sector.elements:
        gen: Dict[int, CycNum] = {}
        for i in range(sector.d):
            alpha = sector.index(a, i)
            gen[calc.label(alpha, alpha)] = CycNum.one()
        generators.append(gen)
    max_degree = max_degree if max_degree is not None else 2 * len(generators)
    dims = [1]
    for n in range(1, max_degree + 1):
        words = reduced_words(n)
        reducer = RowReducer()
        for choice in product(generators, repeat=n):
            tensor = {(): CycNum.one()}
            for gen in choice:
                tensor = {
                    labels + (lab,): c * v for labels, c in tensor.items() for lab, v in gen.items()
                }
            vector = {encode(labels, ext.dim): c for labels, c in tensor.items()}
            reducer.add(antisymmetrize(ext.braid, vector, n, words))
        if reducer.rank == 0:
            break
        dims.append(reducer.rank)
    logger.info(f"Subalgebra generated by the diagonal forms has dimensions {dims}")
    return dims
