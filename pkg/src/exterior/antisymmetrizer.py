"""
Woronowicz antisymmetrizers A_n = sum_sigma (-1)^l(sigma) Psi_{i1} ... Psi_{il}
on (Lambda^1)^(x)n, one reduced word per permutation.
"""

from itertools import permutations
from typing import Dict, List, Optional, Tuple

from config import config
from cyclo import CycNum, SparseMatrix
from errors import GateFailure, ResourceBound
from utils.logger import logger
from utils.progress import progress

from .braiding import BraidMatrix

Word = Tuple[int, ...]


def reduced_word(perm: Tuple[int, ...], schedule: str = "left") -> Word:
    """
    A reduced word (0-based simple reflections) for ``perm`` from bubble sort.
    ``left`` sweeps left to right, ``right`` sweeps right to left; both give
    words of length equal to the number of inversions.
    """
    arr = list(perm)
    n = len(arr)
    swaps: List[int] = []
    changed = True
    while changed:
        changed = False
        positions = range(n - 1) if schedule == "left" else range(n - 2, -1, -1)
        for i in positions:
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                swaps.append(i)
                changed = True
    return tuple(reversed(swaps))


def reduced_words(n: int, schedule: str = "left") -> List[Tuple[int, Word]]:
    """(sign, word) for every permutation of n letters in lexicographic order."""
    out = []
    for perm in permutations(range(n)):
        word = reduced_word(perm, schedule)
        out.append((-1 if len(word) % 2 else 1, word))
    return out


def check_size(dim: int, n: int, bound: Optional[int] = None) -> None:
    bound = bound if bound is not None else config.max_matrix_dim
    if dim ** n > bound:
        raise ResourceBound(f"(Lambda^1)^{n} has dimension {dim ** n}, above the bound {bound}")


def antisymmetrize(
    braid: BraidMatrix,
    vector: Dict[int, CycNum],
    n: int,
    words: Optional[List[Tuple[int, Word]]] = None,
) -> Dict[int, CycNum]:
    """A_n applied to a sparse degree-n tensor."""
    words = words if words is not None else reduced_words(n)
    memo: Dict[Word, Dict[int, CycNum]] = {(): dict(vector)}

    def image(word: Word) -> Dict[int, CycNum]:
        hit = memo.get(word)
        if hit is None:
            hit = braid.apply_at(image(word[1:]), word[0], n)
            memo[word] = hit
        return hit

    out: Dict[int, CycNum] = {}
    for sign, word in words:
        for k, v in image(word).items():
            w = v if sign > 0 else -v
            out[k] = out[k] + w if k in out else w
    return {k: v for k, v in out.items() if v}


def antisymmetrizer(
    braid: BraidMatrix,
    n: int,
    bound: Optional[int] = None,
    schedule: str = "left",
) -> SparseMatrix:
    """A_n as a sparse dim^n x dim^n matrix; A_0 = [1] and A_1 = id."""
    if n < 0:
        raise ValueError(f"Degree must be nonnegative, got {n}")
    check_size(braid.dim, n, bound)
    size = braid.dim ** n
    if n <= 1:
        return SparseMatrix.identity(size)
    words = reduced_words(n, schedule)
    columns = [
        antisymmetrize(braid, {t: CycNum.one()}, n, words)
        for t in progress(range(size), desc=f"A_{n}", total=size)
    ]
    matrix = SparseMatrix.from_columns(size, columns)
    logger.debug(f"A_{n}: {size}x{size}, {matrix.nnz()} nonzero entries")
    return matrix


def check_reduced_word_independence(braid: BraidMatrix, bound: Optional[int] = None) -> None:
    """A_3 built from left and right bubble-sort words agree (the longest element gets 0,1,0 and 1,0,1)."""
    left = reduced_words(3, "left")
    right = reduced_words(3, "right")
    if left == right:
        raise GateFailure("reduced_words", "the two word schedules coincide", {})
    a = antisymmetrizer(braid, 3, bound, "left")
    b = antisymmetrizer(braid, 3, bound, "right")
    diff = a.first_difference(b)
    if diff is not None:
        row, col, x, y = diff
        raise GateFailure(
            "reduced_words",
            "A_3 depends on the choice of reduced words",
            {"row": row, "col": col, "left": str(x), "right": str(y)},
        )
