"""
Lambda^n as the image of A_n. Coordinates are the pivot columns of the
reduced echelon form of A_n: a tensor x projects to RREF(A_n) x and
coordinate k lifts to the basis tensor at the k-th pivot column.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from calculus import Calculus
from cyclo import CycNum, SparseMatrix
from double.elements import Key
from errors import GateFailure, ResourceBound
from utils.logger import logger

from .antisymmetrizer import antisymmetrizer
from .braiding import BraidMatrix

Tensor = Dict[int, CycNum]


def encode(labels: Tuple[int, ...], dim: int) -> int:
    index = 0
    for lab in labels:
        index = index * dim + lab
    return index


def decode(index: int, degree: int, dim: int) -> Tuple[int, ...]:
    labels = []
    for _ in range(degree):
        index, lab = divmod(index, dim)
        labels.append(lab)
    return tuple(reversed(labels))


@dataclass
class ExteriorDegree:
    degree: int
    antisymmetrizer: SparseMatrix = field(repr=False)
    pivots: Tuple[int, ...]
    projection: Dict[int, Dict[int, CycNum]] = field(repr=False)

    @classmethod
    def from_antisymmetrizer(cls, degree: int, matrix: SparseMatrix) -> "ExteriorDegree":
        rref = matrix.rref()
        projection: Dict[int, Dict[int, CycNum]] = {}
        for k, (_, row) in enumerate(rref):
            for t, v in row.items():
                projection.setdefault(t, {})[k] = v
        return cls(degree, matrix, tuple(c for c, _ in rref), projection)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def project(self, tensor: Tensor) -> Tensor:
        """Lambda^n coordinates of a degree-n tensor."""
        out: Tensor = {}
        for t, x in tensor.items():
            for k, v in self.projection.get(t, {}).items():
                out[k] = out[k] + v * x if k in out else v * x
        return {k: v for k, v in out.items() if v}

    def lift(self, coord: int) -> int:
        return self.pivots[coord]


@dataclass
class ExteriorData:
    calc: Calculus
    braid: BraidMatrix
    degrees: List[ExteriorDegree] = field(default_factory=list)
    _relations: Optional[List[Tensor]] = field(default=None, repr=False)

    @property
    def n_max(self) -> int:
        return len(self.degrees) - 1

    @property
    def dim(self) -> int:
        return self.braid.dim

    def degree(self, n: int) -> ExteriorDegree:
        if n > self.n_max:
            raise ResourceBound(
                f"Lambda^{n} was not computed (n_max = {self.n_max})",
                {"lambda_dims": self.lambda_dims()},
            )
        return self.degrees[n]

    def lambda_dims(self) -> List[int]:
        return [deg.dim for deg in self.degrees]

    def relations(self) -> List[Tensor]:
        """Basis of ker A_2, one vector per free column in ascending order."""
        if self._relations is None:
            self._relations = self.degree(2).antisymmetrizer.kernel()
        return self._relations


def build_exterior(calc: Calculus, braid: BraidMatrix, n_max: int, bound: Optional[int] = None) -> ExteriorData:
    """
    Antisymmetrizers and Lambda^n coordinates for n = 0..n_max. A size bound
    hit in some degree raises ResourceBound carrying the dimensions so far.
    """
    ext = ExteriorData(calc=calc, braid=braid)
    for n in range(n_max + 1):
        try:
            matrix = antisymmetrizer(braid, n, bound)
        except ResourceBound as exc:
            raise ResourceBound(str(exc), {"lambda_dims": ext.lambda_dims()})
        deg = ExteriorDegree.from_antisymmetrizer(n, matrix)
        ext.degrees.append(deg)
        logger.info(f"dim Lambda^{n} = {deg.dim}")
    return ext


def lambda_dims(calc: Calculus, braid: BraidMatrix, n_max: int, bound: Optional[int] = None) -> List[int]:
    return build_exterior(calc, braid, n_max, bound).lambda_dims()


def quadratic_relations(ext: ExteriorData) -> List[Tensor]:
    return ext.relations()


def is_relation(ext: ExteriorData, tensor: Tensor) -> bool:
    """True if a degree-2 tensor lies in ker A_2."""
    return not ext.degree(2).project(tensor)


def tensor_from_labels(ext: ExteriorData, terms: Dict[Tuple[int, ...], CycNum]) -> Tensor:
    """Sparse tensor from {label word: coefficient}."""
    out: Tensor = {}
    for labels, v in terms.items():
        k = encode(labels, ext.dim)
        out[k] = out[k] + v if k in out else CycNum.coerce(v)
    return {k: v for k, v in out.items() if v}


def move_past(calc: Calculus, key: Key, labels: Tuple[int, ...]) -> List[Tuple[Tuple[int, ...], CycNum, Key]]:
    """s.delta_y . e_{L1} (x) ... (x) e_{Ln} as (labels, scalar, coefficient key) branches."""
    branches = [((), CycNum.one(), key)]
    for label in labels:
        nxt = []
        for prefix, c, (s, y) in branches:
            for lab, v, k2 in calc.act_basis(s, y, label):
                nxt.append((prefix + (lab,), c * v, k2))
        branches = nxt
    return branches


def check_bimodule_stability(ext: ExteriorData) -> int:
    """Left multiplication by every basis element of D*(G) keeps ker A_2 inside ker A_2."""
    calc, group = ext.calc, ext.calc.group
    deg = ext.degree(2)
    relations = ext.relations()
    count = 0
    for s in group.elements():
        for y in group.elements():
            for r in relations:
                parts: Dict[Key, Tensor] = {}
                for index, c in r.items():
                    for labels, v, key in move_past(calc, (s, y), decode(index, 2, ext.dim)):
                        part = parts.setdefault(key, {})
                        t = encode(labels, ext.dim)
                        part[t] = part[t] + c * v if t in part else c * v
                for key, part in parts.items():
                    if deg.project(part):
                        raise GateFailure(
                            "bimodule_stability",
                            "left multiplication moves a relation out of ker A_2",
                            {"s": s, "y": y, "coefficient": list(key)},
                        )
                count += 1
    logger.debug(f"ker A_2 is stable under {group.order ** 2} basis elements")
    return count
