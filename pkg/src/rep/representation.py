from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

from cyclo import CycMatrix, CycNum, common_conductor
from errors import InputError
from group import FiniteGroup
from utils.logger import logger


@dataclass(frozen=True)
class Representation:
    """
    A matrix representation of a finite group (in practice a centralizer G_0),
    one ``dim`` x ``dim`` matrix per element index of ``group``.
    """

    group: FiniteGroup
    dim: int
    matrices: Tuple[CycMatrix, ...]
    family: str = "custom"

    def __call__(self, u: int) -> CycMatrix:
        return self.matrices[u]

    @property
    def conductor(self) -> int:
        return common_conductor(v for m in self.matrices for v in m.entries)

    @property
    def is_trivial(self) -> bool:
        return self.dim == 1 and all(m[0, 0] == 1 for m in self.matrices)

    def character(self) -> Dict[int, CycNum]:
        return character(self)

    def character_norm(self) -> CycNum:
        """(1/|G|) sum_u chi(u) chi(u^-1); equals 1 exactly for an irreducible representation."""
        chi = self.character()
        total = CycNum.zero()
        for u in self.group.elements():
            total = total + chi[u] * chi[self.group.inv(u)]
        return total / self.group.order

    def is_irreducible(self) -> bool:
        return self.character_norm() == 1

    def inverse_matrix(self, u: int) -> CycMatrix:
        return self.matrices[self.group.inv(u)]


def character(rep: Representation) -> Dict[int, CycNum]:
    """chi(u) = trace rho(u) for every element index u."""
    return {u: rep.matrices[u].trace() for u in rep.group.elements()}


def extend_from_generators(
    group: FiniteGroup,
    images: Mapping[int, CycMatrix],
    family: str = "custom",
    require_irreducible: bool = True,
) -> Representation:
    """
    Extend generator images multiplicatively (BFS over right multiplication),
    then verify the homomorphism property on every pair of elements.
    """
    if not images:
        if group.order != 1:
            raise InputError("No generator images given for a nontrivial group")
        dim = 1
    else:
        dims = {(m.rows, m.cols) for m in images.values()}
        if len(dims) != 1 or next(iter(dims))[0] != next(iter(dims))[1]:
            raise InputError(f"Generator images must be square matrices of one size, got {sorted(dims)}")
        dim = next(iter(dims))[0]

    matrices: Dict[int, CycMatrix] = {group.identity: CycMatrix.identity(dim)}
    queue = deque([group.identity])
    while queue:
        x = queue.popleft()
        for g, mg in images.items():
            y = group.mul(x, g)
            if y not in matrices:
                matrices[y] = matrices[x] @ mg
                queue.append(y)
    if len(matrices) != group.order:
        raise InputError(f"Generators reach {len(matrices)} of {group.order} elements")

    rep = Representation(group=group, dim=dim, matrices=tuple(matrices[u] for u in group.elements()), family=family)
    check_homomorphism(rep)
    if require_irreducible and not rep.is_irreducible():
        raise InputError(f"Representation {family} is reducible (character norm {rep.character_norm()})")
    logger.debug(f"Built representation {family} of dimension {dim} on a group of order {group.order}")
    return rep


def check_homomorphism(rep: Representation) -> None:
    group = rep.group
    for a in group.elements():
        for b in group.elements():
            if rep.matrices[a] @ rep.matrices[b] != rep.matrices[group.mul(a, b)]:
                raise InputError(
                    f"Not a homomorphism: rho({group.name(a)}) rho({group.name(b)}) != rho({group.name(group.mul(a, b))})"
                )


def scalar_images(values: Mapping[int, CycNum]) -> Dict[int, CycMatrix]:
    return {g: CycMatrix.from_rows([[v]]) for g, v in values.items()}


def matrix_images(values: Mapping[int, List[List]]) -> Dict[int, CycMatrix]:
    return {g: CycMatrix.from_rows(rows) for g, rows in values.items()}
