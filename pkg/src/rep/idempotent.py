from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from cyclo import CycNum, sparse_rank
from errors import GateFailure, InputError
from group import FiniteGroup

from .representation import Representation

GroupAlgebraElement = Dict[int, CycNum]


def ga_multiply(group: FiniteGroup, x: Mapping[int, CycNum], y: Mapping[int, CycNum]) -> GroupAlgebraElement:
    """Product in the group algebra kG, elements as sparse maps index -> coefficient."""
    out: GroupAlgebraElement = {}
    for a, ca in x.items():
        for b, cb in y.items():
            ab = group.mul(a, b)
            out[ab] = out[ab] + ca * cb if ab in out else ca * cb
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class CentralIdempotent:
    group: FiniteGroup
    coeffs: Tuple[CycNum, ...]
    dim: int

    def as_dict(self) -> GroupAlgebraElement:
        return {u: c for u, c in enumerate(self.coeffs) if c}

    def counit(self) -> CycNum:
        """Augmentation u -> 1, i.e. the sum of the coefficients."""
        total = CycNum.zero()
        for c in self.coeffs:
            total = total + c
        return total

    def is_idempotent(self) -> bool:
        e = self.as_dict()
        return ga_multiply(self.group, e, e) == e

    def is_central(self) -> bool:
        e = self.as_dict()
        one = CycNum.one()
        return all(
            ga_multiply(self.group, {u: one}, e) == ga_multiply(self.group, e, {u: one})
            for u in self.group.elements()
        )

    def ideal_dimension(self) -> int:
        """dim e.kG, the rank of the left-multiples e.x over the group basis."""
        e = self.as_dict()
        one = CycNum.one()
        rows = [ga_multiply(self.group, e, {x: one}) for x in self.group.elements()]
        return sparse_rank(rows)

    def is_primitive(self) -> bool:
        return self.ideal_dimension() == self.dim ** 2


def central_idempotent(rep: Representation) -> CentralIdempotent:
    """e_0 = dim(V)/|G_0| sum_u chi(u^-1) u, certified idempotent, central and primitive."""
    if not rep.is_irreducible():
        raise InputError(f"Representation {rep.family} is reducible; no primitive idempotent")
    group = rep.group
    chi = rep.character()
    scale = CycNum.rational(rep.dim) / group.order
    coeffs = tuple(scale * chi[group.inv(u)] for u in group.elements())
    e0 = CentralIdempotent(group=group, coeffs=coeffs, dim=rep.dim)
    for name, ok in (("idempotent", e0.is_idempotent), ("central", e0.is_central), ("primitive", e0.is_primitive)):
        if not ok():
            raise GateFailure("central_idempotent", f"e0 for {rep.family} is not {name}")
    return e0
