"""
The data behind one block of D(G): a conjugacy class with a section and an
irreducible representation V of the basepoint centralizer. Gives the matrix
representation rho of D(G) on W = k(C) (x) V, indexed by pairs (a, i) with
index pos(a) * dim V + i.
"""

from typing import Dict, List, Mapping, Optional, Tuple

from cyclo import CycMatrix, CycNum, SparseMatrix
from errors import GateFailure, InputError
from group import FiniteGroup, Section, Subgroup, centralizer, cocycle_table
from rep import Representation
from utils.logger import logger

from .elements import DoubleElement
from .operations import dg_multiply


class Sector:
    def __init__(
        self,
        group: FiniteGroup,
        section: Section,
        rep: Representation,
        centralizer_group: Optional[Subgroup] = None,
        zeta_values: Optional[Mapping[Tuple[int, int], int]] = None,
    ):
        self.group = group
        self.section = section
        self.rep = rep
        self.conj_class = section.conj_class
        self.centralizer = centralizer_group or centralizer(group, section.basepoint)
        if rep.group.order != self.centralizer.order or rep.group.table != self.centralizer.group.table:
            raise InputError(
                f"Representation is on a group of order {rep.group.order}, "
                f"not on the centralizer of order {self.centralizer.order}"
            )
        self.d = rep.dim
        self.size = self.conj_class.size
        self.m = self.size * self.d
        self.zeta_values: Dict[Tuple[int, int], int] = (
            dict(zeta_values) if zeta_values is not None else cocycle_table(section)
        )
        self._zeta: Dict[Tuple[int, int], CycMatrix] = {}
        self._zeta_inv: Dict[Tuple[int, int], CycMatrix] = {}
        for key, z in self.zeta_values.items():
            try:
                local = self.centralizer.from_parent(z)
            except KeyError:
                raise GateFailure("cocycle", "cocycle value outside the centralizer", {"a": key[0], "u": key[1], "value": z})
            self._zeta[key] = rep(local)
            self._zeta_inv[key] = rep.inverse_matrix(local)

    def with_zeta_values(self, values: Mapping[Tuple[int, int], int]) -> "Sector":
        """Same sector with an explicit cocycle table, used to probe the first-order checks."""
        return Sector(self.group, self.section, self.rep, self.centralizer, zeta_values=values)

    @property
    def elements(self) -> Tuple[int, ...]:
        return self.conj_class.elements

    @property
    def is_trivial_pair(self) -> bool:
        return self.conj_class.is_trivial(self.group) and self.rep.is_trivial

    @property
    def conductor(self) -> int:
        return self.rep.conductor

    def pos(self, a: int) -> int:
        return self.conj_class.position(a)

    def index(self, a: int, i: int) -> int:
        return self.pos(a) * self.d + i

    def label(self, alpha: int) -> Tuple[int, int]:
        p, i = divmod(alpha, self.d)
        return self.elements[p], i

    def zeta(self, a: int, u: int) -> CycMatrix:
        """rho_V(zeta_a(u))."""
        return self._zeta[(a, u)]

    def zeta_inv(self, a: int, u: int) -> CycMatrix:
        """rho_V(zeta_a(u))^-1."""
        return self._zeta_inv[(a, u)]

    def describe(self) -> str:
        names = ",".join(self.group.name(a) for a in self.elements)
        return f"class {{{names}}} with {self.rep.family}"


def rho_basis(sector: Sector, s: int, u: int) -> SparseMatrix:
    """rho(delta_s (x) u)^{ai}_{bj} = [s = a][u^-1 a u = b] zeta_b(u)^i_j."""
    group = sector.group
    out = SparseMatrix(sector.m, sector.m)
    if s not in sector.conj_class.elements:
        return out
    b = group.conj(group.inv(u), s)
    z = sector.zeta(b, u)
    d = sector.d
    data = {}
    for i in range(d):
        row = {sector.index(b, j): z[i, j] for j in range(d) if z[i, j]}
        if row:
            data[sector.index(s, i)] = row
    out.data = data
    return out


def rho_sparse(sector: Sector, x: DoubleElement) -> SparseMatrix:
    acc = SparseMatrix(sector.m, sector.m)
    for (s, u), c in x.items():
        term = rho_basis(sector, s, u)
        if not term.is_zero():
            acc = acc + term.scale(c)
    return acc


def rho_matrix(sector: Sector, x: DoubleElement) -> CycMatrix:
    """The m x m matrix of x in the representation on k(C) (x) V."""
    return rho_sparse(sector, x).to_dense()


def check_rho_homomorphism(sector: Sector) -> None:
    """rho(x) rho(y) = rho(xy) on all basis pairs with nonzero images, and rho(1) = id."""
    group = sector.group
    unit = rho_sparse(sector, DoubleElement.unit(group))
    if unit != SparseMatrix.identity(sector.m):
        raise GateFailure("rho_homomorphism", "rho(1) is not the identity", {})
    cache = {(s, u): rho_basis(sector, s, u) for s in sector.elements for u in group.elements()}
    for (s, u), rx in cache.items():
        for (t, v), ry in cache.items():
            xy = dg_multiply(DoubleElement.basis(group, s, u), DoubleElement.basis(group, t, v))
            if rx @ ry != rho_sparse(sector, xy):
                raise GateFailure("rho_homomorphism", "rho is not multiplicative", {"x": [s, u], "y": [t, v]})
    logger.debug(f"rho is a representation of D(G) for {sector.describe()}")


def universal_r(group: FiniteGroup) -> List[Tuple[DoubleElement, DoubleElement]]:
    """R = sum_u (delta_u (x) e) (x) (1 (x) u), as a list of tensor legs."""
    return [(DoubleElement.delta(group, u), DoubleElement.group_like(group, u)) for u in group.elements()]


def universal_r_inverse(group: FiniteGroup) -> List[Tuple[DoubleElement, DoubleElement]]:
    """(S (x) id)R = (id (x) S)R = sum_u (delta_u (x) e) (x) (1 (x) u^-1)."""
    return [
        (DoubleElement.delta(group, u), DoubleElement.group_like(group, group.inv(u)))
        for u in group.elements()
    ]


def universal_q(group: FiniteGroup) -> List[Tuple[DoubleElement, DoubleElement]]:
    """Q = sum_{u,v} (delta_{u v u^-1} (x) u) (x) (delta_u (x) v)."""
    return [
        (
            DoubleElement.basis(group, group.conj(u, v), u),
            DoubleElement.basis(group, u, v),
        )
        for u in group.elements()
        for v in group.elements()
    ]


def r_matrix(sector: Sector, terms: Optional[List[Tuple[DoubleElement, DoubleElement]]] = None) -> SparseMatrix:
    """(rho (x) rho)(R) as an m^2 x m^2 matrix, first leg the major index."""
    terms = terms if terms is not None else universal_r(sector.group)
    acc = SparseMatrix(sector.m ** 2, sector.m ** 2)
    for first, second in terms:
        left = rho_sparse(sector, first)
        if left.is_zero():
            continue
        acc = acc + left.kron(rho_sparse(sector, second))
    return acc


def check_yang_baxter(sector: Sector) -> None:
    """R12 R13 R23 = R23 R13 R12 on W (x) W (x) W."""
    m = sector.m
    r = r_matrix(sector)
    ident = SparseMatrix.identity(m)
    r12 = r.kron(ident)
    r23 = ident.kron(r)
    data: Dict[int, Dict[int, CycNum]] = {}
    for row, col, v in r.items():
        i, k = divmod(row, m)
        j, l = divmod(col, m)
        for x in range(m):
            data.setdefault((i * m + x) * m + k, {})[(j * m + x) * m + l] = v
    r13 = SparseMatrix(m ** 3, m ** 3, data)
    if r12 @ r13 @ r23 != r23 @ r13 @ r12:
        raise GateFailure("yang_baxter", f"(rho x rho)(R) fails the Yang-Baxter equation for {sector.describe()}", {})
    logger.debug(f"Yang-Baxter equation holds on {m ** 3} dimensions")
