from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional

from cyclo import CycNum, sparse_rank
from errors import GateFailure
from group import ConjClass, FiniteGroup, centralizer, conjugacy_classes, default_section
from rep import Representation, central_idempotent, irrep_catalog
from utils.logger import logger
from utils.progress import progress

from .elements import DoubleElement, basis_index
from .operations import dg_multiply
from .sector import Sector


@dataclass
class Block:
    """A central primitive idempotent of D(G) and the (class, irrep) pair it comes from."""

    conj_class: ConjClass
    rep: Representation
    projector: DoubleElement
    dim: int
    sector: Sector = field(repr=False)

    @property
    def trivial(self) -> bool:
        return self.sector.is_trivial_pair

    @property
    def centralizer_order(self) -> int:
        return self.sector.centralizer.order

    @property
    def calculus_dim(self) -> int:
        return self.dim

    def counit(self) -> CycNum:
        return dg_counit(self.projector)

    def report(self) -> Dict:
        group = self.sector.group
        return {
            "class_elements": [group.name(a) for a in self.conj_class.elements],
            "class_indices": list(self.conj_class.elements),
            "basepoint": self.conj_class.basepoint,
            "class_size": self.conj_class.size,
            "centralizer_order": self.centralizer_order,
            "irrep": self.rep.family,
            "irrep_dim": self.rep.dim,
            "calculus_dim": self.dim,
            "canonical": self.rep.is_trivial and not self.trivial,
            "trivial": self.trivial,
        }


def dg_counit(x: DoubleElement) -> CycNum:
    """epsilon(delta_s (x) u) = [s = e]."""
    total = CycNum.zero()
    for (s, _), c in x.items():
        if s == x.group.identity:
            total = total + c
    return total


def central_projector(sector: Sector) -> Block:
    """
    e = sum_{s in C} delta_s (x) g_s e0 g_s^-1 with e0 the primitive central
    idempotent of the representation, certified idempotent, central and primitive.
    """
    group = sector.group
    e0 = central_idempotent(sector.rep)
    terms: Dict = {}
    for s in sector.elements:
        gs = sector.section.of(s)
        for x, c in e0.as_dict().items():
            key = (s, group.conj(gs, sector.centralizer.to_parent(x)))
            terms[key] = terms[key] + c if key in terms else c
    projector = DoubleElement(group, terms)
    dim = sector.m ** 2
    _check_projector(projector, dim, sector)
    return Block(conj_class=sector.conj_class, rep=sector.rep, projector=projector, dim=dim, sector=sector)


def _check_projector(e: DoubleElement, dim: int, sector: Sector) -> None:
    group = e.group
    if dg_multiply(e, e) != e:
        raise GateFailure("block_projector", f"projector for {sector.describe()} is not idempotent", {})
    generators = [DoubleElement.delta(group, t) for t in group.elements()]
    generators += [DoubleElement.group_like(group, u) for u in group.elements()]
    for x in generators:
        if dg_multiply(e, x) != dg_multiply(x, e):
            raise GateFailure("block_projector", f"projector for {sector.describe()} is not central", {})
    one = CycNum.one()
    rows = []
    for t in group.elements():
        for v in group.elements():
            prod = dg_multiply(e, DoubleElement._raw(group, {(t, v): one}))
            rows.append({basis_index(group, k): c for k, c in prod.items()})
    ideal = sparse_rank(rows)
    if ideal != dim:
        raise GateFailure(
            "block_projector",
            f"projector for {sector.describe()} spans an ideal of dimension {ideal}, expected {dim}",
            {},
        )


def enumerate_blocks(
    group: FiniteGroup,
    catalog: Optional[Mapping[int, List[Representation]]] = None,
) -> List[Block]:
    """
    One block per (class, irrep) pair, classes in canonical order and irreps
    in catalog order. ``catalog`` may supply the irreps for a class, keyed by
    its basepoint; other classes use the built-in families.
    """
    blocks: List[Block] = []
    for cls in progress(conjugacy_classes(group), desc="Blocks"):
        cent = centralizer(group, cls.basepoint)
        reps = (catalog or {}).get(cls.basepoint)
        if reps is None:
            reps = irrep_catalog(cent, [group.name(a) for a in cls.elements])
        section = default_section(group, cls)
        for rep in reps:
            blocks.append(central_projector(Sector(group, section, rep, cent)))
    _check_decomposition(group, blocks)
    logger.info(f"Found {len(blocks)} blocks of D(G) for a group of order {group.order}")
    return blocks


def _check_decomposition(group: FiniteGroup, blocks: List[Block]) -> None:
    total = sum(b.dim for b in blocks)
    if total != group.order ** 2:
        raise GateFailure("block_completeness", f"block dimensions sum to {total}, expected {group.order ** 2}", {})
    acc = DoubleElement.zero(group)
    for i, bi in enumerate(blocks):
        acc = acc + bi.projector
        for j in range(i + 1, len(blocks)):
            if not dg_multiply(bi.projector, blocks[j].projector).is_zero():
                raise GateFailure("block_orthogonality", f"blocks {i} and {j} are not orthogonal", {"blocks": [i, j]})
    if acc != DoubleElement.unit(group):
        raise GateFailure("block_completeness", "block projectors do not sum to the unit", {})
    trivial = [b for b in blocks if b.trivial]
    if len(trivial) != 1 or trivial[0].counit() != 1:
        raise GateFailure("block_completeness", "expected exactly one block with nonzero counit", {})
    for b in blocks:
        if not b.trivial and b.counit():
            raise GateFailure("block_completeness", f"block {b.sector.describe()} has nonzero counit", {})
