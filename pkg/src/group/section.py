from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from errors import GateFailure, InputError
from utils.logger import logger

from .finite_group import ConjClass, FiniteGroup


@dataclass(frozen=True)
class Section:
    """
    A choice g: C -> G with g_a s0 g_a^-1 = a for every a in the class,
    stored in the order of ``conj_class.elements``.
    """

    group: FiniteGroup
    conj_class: ConjClass
    g: Tuple[int, ...]

    def __post_init__(self):
        group, cls = self.group, self.conj_class
        if len(self.g) != cls.size:
            raise InputError(f"Section has {len(self.g)} entries for a class of size {cls.size}")
        s0 = cls.basepoint
        if self.g[cls.position(s0)] != group.identity:
            raise InputError(f"Section must send the basepoint {group.name(s0)} to the identity")
        for a, ga in zip(cls.elements, self.g):
            if group.conj(ga, s0) != a:
                raise InputError(
                    f"Section entry g_{group.name(a)} = {group.name(ga)} does not conjugate "
                    f"{group.name(s0)} to {group.name(a)}"
                )

    @property
    def basepoint(self) -> int:
        return self.conj_class.basepoint

    def of(self, a: int) -> int:
        return self.g[self.conj_class.position(a)]

    def as_dict(self) -> Dict[int, int]:
        return dict(zip(self.conj_class.elements, self.g))

    def in_centralizer(self, x: int) -> bool:
        s0 = self.basepoint
        return self.group.mul(x, s0) == self.group.mul(s0, x)


def default_section(group: FiniteGroup, conj_class: ConjClass) -> Section:
    """For each a pick the least-index u with u s0 u^-1 = a."""
    s0 = conj_class.basepoint
    g = []
    for a in conj_class.elements:
        if a == s0:
            g.append(group.identity)
            continue
        g.append(next(u for u in group.elements() if group.conj(u, s0) == a))
    return Section(group=group, conj_class=conj_class, g=tuple(g))


def section_from_mapping(group: FiniteGroup, conj_class: ConjClass, mapping: Mapping[int, int]) -> Section:
    """Section from explicit entries; class elements missing from ``mapping`` fall back to the default."""
    fallback = default_section(group, conj_class)
    g = []
    for a in conj_class.elements:
        if a in mapping:
            g.append(int(mapping[a]))
        else:
            g.append(fallback.of(a))
    unknown = set(mapping) - set(conj_class.elements)
    if unknown:
        raise InputError(f"Section mentions elements outside the class: {sorted(unknown)}")
    section = Section(group=group, conj_class=conj_class, g=tuple(g))
    if section.g != fallback.g:
        logger.info(
            f"Section override differs from the default section for class of {group.name(conj_class.basepoint)}"
        )
    return section


def cocycle(section: Section, a: int, u: int) -> int:
    """zeta_a(u) = g^-1_{u a u^-1} u g_a, an element of the centralizer of the basepoint."""
    group = section.group
    b = group.conj(u, a)
    z = group.product(group.inv(section.of(b)), u, section.of(a))
    if not section.in_centralizer(z):
        logger.error(f"Cocycle value zeta_{group.name(a)}({group.name(u)}) = {group.name(z)} leaves the centralizer")
        raise GateFailure(
            "cocycle",
            "cocycle value is not in the centralizer of the basepoint",
            {"a": a, "u": u, "value": z},
        )
    return z


def cocycle_table(section: Section) -> Dict[Tuple[int, int], int]:
    """All values zeta_a(u), keyed by (a, u)."""
    return {
        (a, u): cocycle(section, a, u)
        for a in section.conj_class.elements
        for u in section.group.elements()
    }


def check_cocycle_identity(section: Section) -> None:
    """zeta_a(uv) = zeta_{v a v^-1}(u) zeta_a(v) for all a, u, v."""
    group = section.group
    table = cocycle_table(section)
    for a in section.conj_class.elements:
        for u in group.elements():
            for v in group.elements():
                lhs = table[(a, group.mul(u, v))]
                rhs = group.mul(table[(group.conj(v, a), u)], table[(a, v)])
                if lhs != rhs:
                    raise GateFailure("cocycle_identity", "cocycle identity fails", {"a": a, "u": u, "v": v})
