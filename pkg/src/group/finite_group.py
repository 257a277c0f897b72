from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation

from config import config
from errors import InputError, ResourceBound
from utils.logger import logger

ArrayPerm = Tuple[int, ...]


@dataclass(frozen=True)
class FiniteGroup:
    """
    A finite group given by its Cayley table on element indices.
    Indices are the identity of elements; names are for display only.
    """

    order: int
    table: Tuple[Tuple[int, ...], ...]
    identity: int
    inverses: Tuple[int, ...]
    element_names: Optional[Tuple[str, ...]] = None
    # 0-based array forms, present for permutation input
    permutations: Optional[Tuple[ArrayPerm, ...]] = None
    degree: Optional[int] = None
    _orders: Dict[int, int] = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def from_table(
        cls,
        table: Sequence[Sequence[int]],
        element_names: Optional[Sequence[str]] = None,
        permutations: Optional[Sequence[ArrayPerm]] = None,
        degree: Optional[int] = None,
    ) -> "FiniteGroup":
        """Validate a Cayley table and build the group."""
        n = len(table)
        if n == 0:
            raise InputError("Cayley table is empty")
        rows = tuple(tuple(int(x) for x in row) for row in table)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise InputError(f"Cayley table row {i} has length {len(row)}, expected {n}")
            if sorted(row) != list(range(n)):
                raise InputError(f"Cayley table row {i} is not a permutation of the elements")
        for j in range(n):
            if sorted(rows[i][j] for i in range(n)) != list(range(n)):
                raise InputError(f"Cayley table column {j} is not a permutation of the elements")
        identity = next((e for e in range(n) if all(rows[e][x] == x and rows[x][e] == x for x in range(n))), None)
        if identity is None:
            raise InputError("Cayley table has no identity element")
        _check_associative(rows)
        inverses = tuple(next(y for y in range(n) if rows[x][y] == identity) for x in range(n))
        if element_names is not None and len(element_names) != n:
            raise InputError(f"Expected {n} element names, got {len(element_names)}")
        return cls(
            order=n,
            table=rows,
            identity=identity,
            inverses=inverses,
            element_names=tuple(element_names) if element_names is not None else None,
            permutations=tuple(tuple(p) for p in permutations) if permutations is not None else None,
            degree=degree,
        )

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, u: int, a: int) -> int:
        """u a u^-1."""
        return self.table[self.table[u][a]][self.inverses[u]]

    def product(self, *elements: int) -> int:
        result = self.identity
        for x in elements:
            result = self.table[result][x]
        return result

    def element_order(self, a: int) -> int:
        if a not in self._orders:
            k, x = 1, a
            while x != self.identity:
                x = self.table[x][a]
                k += 1
            self._orders[a] = k
        return self._orders[a]

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a] for a in range(self.order) for b in range(a))

    def exponent(self) -> int:
        from math import lcm

        return lcm(*(self.element_order(a) for a in range(self.order)))

    def name(self, a: int) -> str:
        if self.element_names is not None:
            return self.element_names[a]
        return str(a)

    def index_of_permutation(self, perm: ArrayPerm) -> int:
        if self.permutations is None:
            raise InputError("Group has no permutation data")
        try:
            return self.permutations.index(tuple(perm))
        except ValueError:
            raise InputError(f"Permutation {cycle_notation(perm)} is not an element of the group")

    def elements(self) -> range:
        return range(self.order)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup with its own Cayley table and the inclusion into the parent."""

    group: FiniteGroup
    parent: FiniteGroup
    embedding: Tuple[int, ...]

    @property
    def order(self) -> int:
        return self.group.order

    def to_parent(self, x: int) -> int:
        return self.embedding[x]

    def from_parent(self, a: int) -> int:
        try:
            return self.embedding.index(a)
        except ValueError:
            raise KeyError(f"Element {self.parent.name(a)} is not in the subgroup")

    def contains(self, a: int) -> bool:
        return a in self.embedding


@dataclass(frozen=True)
class ConjClass:
    basepoint: int
    elements: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    def position(self, a: int) -> int:
        return self.elements.index(a)

    def with_basepoint(self, s0: int) -> "ConjClass":
        if s0 not in self.elements:
            raise InputError(f"Basepoint {s0} is not in the class {list(self.elements)}")
        return ConjClass(basepoint=s0, elements=self.elements)

    def is_trivial(self, group: FiniteGroup) -> bool:
        return self.elements == (group.identity,)


def _check_associative(rows: Tuple[Tuple[int, ...], ...]) -> None:
    n = len(rows)
    if n <= 64:
        triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
    else:
        rng = random.Random(0)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(20000))
    for a, b, c in triples:
        if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
            raise InputError(f"Cayley table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")


def compose(p: ArrayPerm, q: ArrayPerm) -> ArrayPerm:
    """(p q)(i) = p(q(i))."""
    return tuple(p[i] for i in q)


def cycle_notation(perm: ArrayPerm) -> str:
    cycles = Permutation(list(perm)).cyclic_form
    if not cycles:
        return "e"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles)


def group_from_generators(
    degree: int,
    generators: Sequence[Sequence[Sequence[int]]],
    max_order: Optional[int] = None,
) -> FiniteGroup:
    """
    Closure of permutations given as lists of 1-based cycles. Elements are
    numbered in BFS order from the identity, multiplying by the generators
    on the right in input order.
    """
    bound = max_order if max_order is not None else config.max_closure
    if degree < 1:
        raise InputError(f"Permutation degree must be positive, got {degree}")
    gens: List[ArrayPerm] = []
    for g in generators:
        gens.append(permutation_from_cycles(g, degree))

    identity = tuple(range(degree))
    elements: List[ArrayPerm] = [identity]
    index: Dict[ArrayPerm, int] = {identity: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in index:
                if len(elements) >= bound:
                    raise ResourceBound(
                        f"Generator closure exceeds {bound} elements",
                        partial={"elements_found": len(elements)},
                    )
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)

    n = len(elements)
    table = [[index[compose(elements[a], elements[b])] for b in range(n)] for a in range(n)]
    inverses = []
    for p in elements:
        inv = [0] * degree
        for i, pi in enumerate(p):
            inv[pi] = i
        inverses.append(index[tuple(inv)])
    logger.debug(f"Closed {len(gens)} generators of degree {degree} into a group of order {n}")
    return FiniteGroup(
        order=n,
        table=tuple(tuple(r) for r in table),
        identity=0,
        inverses=tuple(inverses),
        element_names=tuple(cycle_notation(p) for p in elements),
        permutations=tuple(elements),
        degree=degree,
    )


def permutation_from_cycles(cycles: Sequence[Sequence[int]], degree: int) -> ArrayPerm:
    """Array form (0-based) of a product of disjoint 1-based cycles."""
    images = list(range(degree))
    seen = set()
    for cycle in cycles:
        pts = [int(i) for i in cycle]
        for p in pts:
            if not 1 <= p <= degree:
                raise InputError(f"Point {p} outside 1..{degree} in cycle {list(cycle)}")
            if p in seen:
                raise InputError(f"Point {p} repeated in cycles {list(cycles)}")
            seen.add(p)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a - 1] = b - 1
    return tuple(images)


def parse_cycles(text: str, degree: int) -> ArrayPerm:
    """
    Parse cycle notation such as ``(1 2)(3 4)``, ``(1,2)`` or, for degree
    below 10, the compact ``(12)``. ``e`` and ``()`` denote the identity.
    """
    s = text.strip()
    if s in ("e", "()", "1", "id"):
        return tuple(range(degree))
    if not (s.startswith("(") and s.endswith(")")):
        raise InputError(f"Not a cycle notation: {text!r}")
    cycles = []
    for chunk in s[1:-1].split(")("):
        chunk = chunk.replace(",", " ").strip()
        if not chunk:
            continue
        if " " in chunk:
            pts = [int(t) for t in chunk.split()]
        elif degree < 10:
            pts = [int(ch) for ch in chunk]
        else:
            pts = [int(chunk)]
        cycles.append(pts)
    return permutation_from_cycles(cycles, degree)


def conjugacy_classes(group: FiniteGroup) -> List[ConjClass]:
    """Classes ordered by (size, least element index); basepoint is the least element."""
    seen = set()
    classes = []
    for a in group.elements():
        if a in seen:
            continue
        orbit = sorted({group.conj(u, a) for u in group.elements()})
        seen.update(orbit)
        classes.append(ConjClass(basepoint=orbit[0], elements=tuple(orbit)))
    classes.sort(key=lambda c: (c.size, c.elements[0]))
    return classes


def class_of(group: FiniteGroup, a: int) -> ConjClass:
    for c in conjugacy_classes(group):
        if a in c.elements:
            return c
    raise InputError(f"Element {a} is not in the group")


def centralizer(group: FiniteGroup, s0: int) -> Subgroup:
    """G_0 = {u : u s0 = s0 u} with its own Cayley table and inclusion map."""
    if not 0 <= s0 < group.order:
        raise InputError(f"Element {s0} is not in the group")
    members = tuple(u for u in group.elements() if group.mul(u, s0) == group.mul(s0, u))
    return subgroup(group, members)


def subgroup(group: FiniteGroup, members: Sequence[int]) -> Subgroup:
    members = tuple(sorted(members))
    local = {a: i for i, a in enumerate(members)}
    try:
        table = tuple(tuple(local[group.mul(a, b)] for b in members) for a in members)
    except KeyError:
        raise InputError("Subset is not closed under multiplication")
    names = tuple(group.name(a) for a in members) if group.element_names is not None else None
    perms = tuple(group.permutations[a] for a in members) if group.permutations is not None else None
    sub = FiniteGroup(
        order=len(members),
        table=table,
        identity=local[group.identity],
        inverses=tuple(local[group.inv(a)] for a in members),
        element_names=names,
        permutations=perms,
        degree=group.degree,
    )
    return Subgroup(group=sub, parent=group, embedding=members)
