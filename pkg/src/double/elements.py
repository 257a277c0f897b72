"""
Sparse elements of the Drinfeld double D(G), basis delta_s (x) u, and of
its dual A = D*(G), basis s (x) delta_u (written s.delta_u).
"""

from __future__ import annotations

from typing import Dict, Iterator, Optional, Tuple

from cyclo import CycNum
from cyclo.number import Scalar
from errors import InputError
from group import FiniteGroup

Key = Tuple[int, int]
TensorKey = Tuple[Key, Key]


class _SparseElement:
    __slots__ = ("group", "terms")

    def __init__(self, group: FiniteGroup, terms: Optional[Dict[Key, Scalar]] = None):
        self.group = group
        self.terms: Dict[Key, CycNum] = {}
        if terms:
            for k, v in terms.items():
                c = CycNum.coerce(v)
                if c:
                    self.terms[k] = c

    @classmethod
    def _raw(cls, group: FiniteGroup, terms: Dict[Key, CycNum]):
        obj = cls.__new__(cls)
        obj.group = group
        obj.terms = terms
        return obj

    @classmethod
    def basis(cls, group: FiniteGroup, s: int, u: int, coeff: Scalar = 1):
        return cls(group, {(s, u): coeff})

    @classmethod
    def zero(cls, group: FiniteGroup):
        return cls._raw(group, {})

    def _check(self, other: "_SparseElement") -> None:
        if type(other) is not type(self):
            raise TypeError(f"Cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.group is not self.group and other.group != self.group:
            raise InputError("Elements live over different groups")

    def items(self) -> Iterator[Tuple[Key, CycNum]]:
        return iter(self.terms.items())

    def coeff(self, s: int, u: int) -> CycNum:
        return self.terms.get((s, u), CycNum.zero())

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            nv = out[k] + v if k in out else v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return self._raw(self.group, out)

    def __neg__(self):
        return self._raw(self.group, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor: Scalar):
        f = CycNum.coerce(factor)
        if not f:
            return self.zero(self.group)
        return self._raw(self.group, {k: f * v for k, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms and (other.group is self.group or other.group == self.group)

    __hash__ = None

    def conductor(self) -> int:
        from cyclo import common_conductor

        return common_conductor(self.terms.values())

    def _format(self, template: str) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (s, u), c in sorted(self.terms.items()):
            label = template.format(s=self.group.name(s), u=self.group.name(u))
            parts.append(label if c == 1 else f"({c})*{label}")
        return " + ".join(parts)


class DoubleElement(_SparseElement):
    """Element of D(G) = k(G) >| kG."""

    __slots__ = ()

    @classmethod
    def unit(cls, group: FiniteGroup) -> "DoubleElement":
        one = CycNum.one()
        return cls._raw(group, {(s, group.identity): one for s in group.elements()})

    @classmethod
    def group_like(cls, group: FiniteGroup, u: int) -> "DoubleElement":
        """1 (x) u = sum_t delta_t (x) u."""
        one = CycNum.one()
        return cls._raw(group, {(t, u): one for t in group.elements()})

    @classmethod
    def delta(cls, group: FiniteGroup, s: int) -> "DoubleElement":
        """delta_s (x) e."""
        return cls._raw(group, {(s, group.identity): CycNum.one()})

    def __mul__(self, other):
        if isinstance(other, DoubleElement):
            from .operations import dg_multiply

            return dg_multiply(self, other)
        return self.scale(other)

    def __repr__(self) -> str:
        return f"DoubleElement({self._format('d_{s}*{u}')})"


class DualDoubleElement(_SparseElement):
    """Element of A = D*(G) = kG |< k(G), key (s, u) for s.delta_u."""

    __slots__ = ()

    @classmethod
    def unit(cls, group: FiniteGroup) -> "DualDoubleElement":
        one = CycNum.one()
        return cls._raw(group, {(group.identity, u): one for u in group.elements()})

    @classmethod
    def group_like(cls, group: FiniteGroup, s: int) -> "DualDoubleElement":
        """s = sum_u s.delta_u."""
        one = CycNum.one()
        return cls._raw(group, {(s, u): one for u in group.elements()})

    @classmethod
    def delta(cls, group: FiniteGroup, u: int) -> "DualDoubleElement":
        """delta_u = e.delta_u."""
        return cls._raw(group, {(group.identity, u): CycNum.one()})

    def __mul__(self, other):
        if isinstance(other, DualDoubleElement):
            from .operations import dstar_multiply

            return dstar_multiply(self, other)
        return self.scale(other)

    def __repr__(self) -> str:
        return f"DualDoubleElement({self._format('{s}.d_{u}')})"


def basis_index(group: FiniteGroup, key: Key) -> int:
    """Position of a basis key (s, u) in the |G|^2 ordering s * |G| + u."""
    s, u = key
    return s * group.order + u


def basis_key(group: FiniteGroup, index: int) -> Key:
    return divmod(index, group.order)
