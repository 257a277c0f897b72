from __future__ import annotations

from typing import Dict, Iterator, Optional, Tuple

from cyclo import CycNum
from cyclo.number import Scalar
from double import DualDoubleElement
from double.elements import Key
from group import FiniteGroup

FormKey = Tuple[int, Key]


class OneForm:
    """
    A 1-form sum_L e_L . c_L with basis labels L on the left and
    coefficients c_L in D*(G) on the right; stored as (label, (s, u)) -> scalar.
    """

    __slots__ = ("group", "terms")

    def __init__(self, group: FiniteGroup, terms: Optional[Dict[FormKey, Scalar]] = None):
        self.group = group
        self.terms: Dict[FormKey, CycNum] = {}
        if terms:
            for k, v in terms.items():
                c = CycNum.coerce(v)
                if c:
                    self.terms[k] = c

    @classmethod
    def _raw(cls, group: FiniteGroup, terms: Dict[FormKey, CycNum]) -> "OneForm":
        obj = cls.__new__(cls)
        obj.group = group
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, group: FiniteGroup) -> "OneForm":
        return cls._raw(group, {})

    @classmethod
    def basis(cls, group: FiniteGroup, label: int, coeff: Optional[DualDoubleElement] = None) -> "OneForm":
        """e_label . coeff, with coeff defaulting to the unit of D*(G)."""
        c = coeff if coeff is not None else DualDoubleElement.unit(group)
        return cls._raw(group, {(label, k): v for k, v in c.items()})

    def items(self) -> Iterator[Tuple[FormKey, CycNum]]:
        return iter(self.terms.items())

    def labels(self) -> Tuple[int, ...]:
        return tuple(sorted({label for label, _ in self.terms}))

    def coefficient(self, label: int) -> DualDoubleElement:
        return DualDoubleElement(self.group, {k: v for (lab, k), v in self.terms.items() if lab == label})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "OneForm") -> "OneForm":
        out = dict(self.terms)
        for k, v in other.terms.items():
            nv = out[k] + v if k in out else v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return OneForm._raw(self.group, out)

    def __neg__(self) -> "OneForm":
        return OneForm._raw(self.group, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "OneForm") -> "OneForm":
        return self + (-other)

    def scale(self, factor: Scalar) -> "OneForm":
        f = CycNum.coerce(factor)
        if not f:
            return OneForm.zero(self.group)
        return OneForm._raw(self.group, {k: f * v for k, v in self.terms.items()})

    def right_multiply(self, b: DualDoubleElement) -> "OneForm":
        """(sum e_L c_L) . b = sum e_L (c_L b)."""
        group = self.group
        by_u: Dict[int, list] = {}
        for (t, x), cb in b.items():
            by_u.setdefault(x, []).append((t, cb))
        out: Dict[FormKey, CycNum] = {}
        for (label, (s, u)), c in self.terms.items():
            for t, cb in by_u.get(u, ()):
                key = (label, (group.mul(s, t), u))
                v = c * cb
                out[key] = out[key] + v if key in out else v
        return OneForm._raw(group, {k: v for k, v in out.items() if v})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OneForm):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def vector(self) -> Dict[int, CycNum]:
        """Coordinates in the basis (label, s, u) -> label * |G|^2 + s * |G| + u."""
        n = self.group.order
        return {label * n * n + s * n + u: c for (label, (s, u)), c in self.terms.items()}

    def __repr__(self) -> str:
        return f"OneForm({len(self.terms)} terms)"
