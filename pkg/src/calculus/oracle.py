"""
Generic construction of the calculus from the quasitriangular structure of
D(G): the left action and d are rebuilt from rho, the universal R and the
quantum Killing form Q and compared with the explicit formulas.

    a . e_alpha^beta = rho(R1(a_(1)))^gamma_alpha e_gamma^delta rho(R2(a_(2)))^beta_delta a_(3)
    d a = rho(Q2(a_(1))) a_(2) - theta a

with R1(a) = (<., a> (x) id)R, R2(a) = (id (x) <., a>)R and Q2(a) = (id (x) <., a>)Q.
"""

from typing import Dict, List, Tuple

from cyclo import CycNum, SparseMatrix
from double import (
    DoubleElement,
    DualDoubleElement,
    dstar_coproduct,
    pairing,
    rho_sparse,
    universal_q,
    universal_r,
)
from double.elements import Key
from errors import GateFailure
from utils.logger import logger

from .first_order import Calculus
from .forms import FormKey, OneForm


class _Legs:
    """Paired legs of R and Q on basis elements of D*(G), as rho-matrices."""

    def __init__(self, calc: Calculus):
        self.calc = calc
        self.group = calc.group
        self.r_terms = universal_r(self.group)
        self.q_terms = universal_q(self.group)
        self._cache: Dict[Tuple[str, Key], SparseMatrix] = {}

    def _rho(self, kind: str, key: Key) -> SparseMatrix:
        hit = self._cache.get((kind, key))
        if hit is not None:
            return hit
        a = DualDoubleElement.basis(self.group, *key)
        acc = DoubleElement.zero(self.group)
        if kind == "R1":
            for first, second in self.r_terms:
                c = pairing(first, a)
                if c:
                    acc = acc + second.scale(c)
        elif kind == "R2":
            for first, second in self.r_terms:
                c = pairing(second, a)
                if c:
                    acc = acc + first.scale(c)
        else:
            for first, second in self.q_terms:
                c = pairing(second, a)
                if c:
                    acc = acc + first.scale(c)
        mat = rho_sparse(self.calc.sector, acc)
        self._cache[(kind, key)] = mat
        return mat

    def r1(self, key: Key) -> SparseMatrix:
        return self._rho("R1", key)

    def r2(self, key: Key) -> SparseMatrix:
        return self._rho("R2", key)

    def q2(self, key: Key) -> SparseMatrix:
        return self._rho("Q2", key)


def _double_coproduct(a: DualDoubleElement) -> List[Tuple[Key, Key, Key, CycNum]]:
    group = a.group
    out = []
    for (k1, k3), c in dstar_coproduct(a).items():
        for (x1, x2), c2 in dstar_coproduct(DualDoubleElement.basis(group, *k1)).items():
            out.append((x1, x2, k3, c * c2))
    return out


def generic_action(calc: Calculus, legs: _Legs, a: DualDoubleElement, label: int) -> OneForm:
    alpha, beta = calc.split(label)
    out: Dict[FormKey, CycNum] = {}
    for x1, x2, x3, c in _double_coproduct(a):
        left = legs.r1(x1).column_map().get(alpha, {})
        if not left:
            continue
        right = legs.r2(x2).data.get(beta, {})
        for gamma, lv in left.items():
            for delta, rv in right.items():
                key = (calc.label(gamma, delta), x3)
                v = c * lv * rv
                out[key] = out[key] + v if key in out else v
    return OneForm._raw(calc.group, {k: v for k, v in out.items() if v})


def generic_d(calc: Calculus, legs: _Legs, a: DualDoubleElement) -> OneForm:
    out: Dict[FormKey, CycNum] = {}
    for (x1, x2), c in dstar_coproduct(a).items():
        for alpha, beta, v in legs.q2(x1).items():
            key = (calc.label(alpha, beta), x2)
            w = c * v
            out[key] = out[key] + w if key in out else w
    form = OneForm._raw(calc.group, {k: v for k, v in out.items() if v})
    return form - calc.theta.right_multiply(a)


def generators(calc: Calculus) -> List[Tuple[str, DualDoubleElement]]:
    """The group elements s and the delta functions delta_u of D*(G)."""
    group = calc.group
    gens = [(group.name(s), DualDoubleElement.group_like(group, s)) for s in group.elements()]
    gens += [(f"delta_{group.name(u)}", DualDoubleElement.delta(group, u)) for u in group.elements()]
    return gens


def check_generic_construction(calc: Calculus) -> None:
    """The explicit commutation rules and d agree with the generic construction on every generator."""
    legs = _Legs(calc)
    for name, a in generators(calc):
        for label in range(calc.dim):
            explicit = calc.left_multiply(a, OneForm.basis(calc.group, label))
            generic = generic_action(calc, legs, a, label)
            if explicit != generic:
                logger.error(f"Commutation rule mismatch for {name} . {calc.label_name(label)}")
                raise GateFailure(
                    "generic_construction",
                    f"commutation rule for {name} past {calc.label_name(label)} differs from the generic construction",
                    {"generator": name, "label": calc.label_name(label)},
                )
        if calc.d0(a) != generic_d(calc, legs, a):
            logger.error(f"Differential mismatch on {name}")
            raise GateFailure(
                "generic_construction",
                f"d({name}) differs from the generic construction",
                {"generator": name},
            )
    logger.info(f"Generic construction reproduces the calculus on {2 * calc.group.order} generators")
