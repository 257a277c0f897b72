"""
First-order bicovariant calculus on D*(G) for one (class, irrep) pair.

Basis 1-forms e_{ai}^{bj} with W-indices alpha = (a, i), beta = (b, j) carry
the label alpha * m + beta, m = |C| dim V. Coefficients sit on the right.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from cyclo import CycNum
from double import DualDoubleElement, Sector
from double.elements import Key
from errors import InputError
from group import FiniteGroup
from utils.logger import logger

from .forms import FormKey, OneForm


@dataclass(eq=False)
class Calculus:
    sector: Sector
    d_gen: Dict[Key, OneForm] = field(default_factory=dict, repr=False)
    theta: OneForm = field(default=None, repr=False)
    gates: Dict[str, str] = field(default_factory=dict)

    @property
    def group(self) -> FiniteGroup:
        return self.sector.group

    @property
    def m(self) -> int:
        """Dimension of W = k(C) (x) V."""
        return self.sector.m

    @property
    def dim(self) -> int:
        """Number of basis 1-forms, m^2."""
        return self.sector.m ** 2

    def label(self, alpha: int, beta: int) -> int:
        return alpha * self.m + beta

    def split(self, label: int) -> Tuple[int, int]:
        return divmod(label, self.m)

    def diagonal_labels(self) -> List[int]:
        return [self.label(alpha, alpha) for alpha in range(self.m)]

    def label_name(self, label: int) -> str:
        alpha, beta = self.split(label)
        (a, i), (b, j) = self.sector.label(alpha), self.sector.label(beta)
        name = self.group.name
        if self.sector.d == 1:
            return f"e_{name(a)}^{name(b)}"
        return f"e_{name(a)},{i}^{name(b)},{j}"

    def act(self, s: int, label: int) -> Tuple[Tuple[Tuple[int, CycNum], ...], int, int]:
        """
        s . e_{ai}^{bj} = sum_k e_{s a s^-1, k}^{bj} zeta_a(s)^k_i (b^-1 s b):
        returns the (label, scalar) terms, b^-1 s b and b.
        """
        return _act(self, s, label)

    def act_basis(self, s: int, y: int, label: int) -> List[Tuple[int, CycNum, Key]]:
        """(s.delta_y) . e_L as (label, scalar, basis key of the right coefficient) triples."""
        terms, s_out, b = self.act(s, label)
        key = (s_out, self.group.mul(self.group.inv(b), y))
        return [(lab, c, key) for lab, c in terms]

    def left_multiply(self, a: DualDoubleElement, omega: OneForm) -> OneForm:
        return left_multiply(self, a, omega)

    def d0(self, a: DualDoubleElement) -> OneForm:
        return d0(self, a)


def _act(calc: Calculus, s: int, label: int):
    cache = calc.__dict__.setdefault("_act_cache", {})
    hit = cache.get((s, label))
    if hit is not None:
        return hit
    sector, group = calc.sector, calc.group
    alpha, beta = calc.split(label)
    a, i = sector.label(alpha)
    b, _ = sector.label(beta)
    a_new = group.conj(s, a)
    z = sector.zeta(a, s)
    terms = tuple(
        (calc.label(sector.index(a_new, k), beta), z[k, i])
        for k in range(sector.d)
        if z[k, i]
    )
    result = (terms, group.conj(group.inv(b), s), b)
    cache[(s, label)] = result
    return result


def theta_form(calc: Calculus) -> OneForm:
    """theta = sum_alpha e_alpha^alpha."""
    unit = DualDoubleElement.unit(calc.group)
    form = OneForm.zero(calc.group)
    for label in calc.diagonal_labels():
        form = form + OneForm.basis(calc.group, label, unit)
    return form


def left_multiply(calc: Calculus, a: DualDoubleElement, omega: OneForm) -> OneForm:
    """a . omega, moving a past each basis form and merging coefficients in D*(G)."""
    group = calc.group
    out: Dict[FormKey, CycNum] = {}
    for (s, y), ca in a.items():
        for (label, (t, x)), cw in omega.items():
            terms, s_out, b = calc.act(s, label)
            if group.mul(group.inv(b), y) != x:
                continue
            key_right = (group.mul(s_out, t), x)
            for lab, c in terms:
                key = (lab, key_right)
                v = ca * c * cw
                out[key] = out[key] + v if key in out else v
    return OneForm._raw(group, {k: v for k, v in out.items() if v})


def _d_basis(calc: Calculus, s: int, y: int) -> OneForm:
    """d(s.delta_y) = sum e_{s c s^-1, k}^{c, i} zeta_c(s)^k_i (c^-1 s c).delta_{c^-1 y} - theta s.delta_y."""
    sector, group = calc.sector, calc.group
    out: Dict[FormKey, CycNum] = {}
    for c in sector.elements:
        ci = group.inv(c)
        key = (group.conj(ci, s), group.mul(ci, y))
        z = sector.zeta(c, s)
        target = group.conj(s, c)
        for k in range(sector.d):
            for i in range(sector.d):
                v = z[k, i]
                if v:
                    lab = calc.label(sector.index(target, k), sector.index(c, i))
                    out[(lab, key)] = out[(lab, key)] + v if (lab, key) in out else v
    minus_one = CycNum.rational(-1)
    for lab in calc.diagonal_labels():
        k = (lab, (s, y))
        out[k] = out[k] + minus_one if k in out else minus_one
    return OneForm._raw(group, {k: v for k, v in out.items() if v})


def d0(calc: Calculus, a: DualDoubleElement) -> OneForm:
    """The differential on D*(G), linear in a."""
    out = OneForm.zero(calc.group)
    for key, c in a.items():
        out = out + calc.d_gen[key].scale(c)
    return out


def build_calculus(sector: Sector, check_oracle: bool = True) -> Calculus:
    """
    Commutation rules and d on every basis element of D*(G) for a nontrivial
    (class, irrep) pair. With ``check_oracle`` the explicit formulas are
    compared with the generic quasitriangular construction on all generators.
    """
    if sector.is_trivial_pair:
        raise InputError("The trivial class with the trivial representation gives no calculus")
    if not sector.rep.is_irreducible():
        raise InputError(f"Representation {sector.rep.family} is reducible")
    calc = Calculus(sector=sector)
    calc.theta = theta_form(calc)
    group = sector.group
    for s in group.elements():
        for y in group.elements():
            calc.d_gen[(s, y)] = _d_basis(calc, s, y)
    logger.info(f"Built the {calc.dim}-dimensional calculus for {sector.describe()}")
    if check_oracle:
        from .oracle import check_generic_construction

        check_generic_construction(calc)
        calc.gates["generic_construction"] = "pass"
    return calc
