from typing import Dict, Union

from cyclo import CycNum
from errors import GateFailure, InputError
from group import FiniteGroup
from utils.logger import logger

from .elements import DoubleElement, DualDoubleElement, Key, TensorKey

Tensor = Dict[TensorKey, CycNum]


def _same_group(x, y) -> FiniteGroup:
    if x.group is not y.group and x.group != y.group:
        raise InputError("Elements live over different groups")
    return x.group


def dg_multiply(x: DoubleElement, y: DoubleElement) -> DoubleElement:
    """(delta_s (x) u)(delta_t (x) v) = [s = u t u^-1] delta_s (x) uv."""
    group = _same_group(x, y)
    out: Dict[Key, CycNum] = {}
    by_t: Dict[int, list] = {}
    for (t, v), c in y.terms.items():
        by_t.setdefault(t, []).append((v, c))
    for (s, u), a in x.terms.items():
        t = group.conj(group.inv(u), s)
        for v, b in by_t.get(t, ()):
            key = (s, group.mul(u, v))
            out[key] = out[key] + a * b if key in out else a * b
    return DoubleElement._raw(group, {k: v for k, v in out.items() if v})


def dg_antipode(x: DoubleElement) -> DoubleElement:
    """S(delta_s (x) u) = delta_{u^-1 s^-1 u} (x) u^-1."""
    group = x.group
    out: Dict[Key, CycNum] = {}
    for (s, u), c in x.terms.items():
        ui = group.inv(u)
        out[(group.conj(ui, group.inv(s)), ui)] = c
    return DoubleElement._raw(group, out)


def dstar_multiply(x: DualDoubleElement, y: DualDoubleElement) -> DualDoubleElement:
    """(s.delta_u)(t.delta_v) = [u = v] st.delta_u."""
    group = _same_group(x, y)
    by_v: Dict[int, list] = {}
    for (t, v), c in y.terms.items():
        by_v.setdefault(v, []).append((t, c))
    out: Dict[Key, CycNum] = {}
    for (s, u), a in x.terms.items():
        for t, b in by_v.get(u, ()):
            key = (group.mul(s, t), u)
            out[key] = out[key] + a * b if key in out else a * b
    return DualDoubleElement._raw(group, {k: v for k, v in out.items() if v})


def dstar_coproduct(x: DualDoubleElement) -> Tensor:
    """Delta(s.delta_y) = sum_{vw = y} s.delta_v (x) (v^-1 s v).delta_w."""
    group = x.group
    out: Tensor = {}
    for (s, y), c in x.terms.items():
        for v in group.elements():
            w = group.mul(group.inv(v), y)
            key = ((s, v), (group.conj(group.inv(v), s), w))
            out[key] = out[key] + c if key in out else c
    return {k: v for k, v in out.items() if v}


def dstar_counit(x: DualDoubleElement) -> CycNum:
    """epsilon(s.delta_u) = [u = e]."""
    total = CycNum.zero()
    for (s, u), c in x.terms.items():
        if u == x.group.identity:
            total = total + c
    return total


def dstar_antipode(x: DualDoubleElement) -> DualDoubleElement:
    """S(s.delta_u) = (u^-1 s^-1 u).delta_{u^-1}."""
    group = x.group
    out: Dict[Key, CycNum] = {}
    for (s, u), c in x.terms.items():
        ui = group.inv(u)
        out[(group.conj(ui, group.inv(s)), ui)] = c
    return DualDoubleElement._raw(group, out)


def pairing(h: DoubleElement, a: DualDoubleElement) -> CycNum:
    """<delta_s (x) u, t.delta_v> = [s = t][u = v]."""
    _same_group(h, a)
    total = CycNum.zero()
    small, large = (h.terms, a.terms) if len(h.terms) <= len(a.terms) else (a.terms, h.terms)
    for key, c in small.items():
        other = large.get(key)
        if other is not None:
            total = total + c * other
    return total


def dstar_ops(kind: str, *args) -> Union[DualDoubleElement, Tensor, CycNum]:
    """Dispatch one structure map of D*(G) by name."""
    if kind == "multiply":
        x, y = args
        return dstar_multiply(x, y)
    if kind == "coproduct":
        (x,) = args
        return dstar_coproduct(x)
    if kind == "counit":
        (x,) = args
        return dstar_counit(x)
    if kind == "antipode":
        (x,) = args
        return dstar_antipode(x)
    if kind == "pairing":
        h, a = args
        return pairing(h, a)
    raise ValueError(f"Unknown D*(G) operation: {kind}")


def check_antipode_axiom(group: FiniteGroup) -> None:
    """S(x_(1)) x_(2) = epsilon(x) 1 = x_(1) S(x_(2)) on every basis element of D*(G)."""
    unit = DualDoubleElement.unit(group)
    for s in group.elements():
        for u in group.elements():
            x = DualDoubleElement.basis(group, s, u)
            expected = unit.scale(dstar_counit(x))
            left = DualDoubleElement.zero(group)
            right = DualDoubleElement.zero(group)
            for (k1, k2), c in dstar_coproduct(x).items():
                x1 = DualDoubleElement._raw(group, {k1: c})
                x2 = DualDoubleElement._raw(group, {k2: CycNum.one()})
                left = left + dstar_multiply(dstar_antipode(x1), x2)
                right = right + dstar_multiply(x1, dstar_antipode(x2))
            if left != expected or right != expected:
                logger.error(f"Antipode axiom fails on {group.name(s)}.delta_{group.name(u)}")
                raise GateFailure("antipode", "antipode axiom fails", {"s": s, "u": u})
    logger.debug(f"Antipode axiom holds on all {group.order ** 2} basis elements")
