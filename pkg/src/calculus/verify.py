from typing import Dict

from cyclo import RowReducer
from double import DualDoubleElement, dstar_multiply
from errors import GateFailure
from utils.logger import logger
from utils.progress import progress

from .first_order import Calculus
from .forms import OneForm


def _basis(calc: Calculus):
    group = calc.group
    return [
        ((s, y), DualDoubleElement.basis(group, s, y))
        for s in group.elements()
        for y in group.elements()
    ]


def check_leibniz(calc: Calculus) -> int:
    """d(ab) = (da) b + a (db) on all pairs of basis elements; returns the number of pairs."""
    basis = _basis(calc)
    count = 0
    for ka, a in progress(basis, desc="Leibniz"):
        da = calc.d_gen[ka]
        for kb, b in basis:
            lhs = calc.d0(dstar_multiply(a, b))
            rhs = da.right_multiply(b) + calc.left_multiply(a, calc.d_gen[kb])
            if lhs != rhs:
                logger.error(f"Leibniz rule fails for a={ka}, b={kb}")
                raise GateFailure("leibniz", "d(ab) != (da)b + a(db)", {"a": list(ka), "b": list(kb)})
            count += 1
    return count


def check_inner(calc: Calculus) -> int:
    """d a = a theta - theta a on every basis element."""
    count = 0
    for key, a in _basis(calc):
        inner = calc.left_multiply(a, calc.theta) - calc.theta.right_multiply(a)
        if calc.d_gen[key] != inner:
            logger.error(f"Innerness fails for {key}")
            raise GateFailure("inner", "d a != a theta - theta a", {"a": list(key)})
        count += 1
    return count


def check_surjective(calc: Calculus) -> int:
    """The span of a.db over basis elements is all of Omega^1; returns its dimension."""
    reducer = RowReducer()
    target = calc.dim * calc.group.order ** 2
    for _, a in _basis(calc):
        for kb, _ in _basis(calc):
            reducer.add(calc.left_multiply(a, calc.d_gen[kb]).vector())
            if reducer.rank == target:
                return target
    raise GateFailure(
        "surjective",
        f"a.db spans a space of dimension {reducer.rank}, expected {target}",
        {"rank": reducer.rank},
    )


def check_restriction(calc: Calculus) -> None:
    """
    d of a function is supported on the diagonal labels e_{ai}^{ai} with
    coefficient delta_{a^-1 y} - delta_y, the calculus on k(G) given by the class.
    """
    group = calc.group
    sector = calc.sector
    for y in group.elements():
        df = calc.d_gen[(group.identity, y)]
        expected = OneForm.zero(group)
        for a in sector.elements:
            shifted = DualDoubleElement.delta(group, group.mul(group.inv(a), y))
            diff = shifted - DualDoubleElement.delta(group, y)
            for i in range(sector.d):
                alpha = sector.index(a, i)
                expected = expected + OneForm.basis(group, calc.label(alpha, alpha), diff)
        if df != expected:
            raise GateFailure("restriction", "d on functions is not the calculus of the class", {"y": y})


def verify_first_order(calc: Calculus) -> Dict:
    """Run every first-order check; raises GateFailure with a counterexample on the first failure."""
    report = {
        "leibniz_pairs": check_leibniz(calc),
        "inner_checks": check_inner(calc),
        "span_dimension": check_surjective(calc),
    }
    check_restriction(calc)
    for gate in ("leibniz", "inner", "surjective", "restriction"):
        calc.gates[gate] = "pass"
    report["gates"] = dict(calc.gates)
    logger.info(
        f"First-order checks pass: {report['leibniz_pairs']} Leibniz pairs, "
        f"{report['inner_checks']} innerness checks"
    )
    return report
