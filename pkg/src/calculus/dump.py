from typing import Dict, List

from cyclo import format_literal
from double import DualDoubleElement

from .first_order import Calculus
from .forms import OneForm
from .oracle import generators


def format_dual(a: DualDoubleElement) -> List[List[str]]:
    """[s, u, coefficient] triples sorted by basis key, names for display."""
    group = a.group
    return [[group.name(s), group.name(u), format_literal(c)] for (s, u), c in sorted(a.items())]


def format_form(calc: Calculus, form: OneForm) -> Dict[str, List[List[str]]]:
    return {calc.label_name(label): format_dual(form.coefficient(label)) for label in form.labels()}


def calculus_dump(calc: Calculus) -> Dict:
    """
    Basis labels, commutation rules for the generators s and delta_u, d on
    every basis element of D*(G), and theta.
    """
    group = calc.group
    comm = {}
    for name, a in generators(calc):
        rules = {}
        for label in range(calc.dim):
            rules[calc.label_name(label)] = format_form(calc, calc.left_multiply(a, OneForm.basis(group, label)))
        comm[name] = rules
    d_gen = {
        f"{group.name(s)}.delta_{group.name(y)}": format_form(calc, form)
        for (s, y), form in sorted(calc.d_gen.items())
    }
    return {
        "labels": [calc.label_name(label) for label in range(calc.dim)],
        "comm": comm,
        "d_gen": d_gen,
        "theta": [calc.label_name(label) for label in calc.diagonal_labels()],
    }
