"""First-order bicovariant calculi on D*(G): commutation rules, d and theta."""

from .dump import calculus_dump, format_dual, format_form
from .first_order import Calculus, build_calculus, d0, left_multiply, theta_form
from .forms import OneForm
from .oracle import check_generic_construction, generators
from .verify import check_inner, check_leibniz, check_restriction, check_surjective, verify_first_order

__all__ = [
    'Calculus',
    'OneForm',
    'build_calculus',
    'calculus_dump',
    'check_generic_construction',
    'check_inner',
    'check_leibniz',
    'check_restriction',
    'check_surjective',
    'd0',
    'format_dual',
    'format_form',
    'generators',
    'left_multiply',
    'theta_form',
    'verify_first_order',
]
