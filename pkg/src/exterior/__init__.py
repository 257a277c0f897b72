"""Braided exterior algebra of a calculus: Psi, antisymmetrizers, Lambda^n, d and cohomology."""

from .algebra import (
    ExteriorData,
    ExteriorDegree,
    build_exterior,
    check_bimodule_stability,
    decode,
    encode,
    is_relation,
    lambda_dims,
    move_past,
    quadratic_relations,
    tensor_from_labels,
)
from .antisymmetrizer import (
    antisymmetrize,
    antisymmetrizer,
    check_reduced_word_independence,
    reduced_word,
    reduced_words,
)
from .braiding import BraidMatrix, braid_explicit, braid_from_r, braiding, check_braid_relation
from .cohomology import Cohomology, cohomology, is_exact
from .forms import Form, check_d0, check_dd_zero, d_form, d_matrix, theta, wedge, wedge_and_d
from .probes import classical_dims, hilbert_probe, quadratic_dims

__all__ = [
    'BraidMatrix',
    'Cohomology',
    'ExteriorData',
    'ExteriorDegree',
    'Form',
    'antisymmetrize',
    'antisymmetrizer',
    'braid_explicit',
    'braid_from_r',
    'braiding',
    'build_exterior',
    'check_bimodule_stability',
    'check_braid_relation',
    'check_d0',
    'check_dd_zero',
    'check_reduced_word_independence',
    'classical_dims',
    'cohomology',
    'd_form',
    'd_matrix',
    'decode',
    'encode',
    'hilbert_probe',
    'is_exact',
    'is_relation',
    'lambda_dims',
    'move_past',
    'quadratic_dims',
    'quadratic_relations',
    'reduced_word',
    'reduced_words',
    'tensor_from_labels',
    'theta',
    'wedge',
    'wedge_and_d',
]
