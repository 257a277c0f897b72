"""The Drinfeld double D(G), its dual D*(G), rho-matrices and the block decomposition."""

from .blocks import Block, central_projector, dg_counit, enumerate_blocks
from .elements import DoubleElement, DualDoubleElement, basis_index, basis_key
from .operations import (
    check_antipode_axiom,
    dg_antipode,
    dg_multiply,
    dstar_antipode,
    dstar_coproduct,
    dstar_counit,
    dstar_multiply,
    dstar_ops,
    pairing,
)
from .sector import (
    Sector,
    check_rho_homomorphism,
    check_yang_baxter,
    r_matrix,
    rho_basis,
    rho_matrix,
    rho_sparse,
    universal_q,
    universal_r,
    universal_r_inverse,
)

__all__ = [
    'Block',
    'DoubleElement',
    'DualDoubleElement',
    'Sector',
    'basis_index',
    'basis_key',
    'central_projector',
    'check_antipode_axiom',
    'check_rho_homomorphism',
    'check_yang_baxter',
    'dg_antipode',
    'dg_counit',
    'dg_multiply',
    'dstar_antipode',
    'dstar_coproduct',
    'dstar_counit',
    'dstar_multiply',
    'dstar_ops',
    'enumerate_blocks',
    'pairing',
    'r_matrix',
    'rho_basis',
    'rho_matrix',
    'rho_sparse',
    'universal_q',
    'universal_r',
    'universal_r_inverse',
]
