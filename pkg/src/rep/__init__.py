"""Representations of centralizer subgroups, characters and primitive central idempotents."""

from .catalog import (
    abelian_characters,
    builtin_irrep,
    irrep_catalog,
    load_representation,
    parse_family,
    resolve_irrep,
)
from .idempotent import CentralIdempotent, central_idempotent, ga_multiply
from .representation import Representation, character, check_homomorphism, extend_from_generators

__all__ = [
    'CentralIdempotent',
    'Representation',
    'abelian_characters',
    'builtin_irrep',
    'central_idempotent',
    'character',
    'check_homomorphism',
    'extend_from_generators',
    'ga_multiply',
    'irrep_catalog',
    'load_representation',
    'parse_family',
    'resolve_irrep',
]
