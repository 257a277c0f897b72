"""Finite groups: closure, conjugacy classes, centralizers, sections and the cocycle."""

from .finite_group import (
    ConjClass,
    FiniteGroup,
    Subgroup,
    centralizer,
    class_of,
    conjugacy_classes,
    group_from_generators,
    parse_cycles,
    subgroup,
)
from .loader import builtin_group, load_group, load_section, resolve_class, resolve_element
from .section import Section, check_cocycle_identity, cocycle, cocycle_table, default_section, section_from_mapping

__all__ = [
    'ConjClass',
    'FiniteGroup',
    'Section',
    'Subgroup',
    'builtin_group',
    'centralizer',
    'check_cocycle_identity',
    'class_of',
    'cocycle',
    'cocycle_table',
    'conjugacy_classes',
    'default_section',
    'group_from_generators',
    'load_group',
    'load_section',
    'parse_cycles',
    'resolve_class',
    'resolve_element',
    'section_from_mapping',
    'subgroup',
]
