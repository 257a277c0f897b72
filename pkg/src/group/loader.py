"""
Group and section input: built-in groups, JSON files and element selectors.
"""

import json
import os
import re
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from config import config
from errors import InputError, ResourceBound
from utils.logger import logger

from .finite_group import ConjClass, FiniteGroup, class_of, group_from_generators, parse_cycles
from .section import Section, section_from_mapping

BUILTIN_GROUPS = ("S3", "S4", "Z<n>", "D<n>")


class GeneratorGroupFile(BaseModel):
    degree: int = Field(gt=0)
    generators: List[List[List[int]]]


class TableGroupFile(BaseModel):
    order: int = Field(gt=0)
    table: List[List[int]]
    names: Optional[List[str]] = None


class SectionFile(BaseModel):
    basepoint: int = Field(ge=0)
    section: Dict[str, Union[int, str]]


def builtin_group(name: str) -> FiniteGroup:
    key = name.strip().upper()
    if key == "S3":
        return group_from_generators(3, [[[1, 2]], [[2, 3]]])
    if key == "S4":
        return group_from_generators(4, [[[1, 2]], [[2, 3]], [[3, 4]]])
    m = re.fullmatch(r"Z(\d+)", key)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise InputError("Z<n> needs n >= 1")
        return group_from_generators(n, [[list(range(1, n + 1))]] if n > 1 else [])
    m = re.fullmatch(r"D(\d+)", key)
    if m:
        n = int(m.group(1))
        if n < 3:
            raise InputError("D<n> needs n >= 3")
        rotation = [list(range(1, n + 1))]
        reflection = [[i, n + 1 - i] for i in range(1, n // 2 + 1)]
        return group_from_generators(n, [rotation, reflection])
    raise InputError(f"Unknown built-in group {name!r}; known: {', '.join(BUILTIN_GROUPS)}")


def load_group(source: str, max_order: Optional[int] = None) -> FiniteGroup:
    """
    Resolve a group source: a built-in name, ``file:<path>`` or a plain path
    to a JSON file with either generators or a Cayley table.
    """
    bound = max_order if max_order is not None else config.max_group_order
    path = source[len("file:"):] if source.startswith("file:") else source
    if source.startswith("file:") or os.path.isfile(path):
        group = _load_group_file(path)
    else:
        group = builtin_group(source)
    if group.order > bound:
        raise ResourceBound(f"Group of order {group.order} exceeds the bound {bound}", partial={"order": group.order})
    logger.info(f"Loaded group {source} of order {group.order}")
    return group


def _read_json(path: str):
    if not os.path.exists(path):
        raise InputError(f"Input file does not exist: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise InputError(f"Invalid JSON in {path}: {e}")


def _load_group_file(path: str) -> FiniteGroup:
    data = _read_json(path)
    try:
        if isinstance(data, dict) and "generators" in data:
            parsed = GeneratorGroupFile.model_validate(data)
            return group_from_generators(parsed.degree, parsed.generators)
        parsed = TableGroupFile.model_validate(data)
    except ValidationError as e:
        raise InputError(f"Invalid group file {path}: {e}")
    if len(parsed.table) != parsed.order:
        raise InputError(f"Group file {path} declares order {parsed.order} but has {len(parsed.table)} rows")
    return FiniteGroup.from_table(parsed.table, element_names=parsed.names)


def load_section(path: str, group: FiniteGroup) -> Section:
    """Section override file: {"basepoint": i, "section": {"a_index": "g_index", ...}}."""
    path = path[len("file:"):] if path.startswith("file:") else path
    data = _read_json(path)
    try:
        parsed = SectionFile.model_validate(data)
        mapping = {int(k): int(v) for k, v in parsed.section.items()}
    except (ValidationError, ValueError) as e:
        raise InputError(f"Invalid section file {path}: {e}")
    if parsed.basepoint >= group.order:
        raise InputError(f"Section basepoint {parsed.basepoint} is not an element of the group")
    cls = class_of(group, parsed.basepoint).with_basepoint(parsed.basepoint)
    return section_from_mapping(group, cls, mapping)


def resolve_element(group: FiniteGroup, text: str) -> int:
    """An element given by index, cycle notation, ``e`` or display name."""
    s = str(text).strip()
    if s.isdigit():
        index = int(s)
        if index >= group.order:
            raise InputError(f"Element index {index} out of range for a group of order {group.order}")
        return index
    if s == "e":
        return group.identity
    if group.element_names is not None and s in group.element_names:
        return group.element_names.index(s)
    if group.permutations is not None and s.startswith("("):
        try:
            return group.index_of_permutation(parse_cycles(s, group.degree))
        except ValueError as e:
            raise InputError(f"Bad cycle notation {s!r}: {e}")
    raise InputError(f"Cannot resolve element {text!r}")


def resolve_class(group: FiniteGroup, text: str) -> ConjClass:
    """The class containing the selected element, based at its least-index element."""
    return class_of(group, resolve_element(group, text))
