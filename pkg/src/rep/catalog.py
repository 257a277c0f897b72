"""
Built-in irreducible representations and the per-centralizer irrep catalog.

Family labels:
    trivial, sign_Sn, standard2_S3, cyclic(n,k), abelian(k1,...,kr),
    dihedral(n,k), dihedral_linear(n,er,es)
"""

import itertools
import json
import os
import re
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError
from sympy.combinatorics import Permutation

from cyclo import CycMatrix, CycNum, parse_literal
from errors import CoverageError, GateFailure, InputError
from group import FiniteGroup, Subgroup
from utils.logger import logger

from .representation import Representation, extend_from_generators, scalar_images

_FAMILY = re.compile(r"^\s*([A-Za-z_0-9]+)\s*(?:\(([^)]*)\))?\s*$")


class RepresentationFile(BaseModel):
    conductor: int = Field(gt=0)
    dim: int = Field(gt=0)
    generators: Dict[str, List[List[str]]]


def parse_family(label: str) -> Tuple[str, Tuple[int, ...]]:
    m = _FAMILY.match(label)
    if not m:
        raise InputError(f"Malformed representation family {label!r}")
    name, args = m.group(1), m.group(2)
    try:
        params = tuple(int(a) for a in args.split(",")) if args and args.strip() else ()
    except ValueError:
        raise InputError(f"Non-integer parameters in family {label!r}")
    return name, params


def _least_of_order(group: FiniteGroup, order: int, exclude=()) -> Optional[int]:
    return next((u for u in group.elements() if group.element_order(u) == order and u not in exclude), None)


def _cyclic_generator(group: FiniteGroup, n: int) -> int:
    if group.order != n:
        raise InputError(f"cyclic({n},k) needs a group of order {n}, got {group.order}")
    g = _least_of_order(group, n)
    if g is None:
        raise InputError(f"Group of order {n} is not cyclic")
    return g


def _s3_generators(group: FiniteGroup) -> Tuple[int, int]:
    if group.order != 6 or group.is_abelian():
        raise InputError("standard2_S3 needs a group isomorphic to S3")
    return _least_of_order(group, 3), _least_of_order(group, 2)


def _dihedral_generators(group: FiniteGroup, n: int) -> Tuple[int, int]:
    """Rotation r of order n and a reflection s outside <r> with s r s = r^-1."""
    if group.order != 2 * n or (n >= 3 and group.is_abelian()):
        raise InputError(f"dihedral family needs a dihedral group of order {2 * n}")
    for r in group.elements():
        if group.element_order(r) != n:
            continue
        rotations = {group.identity}
        x = r
        while x != group.identity:
            rotations.add(x)
            x = group.mul(x, r)
        for s in group.elements():
            if s in rotations or group.element_order(s) != 2:
                continue
            if group.product(s, r, s) == group.inv(r):
                return r, s
    raise InputError(f"Group of order {2 * n} is not dihedral")


def _powers(group: FiniteGroup, g: int) -> List[int]:
    out, x = [group.identity], g
    while x != group.identity:
        out.append(x)
        x = group.mul(x, g)
    return out


def builtin_irrep(family: str, group: FiniteGroup) -> Representation:
    """A verified irreducible representation of ``group`` from a built-in family."""
    name, params = parse_family(family)
    if name == "trivial" and not params:
        images = scalar_images({u: CycNum.one() for u in group.elements()})
        return extend_from_generators(group, images, family="trivial")
    if name == "sign_Sn" and not params:
        if group.permutations is None:
            raise InputError("sign_Sn needs a permutation group")
        values = {
            u: CycNum.rational(-1 if Permutation(list(p)).is_odd else 1)
            for u, p in enumerate(group.permutations)
        }
        return extend_from_generators(group, scalar_images(values), family="sign_Sn")
    if name == "standard2_S3" and not params:
        a, b = _s3_generators(group)
        images = {
            a: CycMatrix.from_rows([[0, -1], [1, -1]]),
            b: CycMatrix.from_rows([[0, 1], [1, 0]]),
        }
        return extend_from_generators(group, images, family="standard2_S3")
    if name == "cyclic" and len(params) == 2:
        n, k = params
        if n < 1:
            raise InputError(f"cyclic({n},{k}) needs n >= 1")
        g = _cyclic_generator(group, n)
        values = {x: CycNum.zeta(n, j * k) for j, x in enumerate(_powers(group, g))}
        return extend_from_generators(group, scalar_images(values), family=f"cyclic({n},{k % n})")
    if name == "dihedral" and len(params) == 2:
        n, k = params
        r, s = _dihedral_generators(group, n)
        images = {
            r: CycMatrix.from_rows([[CycNum.zeta(n, k), 0], [0, CycNum.zeta(n, -k)]]),
            s: CycMatrix.from_rows([[0, 1], [1, 0]]),
        }
        return extend_from_generators(group, images, family=f"dihedral({n},{k % n})")
    if name == "dihedral_linear" and len(params) == 3:
        n, er, es = params
        if er not in (1, -1) or es not in (1, -1):
            raise InputError("dihedral_linear signs must be 1 or -1")
        r, s = _dihedral_generators(group, n)
        images = scalar_images({r: CycNum.rational(er), s: CycNum.rational(es)})
        return extend_from_generators(group, images, family=f"dihedral_linear({n},{er},{es})")
    if name == "abelian":
        for label, rep in abelian_characters(group):
            if parse_family(label) == (name, params):
                return rep
        raise InputError(f"No character {family} on this group")
    raise InputError(f"Unknown representation family {family!r}")


def _abelian_basis(group: FiniteGroup) -> List[int]:
    """Greedy generating set: least-index elements outside the span of the previous ones."""
    basis: List[int] = []
    span = {group.identity}
    for u in group.elements():
        if u in span:
            continue
        basis.append(u)
        frontier = set(span)
        for x in _powers(group, u):
            frontier |= {group.mul(y, x) for y in span}
        span = frontier
        if len(span) == group.order:
            break
    return basis


def abelian_characters(group: FiniteGroup) -> List[Tuple[str, Representation]]:
    """
    All characters of an abelian group as homomorphisms into the exponent-th
    roots of unity, found by trying every assignment on a greedy basis.
    """
    if not group.is_abelian():
        raise InputError("abelian characters need an abelian group")
    exp = group.exponent()
    basis = _abelian_basis(group)
    found = []
    for ks in itertools.product(*(range(exp) for _ in basis)):
        if any((k * group.element_order(b)) % exp for k, b in zip(ks, basis)):
            continue
        images = scalar_images({b: CycNum.zeta(exp, k) for k, b in zip(ks, basis)})
        try:
            rep = extend_from_generators(group, images, family="")
        except InputError:
            continue
        label = "abelian(" + ",".join(str(k) for k in ks) + ")"
        found.append((label, Representation(group, rep.dim, rep.matrices, family=label)))
    return found


def irrep_catalog(centralizer: Subgroup, class_elements=()) -> List[Representation]:
    """
    Every irreducible representation of the centralizer, trivial first.
    Raises CoverageError for groups outside the built-in families.
    """
    group = centralizer.group
    n = group.order
    if group.is_abelian():
        if n == 1 or _least_of_order(group, n) is not None:
            reps = [builtin_irrep("trivial", group)]
            reps += [builtin_irrep(f"cyclic({n},{k})", group) for k in range(1, n)]
        else:
            reps = [rep for _, rep in abelian_characters(group)]
    elif n == 6:
        reps = [
            builtin_irrep("trivial", group),
            _nontrivial_linear_s3(group),
            builtin_irrep("standard2_S3", group),
        ]
    elif n % 2 == 0 and _is_dihedral(group, n // 2):
        m = n // 2
        reps = [builtin_irrep("trivial", group)]
        signs = [(1, -1), (-1, 1), (-1, -1)] if m % 2 == 0 else [(1, -1)]
        reps += [builtin_irrep(f"dihedral_linear({m},{er},{es})", group) for er, es in signs]
        reps += [builtin_irrep(f"dihedral({m},{k})", group) for k in range(1, (m - 1) // 2 + 1)]
    else:
        raise CoverageError(
            f"Centralizer of order {n} is not covered by the built-in representation families; "
            f"supply a representation file",
            class_elements=class_elements,
            centralizer_order=n,
        )
    total = sum(r.dim ** 2 for r in reps)
    if total != n:
        raise GateFailure("irrep_catalog", f"irrep dimensions squared sum to {total}, expected {n}")
    logger.debug(f"Irrep catalog for a centralizer of order {n}: {[r.family for r in reps]}")
    return reps


def _is_dihedral(group: FiniteGroup, m: int) -> bool:
    if m < 3:
        return False
    try:
        _dihedral_generators(group, m)
    except InputError:
        return False
    return True


def _nontrivial_linear_s3(group: FiniteGroup) -> Representation:
    a, b = _s3_generators(group)
    images = scalar_images({a: CycNum.one(), b: CycNum.rational(-1)})
    return extend_from_generators(group, images, family="sign_Sn")


def load_representation(path: str, centralizer: Subgroup, require_irreducible: bool = True) -> Representation:
    """
    Representation file: {"conductor": N, "dim": d, "generators": {"g_index": [[literal, ...], ...]}}
    with generator indices in the parent group.
    """
    path = path[len("file:"):] if path.startswith("file:") else path
    if not os.path.exists(path):
        raise InputError(f"Representation file does not exist: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            parsed = RepresentationFile.model_validate(json.load(f))
    except json.JSONDecodeError as e:
        raise InputError(f"Invalid JSON in {path}: {e}")
    except ValidationError as e:
        raise InputError(f"Invalid representation file {path}: {e}")

    images = {}
    for key, rows in parsed.generators.items():
        try:
            local = centralizer.from_parent(int(key))
        except (KeyError, ValueError):
            raise InputError(f"Generator {key!r} is not an element of the centralizer")
        if len(rows) != parsed.dim or any(len(r) != parsed.dim for r in rows):
            raise InputError(f"Generator {key} is not a {parsed.dim}x{parsed.dim} matrix")
        try:
            images[local] = CycMatrix.from_rows([[parse_literal(v, parsed.conductor) for v in r] for r in rows])
        except ValueError as e:
            raise InputError(f"Bad entry for generator {key}: {e}")
    family = f"file:{os.path.basename(path)}"
    rep = extend_from_generators(centralizer.group, images, family=family, require_irreducible=require_irreducible)
    logger.info(f"Loaded representation {family} of dimension {rep.dim}")
    return rep


def resolve_irrep(selector: str, centralizer: Subgroup) -> Representation:
    """A family label or ``file:<path>``."""
    if selector.startswith("file:") or os.path.isfile(selector):
        return load_representation(selector, centralizer)
    return builtin_irrep(selector, centralizer.group)
