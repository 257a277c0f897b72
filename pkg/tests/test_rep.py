"""
Tests for built-in representations, the irrep catalog and central idempotents
"""
import pytest
import sys
import os
import json
import tempfile

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from cyclo import CycMatrix, CycNum
from errors import CoverageError, InputError
from group import builtin_group, centralizer, resolve_element
from rep import (
    builtin_irrep,
    central_idempotent,
    extend_from_generators,
    irrep_catalog,
    load_representation,
    parse_family,
    resolve_irrep,
)

DATA_DIR = os.path.join(os.path.dirname(__file__), '..', 'data')


@pytest.fixture(scope="module")
def s3():
    return builtin_group("S3")


def _catalog(group_name, element):
    group = builtin_group(group_name)
    return irrep_catalog(centralizer(group, resolve_element(group, element)))


def test_parse_family():
    """Family names with integer parameters"""
    assert parse_family("trivial") == ("trivial", ())
    assert parse_family("cyclic(3, 2)") == ("cyclic", (3, 2))
    with pytest.raises(InputError):
        parse_family("cyclic(a,b)")
    with pytest.raises(InputError):
        parse_family("cyclic(2")


@pytest.mark.parametrize("group_name,element,dims", [
    ("S3", "e", [1, 1, 2]),
    ("S3", "(1 2 3)", [1, 1, 1]),
    ("S3", "(1 2)", [1, 1]),
    ("D4", "e", [1, 1, 1, 1, 2]),
    ("S4", "(1 2 3 4)", [1, 1, 1, 1]),
    ("S4", "(1 2)", [1, 1, 1, 1]),
    ("S4", "(1 2)(3 4)", [1, 1, 1, 1, 2]),
])
def test_catalog_dimensions(group_name, element, dims):
    """Squared dimensions sum to the centralizer order, trivial first"""
    reps = _catalog(group_name, element)
    assert [r.dim for r in reps] == dims
    assert reps[0].is_trivial
    assert all(r.is_irreducible() for r in reps)


def test_catalog_families(s3):
    """Family labels of the S3 and Z3 catalogs"""
    assert [r.family for r in _catalog("S3", "e")] == ["trivial", "sign_Sn", "standard2_S3"]
    assert [r.family for r in _catalog("S3", "(1 2 3)")] == ["trivial", "cyclic(3,1)", "cyclic(3,2)"]


def test_catalog_coverage():
    """S4 itself is outside the built-in families"""
    group = builtin_group("S4")
    with pytest.raises(CoverageError) as excinfo:
        irrep_catalog(centralizer(group, group.identity), ["e"])
    assert excinfo.value.centralizer_order == 24
    assert excinfo.value.exit_code == 3


def test_sign_representation(s3):
    """sign_Sn is -1 on transpositions and 1 on 3-cycles"""
    sign = builtin_irrep("sign_Sn", s3)
    assert sign(resolve_element(s3, "(1 2)"))[0, 0] == -1
    assert sign(resolve_element(s3, "(1 2 3)"))[0, 0] == 1


def test_cyclic_values(s3):
    """cyclic(3,1) sends the least generator to zeta_3"""
    cent = centralizer(s3, resolve_element(s3, "(1 2 3)"))
    rep = builtin_irrep("cyclic(3,1)", cent.group)
    values = sorted(format(rep(u)[0, 0]) for u in cent.group.elements())
    assert rep.conductor == 3
    assert len(set(values)) == 3
    assert sum((rep(u)[0, 0] for u in cent.group.elements()), CycNum.zero()) == 0


def test_standard_representation(s3):
    """The 2-dimensional irrep has character 2, 0, -1"""
    rep = builtin_irrep("standard2_S3", s3)
    chi = rep.character()
    assert chi[s3.identity] == 2
    assert chi[resolve_element(s3, "(1 2)")] == 0
    assert chi[resolve_element(s3, "(1 2 3)")] == -1


def test_reducible_rejected(s3):
    """The regular representation of Z2 is refused as an irrep"""
    cent = centralizer(s3, resolve_element(s3, "(1 2)"))
    swap = CycMatrix.from_rows([[0, 1], [1, 0]])
    with pytest.raises(InputError, match="reducible"):
        extend_from_generators(cent.group, {1: swap})
    rep = extend_from_generators(cent.group, {1: swap}, require_irreducible=False)
    assert rep.dim == 2


def test_not_a_homomorphism(s3):
    """Generator images that violate the relations are refused"""
    cent = centralizer(s3, resolve_element(s3, "(1 2)"))
    with pytest.raises(InputError):
        extend_from_generators(cent.group, {1: CycMatrix.from_rows([[2]])})


def test_representation_file(s3):
    """The data/ sign representation equals cyclic(2,1)"""
    cent = centralizer(s3, resolve_element(s3, "(1 2)"))
    rep = resolve_irrep(f"file:{os.path.join(DATA_DIR, 'z2_sign.json')}", cent)
    builtin = resolve_irrep("cyclic(2,1)", cent)
    assert rep.matrices == builtin.matrices
    assert rep.family == "file:z2_sign.json"


def test_representation_file_errors(s3):
    """Generators outside the centralizer and wrong shapes"""
    cent = centralizer(s3, resolve_element(s3, "(1 2)"))
    temp_dir = tempfile.mkdtemp()
    try:
        outside = os.path.join(temp_dir, "outside.json")
        with open(outside, 'w') as f:
            json.dump({"conductor": 2, "dim": 1, "generators": {"2": [["z"]]}}, f)
        with pytest.raises(InputError):
            load_representation(outside, cent)

        shape = os.path.join(temp_dir, "shape.json")
        with open(shape, 'w') as f:
            json.dump({"conductor": 2, "dim": 2, "generators": {"1": [["z"]]}}, f)
        with pytest.raises(InputError):
            load_representation(shape, cent)

        with pytest.raises(InputError):
            load_representation(os.path.join(temp_dir, "missing.json"), cent)
    finally:
        for name in os.listdir(temp_dir):
            os.remove(os.path.join(temp_dir, name))
        os.rmdir(temp_dir)


@pytest.mark.parametrize("group_name,element", [
    ("S3", "e"),
    ("S3", "(1 2 3)"),
    ("D4", "e"),
])
def test_central_idempotents(group_name, element):
    """e0 is idempotent, central and primitive; the trivial one has counit 1"""
    for rep in _catalog(group_name, element):
        e0 = central_idempotent(rep)
        assert e0.is_idempotent()
        assert e0.is_central()
        assert e0.ideal_dimension() == rep.dim ** 2
        assert e0.counit() == (1 if rep.is_trivial else 0)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
