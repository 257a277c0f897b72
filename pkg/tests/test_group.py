"""
Tests for finite groups, conjugacy classes, centralizers, sections and the cocycle
"""
import logging
import pytest
import sys
import os
import json
import tempfile

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from errors import InputError, ResourceBound
from group import (
    FiniteGroup,
    builtin_group,
    centralizer,
    check_cocycle_identity,
    class_of,
    cocycle_table,
    conjugacy_classes,
    default_section,
    group_from_generators,
    load_group,
    load_section,
    parse_cycles,
    resolve_class,
    resolve_element,
)
from utils.logger import logger as qdc_logger

DATA_DIR = os.path.join(os.path.dirname(__file__), '..', 'data')

# Element indices of S3 generated by (12), (23)
E, U, V, UV, VU, W = range(6)

# A Latin square with identity 0 that is not associative: (1*1)*2 != 1*(1*2)
LOOP_TABLE = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


@pytest.fixture(scope="module")
def s3():
    return builtin_group("S3")


@pytest.fixture
def temp_json():
    """Write JSON to a temporary file and clean up afterwards"""
    paths = []

    def write(data):
        fd, path = tempfile.mkstemp(suffix=".json")
        with os.fdopen(fd, 'w') as f:
            json.dump(data, f)
        paths.append(path)
        return path

    yield write
    for path in paths:
        os.remove(path)


def test_s3_element_order(s3):
    """BFS closure numbers elements e, (12), (23), (12)(23), (23)(12), (13)"""
    assert s3.order == 6
    assert [s3.name(a) for a in s3.elements()] == ["e", "(1 2)", "(2 3)", "(1 2 3)", "(1 3 2)", "(1 3)"]
    assert s3.mul(U, V) == UV
    assert s3.mul(V, U) == VU
    assert s3.product(U, V, U) == W
    assert s3.inv(UV) == VU
    assert not s3.is_abelian()


def test_s3_classes(s3):
    """Classes sorted by size then least index, based at the least index"""
    classes = conjugacy_classes(s3)
    assert [c.elements for c in classes] == [(E,), (UV, VU), (U, V, W)]
    assert [c.basepoint for c in classes] == [E, UV, U]
    assert class_of(s3, W).elements == (U, V, W)


def test_s3_centralizers(s3):
    """Centralizer orders 6, 3, 2"""
    assert centralizer(s3, E).order == 6
    assert centralizer(s3, UV).order == 3
    cent = centralizer(s3, U)
    assert cent.order == 2
    assert cent.contains(U) and not cent.contains(V)
    assert cent.to_parent(cent.from_parent(U)) == U


def test_builtin_groups():
    """Orders of the built-in families"""
    assert builtin_group("S4").order == 24
    assert builtin_group("Z5").order == 5
    assert builtin_group("Z5").is_abelian()
    assert builtin_group("D4").order == 8
    assert builtin_group("d5").order == 10
    with pytest.raises(InputError):
        builtin_group("A5")
    with pytest.raises(InputError):
        builtin_group("D2")


def test_class_counts():
    """Number of conjugacy classes"""
    assert len(conjugacy_classes(builtin_group("S4"))) == 5
    assert len(conjugacy_classes(builtin_group("D4"))) == 5
    assert len(conjugacy_classes(builtin_group("Z6"))) == 6


def test_parse_cycles():
    """Spaced, comma and compact notation"""
    assert parse_cycles("(1 2)", 3) == (1, 0, 2)
    assert parse_cycles("(1,2)", 3) == (1, 0, 2)
    assert parse_cycles("(12)", 3) == (1, 0, 2)
    assert parse_cycles("(1 2)(3 4)", 4) == (1, 0, 3, 2)
    assert parse_cycles("e", 3) == (0, 1, 2)
    with pytest.raises(InputError):
        parse_cycles("(1 4)", 3)
    with pytest.raises(InputError):
        parse_cycles("1 2", 3)


def test_resolve_element(s3):
    """Index, identity, display name and cycle notation"""
    assert resolve_element(s3, "3") == UV
    assert resolve_element(s3, "e") == E
    assert resolve_element(s3, "(1 3)") == W
    assert resolve_element(s3, "(13)") == W
    assert resolve_class(s3, "(2 3)").elements == (U, V, W)
    with pytest.raises(InputError):
        resolve_element(s3, "17")
    with pytest.raises(InputError):
        resolve_element(s3, "x")


def test_closure_bound():
    """Generator closure stops at the configured bound"""
    with pytest.raises(ResourceBound):
        group_from_generators(4, [[[1, 2]], [[1, 2, 3, 4]]], max_order=10)


def test_load_group_bound():
    """Groups above the order bound are refused"""
    with pytest.raises(ResourceBound):
        load_group("S4", max_order=12)


def test_table_group(temp_json):
    """A Cayley table file gives a group with its names"""
    path = temp_json({"order": 2, "table": [[0, 1], [1, 0]], "names": ["1", "g"]})
    group = load_group(f"file:{path}")
    assert group.order == 2
    assert group.name(1) == "g"
    assert resolve_element(group, "g") == 1


def test_generator_group_file(temp_json):
    """A generator file gives the same closure as the built-in group"""
    path = temp_json({"degree": 3, "generators": [[[1, 2]], [[2, 3]]]})
    group = load_group(f"file:{path}")
    assert group.table == builtin_group("S3").table


def test_non_associative_table():
    """A loop that is not a group is rejected"""
    with pytest.raises(InputError, match="associative"):
        FiniteGroup.from_table(LOOP_TABLE)


def test_bad_tables(temp_json):
    """Non-Latin tables, missing files and bad JSON"""
    with pytest.raises(InputError):
        FiniteGroup.from_table([[0, 1], [0, 1]])
    with pytest.raises(InputError):
        FiniteGroup.from_table([[0, 1], [1, 0], [0, 0]])
    with pytest.raises(InputError):
        load_group("file:/nonexistent/group.json")
    path = temp_json({"order": 3, "table": [[0, 1], [1, 0]]})
    with pytest.raises(InputError):
        load_group(f"file:{path}")


def test_default_section(s3):
    """Least-index conjugating elements"""
    section = default_section(s3, resolve_class(s3, "(1 2)"))
    assert section.basepoint == U
    assert section.as_dict() == {U: E, V: UV, W: V}
    check_cocycle_identity(section)


def test_section_file(s3):
    """The section shipped in data/ sends v to w and w to v"""
    section = load_section(os.path.join(DATA_DIR, 's3_transposition_section.json'), s3)
    assert section.basepoint == U
    assert section.as_dict() == {U: E, V: W, W: V}
    check_cocycle_identity(section)


class RecordCollector(logging.Handler):
    def __init__(self):
        super().__init__(logging.DEBUG)
        self.records = []

    def emit(self, record):
        self.records.append(record)


def test_section_override_logged_at_info(s3):
    """A valid non-default section is reported at INFO, never as a warning"""
    collector = RecordCollector()
    previous = qdc_logger.level
    qdc_logger.addHandler(collector)
    qdc_logger.setLevel(logging.DEBUG)
    try:
        load_section(os.path.join(DATA_DIR, 's3_transposition_section.json'), s3)
    finally:
        qdc_logger.removeHandler(collector)
        qdc_logger.setLevel(previous)
    overrides = [r for r in collector.records if "differs from the default section" in r.getMessage()]
    assert [r.levelno for r in overrides] == [logging.INFO]
    assert not [r for r in collector.records if r.levelno >= logging.WARNING]


def test_bad_section(s3, temp_json):
    """A section entry that does not conjugate the basepoint is refused"""
    path = temp_json({"basepoint": 1, "section": {"2": "2"}})
    with pytest.raises(InputError):
        load_section(path, s3)
    path = temp_json({"basepoint": 1, "section": {"3": "0"}})
    with pytest.raises(InputError):
        load_section(path, s3)


def test_cocycle_table_s3(s3):
    """
    zeta_a(x) for the data/ section: u where the table has q, e where it has 1.
    Columns in element order e, u, v, uv, vu, w.
    """
    section = load_section(os.path.join(DATA_DIR, 's3_transposition_section.json'), s3)
    table = cocycle_table(section)
    expected = {
        U: [0, 1, 0, 1, 1, 0],
        V: [0, 1, 1, 0, 1, 0],
        W: [0, 1, 0, 1, 0, 1],
    }
    for a, row in expected.items():
        assert [table[(a, x)] for x in s3.elements()] == [U if q else E for q in row]


def test_cocycle_identity_all_classes():
    """zeta_a(uv) = zeta_{vav^-1}(u) zeta_a(v) for every class of S4 and D4"""
    for name in ("S4", "D4"):
        group = builtin_group(name)
        for cls in conjugacy_classes(group):
            check_cocycle_identity(default_section(group, cls))


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
