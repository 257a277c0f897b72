"""
Tests for the braiding, antisymmetrizers, Lambda^n, relations, forms and cohomology
"""
import itertools
import pytest
import sys
import os

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from calculus import build_calculus
from cyclo import CycMatrix, CycNum, RowReducer, SparseMatrix
from double import DualDoubleElement, Sector
from errors import GateFailure, ResourceBound
from exterior import (
    Form,
    braid_explicit,
    braid_from_r,
    braiding,
    build_exterior,
    check_bimodule_stability,
    check_dd_zero,
    check_reduced_word_independence,
    classical_dims,
    cohomology,
    d_form,
    d_matrix,
    encode,
    decode,
    hilbert_probe,
    is_exact,
    is_relation,
    quadratic_dims,
    reduced_word,
    reduced_words,
    tensor_from_labels,
    theta,
    wedge,
    wedge_and_d,
)
from exterior.antisymmetrizer import check_size
from group import builtin_group, centralizer, default_section, load_section, resolve_class
from rep import builtin_irrep

DATA_DIR = os.path.join(os.path.dirname(__file__), '..', 'data')

E, U, V, UV, VU, W = range(6)


def make_calculus(group, selector, family, section_file=None):
    if section_file:
        section = load_section(os.path.join(DATA_DIR, section_file), group)
    else:
        section = default_section(group, resolve_class(group, selector))
    cent = centralizer(group, section.basepoint)
    return build_calculus(Sector(group, section, builtin_irrep(family, cent.group), cent))


@pytest.fixture(scope="module")
def s3():
    return builtin_group("S3")


@pytest.fixture(scope="module", params=["trivial", "cyclic(2,1)"], ids=["q=1", "q=-1"])
def ext9(request, s3):
    """Lambda^0..3 of the 9-dimensional calculus for both values of q"""
    calc = make_calculus(s3, "(1 2)", request.param, 's3_transposition_section.json')
    return build_exterior(calc, braiding(calc), 3)


@pytest.fixture(scope="module")
def ext_q1(s3):
    """Lambda^0..2 of the 9-dimensional calculus with the trivial irrep"""
    calc = make_calculus(s3, "(1 2)", "trivial", 's3_transposition_section.json')
    return build_exterior(calc, braiding(calc), 2)


@pytest.fixture(scope="module")
def ext_qm1(s3):
    """Lambda^0..2 of the 9-dimensional calculus with the sign of Z2"""
    calc = make_calculus(s3, "(1 2)", "cyclic(2,1)", 's3_transposition_section.json')
    return build_exterior(calc, braiding(calc), 2)


@pytest.fixture(scope="module")
def ext_line(s3):
    """Lambda of the 1-dimensional calculus from the trivial class and the sign"""
    calc = make_calculus(s3, "e", "sign_Sn")
    return build_exterior(calc, braiding(calc), 4)


def labels_of(ext):
    """e(a, b) -> label of e_a^b for a calculus with dim V = 1"""
    calc, sector = ext.calc, ext.calc.sector
    return lambda a, b: calc.label(sector.pos(a), sector.pos(b))


# Reduced words

def test_reduced_words_longest_element():
    """Both bubble-sort schedules give reduced words of the longest element"""
    assert reduced_word((2, 1, 0), "left") == (0, 1, 0)
    assert reduced_word((2, 1, 0), "right") == (1, 0, 1)
    assert reduced_word((0, 1, 2)) == ()


def test_reduced_word_lengths():
    """Word length is the number of inversions; signs sum to zero"""
    words = reduced_words(4)
    assert len(words) == 24
    assert sum(sign for sign, _ in words) == 0
    assert max(len(word) for _, word in words) == 6


def test_size_bound():
    """dim^n above the bound raises ResourceBound"""
    check_size(9, 3, bound=729)
    with pytest.raises(ResourceBound):
        check_size(9, 4, bound=729)


def test_word_coding():
    """encode and decode are inverse on label words"""
    assert encode((1, 2), 9) == 11
    assert decode(11, 2, 9) == (1, 2)
    assert decode(0, 0, 9) == ()


# Braiding

def test_braid_gates(ext9):
    """Explicit Psi equals the R-matrix contraction, is invertible and braids"""
    gates = ext9.calc.gates
    for gate in ("braid_oracle", "braid_invertible", "braid_relation", "theta_braiding"):
        assert gates[gate] == "pass"
    assert braid_explicit(ext9.calc) == braid_from_r(ext9.calc)


def test_braid_not_involutive(ext9):
    """Psi^2 != id for the transposition calculus"""
    psi = ext9.braid.matrix
    assert psi @ psi != SparseMatrix.identity(81)


def test_braid_on_diagonal_forms(ext9):
    """Psi(e_a (x) e_c) = e_c (x) e_{c^-1 a c} with no scalar"""
    s3 = ext9.calc.group
    e = labels_of(ext9)
    braid = ext9.braid
    for a in (U, V, W):
        for c in (U, V, W):
            b = s3.conj(s3.inv(c), a)
            image = braid.matrix.apply({braid.pair(e(a, a), e(c, c)): CycNum.one()})
            assert image == {braid.pair(e(c, c), e(b, b)): CycNum.one()}


def test_reduced_word_independence(ext_q1):
    """A_3 is the same for both reduced-word schedules"""
    check_reduced_word_independence(ext_q1.braid)


def test_line_braiding(ext_line):
    """The 1-dimensional calculus has Psi = 1"""
    assert ext_line.braid.matrix.to_dense() == CycMatrix.from_rows([[1]])


# Lambda^n

def test_lambda_dims(ext9):
    """dim Lambda^n = 1, 9, 48, 198"""
    assert ext9.lambda_dims() == [1, 9, 48, 198]


def test_relation_count(ext9):
    """ker A_2 has dimension 81 - 48 = 33"""
    assert len(ext9.relations()) == 33


def test_line_lambda_dims(ext_line):
    """Lambda^n = 0 for n >= 2 when Psi = 1"""
    assert ext_line.lambda_dims() == [1, 1, 0, 0, 0]


def test_degree_above_n_max(ext_q1):
    """Asking for an uncomputed degree reports the dimensions so far"""
    with pytest.raises(ResourceBound) as excinfo:
        ext_q1.degree(3)
    assert excinfo.value.partial["lambda_dims"] == [1, 9, 48]


def test_build_exterior_bound(ext_q1):
    """A size bound stops the build with partial dimensions"""
    with pytest.raises(ResourceBound) as excinfo:
        build_exterior(ext_q1.calc, ext_q1.braid, 3, bound=100)
    assert excinfo.value.partial["lambda_dims"] == [1, 9, 48]
    assert excinfo.value.exit_code == 5


def test_diagonal_relations(ext9):
    """e_u e_v + e_v e_w + e_w e_u = 0 and e_a e_a = 0 for either q"""
    e = labels_of(ext9)
    cyclic = tensor_from_labels(ext9, {
        (e(U, U), e(V, V)): 1,
        (e(V, V), e(W, W)): 1,
        (e(W, W), e(U, U)): 1,
    })
    assert is_relation(ext9, cyclic)
    for a in (U, V, W):
        assert is_relation(ext9, tensor_from_labels(ext9, {(e(a, a), e(a, a)): 1}))
    assert not is_relation(ext9, tensor_from_labels(ext9, {(e(U, U), e(V, V)): 1}))


def reversed_terms(terms):
    return {(l2, l1): c for (l1, l2), c in terms.items()}


def degree_two_relations(ext, s3):
    """The quadratic relations of the transposition calculus with the trivial irrep"""
    e = labels_of(ext)
    letters = (U, V, W)
    families = {}
    # e_a^b ^ e_{aba^-1}^b = 0
    families["conjugate_pairs"] = [
        {(e(a, b), e(s3.conj(a, b), b)): 1} for a in letters for b in letters
    ]
    # (e_{aba^-1}^a)^2 + {e_a^a, e_b^a} = 0; a = b is e_a ^ e_a again
    families["brackets"] = [
        {(e(s3.conj(a, b), a), e(s3.conj(a, b), a)): 1, (e(a, a), e(b, a)): 1, (e(b, a), e(a, a)): 1}
        for a in letters for b in letters if a != b
    ]
    diagonal = {(e(U, U), e(V, V)): 1, (e(V, V), e(W, W)): 1, (e(W, W), e(U, U)): 1}
    families["diagonal_cycle"] = [diagonal, reversed_terms(diagonal)]
    swaps = {(e(U, V), e(V, U)): 1, (e(V, W), e(W, V)): 1, (e(W, U), e(U, W)): 1}
    shared = {(e(U, V), e(U, W)): 1, (e(V, W), e(V, U)): 1, (e(W, U), e(W, V)): 1}
    families["off_diagonal_cycles"] = [swaps, reversed_terms(swaps), shared, reversed_terms(shared)]
    mixed = []
    for u, v, w in itertools.permutations(letters):
        terms = {(e(u, u), e(u, w)): 1, (e(u, w), e(v, v)): 1, (e(u, v), e(w, u)): 1}
        mixed.extend([terms, reversed_terms(terms)])
    families["mixed"] = mixed
    return families


def test_off_diagonal_relations(ext_q1, s3):
    """Every listed quadratic relation lies in ker A_2"""
    for name, family in degree_two_relations(ext_q1, s3).items():
        for terms in family:
            assert is_relation(ext_q1, tensor_from_labels(ext_q1, terms)), (name, terms)


def test_relations_span_kernel(ext_q1, s3):
    """The listed relations are 33 independent vectors, so they span ker A_2"""
    families = degree_two_relations(ext_q1, s3)
    assert [len(f) for f in families.values()] == [9, 6, 2, 4, 12]
    reducer = RowReducer()
    for family in families.values():
        for terms in family:
            reducer.add(tensor_from_labels(ext_q1, terms))
    assert reducer.rank == 33 == len(ext_q1.relations())
    for vec in ext_q1.relations():
        assert reducer.contains(vec)


def test_bimodule_stability(ext_q1):
    """Left multiplication preserves the relations"""
    assert check_bimodule_stability(ext_q1) == 36 * 33


def test_section_independence(s3):
    """Another section gives the same dimensions"""
    calc = make_calculus(s3, "(1 2)", "cyclic(2,1)")
    ext = build_exterior(calc, braiding(calc), 2)
    assert ext.lambda_dims() == [1, 9, 48]
    assert len(ext.relations()) == 33


def test_quadratic_dims(ext_q1):
    """The quadratic algebra agrees with Lambda up to degree 2"""
    result = quadratic_dims(ext_q1, n_max=2)
    assert result["quadratic_dims"] == [1, 9, 48]
    assert result["matches_lambda"] is True


def test_classical_dims(ext9):
    """The diagonal forms generate dimensions 1, 3, 4, 3, 1"""
    assert classical_dims(ext9) == [1, 3, 4, 3, 1]


def test_line_classical_dims(ext_line):
    assert classical_dims(ext_line) == [1, 1]


def test_hilbert_probe():
    """Palindromic dimensions up to the first zero"""
    assert hilbert_probe([1, 3, 4, 3, 1, 0]) == {"top_degree": 4, "symmetric": True}
    assert hilbert_probe([1, 1, 0, 0]) == {"top_degree": 1, "symmetric": True}
    assert hilbert_probe([1, 3, 2, 0]) == {"top_degree": 2, "symmetric": False}
    assert hilbert_probe([1, 9, 48, 198]) == {"top_degree": None, "symmetric": None}


# Forms and d

def test_wedge_of_basis_forms(ext_q1, s3):
    """(e_u (x) 1) ^ (e_v (x) delta_y) = (e_u ^ e_v) (x) delta_y"""
    e = labels_of(ext_q1)
    lu, lv = e(U, U), e(V, W)
    for y in s3.elements():
        omega = Form.basis(s3, 1, lu)
        eta = Form.basis(s3, 1, lv, DualDoubleElement.delta(s3, y))
        projected = ext_q1.degree(2).project({encode((lu, lv), 9): CycNum.one()})
        expected = Form(s3, 2, {(k, (E, y)): c for k, c in projected.items()})
        assert wedge(ext_q1, omega, eta) == expected


def test_square_of_diagonal_form(ext_q1, s3):
    """e_a ^ e_a = 0"""
    e = labels_of(ext_q1)
    for a in (U, V, W):
        omega = Form.basis(s3, 1, e(a, a))
        assert wedge(ext_q1, omega, omega).is_zero()


def test_d_of_unit_and_theta(ext_q1, s3):
    """d 1 = 0 and d theta = 0"""
    assert d_form(ext_q1, Form.basis(s3, 0, 0)).is_zero()
    assert d_form(ext_q1, theta(ext_q1)).is_zero()


def test_wedge_and_d_dispatch(ext_q1, s3):
    """One entry point for the product and the differential"""
    e = labels_of(ext_q1)
    omega = Form.basis(s3, 1, e(U, U))
    eta = Form.basis(s3, 1, e(V, V))
    assert wedge_and_d(ext_q1, omega, eta) == wedge(ext_q1, omega, eta)
    assert wedge_and_d(ext_q1, omega) == d_form(ext_q1, omega)


def test_d_squared(ext_q1):
    """d_1 d_0 = 0"""
    matrices = [d_matrix(ext_q1, 0), d_matrix(ext_q1, 1)]
    check_dd_zero(ext_q1, matrices)
    assert ext_q1.calc.gates["dd_zero"] == "pass"


def test_d_squared_degree_two(ext9):
    """d_2 d_1 = 0 on Omega^1 of the 9-dimensional calculus"""
    matrices = [d_matrix(ext9, k) for k in range(3)]
    assert [m.cols for m in matrices] == [36, 9 * 36, 48 * 36]
    assert matrices[2].rows == 198 * 36
    check_dd_zero(ext9, matrices)
    assert ext9.calc.gates["dd_zero"] == "pass"


def test_dd_gate_reports_failure(ext_q1):
    """A nonzero product is reported with its position"""
    d0 = d_matrix(ext_q1, 0)
    with pytest.raises(GateFailure) as excinfo:
        check_dd_zero(ext_q1, [d0, SparseMatrix.identity(d0.rows)])
    assert excinfo.value.gate == "dd_zero"


# Cohomology

@pytest.mark.parametrize("name", ["ext_q1", "ext_qm1"], ids=["q=1", "q=-1"])
def test_cohomology_transposition_calculus(request, name, s3):
    """H^0 is spanned by 1 and H^1 by theta for either q"""
    ext = request.getfixturevalue(name)
    coh = cohomology(ext, 1)
    assert coh.betti == [1, 1]
    assert coh.field_conductor == 1
    assert coh.representatives[0] == [Form.basis(s3, 0, 0)]
    assert len(coh.representatives[1]) == 1
    assert coh.theta_class is True
    assert ext.calc.gates["d0_agrees"] == "pass"


def test_theta_not_exact(ext_q1):
    assert not is_exact(d_matrix(ext_q1, 0), theta(ext_q1))


def test_cohomology_line_calculus(ext_line):
    """Both Betti numbers are 18 for the 1-dimensional calculus"""
    coh = cohomology(ext_line, 1)
    assert coh.betti == [18, 18]
    assert coh.ranks[0] == 18


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
