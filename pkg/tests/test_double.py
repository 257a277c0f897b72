"""
Tests for D(G), D*(G), the representation rho on blocks and the block decomposition
"""
import inspect
import pytest
import sys
import os
from fractions import Fraction

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from cyclo import SparseMatrix
import double
from double import operations
from double import (
    DoubleElement,
    DualDoubleElement,
    Sector,
    check_antipode_axiom,
    check_rho_homomorphism,
    central_projector,
    check_yang_baxter,
    dg_antipode,
    dg_multiply,
    dstar_antipode,
    dstar_coproduct,
    dstar_counit,
    dstar_multiply,
    dstar_ops,
    enumerate_blocks,
    pairing,
    r_matrix,
    rho_matrix,
    universal_r_inverse,
)
from errors import CoverageError, GateFailure
from group import builtin_group, centralizer, load_section
from rep import builtin_irrep

DATA_DIR = os.path.join(os.path.dirname(__file__), '..', 'data')

E, U, V, UV, VU, W = range(6)


@pytest.fixture(scope="module")
def s3():
    return builtin_group("S3")


@pytest.fixture(scope="module")
def sign_sector(s3):
    """Transpositions with the data/ section and the sign of Z2"""
    section = load_section(os.path.join(DATA_DIR, 's3_transposition_section.json'), s3)
    cent = centralizer(s3, section.basepoint)
    return Sector(s3, section, builtin_irrep("cyclic(2,1)", cent.group), cent)


def test_dual_multiplication(s3):
    """(s.delta_u)(t.delta_v) = [u = v] st.delta_u and the unit"""
    x = DualDoubleElement.basis(s3, U, V)
    y = DualDoubleElement.basis(s3, V, V)
    assert dstar_multiply(x, y) == DualDoubleElement.basis(s3, UV, V)
    assert dstar_multiply(x, DualDoubleElement.basis(s3, V, W)).is_zero()
    unit = DualDoubleElement.unit(s3)
    assert unit * x == x
    assert x * unit == x


def test_dual_coproduct_counit(s3):
    """(epsilon x id) Delta = id on a basis element"""
    x = DualDoubleElement.basis(s3, U, UV)
    acc = DualDoubleElement.zero(s3)
    for (k1, k2), c in dstar_coproduct(x).items():
        acc = acc + DualDoubleElement.basis(s3, *k2).scale(c * dstar_counit(DualDoubleElement.basis(s3, *k1)))
    assert acc == x


def test_dual_antipode_involutive(s3):
    """S^2 = id on D*(G) and the antipode axiom holds"""
    for s in s3.elements():
        for u in s3.elements():
            x = DualDoubleElement.basis(s3, s, u)
            assert dstar_antipode(dstar_antipode(x)) == x
    check_antipode_axiom(s3)


def test_double_multiplication(s3):
    """(delta_s u)(delta_t v) = [s = utu^-1] delta_s uv"""
    x = DoubleElement.basis(s3, W, U)
    y = DoubleElement.basis(s3, V, U)
    assert dg_multiply(x, y) == DoubleElement.basis(s3, W, E)
    assert (DoubleElement.basis(s3, V, U) * DoubleElement.basis(s3, V, U)).is_zero()
    unit = DoubleElement.unit(s3)
    assert unit * x == x


def test_pairing_and_antipodes(s3):
    """<S h, a> = <h, S a> and the pairing is the Kronecker delta on keys"""
    h = DoubleElement.basis(s3, UV, U)
    assert pairing(h, DualDoubleElement.basis(s3, UV, U)) == 1
    assert pairing(h, DualDoubleElement.basis(s3, U, UV)) == 0
    for s in s3.elements():
        for u in s3.elements():
            a = DualDoubleElement.basis(s3, s, u)
            assert pairing(dg_antipode(h), a) == pairing(h, dstar_antipode(a))


def test_dstar_ops_dispatch(s3):
    """Named structure maps"""
    x = DualDoubleElement.basis(s3, U, E)
    assert dstar_ops("counit", x) == 1
    assert dstar_ops("antipode", x) == dstar_antipode(x)
    y = DualDoubleElement.basis(s3, V, U)
    assert dstar_ops("multiply", x, y) == dstar_multiply(x, y)
    assert dstar_ops("coproduct", y) == dstar_coproduct(y)
    h = DoubleElement.basis(s3, U, V)
    assert dstar_ops("pairing", h, y) == pairing(h, y)
    with pytest.raises(ValueError):
        dstar_ops("transpose", x)



def test_operations_are_exported():
    """Every public structure map of D(G) and D*(G) is part of the package surface"""
    public = {
        name for name, obj in vars(operations).items()
        if inspect.isfunction(obj) and obj.__module__ == operations.__name__ and not name.startswith("_")
    }
    assert public == public & set(double.__all__)
    assert "dstar_ops" in public


def test_s3_blocks(s3):
    """8 blocks with dimensions 1,1,4,4,4,4,9,9, exactly one trivial"""
    blocks = enumerate_blocks(s3)
    assert len(blocks) == 8
    assert sorted(b.dim for b in blocks) == [1, 1, 4, 4, 4, 4, 9, 9]
    assert sum(b.trivial for b in blocks) == 1
    trivial = next(b for b in blocks if b.trivial)
    assert trivial.counit() == 1
    assert all(b.counit() == 0 for b in blocks if not b.trivial)


def test_three_cycle_projector(s3):
    """delta_uv (x) (e + uv + vu)/3 + delta_vu (x) (e + uv + vu)/3"""
    block = next(b for b in enumerate_blocks(s3) if b.conj_class.size == 2 and b.rep.is_trivial)
    expected = DoubleElement.zero(s3)
    for s in (UV, VU):
        for x in (E, UV, VU):
            expected = expected + DoubleElement.basis(s3, s, x, Fraction(1, 3))
    assert block.projector == expected
    assert central_projector(block.sector).projector == expected


def test_blocks_orthogonal_and_complete(s3):
    """Projectors multiply to zero pairwise and sum to the unit"""
    blocks = enumerate_blocks(s3)
    total = DoubleElement.zero(s3)
    for i, b in enumerate(blocks):
        total = total + b.projector
        for c in blocks[i + 1:]:
            assert (b.projector * c.projector).is_zero()
    assert total == DoubleElement.unit(s3)


def test_block_report(s3):
    """Report fields of the transposition block with the trivial irrep"""
    block = next(b for b in enumerate_blocks(s3) if b.conj_class.size == 3 and b.rep.is_trivial)
    report = block.report()
    assert report["class_elements"] == ["(1 2)", "(2 3)", "(1 3)"]
    assert report["centralizer_order"] == 2
    assert report["calculus_dim"] == 9
    assert report["canonical"] is True
    assert report["trivial"] is False


def test_abelian_blocks():
    """Z2 has four one-dimensional blocks"""
    blocks = enumerate_blocks(builtin_group("Z2"))
    assert [b.dim for b in blocks] == [1, 1, 1, 1]


def test_uncovered_centralizer():
    """S4 needs a representation file for its own irreps"""
    with pytest.raises(CoverageError):
        enumerate_blocks(builtin_group("S4"))


def test_rho_on_functions(s3, sign_sector):
    """rho(delta_a) is the projector onto e_a"""
    for a in sign_sector.elements:
        m = rho_matrix(sign_sector, DoubleElement.delta(s3, a))
        p = sign_sector.pos(a)
        for i in range(3):
            for j in range(3):
                assert m[i, j] == (1 if i == j == p else 0)


def test_rho_group_like(s3, sign_sector):
    """rho(u) e_a = q e_{uau^-1} with q = -1 for every transposition a"""
    m = rho_matrix(sign_sector, DoubleElement.group_like(s3, U))
    for a in sign_sector.elements:
        row, col = sign_sector.pos(s3.conj(U, a)), sign_sector.pos(a)
        assert m[row, col] == -1


def test_rho_homomorphism_and_yang_baxter(sign_sector):
    """rho is a representation and (rho x rho)(R) satisfies Yang-Baxter"""
    check_rho_homomorphism(sign_sector)
    check_yang_baxter(sign_sector)


def test_r_matrix_inverse(s3, sign_sector):
    """(rho x rho)(R) times (rho x rho)(R^-1) is the identity"""
    r = r_matrix(sign_sector)
    r_inv = r_matrix(sign_sector, universal_r_inverse(s3))
    assert r @ r_inv == SparseMatrix.identity(9)


def test_broken_cocycle_detected(s3, sign_sector):
    """Changing one cocycle value breaks multiplicativity of rho"""
    values = dict(sign_sector.zeta_values)
    values[(U, U)] = E
    broken = sign_sector.with_zeta_values(values)
    with pytest.raises(GateFailure) as excinfo:
        check_rho_homomorphism(broken)
    assert excinfo.value.gate == "rho_homomorphism"


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
