"""
Forms in Omega^n = Lambda^n (x) D*(G), coefficients on the right, and the
differential d omega = (-1)^n omega ^ theta - theta ^ omega.
"""

from typing import Dict, Iterator, List, Optional, Tuple

from calculus import OneForm
from cyclo import CycNum, SparseMatrix
from double import DualDoubleElement
from double.elements import Key, basis_index, basis_key
from errors import GateFailure
from group import FiniteGroup
from utils.logger import logger
from utils.progress import progress

from .algebra import ExteriorData, decode, move_past

FormKey = Tuple[int, Key]


class Form:
    """sum c * lambda_k (x) s.delta_y over Lambda^n coordinates k."""

    def __init__(self, group: FiniteGroup, degree: int, terms: Optional[Dict[FormKey, CycNum]] = None):
        self.group = group
        self.degree = degree
        self.terms: Dict[FormKey, CycNum] = {}
        for key, v in (terms or {}).items():
            v = CycNum.coerce(v)
            if v:
                self.terms[key] = v

    @classmethod
    def zero(cls, group: FiniteGroup, degree: int) -> "Form":
        return cls(group, degree)

    @classmethod
    def basis(cls, group: FiniteGroup, degree: int, coord: int, coeff: Optional[DualDoubleElement] = None) -> "Form":
        coeff = coeff if coeff is not None else DualDoubleElement.unit(group)
        return cls(group, degree, {(coord, key): c for key, c in coeff.items()})

    @classmethod
    def from_one_form(cls, omega: OneForm) -> "Form":
        """Degree-1 form; Lambda^1 coordinates are the labels."""
        return cls(omega.group, 1, dict(omega.items()))

    def items(self) -> Iterator[Tuple[FormKey, CycNum]]:
        return iter(sorted(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def _combine(self, other: "Form", sign: int) -> "Form":
        if other.degree != self.degree:
            raise ValueError(f"Cannot add forms of degree {self.degree} and {other.degree}")
        out = dict(self.terms)
        for key, v in other.terms.items():
            term = v if sign > 0 else -v
            out[key] = out[key] + term if key in out else term
        return Form(self.group, self.degree, out)

    def __add__(self, other: "Form") -> "Form":
        return self._combine(other, 1)

    def __sub__(self, other: "Form") -> "Form":
        return self._combine(other, -1)

    def scale(self, factor) -> "Form":
        f = CycNum.coerce(factor)
        return Form(self.group, self.degree, {k: f * v for k, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def vector(self) -> Dict[int, CycNum]:
        """Coordinates in Omega^n with index k * |G|^2 + s * |G| + y."""
        n2 = self.group.order ** 2
        return {k * n2 + basis_index(self.group, key): v for (k, key), v in self.terms.items()}

    @classmethod
    def from_vector(cls, group: FiniteGroup, degree: int, vector: Dict[int, CycNum]) -> "Form":
        n2 = group.order ** 2
        terms = {}
        for index, v in vector.items():
            k, rest = divmod(index, n2)
            terms[(k, basis_key(group, rest))] = v
        return cls(group, degree, terms)

    def __repr__(self) -> str:
        return f"Form(degree={self.degree}, terms={len(self.terms)})"


def wedge(ext: ExteriorData, omega: Form, eta: Form) -> Form:
    """
    (lambda (x) a) ^ (mu (x) b): move a past the lifted tensor of mu, multiply
    the coefficients in D*(G) and project the concatenated tensor to Lambda^{p+q}.
    """
    calc, group = ext.calc, ext.calc.group
    p, q = omega.degree, eta.degree
    target = ext.degree(p + q)
    left, right = ext.degree(p), ext.degree(q)
    shift = ext.dim ** q
    acc: Dict[Tuple[int, Key], CycNum] = {}
    for (k1, key), c1 in omega.items():
        head = left.lift(k1) * shift
        for (k2, (t, x)), c2 in eta.items():
            for labels, v, (s2, y2) in move_past(calc, key, decode(right.lift(k2), q, ext.dim)):
                if y2 != x:
                    continue
                tail = 0
                for lab in labels:
                    tail = tail * ext.dim + lab
                slot = (head + tail, (group.mul(s2, t), x))
                w = c1 * c2 * v
                acc[slot] = acc[slot] + w if slot in acc else w
    out: Dict[FormKey, CycNum] = {}
    for (index, key), v in acc.items():
        for k, pv in target.projection.get(index, {}).items():
            fk = (k, key)
            out[fk] = out[fk] + pv * v if fk in out else pv * v
    return Form(group, p + q, out)


def theta(ext: ExteriorData) -> Form:
    """theta = sum_alpha e_alpha^alpha as a degree-1 form."""
    return Form.from_one_form(ext.calc.theta)


def d_form(ext: ExteriorData, omega: Form, theta_form: Optional[Form] = None) -> Form:
    """d omega = (-1)^n omega ^ theta - theta ^ omega."""
    th = theta_form if theta_form is not None else theta(ext)
    right = wedge(ext, omega, th)
    if omega.degree % 2:
        right = right.scale(-1)
    return right - wedge(ext, th, omega)


def wedge_and_d(ext: ExteriorData, omega: Form, eta: Optional[Form] = None) -> Form:
    """omega ^ eta, or d omega when no second form is given."""
    if eta is None:
        return d_form(ext, omega)
    return wedge(ext, omega, eta)


def omega_dim(ext: ExteriorData, n: int) -> int:
    return ext.degree(n).dim * ext.calc.group.order ** 2


def d_matrix(ext: ExteriorData, n: int) -> SparseMatrix:
    """d: Omega^n -> Omega^{n+1} as a sparse matrix on the vector() coordinates."""
    group = ext.calc.group
    th = theta(ext)
    n2 = group.order ** 2
    rows = omega_dim(ext, n + 1)
    columns: List[Dict[int, CycNum]] = []
    for index in progress(range(omega_dim(ext, n)), desc=f"d_{n}"):
        k, rest = divmod(index, n2)
        s, y = basis_key(group, rest)
        omega = Form(group, n, {(k, (s, y)): CycNum.one()})
        columns.append(d_form(ext, omega, th).vector())
    matrix = SparseMatrix.from_columns(rows, columns)
    logger.debug(f"d_{n}: {rows}x{len(columns)}, {matrix.nnz()} nonzero entries")
    return matrix


def check_d0(ext: ExteriorData, d0: Optional[SparseMatrix] = None) -> None:
    """The graded commutator in degree 0 reproduces the first-order d."""
    calc, group = ext.calc, ext.calc.group
    d0 = d0 if d0 is not None else d_matrix(ext, 0)
    cols = d0.column_map()
    for (s, y), form in sorted(calc.d_gen.items()):
        expected = Form.from_one_form(form).vector()
        got = cols.get(basis_index(group, (s, y)), {})
        if got != expected:
            raise GateFailure("d0_agrees", "degree-0 d differs from the first-order differential", {"s": s, "y": y})
    calc.gates["d0_agrees"] = "pass"


def check_dd_zero(ext: ExteriorData, matrices: List[SparseMatrix]) -> None:
    """d_{k+1} d_k = 0 for consecutive pairs of the given d matrices."""
    for k in range(len(matrices) - 1):
        product = matrices[k + 1] @ matrices[k]
        if not product.is_zero():
            row, row_data = min(product.data.items())
            col = min(row_data)
            logger.error(f"d^2 != 0 from degree {k}")
            raise GateFailure(
                "dd_zero",
                f"d_{k + 1} d_{k} != 0; theta ^ theta is not graded-central for this calculus",
                {"degree": k, "row": row, "col": col, "value": str(row_data[col])},
            )
    ext.calc.gates["dd_zero"] = "pass"
