from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence, Tuple, Union

from .polys import (
    descend,
    embed_coeffs,
    phi,
    power_vector,
    proper_subconductors,
    reduce_cyclotomic,
)

Scalar = Union[int, Fraction, "CycNum"]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _normalize(n: int, coeffs: Tuple[Fraction, ...]) -> Tuple[int, Tuple[Fraction, ...]]:
    """Smallest conductor whose field contains the element, with its coefficients."""
    if n <= 2 or not any(coeffs[1:]):
        return 1, (coeffs[0] if coeffs else Fraction(0),)
    for d in proper_subconductors(n):
        lowered = descend(d, n, coeffs)
        if lowered is not None:
            return d, lowered
    return n, coeffs


class CycNum:
    """
    An element of the cyclotomic field Q(zeta_N) in canonical form: the
    conductor is minimal and the coefficients are in the power basis
    1, zeta_N, ..., zeta_N^(phi(N)-1).
    """

    __slots__ = ("_conductor", "_coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: Iterable = (0,)):
        if conductor < 1:
            raise ValueError(f"Conductor must be positive, got {conductor}")
        raw = [Fraction(c) for c in coeffs]
        if len(raw) == phi(conductor):
            reduced = tuple(raw)
        else:
            reduced = reduce_cyclotomic(conductor, raw)
        self._conductor, self._coeffs = _normalize(conductor, reduced)
        self._hash = None

    @classmethod
    def _canonical(cls, conductor: int, coeffs: Tuple[Fraction, ...]) -> "CycNum":
        obj = cls.__new__(cls)
        obj._conductor, obj._coeffs = _normalize(conductor, coeffs)
        obj._hash = None
        return obj

    @classmethod
    def _rational(cls, value: Fraction) -> "CycNum":
        obj = cls.__new__(cls)
        obj._conductor = 1
        obj._coeffs = (value,)
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------

    @classmethod
    def rational(cls, value) -> "CycNum":
        return cls._rational(Fraction(value))

    @classmethod
    def zero(cls) -> "CycNum":
        return _ZERO

    @classmethod
    def one(cls) -> "CycNum":
        return _ONE

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycNum":
        """The root of unity zeta_n^k."""
        return cls._canonical(n, power_vector(n, k % n))

    @classmethod
    def coerce(cls, value: Scalar) -> "CycNum":
        if isinstance(value, CycNum):
            return value
        if isinstance(value, (int, Fraction, Rational)):
            return cls._rational(Fraction(value))
        raise TypeError(f"Cannot interpret {value!r} as a cyclotomic number")

    # -- accessors ----------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._conductor

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    def is_rational(self) -> bool:
        return self._conductor == 1

    def to_fraction(self) -> Fraction:
        if self._conductor != 1:
            raise ValueError(f"{self!r} is not rational")
        return self._coeffs[0]

    def embed(self, target: int) -> Tuple[Fraction, ...]:
        """Coefficients of this element in the power basis of Q(zeta_target)."""
        if target % self._conductor:
            raise ValueError(
                f"Cannot embed conductor {self._conductor} into {target}: not a multiple"
            )
        return embed_coeffs(self._conductor, target, self._coeffs)

    def galois(self, k: int) -> "CycNum":
        """Image under the automorphism zeta_N -> zeta_N^k (k coprime to N)."""
        n = self._conductor
        if n == 1:
            return self
        if gcd(k, n) != 1:
            raise ValueError(f"Exponent {k} is not coprime to the conductor {n}")
        poly = [Fraction(0)] * n
        for j, c in enumerate(self._coeffs):
            if c:
                poly[(j * k) % n] += c
        return CycNum._canonical(n, reduce_cyclotomic(n, poly))

    def conjugate(self) -> "CycNum":
        return self.galois(self._conductor - 1) if self._conductor > 2 else self

    # -- arithmetic ---------------------------------------------------

    def _common(self, other: "CycNum") -> Tuple[int, Tuple[Fraction, ...], Tuple[Fraction, ...]]:
        n1, n2 = self._conductor, other._conductor
        if n1 == n2:
            return n1, self._coeffs, other._coeffs
        n = _lcm(n1, n2)
        return n, embed_coeffs(n1, n, self._coeffs), embed_coeffs(n2, n, other._coeffs)

    def __add__(self, other: Scalar) -> "CycNum":
        if not isinstance(other, CycNum):
            try:
                other = CycNum.coerce(other)
            except TypeError:
                return NotImplemented
        if self._conductor == 1 and other._conductor == 1:
            return CycNum._rational(self._coeffs[0] + other._coeffs[0])
        n, a, b = self._common(other)
        return CycNum._canonical(n, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        obj = CycNum.__new__(CycNum)
        obj._conductor = self._conductor
        obj._coeffs = tuple(-c for c in self._coeffs)
        obj._hash = None
        return obj

    def __sub__(self, other: Scalar) -> "CycNum":
        if not isinstance(other, CycNum):
            try:
                other = CycNum.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "CycNum":
        return CycNum.coerce(other) - self

    def __mul__(self, other: Scalar) -> "CycNum":
        if not isinstance(other, CycNum):
            try:
                other = CycNum.coerce(other)
            except TypeError:
                return NotImplemented
        if self._conductor == 1 and other._conductor == 1:
            return CycNum._rational(self._coeffs[0] * other._coeffs[0])
        if other._conductor == 1:
            s = other._coeffs[0]
            return CycNum._canonical(self._conductor, tuple(c * s for c in self._coeffs))
        if self._conductor == 1:
            s = self._coeffs[0]
            return CycNum._canonical(other._conductor, tuple(c * s for c in other._coeffs))
        n, a, b = self._common(other)
        poly = [Fraction(0)] * n
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        poly[(i + j) % n] += x * y
        return CycNum._canonical(n, reduce_cyclotomic(n, poly))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if not self:
            raise ZeroDivisionError("Inverse of zero in a cyclotomic field")
        if self._conductor == 1:
            return CycNum._rational(1 / self._coeffs[0])
        n = self._conductor
        cofactor = CycNum.one()
        for k in range(2, n):
            if gcd(k, n) == 1:
                cofactor = cofactor * self.galois(k)
        norm = (self * cofactor).to_fraction()
        return cofactor * CycNum._rational(1 / norm)

    def __truediv__(self, other: Scalar) -> "CycNum":
        if not isinstance(other, CycNum):
            try:
                other = CycNum.coerce(other)
            except TypeError:
                return NotImplemented
        if self._conductor == 1 and other._conductor == 1:
            if not other._coeffs[0]:
                raise ZeroDivisionError("Division by zero in a cyclotomic field")
            return CycNum._rational(self._coeffs[0] / other._coeffs[0])
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "CycNum":
        return CycNum.coerce(other) / self

    def __pow__(self, exponent: int) -> "CycNum":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = CycNum.one()
        e = abs(exponent)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison / hashing ----------------------------------------

    def __bool__(self) -> bool:
        return any(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycNum):
            return self._conductor == other._conductor and self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._conductor == 1 and self._coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self._conductor == 1:
                self._hash = hash(self._coeffs[0])
            else:
                self._hash = hash((self._conductor, self._coeffs))
        return self._hash

    def __repr__(self) -> str:
        from .literal import format_literal

        return f"CycNum({self._conductor}: {format_literal(self)})"

    def __str__(self) -> str:
        from .literal import format_literal

        return format_literal(self)


_ZERO = CycNum._rational(Fraction(0))
_ONE = CycNum._rational(Fraction(1))


def common_conductor(values: Iterable[CycNum]) -> int:
    n = 1
    for v in values:
        n = _lcm(n, v.conductor)
    return n


def cyc_arith(op: str, *args) -> CycNum:
    """
    Dispatch one field operation by name: add, mul, neg, inverse or embed.

    ``embed`` takes ``(x, target_conductor)`` and returns the same field
    element after checking the target is a multiple of the conductor; use
    ``CycNum.embed`` for the coefficient vector in the larger field.
    """
    if op == "add":
        result = CycNum.zero()
        for a in args:
            result = result + a
        return result
    if op == "mul":
        result = CycNum.one()
        for a in args:
            result = result * a
        return result
    if op == "neg":
        (a,) = args
        return -CycNum.coerce(a)
    if op == "inverse":
        (a,) = args
        return CycNum.coerce(a).inverse()
    if op == "embed":
        a, target = args
        a = CycNum.coerce(a)
        return CycNum(target, a.embed(target))
    raise ValueError(f"Unknown cyclotomic operation: {op}")


def to_cyc_sequence(values: Sequence[Scalar]) -> Tuple[CycNum, ...]:
    return tuple(CycNum.coerce(v) for v in values)
