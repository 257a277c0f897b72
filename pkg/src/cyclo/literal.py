"""
Cyclotomic literals: sums of terms ``c`` or ``c*z^k`` where ``c`` is ``p`` or
``p/q`` and ``z`` stands for zeta_N at a conductor given alongside the text.
"""

import re
from fractions import Fraction
from typing import List, Optional

from .number import CycNum

_TERM = re.compile(r"([+-])?(?:(\d+)(?:/(\d+))?)?(?:(\*)?(z)(?:\^(\d+))?)?")


def parse_literal(text: str, conductor: int) -> CycNum:
    """Parse a literal such as ``1/2 - 1/2*z^1`` at the given conductor."""
    if isinstance(text, (int, Fraction)):
        return CycNum.rational(text)
    s = re.sub(r"\s+", "", str(text))
    if not s:
        raise ValueError("Empty cyclotomic literal")
    poly: List[Fraction] = [Fraction(0)] * conductor
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, num, den, star, z, power = m.groups()
        if m.end() == pos or (num is None and z is None):
            raise ValueError(f"Malformed cyclotomic literal {text!r} at position {pos}")
        if pos > 0 and sign is None:
            raise ValueError(f"Missing operator in cyclotomic literal {text!r} at position {pos}")
        if star and num is None:
            raise ValueError(f"Dangling '*' in cyclotomic literal {text!r}")
        if den is not None and int(den) == 0:
            raise ValueError(f"Zero denominator in cyclotomic literal {text!r}")
        coeff = Fraction(int(num), int(den) if den else 1) if num is not None else Fraction(1)
        if sign == "-":
            coeff = -coeff
        k = 0
        if z is not None:
            k = int(power) if power is not None else 1
        poly[k % conductor] += coeff
        pos = m.end()
    return CycNum(conductor, poly)


def _format_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_literal(value: CycNum, conductor: Optional[int] = None) -> str:
    """
    Canonical text of a cyclotomic number, terms sorted by power ascending.
    With ``conductor`` the value is written in Q(zeta_conductor) instead of
    its own minimal field.
    """
    n = value.conductor if conductor is None else conductor
    coeffs = value.coeffs if conductor is None else value.embed(conductor)
    parts: List[str] = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        body = _format_fraction(abs(c)) if k == 0 or n == 1 else f"{_format_fraction(abs(c))}*z^{k}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"
