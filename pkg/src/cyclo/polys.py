"""
Cyclotomic polynomial data and subfield descent tables, cached per conductor.
"""

from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from sympy import Poly, Symbol, cyclotomic_poly, divisors, totient

_X = Symbol("x")


@lru_cache(maxsize=None)
def phi(n: int) -> int:
    """Euler phi, i.e. the degree of Q(zeta_n) over Q."""
    return int(totient(n))


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> Tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    coeffs = Poly(cyclotomic_poly(n, _X), _X).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


def reduce_cyclotomic(n: int, poly: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """
    Reduce a polynomial in zeta_n (coefficients indexed by power, any length)
    modulo zeta_n^n = 1 and then modulo the n-th cyclotomic polynomial.
    """
    work = [Fraction(0)] * n
    for k, c in enumerate(poly):
        if c:
            work[k % n] += c
    deg = phi(n)
    phi_coeffs = cyclotomic_coeffs(n)
    for k in range(n - 1, deg - 1, -1):
        c = work[k]
        if not c:
            continue
        shift = k - deg
        # Phi_n is monic: x^deg == -sum(phi_i x^i)
        for i in range(deg):
            if phi_coeffs[i]:
                work[shift + i] -= c * phi_coeffs[i]
        work[k] = Fraction(0)
    return tuple(work[:deg])


@lru_cache(maxsize=None)
def power_vector(n: int, k: int) -> Tuple[Fraction, ...]:
    """zeta_n^k written in the power basis of Q(zeta_n)."""
    poly = [Fraction(0)] * n
    poly[k % n] = Fraction(1)
    return reduce_cyclotomic(n, poly)


@lru_cache(maxsize=None)
def embedding_columns(d: int, n: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """Images of 1, zeta_d, ..., zeta_d^(phi(d)-1) in Q(zeta_n); requires d | n."""
    step = n // d
    return tuple(power_vector(n, j * step) for j in range(phi(d)))


def embed_coeffs(d: int, n: int, coeffs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Embed an element of Q(zeta_d) (power-basis coefficients) into Q(zeta_n)."""
    if n % d:
        raise ValueError(f"Cannot embed conductor {d} into conductor {n}: {d} does not divide {n}")
    if d == n:
        return tuple(coeffs)
    out = [Fraction(0)] * phi(n)
    for c, column in zip(coeffs, embedding_columns(d, n)):
        if c:
            for i, v in enumerate(column):
                if v:
                    out[i] += c * v
    return tuple(out)


@lru_cache(maxsize=None)
def _descent_solver(d: int, n: int) -> Tuple[Tuple[int, ...], Tuple[Tuple[Fraction, ...], ...]]:
    """
    Pick phi(d) independent coordinates of the embedding of Q(zeta_d) in
    Q(zeta_n) and invert the square system on them.
    """
    cols = embedding_columns(d, n)
    k = len(cols)
    rows = [[cols[j][i] for j in range(k)] for i in range(phi(n))]
    chosen: List[int] = []
    basis: List[List[Fraction]] = []
    for i, row in enumerate(rows):
        candidate = list(row)
        for b in basis:
            lead = next(j for j, v in enumerate(b) if v)
            if candidate[lead]:
                f = candidate[lead] / b[lead]
                candidate = [x - f * y for x, y in zip(candidate, b)]
        if any(candidate):
            basis.append(candidate)
            chosen.append(i)
        if len(chosen) == k:
            break
    # invert the chosen k x k block with Gauss-Jordan
    block = [list(rows[i]) + [Fraction(int(r == c)) for c in range(k)] for r, i in enumerate(chosen)]
    for c in range(k):
        p = next(r for r in range(c, k) if block[r][c])
        block[c], block[p] = block[p], block[c]
        piv = block[c][c]
        block[c] = [v / piv for v in block[c]]
        for r in range(k):
            if r != c and block[r][c]:
                f = block[r][c]
                block[r] = [x - f * y for x, y in zip(block[r], block[c])]
    inverse = tuple(tuple(row[k:]) for row in block)
    return tuple(chosen), inverse


def descend(d: int, n: int, coeffs: Sequence[Fraction]) -> Optional[Tuple[Fraction, ...]]:
    """Coefficients in Q(zeta_d) if the element of Q(zeta_n) lies there, else None."""
    chosen, inverse = _descent_solver(d, n)
    picked = [coeffs[i] for i in chosen]
    candidate = tuple(sum((a * b for a, b in zip(row, picked)), Fraction(0)) for row in inverse)
    if embed_coeffs(d, n, candidate) == tuple(coeffs):
        return candidate
    return None


@lru_cache(maxsize=None)
def proper_subconductors(n: int) -> Tuple[int, ...]:
    """Divisors of n that can be minimal conductors (not 2 mod 4), ascending, excluding 1 and n."""
    return tuple(d for d in divisors(n) if 1 < d < n and d % 4 != 2)
