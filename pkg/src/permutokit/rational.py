"""Exact rational scalars and vectors.

Scalars are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator).  Vectors are plain tuples of fractions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[Fraction, int, str]
RationalVector = tuple  # tuple[Fraction, ...]


class PoleError(ZeroDivisionError):
    """A rational expression was evaluated on one of its poles."""

    def __init__(self, message: str, where=None):
        super().__init__(message)
        self.where = where


def Q(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: they would silently import rounding error.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot build an exact rational from {type(value).__name__}")


def vec(values: Iterable[RationalLike]) -> RationalVector:
    return tuple(Q(v) for v in values)


def fmt(q: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = Q(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def fmt_vec(v: Sequence[Fraction]) -> list:
    return [fmt(x) for x in v]


def parse_vec(text: str) -> RationalVector:
    """Parse ``"1,2/3,-4"`` into a rational vector."""
    text = text.strip()
    if not text:
        return ()
    return tuple(Q(part) for part in text.split(","))


def solve_exact(columns: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Solve ``sum_k t_k * columns[k] == rhs`` exactly.

    The columns must be linearly independent.  Returns the coefficient
    tuple, or ``None`` when ``rhs`` is not in their span.
    """
    k = len(columns)
    rows = len(rhs)
    # augmented matrix, one row per coordinate
    m = [[Q(columns[c][r]) for c in range(k)] + [Q(rhs[r])] for r in range(rows)]
    pivot_rows = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            raise ValueError("generators are linearly dependent")
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivot_rows.append(r)
        r += 1
    if any(m[i][k] != 0 for i in range(r, rows)):
        return None
    return tuple(m[i][k] for i in pivot_rows)


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a rational matrix by exact row reduction."""
    m = [[Q(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r
