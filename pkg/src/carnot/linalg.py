"""Exact linear algebra over the rationals.

All routines work on tuples of Fraction and never touch floating point.
Matrices are row tuples; canonical form is the reduced row echelon form
with zero rows dropped, which doubles as a canonical basis of a row span.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def vector(entries: Iterable) -> Vector:
    return tuple(Fraction(e) for e in entries)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def scale(c: Fraction, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def is_zero(x: Vector) -> bool:
    return all(a == 0 for a in x)


def rref(rows: Iterable[Sequence]) -> Matrix:
    """Reduced row echelon form, zero rows dropped, rows ordered by pivot."""
    work = [list(Fraction(e) for e in row) for row in rows]
    if not work:
        return ()
    ncols = len(work[0])
    for row in work:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
    pivot_rows: list[list[Fraction]] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = ONE / work[r][col]
        work[r] = [inv * e for e in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                c = work[i][col]
                work[i] = [a - c * b for a, b in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    pivot_rows = [row for row in work[:r]]
    return tuple(tuple(row) for row in pivot_rows)


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref(rows))


def pivot_columns(reduced: Matrix) -> tuple[int, ...]:
    cols = []
    for row in reduced:
        cols.append(next(j for j, e in enumerate(row) if e != 0))
    return tuple(cols)


def in_row_span(reduced: Matrix, v: Sequence) -> bool:
    """Membership test against a matrix already in reduced form."""
    rem = list(Fraction(e) for e in v)
    for row in reduced:
        p = next(j for j, e in enumerate(row) if e != 0)
        if rem[p] != 0:
            c = rem[p]
            rem = [a - c * b for a, b in zip(rem, row)]
    return all(e == 0 for e in rem)


def reduce_against(reduced: Matrix, v: Sequence) -> Vector:
    """Remainder of v after elimination by rows of a reduced matrix."""
    rem = list(Fraction(e) for e in v)
    for row in reduced:
        p = next(j for j, e in enumerate(row) if e != 0)
        if rem[p] != 0:
            c = rem[p]
            rem = [a - c * b for a, b in zip(rem, row)]
    return tuple(rem)


def solve(rows: Iterable[Sequence], rhs: Sequence) -> Vector | None:
    """One exact solution of ``A x = b``; None if the system is inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    a = [list(Fraction(e) for e in row) for row in rows]
    b = [Fraction(e) for e in rhs]
    if len(a) != len(b):
        raise ValueError("rhs length does not match row count")
    if not a:
        return ()
    ncols = len(a[0])
    aug = [row + [bi] for row, bi in zip(a, b)]
    reduced = rref(aug)
    solution = [ZERO] * ncols
    for row in reduced:
        p = next(j for j, e in enumerate(row) if e != 0)
        if p == ncols:
            return None
        solution[p] = row[ncols]
    return tuple(solution)


def solve_columns(cols: Sequence[Sequence], target: Sequence) -> Vector | None:
    """Coefficients x with ``sum(x_i * cols_i) = target``, or None."""
    if not cols:
        return () if all(Fraction(e) == 0 for e in target) else None
    n = len(cols[0])
    rows = tuple(tuple(Fraction(col[i]) for col in cols) for i in range(n))
    return solve(rows, target)


def nullspace(rows: Iterable[Sequence], ncols: int | None = None) -> Matrix:
    """Canonical basis of the right kernel, one vector per free column.

    ``ncols`` must be supplied when ``rows`` may be empty (no constraints).
    """
    reduced = rref(rows)
    if not reduced:
        if ncols is None:
            return ()
        return tuple(unit_vector(ncols, i) for i in range(ncols))
    ncols = len(reduced[0])
    pivots = pivot_columns(reduced)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for row, p in zip(reduced, pivots):
            v[p] = -row[free]
        basis.append(tuple(v))
    return tuple(basis)
