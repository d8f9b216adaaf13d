"""Exact linear algebra over the rationals.

Matrices are ``flint.fmpq_mat`` instances throughout the package; they keep
their shape for empty (0 x n) blocks, which representation code relies on.
Nothing in here ever mutates an argument.

``bareiss_rank`` is an independent pure-Python fraction-free elimination used
to cross-check the FLINT route.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import flint

Matrix = flint.fmpq_mat


def _q(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    if isinstance(x, int):
        return flint.fmpq(x)
    if isinstance(x, str):
        x = Fraction(x)
    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    if isinstance(x, flint.fmpz):
        return flint.fmpq(x)
    raise TypeError(f"cannot convert {x!r} to an exact rational")


def qmat(rows: Sequence[Sequence], nrows: int | None = None, ncols: int | None = None) -> Matrix:
    """Build a rational matrix from nested rows (ints, Fractions or "n/d" strings)."""
    rows = [list(r) for r in rows]
    r = len(rows) if nrows is None else nrows
    c = (len(rows[0]) if rows else 0) if ncols is None else ncols
    if len(rows) != r or any(len(row) != c for row in rows):
        raise ValueError(f"rows do not form a {r}x{c} matrix")
    return flint.fmpq_mat(r, c, [_q(x) for row in rows for x in row])


def zero(r: int, c: int) -> Matrix:
    return flint.fmpq_mat(r, c)


def eye(n: int) -> Matrix:
    m = flint.fmpq_mat(n, n)
    for i in range(n):
        m[i, i] = 1
    return m


def shape(m: Matrix) -> tuple[int, int]:
    return m.nrows(), m.ncols()


def to_fractions(m: Matrix) -> list[list[Fraction]]:
    return [[Fraction(int(x.p), int(x.q)) for x in row] for row in m.tolist()]


def to_strings(m: Matrix) -> list[list[str]]:
    return [[str(Fraction(int(x.p), int(x.q))) for x in row] for row in m.tolist()]


def entries_key(m: Matrix) -> tuple:
    """Hashable content key (shape plus entries)."""
    return (m.nrows(), m.ncols(), tuple((int(x.p), int(x.q)) for x in m.entries()))


def hstack(blocks: Sequence[Matrix], nrows: int) -> Matrix:
    ncols = sum(b.ncols() for b in blocks)
    out = flint.fmpq_mat(nrows, ncols)
    off = 0
    for b in blocks:
        if b.nrows() != nrows:
            raise ValueError("hstack: row count mismatch")
        for i in range(nrows):
            for j in range(b.ncols()):
                x = b[i, j]
                if x:
                    out[i, off + j] = x
        off += b.ncols()
    return out


def vstack(blocks: Sequence[Matrix], ncols: int) -> Matrix:
    nrows = sum(b.nrows() for b in blocks)
    out = flint.fmpq_mat(nrows, ncols)
    off = 0
    for b in blocks:
        if b.ncols() != ncols:
            raise ValueError("vstack: column count mismatch")
        for i in range(b.nrows()):
            for j in range(ncols):
                x = b[i, j]
                if x:
                    out[off + i, j] = x
        off += b.nrows()
    return out


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    r = sum(b.nrows() for b in blocks)
    c = sum(b.ncols() for b in blocks)
    out = flint.fmpq_mat(r, c)
    ro = co = 0
    for b in blocks:
        for i in range(b.nrows()):
            for j in range(b.ncols()):
                x = b[i, j]
                if x:
                    out[ro + i, co + j] = x
        ro += b.nrows()
        co += b.ncols()
    return out


def select_rows(m: Matrix, idx: Sequence[int]) -> Matrix:
    out = flint.fmpq_mat(len(idx), m.ncols())
    for k, i in enumerate(idx):
        for j in range(m.ncols()):
            out[k, j] = m[i, j]
    return out


def select_cols(m: Matrix, idx: Sequence[int]) -> Matrix:
    out = flint.fmpq_mat(m.nrows(), len(idx))
    for i in range(m.nrows()):
        for k, j in enumerate(idx):
            out[i, k] = m[i, j]
    return out


def rank(m: Matrix) -> int:
    if m.nrows() == 0 or m.ncols() == 0:
        return 0
    return m.rank()


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    if m.nrows() == 0 or m.ncols() == 0:
        return zero(m.nrows(), m.ncols()), []
    r, rk = m.rref()
    pivots = []
    for i in range(rk):
        for j in range(m.ncols()):
            if r[i, j]:
                pivots.append(j)
                break
    return r, pivots


def nullspace(m: Matrix) -> tuple[Matrix, list[int]]:
    """Basis of ``{x : m x = 0}`` as columns.

    Returns ``(K, free)`` where column ``j`` of ``K`` has a 1 in row
    ``free[j]`` and 0 in the other free rows, so a vector ``y`` in the span is
    recovered as ``K @ y[free]``.
    """
    n = m.ncols()
    r, pivots = rref(m)
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    k = flint.fmpq_mat(n, len(free))
    for col, f in enumerate(free):
        k[f, col] = 1
        for row, p in enumerate(pivots):
            x = r[row, f]
            if x:
                k[p, col] = -x
    return k, free


def left_nullspace(m: Matrix) -> tuple[Matrix, list[int]]:
    """Rows spanning ``{y : y m = 0}``; row ``i`` is the unit vector on ``cols[i]``
    restricted to those columns (same normal form as :func:`nullspace`)."""
    k, free = nullspace(m.transpose())
    return k.transpose(), free


def image_complement(m: Matrix) -> list[int]:
    """Indices ``j`` such that the unit vectors ``e_j`` complete the column
    space of ``m`` to the whole ambient space."""
    r = m.nrows()
    aug = hstack([m, eye(r)], r)
    _, pivots = rref(aug)
    return [p - m.ncols() for p in pivots if p >= m.ncols()]


def solve_in_span(basis: Matrix, free: Sequence[int], y: Matrix) -> Matrix:
    """Coordinates of the columns of ``y`` in a basis produced by :func:`nullspace`.

    The caller guarantees ``y`` lies in the span; the result is checked.
    """
    x = select_rows(y, free)
    if basis * x != y:
        raise ArithmeticError("vector not in the span of the given basis")
    return x


def is_zero(m: Matrix) -> bool:
    return all(not x for x in m.entries())


def bareiss_rank(rows: Iterable[Sequence]) -> int:
    """Rank by fraction-free (Bareiss) elimination in pure Python.

    Rational input is first scaled row by row to integers.
    """
    mat = []
    for row in rows:
        fr = [_frac(x) for x in row]
        den = 1
        for x in fr:
            den = den * x.denominator // _gcd(den, x.denominator)
        mat.append([int(x * den) for x in fr])
    if not mat or not mat[0]:
        return 0
    nr, nc = len(mat), len(mat[0])
    prev = 1
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        p = mat[r][c]
        for i in range(r + 1, nr):
            a = mat[i][c]
            row_i, row_r = mat[i], mat[r]
            for j in range(c + 1, nc):
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == nr:
            break
    return r


def _frac(x) -> Fraction:
    if isinstance(x, flint.fmpq):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, flint.fmpz):
        return Fraction(int(x))
    return Fraction(x)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
