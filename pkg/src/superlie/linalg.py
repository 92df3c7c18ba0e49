"""Exact linear algebra over the rationals.

Dense vectors are lists of Fraction, matrices are lists of rows.  Large
homogeneous systems go through :class:`Echelon`, an incremental reduced
row-echelon accumulator over sparse rows; everything is exact, the only
pivot rule is "first nonzero column".
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(xs) -> list[Fraction]:
    return [frac(x) for x in xs]


def zero_vec(n: int) -> list[Fraction]:
    return [ZERO] * n


def unit_vec(n: int, i: int) -> list[Fraction]:
    v = [ZERO] * n
    v[i] = ONE
    return v


def zero_mat(r: int, c: int) -> list[list[Fraction]]:
    return [[ZERO] * c for _ in range(r)]


def identity_mat(n: int) -> list[list[Fraction]]:
    return [unit_vec(n, i) for i in range(n)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    c = frac(c)
    return [[c * x for x in row] for row in a]


def mat_mul(a, b):
    # b indexed [row][col]; cost is fine at the sizes used here
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), ZERO) for col in bt] for row in a]


def mat_vec(v, a):
    # row vector times matrix, the right-action convention used throughout
    n = len(a[0])
    out = [ZERO] * n
    for x, row in zip(v, a):
        if x:
            for j, y in enumerate(row):
                if y:
                    out[j] += x * y
    return out


def mat_eq(a, b) -> bool:
    return a == b


def is_zero_mat(a) -> bool:
    return all(not x for row in a for x in row)


def trace(a) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), ZERO)


def flatten(a) -> list[Fraction]:
    return [x for row in a for x in row]


def unflatten(v, rows: int, cols: int) -> list[list[Fraction]]:
    return [list(v[i * cols : (i + 1) * cols]) for i in range(rows)]


def _to_sparse(row) -> dict[int, Fraction]:
    if isinstance(row, dict):
        return {j: frac(x) for j, x in row.items() if x}
    return {j: frac(x) for j, x in enumerate(row) if x}


class Echelon:
    """Incremental reduced row-echelon form over sparse rows.

    Rows are dicts column -> Fraction.  Inserted rows are reduced against the
    stored pivots and, when independent, normalized and back-substituted into
    the store, so the row set is always in RREF.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict[int, Fraction]] = {}  # pivot column -> row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row) -> dict[int, Fraction]:
        """Residual of ``row`` after elimination by the stored pivots."""
        work = _to_sparse(row)
        for p in sorted(work):
            if p not in work:
                continue
            pivot_row = self.rows.get(p)
            if pivot_row is None:
                continue
            c = work.pop(p)
            for j, y in pivot_row.items():
                if j == p:
                    continue
                new = work.get(j, ZERO) - c * y
                if new:
                    work[j] = new
                else:
                    work.pop(j, None)
        return work

    def add(self, row) -> int | None:
        """Insert a row; return its pivot column, or None if dependent."""
        res = self.reduce(row)
        if not res:
            return None
        p = min(res)
        inv = ONE / res[p]
        new_row = {j: inv * x for j, x in res.items()}
        new_row[p] = ONE
        for other in self.rows.values():
            c = other.get(p)
            if c:
                for j, y in new_row.items():
                    if j == p:
                        continue
                    val = other.get(j, ZERO) - c * y
                    if val:
                        other[j] = val
                    else:
                        other.pop(j, None)
                del other[p]
        self.rows[p] = new_row
        return p

    def contains(self, row) -> bool:
        return not self.reduce(row)

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def dense_rows(self) -> list[list[Fraction]]:
        """Canonical RREF basis of the row space, ordered by pivot column."""
        out = []
        for p in self.pivots():
            row = self.rows[p]
            dense = [ZERO] * self.ncols
            for j, x in row.items():
                dense[j] = x
            out.append(dense)
        return out

    def nullspace(self) -> list[list[Fraction]]:
        """Basis of the solution space of (rows) . x = 0, one vector per free column."""
        pivot_cols = set(self.rows)
        out = []
        for f in range(self.ncols):
            if f in pivot_cols:
                continue
            v = [ZERO] * self.ncols
            v[f] = ONE
            for p, row in self.rows.items():
                c = row.get(f)
                if c:
                    v[p] = -c
            out.append(v)
        return out


def row_space(rows, ncols: int) -> list[list[Fraction]]:
    ech = Echelon(ncols)
    for r in rows:
        ech.add(r)
    return ech.dense_rows()


def rank(rows, ncols: int) -> int:
    ech = Echelon(ncols)
    for r in rows:
        ech.add(r)
    return ech.rank


def nullspace(rows, ncols: int) -> list[list[Fraction]]:
    ech = Echelon(ncols)
    for r in rows:
        ech.add(r)
    return ech.nullspace()


def span_contains(basis, target, ncols: int) -> bool:
    ech = Echelon(ncols)
    for r in basis:
        ech.add(r)
    return ech.contains(target)


def span_equal(a, b, ncols: int) -> bool:
    return row_space(a, ncols) == row_space(b, ncols)


def solve_coords(basis, target, ncols: int) -> list[Fraction] | None:
    """Coordinates of ``target`` in span(basis), or None if outside.

    Works on the augmented system [row | e_i]; the bookkeeping columns carry
    the combination back out.
    """
    nb = len(basis)
    ech = Echelon(ncols + nb)
    for i, row in enumerate(basis):
        sp = _to_sparse(row)
        sp[ncols + i] = ONE
        ech.add(sp)
    res = ech.reduce(_to_sparse(target))
    if any(j < ncols for j in res):
        return None
    coords = [ZERO] * nb
    for j, x in res.items():
        coords[j - ncols] = -x
    return coords


def invert_mat(a) -> list[list[Fraction]] | None:
    """Inverse of a square rational matrix, or None if singular."""
    n = len(a)
    ech = Echelon(2 * n)
    for i, row in enumerate(a):
        sp = _to_sparse(row)
        sp[n + i] = ONE
        ech.add(sp)
    # [A | I] row-reduces to [I | A^-1] exactly when A is invertible
    if ech.pivots()[:n] != list(range(n)):
        return None
    dense = ech.dense_rows()
    return [row[n:] for row in dense[:n]]
