"""Block (m|n) supermatrices over a Grassmann algebra.

Indices 0..m-1 are even, m..m+n-1 odd.  A matrix is homogeneous of parity p
when entry (i, j) has Grassmann parity p + |i| + |j|; products are plain
row-by-column with entries multiplied in written order, which is all the
sign rule requires at this level.
"""

from __future__ import annotations

from fractions import Fraction

from .grassmann import GrassmannElement, ParityError, unit_inverse
from .linalg import frac


class SingularError(ValueError):
    pass


class SuperMatrix:
    __slots__ = ("m", "n", "q", "rows")

    def __init__(self, m: int, n: int, q: int, rows: list[list[GrassmannElement]]):
        d = m + n
        if len(rows) != d or any(len(r) != d for r in rows):
            raise ValueError(f"need a {d}x{d} grid of entries")
        for row in rows:
            for x in row:
                if not isinstance(x, GrassmannElement) or x.q != q:
                    raise ValueError("entries must be Grassmann elements over the same q")
        self.m = m
        self.n = n
        self.q = q
        self.rows = rows

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, m: int, n: int, q: int) -> "SuperMatrix":
        z = GrassmannElement.zero(q)
        return cls(m, n, q, [[z for _ in range(m + n)] for _ in range(m + n)])

    @classmethod
    def identity(cls, m: int, n: int, q: int) -> "SuperMatrix":
        out = cls.zero(m, n, q)
        one = GrassmannElement.one(q)
        rows = [list(r) for r in out.rows]
        for i in range(m + n):
            rows[i][i] = one
        return cls(m, n, q, rows)

    @classmethod
    def from_scalars(cls, m: int, n: int, q: int, grid) -> "SuperMatrix":
        rows = [[GrassmannElement.scalar(q, frac(x)) for x in row] for row in grid]
        return cls(m, n, q, rows)

    @classmethod
    def unit(cls, m: int, n: int, q: int, i: int, j: int, coeff=None) -> "SuperMatrix":
        """Elementary matrix E_ij (0-based), optionally scaled."""
        if coeff is None:
            coeff = GrassmannElement.one(q)
        elif not isinstance(coeff, GrassmannElement):
            coeff = GrassmannElement.scalar(q, frac(coeff))
        out = cls.zero(m, n, q)
        rows = [list(r) for r in out.rows]
        rows[i][j] = coeff
        return cls(m, n, q, rows)

    # -- structure ---------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.m + self.n

    def index_parity(self, i: int) -> int:
        return 0 if i < self.m else 1

    def entry(self, i: int, j: int) -> GrassmannElement:
        return self.rows[i][j]

    def parity(self) -> int | None:
        """Overall parity if homogeneous (zero counts as even), else None."""
        found: set[int] = set()
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                p = x.parity()
                if p is None:
                    return None
                if not x.is_zero():
                    found.add((p + self.index_parity(i) + self.index_parity(j)) & 1)
        if not found:
            return 0
        return found.pop() if len(found) == 1 else None

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.rows for x in row)

    def body(self) -> list[list[Fraction]]:
        return [[x.body() for x in row] for row in self.rows]

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "SuperMatrix"):
        if (self.m, self.n, self.q) != (other.m, other.n, other.q):
            raise ValueError("supermatrix shape/algebra mismatch")

    def __add__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        self._check(other)
        return SuperMatrix(
            self.m, self.n, self.q,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        self._check(other)
        return SuperMatrix(
            self.m, self.n, self.q,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __neg__(self):
        return SuperMatrix(self.m, self.n, self.q,
                           [[-a for a in row] for row in self.rows])

    def scale(self, c) -> "SuperMatrix":
        """Left multiplication by a Grassmann scalar (or rational)."""
        if not isinstance(c, GrassmannElement):
            c = GrassmannElement.scalar(self.q, frac(c))
        return SuperMatrix(self.m, self.n, self.q,
                           [[c * a for a in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        self._check(other)
        d = self.dim
        zero = GrassmannElement.zero(self.q)
        rows = []
        for i in range(d):
            row = []
            for j in range(d):
                acc = zero
                for k in range(d):
                    a = self.rows[i][k]
                    if a.is_zero():
                        continue
                    b = other.rows[k][j]
                    if b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return SuperMatrix(self.m, self.n, self.q, rows)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return (self.m, self.n, self.q) == (other.m, other.n, other.q) and \
            self.rows == other.rows

    def __hash__(self):
        return hash((self.m, self.n, self.q,
                     tuple(tuple(r) for r in self.rows)))

    def bracket(self, other: "SuperMatrix") -> "SuperMatrix":
        """Superbracket [X, Y] = XY - (-1)^{|X||Y|} YX of homogeneous matrices."""
        self._check(other)
        p, r = self.parity(), other.parity()
        if p is None or r is None:
            raise ParityError("superbracket needs homogeneous arguments")
        yx = other * self
        return self * other - (yx if (p * r) % 2 == 0 else -yx)

    def inverse(self) -> "SuperMatrix":
        """Inverse by Gaussian elimination with body-invertible pivots.

        A supermatrix is invertible exactly when its body matrix is; the
        elimination mirrors the body elimination, so a pivot with nonzero
        body always exists in the current column.
        """
        d = self.dim
        one = GrassmannElement.one(self.q)
        zero = GrassmannElement.zero(self.q)
        work = [list(row) + [one if i == j else zero for j in range(d)]
                for i, row in enumerate(self.rows)]
        for col in range(d):
            pivot = None
            for r in range(col, d):
                if work[r][col].body():
                    pivot = r
                    break
            if pivot is None:
                raise SingularError("body matrix is singular")
            work[col], work[pivot] = work[pivot], work[col]
            inv = unit_inverse(work[col][col])
            work[col] = [inv * x for x in work[col]]
            for r in range(d):
                if r == col:
                    continue
                c = work[r][col]
                if c.is_zero():
                    continue
                work[r] = [x - c * y for x, y in zip(work[r], work[col])]
        rows = [row[d:] for row in work]
        out = SuperMatrix(self.m, self.n, self.q, rows)
        assert (self * out) == SuperMatrix.identity(self.m, self.n, self.q)
        return out

    def __str__(self):
        cells = [[str(x) for x in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in row) + "]"
                         for row in cells)

    __repr__ = __str__


def random_homogeneous(rng, m: int, n: int, q: int, parity: int,
                       terms: int = 2, bound: int = 3) -> SuperMatrix:
    """Random homogeneous supermatrix with sparse small-integer entries."""
    from .grassmann import random_element

    rows = []
    for i in range(m + n):
        row = []
        for j in range(m + n):
            p = (parity + (0 if i < m else 1) + (0 if j < m else 1)) & 1
            row.append(random_element(rng, q, parity=p, terms=terms, bound=bound))
        rows.append(row)
    return SuperMatrix(m, n, q, rows)
