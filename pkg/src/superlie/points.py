"""Supergroup points over Grassmann test algebras.

A point of the general linear supergroup is an even-pattern supermatrix with
invertible body; tangent vectors live over a two-generator dual-number
extension.  Functionals on the cotangent space carry a convolution product
coming from the matrix comultiplication, and the adjoint action is computed
both by matrix conjugation and by the triple-convolution formula so the two
can be compared exactly.  The folded 4x4 supergroup built from paired 2x2
blocks gets its group law, inverse, and commutator in closed form, each
checked against raw supermatrix arithmetic on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .grassmann import GrassmannElement, NotUnitError, ParityError, unit_inverse
from .jordan import JordanSplit, OneDimVerdict, jordan_chevalley, one_dim_algebraicity
from .supermatrix import SingularError, SuperMatrix


class GLPoint:
    """Invertible even-pattern supermatrix; the inverse is computed eagerly
    so an invalid point fails at construction."""

    __slots__ = ("matrix", "inverse_matrix")

    def __init__(self, matrix: SuperMatrix):
        if matrix.parity() != 0:
            raise ParityError("point entries must match the block pattern")
        self.matrix = matrix
        self.inverse_matrix = matrix.inverse()

    @classmethod
    def identity(cls, m: int, n: int, q: int) -> "GLPoint":
        return cls(SuperMatrix.identity(m, n, q))

    @property
    def m(self):
        return self.matrix.m

    @property
    def n(self):
        return self.matrix.n

    @property
    def q(self):
        return self.matrix.q

    def __mul__(self, other: "GLPoint") -> "GLPoint":
        return GLPoint(self.matrix * other.matrix)

    def inverse(self) -> "GLPoint":
        return GLPoint(self.inverse_matrix)

    def __eq__(self, other):
        return isinstance(other, GLPoint) and self.matrix == other.matrix


def _lift(el: GrassmannElement, q2: int) -> GrassmannElement:
    return GrassmannElement(q2, dict(el.terms))


def _lift_matrix(mat: SuperMatrix, q2: int) -> SuperMatrix:
    rows = [[_lift(x, q2) for x in row] for row in mat.rows]
    return SuperMatrix(mat.m, mat.n, q2, rows)


class DualNumberPoint:
    """Point over the dual-number extension with one even and one odd tag.

    The tags embed into two extra Grassmann generators: the odd tag is the
    first new generator and the even tag is the product of both, so every
    pairwise product of tags vanishes and the embedding stays faithful.
    """

    def __init__(self, base: GLPoint, even_part: SuperMatrix, odd_part: SuperMatrix):
        m, n, q = base.m, base.n, base.q
        for part, want in ((even_part, 0), (odd_part, 1)):
            if (part.m, part.n, part.q) != (m, n, q):
                raise ValueError("tangent parts must match the base shape")
            if not part.is_zero() and part.parity() != want:
                raise ParityError("tangent parts must be parity homogeneous")
        self.base = base
        self.even_part = even_part
        self.odd_part = odd_part

    def is_tangent_at_identity(self) -> bool:
        m, n, q = self.base.m, self.base.n, self.base.q
        return self.base.matrix == SuperMatrix.identity(m, n, q)

    def embed(self) -> GLPoint:
        m, n, q = self.base.m, self.base.n, self.base.q
        q2 = q + 2
        eps1 = GrassmannElement.generator(q2, q + 1)
        eps0 = eps1 * GrassmannElement.generator(q2, q + 2)
        assert (eps0 * eps0).is_zero() and (eps0 * eps1).is_zero()
        total = (_lift_matrix(self.base.matrix, q2)
                 + _lift_matrix(self.even_part, q2).scale(eps0)
                 + _lift_matrix(self.odd_part, q2).scale(eps1))
        return GLPoint(total)


def adjoint_matrix(g: GLPoint, u: SuperMatrix) -> SuperMatrix:
    """Conjugation g u g^{-1} over the shared Grassmann algebra."""
    return g.matrix * u * g.inverse_matrix


class PointFunctional:
    """Functional on the cotangent space of the general linear supergroup,
    stored by its value on each matrix-entry coordinate (shifted by the
    identity).  A homogeneous functional of parity p has a parity-p value
    pattern, so the grid is itself a homogeneous supermatrix."""

    __slots__ = ("parity", "values")

    def __init__(self, parity: int, values: SuperMatrix):
        if not values.is_zero() and values.parity() != parity % 2:
            raise ParityError("value grid must be homogeneous of the declared parity")
        self.parity = parity % 2
        self.values = values

    @property
    def m(self):
        return self.values.m

    @property
    def n(self):
        return self.values.n

    @property
    def q(self):
        return self.values.q

    def __add__(self, other):
        assert self.parity == other.parity
        return PointFunctional(self.parity, self.values + other.values)

    def __sub__(self, other):
        assert self.parity == other.parity
        return PointFunctional(self.parity, self.values - other.values)

    def __neg__(self):
        return PointFunctional(self.parity, -self.values)

    def __eq__(self, other):
        return (isinstance(other, PointFunctional)
                and self.parity == other.parity and self.values == other.values)

    def convolve(self, other: "PointFunctional") -> "PointFunctional":
        """Convolution through the matrix comultiplication.

        Only the middle term of the expanded coproduct survives two
        functionals that kill constants and squares, leaving a twisted
        matrix product: sign (-1)^{|other| * (row + summation parity)}.
        """
        vals = self.values
        d = vals.dim
        q = vals.q
        zero = GrassmannElement.zero(q)
        rows = []
        for i in range(d):
            ri = vals.index_parity(i)
            row = []
            for j in range(d):
                acc = zero
                for k in range(d):
                    term = vals.entry(i, k) * other.values.entry(k, j)
                    if other.parity and (ri + vals.index_parity(k)) & 1:
                        term = -term
                    acc = acc + term
                row.append(acc)
            rows.append(row)
        out = SuperMatrix(vals.m, vals.n, q, rows)
        return PointFunctional((self.parity + other.parity) % 2, out)

    def bracket(self, other: "PointFunctional") -> "PointFunctional":
        ab = self.convolve(other)
        ba = other.convolve(self)
        if self.parity and other.parity:
            return PointFunctional(ab.parity, ab.values + ba.values)
        return PointFunctional(ab.parity, ab.values - ba.values)

    def to_matrix(self) -> SuperMatrix:
        """Row twist turning convolution into the plain matrix product."""
        vals = self.values
        rows = []
        for i in range(vals.dim):
            flip = self.parity and vals.index_parity(i)
            rows.append([-x if flip else x for x in vals.rows[i]])
        return SuperMatrix(vals.m, vals.n, vals.q, rows)

    @classmethod
    def from_matrix(cls, parity: int, mat: SuperMatrix) -> "PointFunctional":
        rows = []
        for i in range(mat.dim):
            flip = parity % 2 and mat.index_parity(i)
            rows.append([-x if flip else x for x in mat.rows[i]])
        return cls(parity, SuperMatrix(mat.m, mat.n, mat.q, rows))


def convolution_bracket(u: PointFunctional, v: PointFunctional) -> PointFunctional:
    return u.bracket(v)


def adjoint_hopf(g: GLPoint, u: PointFunctional) -> PointFunctional:
    """Adjoint action evaluated functional-side.

    Expands the double coproduct of each entry coordinate; the outer factors
    are fed to the point and its antipode image (entrywise inverse), the
    middle one to the functional, with the sign from moving the functional
    past the leading factor.
    """
    d = g.matrix.dim
    q = g.q
    zero = GrassmannElement.zero(q)
    rows = []
    for i in range(d):
        ri = g.matrix.index_parity(i)
        row = []
        for j in range(d):
            acc = zero
            for k in range(d):
                sign = u.parity and (ri + g.matrix.index_parity(k)) & 1
                for l in range(d):
                    term = (g.matrix.entry(i, k) * u.values.entry(k, l)
                            * g.inverse_matrix.entry(l, j))
                    acc = acc + (-term if sign else term)
            row.append(acc)
        rows.append(row)
    return PointFunctional(u.parity, SuperMatrix(g.m, g.n, q, rows))


# -- the folded 4x4 supergroup ---------------------------------------------------


def _block(entries, q):
    out = []
    for row in entries:
        out.append([x if isinstance(x, GrassmannElement)
                    else GrassmannElement.scalar(q, Fraction(x)) for x in row])
    return out


def _bmul(a, b):
    return [[a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)]
            for i in range(2)]


def _badd(a, b):
    return [[a[i][j] + b[i][j] for j in range(2)] for i in range(2)]


class FoldedTriangularPoint:
    """Point of the folded supergroup: paired upper-triangular 2x2 blocks.

    The even block repeats one unit on the diagonal; the odd block is a
    single odd parameter spread with one derived coefficient.  Closed-form
    group operations are always cross-checked against 4x4 arithmetic.
    """

    __slots__ = ("q", "a1", "a2", "t")

    def __init__(self, q: int, a1, a2, t):
        a1 = self._coerce(q, a1)
        a2 = self._coerce(q, a2)
        t = self._coerce(q, t)
        if not a1.has_parity(0) or not a2.has_parity(0):
            raise ParityError("diagonal parameters must be even")
        if not t.has_parity(1):
            raise ParityError("off-diagonal parameter must be odd")
        if not a1.body():
            raise NotUnitError("leading diagonal parameter must be a unit")
        self.q, self.a1, self.a2, self.t = q, a1, a2, t

    @staticmethod
    def _coerce(q, x):
        if isinstance(x, GrassmannElement):
            if x.q != q:
                raise ValueError("parameter over the wrong Grassmann algebra")
            return x
        return GrassmannElement.scalar(q, Fraction(x))

    @classmethod
    def identity(cls, q: int) -> "FoldedTriangularPoint":
        return cls(q, 1, 0, 0)

    def block_a(self):
        zero = GrassmannElement.zero(self.q)
        return [[self.a1, self.a2], [zero, self.a1]]

    def block_b(self):
        zero = GrassmannElement.zero(self.q)
        slope = (GrassmannElement.one(self.q)
                 + unit_inverse(self.a1) * self.a2) * self.t
        return [[self.t, slope], [zero, self.t]]

    def to_supermatrix(self) -> SuperMatrix:
        a, b = self.block_a(), self.block_b()
        rows = []
        for i in range(2):
            rows.append(a[i] + b[i])
        for i in range(2):
            rows.append(b[i] + a[i])
        return SuperMatrix(2, 2, self.q, rows)

    def to_point(self) -> GLPoint:
        return GLPoint(self.to_supermatrix())

    @classmethod
    def from_supermatrix(cls, mat: SuperMatrix) -> "FoldedTriangularPoint":
        """Read parameters off the matrix and insist on the exact shape."""
        if (mat.m, mat.n) != (2, 2):
            raise ValueError("expected a 4x4 supermatrix with 2|2 blocks")
        point = cls(mat.q, mat.entry(0, 0), mat.entry(0, 1), mat.entry(0, 2))
        if point.to_supermatrix() != mat:
            raise ValueError("matrix is not of the constrained shape")
        return point

    def __eq__(self, other):
        return (isinstance(other, FoldedTriangularPoint) and self.q == other.q
                and (self.a1, self.a2, self.t) == (other.a1, other.a2, other.t))

    def __mul__(self, other: "FoldedTriangularPoint") -> "FoldedTriangularPoint":
        a, b = self.block_a(), self.block_b()
        a2, b2 = other.block_a(), other.block_b()
        prod_a = _badd(_bmul(a, a2), _bmul(b, b2))
        prod_b = _badd(_bmul(a, b2), _bmul(b, a2))
        rows = [prod_a[0] + prod_b[0], prod_a[1] + prod_b[1],
                prod_b[0] + prod_a[0], prod_b[1] + prod_a[1]]
        closed = SuperMatrix(2, 2, self.q, rows)
        raw = self.to_supermatrix() * other.to_supermatrix()
        assert closed == raw, "block formula disagrees with matrix product"
        return FoldedTriangularPoint.from_supermatrix(closed)

    def inverse(self) -> "FoldedTriangularPoint":
        inv1 = unit_inverse(self.a1)
        inv_a = [[inv1, -(inv1 * inv1) * self.a2],
                 [GrassmannElement.zero(self.q), inv1]]
        sq = _bmul(inv_a, inv_a)
        neg_b = [[-(sq[i][0] * self.block_b()[0][j] + sq[i][1] * self.block_b()[1][j])
                  for j in range(2)] for i in range(2)]
        rows = [inv_a[0] + neg_b[0], inv_a[1] + neg_b[1],
                neg_b[0] + inv_a[0], neg_b[1] + inv_a[1]]
        closed = SuperMatrix(2, 2, self.q, rows)
        raw = self.to_supermatrix().inverse()
        assert closed == raw, "block inverse disagrees with matrix inverse"
        return FoldedTriangularPoint.from_supermatrix(closed)

    def commutator(self, other: "FoldedTriangularPoint") -> "FoldedTriangularPoint":
        inv_self = self.inverse()
        inv_other = other.inverse()
        raw = ((self * other) * inv_self) * inv_other
        # closed form: even block E + 2 A^{-1} A'^{-1} B B', zero odd block
        bb = _bmul(self.block_b(), other.block_b())
        scaled = _bmul(_bmul(inv_self.block_a(), inv_other.block_a()), bb)
        one = GrassmannElement.one(self.q)
        zero = GrassmannElement.zero(self.q)
        closed_a = _badd([[one, zero], [zero, one]],
                         [[x + x for x in row] for row in scaled])
        zb = [[zero, zero], [zero, zero]]
        rows = [closed_a[0] + zb[0], closed_a[1] + zb[1],
                zb[0] + closed_a[0], zb[1] + closed_a[1]]
        closed = SuperMatrix(2, 2, self.q, rows)
        assert closed == raw.to_supermatrix(), \
            "commutator closed form disagrees with the group computation"
        return raw

    def even_jordan_factorization(self) -> bool:
        """Multiplicative split of the even block: scalar times unipotent."""
        scalar = [[self.a1, GrassmannElement.zero(self.q)],
                  [GrassmannElement.zero(self.q), self.a1]]
        unip = [[GrassmannElement.one(self.q), unit_inverse(self.a1) * self.a2],
                [GrassmannElement.zero(self.q), GrassmannElement.one(self.q)]]
        return _bmul(scalar, unip) == self.block_a() == _bmul(unip, scalar)


def folded_product(p: FoldedTriangularPoint, p2: FoldedTriangularPoint) -> FoldedTriangularPoint:
    return p * p2


def folded_inverse(p: FoldedTriangularPoint) -> FoldedTriangularPoint:
    return p.inverse()


def folded_commutator(p: FoldedTriangularPoint, p2: FoldedTriangularPoint) -> FoldedTriangularPoint:
    return p.commutator(p2)


@dataclass
class FoldedTangentReport:
    xy_zero: bool
    xv_zero: bool
    yv_zero: bool
    vv_matches: bool
    tangent_shapes_ok: bool
    even_action: list
    jordan: JordanSplit
    verdict: OneDimVerdict

    @property
    def relations_ok(self) -> bool:
        return (self.xy_zero and self.xv_zero and self.yv_zero
                and self.vv_matches)


def folded_tangent_generators(q: int = 0):
    """The three distinguished tangent vectors as 4x4 supermatrices."""
    x = SuperMatrix.identity(2, 2, q)
    y = SuperMatrix.unit(2, 2, q, 0, 1) + SuperMatrix.unit(2, 2, q, 2, 3)
    v = (SuperMatrix.unit(2, 2, q, 0, 2) + SuperMatrix.unit(2, 2, q, 0, 3)
         + SuperMatrix.unit(2, 2, q, 1, 3)
         + SuperMatrix.unit(2, 2, q, 2, 0) + SuperMatrix.unit(2, 2, q, 2, 1)
         + SuperMatrix.unit(2, 2, q, 3, 1))
    return x, y, v


def folded_tangent_report():
    """Tangent generators, their relations, and the algebraicity verdict."""
    x, y, v = folded_tangent_generators()
    vv = v.bracket(v)
    want = x.scale(2) + y.scale(4)

    identity = GLPoint.identity(2, 2, 0)
    zero = SuperMatrix.zero(2, 2, 0)
    shapes_ok = True
    for even_part, odd_part in ((x, zero), (y, zero), (zero, v)):
        lifted = DualNumberPoint(identity, even_part, odd_part)
        assert lifted.is_tangent_at_identity()
        try:
            FoldedTriangularPoint.from_supermatrix(lifted.embed().matrix)
        except (ValueError, ParityError, NotUnitError):
            shapes_ok = False

    even_action = [[Fraction(2), Fraction(4)], [Fraction(0), Fraction(2)]]
    report = FoldedTangentReport(
        xy_zero=x.bracket(y).is_zero(),
        xv_zero=x.bracket(v).is_zero(),
        yv_zero=y.bracket(v).is_zero(),
        vv_matches=vv == want,
        tangent_shapes_ok=shapes_ok,
        even_action=even_action,
        jordan=jordan_chevalley(even_action),
        verdict=one_dim_algebraicity(even_action),
    )
    return x, y, v, report
