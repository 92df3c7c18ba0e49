"""Finite-dimensional Lie superalgebras presented by structure constants.

A basis x_0 .. x_{m+n-1} has the first m vectors even and the last n odd.
Structure constants are stored sparsely as c[(i, j)] = {k: coefficient} and
must be parity homogeneous: c_{ij}^k = 0 unless |x_i| + |x_j| = |x_k| mod 2.
Operators written as matrices act on coordinate row vectors from the right,
so composition order equals matrix product order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import jordan
from .grassmann import GrassmannElement, merge_sign
from .linalg import (
    Echelon,
    ZERO,
    frac,
    is_zero_mat,
    solve_coords,
    unit_vec,
    zero_mat,
    zero_vec,
)


class NotAnIdealError(ValueError):
    pass


Brackets = dict[tuple[int, int], dict[int, Fraction]]


class LieSuperAlgebra:
    """Structure-constant presentation of a Lie superalgebra."""

    def __init__(self, m: int, n: int, brackets, labels: list[str] | None = None,
                 name: str = ""):
        self.m = m
        self.n = n
        self.name = name
        d = m + n
        if labels is None:
            labels = [f"x{i + 1}" for i in range(d)]
        if len(labels) != d:
            raise ValueError("one label per basis vector required")
        self.labels = list(labels)
        self.c: Brackets = {}
        for (i, j), row in brackets.items():
            if not (0 <= i < d and 0 <= j < d):
                raise ValueError(f"basis index out of range in bracket ({i}, {j})")
            clean = {}
            for k, coeff in row.items():
                if not 0 <= k < d:
                    raise ValueError(f"basis index out of range in bracket target {k}")
                coeff = frac(coeff)
                if not coeff:
                    continue
                if (self.parity(i) + self.parity(j) - self.parity(k)) % 2:
                    raise ValueError(
                        f"structure constant c[{i},{j}]^{k} violates parity homogeneity"
                    )
                clean[k] = coeff
            if clean:
                self.c[(i, j)] = clean

    @property
    def dim(self) -> int:
        return self.m + self.n

    def parity(self, i: int) -> int:
        return 0 if i < self.m else 1

    @property
    def parities(self) -> tuple[int, ...]:
        return tuple(self.parity(i) for i in range(self.dim))

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        return self.c.get((i, j), {})

    def bracket(self, u, v) -> list[Fraction]:
        """Bracket of two coordinate vectors."""
        out = zero_vec(self.dim)
        for (i, j), row in self.c.items():
            a = u[i]
            if not a:
                continue
            b = v[j]
            if not b:
                continue
            ab = a * b
            for k, coeff in row.items():
                out[k] += ab * coeff
        return out

    def ad(self, i: int) -> list[list[Fraction]]:
        """Matrix of x -> [x, x_i] in the row-vector convention."""
        mat = zero_mat(self.dim, self.dim)
        for k in range(self.dim):
            for s, coeff in self.bracket_basis(k, i).items():
                mat[k][s] = coeff
        return mat

    def ad_vec(self, v) -> list[list[Fraction]]:
        """Matrix of x -> [x, v]."""
        mat = zero_mat(self.dim, self.dim)
        for (k, i), row in self.c.items():
            a = v[i]
            if not a:
                continue
            for s, coeff in row.items():
                mat[k][s] += a * coeff
        return mat

    def __eq__(self, other):
        if not isinstance(other, LieSuperAlgebra):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self.c == other.c

    def __repr__(self):
        tag = self.name or "LieSuperAlgebra"
        return f"<{tag} dim {self.m}|{self.n}>"


@dataclass
class ValidationReport:
    ok: bool
    antisymmetry_ok: bool
    jacobi_ok: bool
    checked_triples: int
    failures: list[str]

    def first_failure(self) -> str | None:
        return self.failures[0] if self.failures else None


def validate(L: LieSuperAlgebra, max_failures: int = 5) -> ValidationReport:
    """Check super antisymmetry and the super Jacobi identity on all triples.

    Parity homogeneity is a construction invariant, so only the two bracket
    laws are scanned here.  Jacobi runs over unordered triples, which is
    enough once antisymmetry is known to hold.
    """
    failures: list[str] = []
    d = L.dim
    anti_ok = True
    for i in range(d):
        for j in range(i, d):
            sign = -1 if (L.parity(i) * L.parity(j)) % 2 else 1
            left = L.bracket_basis(i, j)
            right = L.bracket_basis(j, i)
            expected = {k: sign * -coeff for k, coeff in right.items() if coeff}
            expected = {k: v for k, v in expected.items() if v}
            got = {k: v for k, v in left.items() if v}
            if got != expected:
                anti_ok = False
                if len(failures) < max_failures:
                    failures.append(
                        f"antisymmetry fails on ({L.labels[i]}, {L.labels[j]})"
                    )
    jacobi_ok = True
    checked = 0
    if anti_ok:
        for i in range(d):
            pi = L.parity(i)
            for j in range(i, d):
                pj = L.parity(j)
                for k in range(j, d):
                    pk = L.parity(k)
                    checked += 1
                    total: dict[int, Fraction] = {}
                    for (a, b, c, sgn) in (
                        (i, j, k, -1 if (pi * pk) % 2 else 1),
                        (j, k, i, -1 if (pj * pi) % 2 else 1),
                        (k, i, j, -1 if (pk * pj) % 2 else 1),
                    ):
                        inner = L.bracket_basis(b, c)
                        for l, cf in inner.items():
                            outer = L.bracket_basis(a, l)
                            for s, cf2 in outer.items():
                                val = total.get(s, ZERO) + sgn * cf * cf2
                                if val:
                                    total[s] = val
                                else:
                                    total.pop(s, None)
                    if total:
                        jacobi_ok = False
                        if len(failures) < max_failures:
                            failures.append(
                                "jacobi fails on "
                                f"({L.labels[i]}, {L.labels[j]}, {L.labels[k]})"
                            )
    return ValidationReport(anti_ok and jacobi_ok, anti_ok, jacobi_ok, checked, failures)


class Subspace:
    """Graded subspace of a coordinate space with parity-tagged coordinates.

    Basis vectors are split into their even and odd parts on construction,
    so the stored span is always graded; each parity sector is kept as a
    canonical reduced row-echelon basis.
    """

    def __init__(self, parities: tuple[int, ...],
                 even_rows: list[list[Fraction]], odd_rows: list[list[Fraction]]):
        self.parities = tuple(parities)
        self.even_rows = even_rows
        self.odd_rows = odd_rows

    @classmethod
    def from_vectors(cls, parities, vectors) -> "Subspace":
        parities = tuple(parities)
        d = len(parities)
        even = Echelon(d)
        odd = Echelon(d)
        for v in vectors:
            v = [frac(x) for x in v]
            even.add([x if parities[i] == 0 else ZERO for i, x in enumerate(v)])
            odd.add([x if parities[i] == 1 else ZERO for i, x in enumerate(v)])
        return cls(parities, even.dense_rows(), odd.dense_rows())

    @classmethod
    def zero(cls, parities) -> "Subspace":
        return cls(tuple(parities), [], [])

    @property
    def ambient_dim(self) -> int:
        return len(self.parities)

    @property
    def even_dim(self) -> int:
        return len(self.even_rows)

    @property
    def odd_dim(self) -> int:
        return len(self.odd_rows)

    @property
    def dim(self) -> int:
        return self.even_dim + self.odd_dim

    def basis(self) -> list[list[Fraction]]:
        return [list(r) for r in self.even_rows + self.odd_rows]

    def is_zero(self) -> bool:
        return self.dim == 0

    def contains(self, vector) -> bool:
        v = [frac(x) for x in vector]
        for p, rows in ((0, self.even_rows), (1, self.odd_rows)):
            part = [x if self.parities[i] == p else ZERO for i, x in enumerate(v)]
            ech = Echelon(self.ambient_dim)
            for r in rows:
                ech.add(r)
            if not ech.contains(part):
                return False
        return True

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis())

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.parities == other.parities
                and self.even_rows == other.even_rows
                and self.odd_rows == other.odd_rows)

    def __repr__(self):
        return f"<Subspace {self.even_dim}|{self.odd_dim} of dim {self.ambient_dim}>"


# -- structural queries -----------------------------------------------------


def center(L: LieSuperAlgebra) -> Subspace:
    """Elements bracketing to zero with the whole algebra."""
    d = L.dim
    ech = Echelon(d)
    rows: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), row in L.c.items():
        for s, coeff in row.items():
            rows.setdefault((j, s), {})[i] = coeff
    for row in rows.values():
        ech.add(row)
    return Subspace.from_vectors(L.parities, ech.nullspace())


def commutant(L: LieSuperAlgebra) -> Subspace:
    """Span of all brackets [x_i, x_j]."""
    vectors = []
    for i in range(L.dim):
        for j in range(i, L.dim):
            row = L.bracket_basis(i, j)
            if row:
                v = zero_vec(L.dim)
                for k, coeff in row.items():
                    v[k] = coeff
                vectors.append(v)
    return Subspace.from_vectors(L.parities, vectors)


def _bracket_span(L: LieSuperAlgebra, a: Subspace, b: Subspace) -> Subspace:
    vectors = []
    for u in a.basis():
        for v in b.basis():
            w = L.bracket(u, v)
            if any(w):
                vectors.append(w)
    return Subspace.from_vectors(L.parities, vectors)


def derived_series(L: LieSuperAlgebra) -> list[Subspace]:
    """[L', L'', ...] down to the first stationary term."""
    series = [commutant(L)]
    while True:
        nxt = _bracket_span(L, series[-1], series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
        assert len(series) <= L.dim + 1, "derived series must strictly decrease"
    return series


def centralizer(L: LieSuperAlgebra, S: Subspace) -> Subspace:
    """Elements bracketing to zero with every element of S."""
    d = L.dim
    ech = Echelon(d)
    for w in S.basis():
        rows: dict[int, dict[int, Fraction]] = {}
        for (i, j), row in L.c.items():
            wj = w[j]
            if not wj:
                continue
            for s, coeff in row.items():
                r = rows.setdefault(s, {})
                r[i] = r.get(i, ZERO) + wj * coeff
        for row in rows.values():
            ech.add(row)
    return Subspace.from_vectors(L.parities, ech.nullspace())


def is_ideal(L: LieSuperAlgebra, S: Subspace) -> bool:
    for i in range(L.dim):
        e = unit_vec(L.dim, i)
        for w in S.basis():
            if not S.contains(L.bracket(e, w)):
                return False
    return True


def quotient(L: LieSuperAlgebra, S: Subspace) -> LieSuperAlgebra:
    """Quotient by a graded ideal, on the complement of S's pivot coordinates."""
    if not is_ideal(L, S):
        raise NotAnIdealError("quotient requires an ideal")
    d = L.dim
    pivots = set()
    for rows in (S.even_rows, S.odd_rows):
        for r in rows:
            for j, x in enumerate(r):
                if x:
                    pivots.add(j)
                    break
    comp_even = [j for j in range(L.m) if j not in pivots]
    comp_odd = [j for j in range(L.m, d) if j not in pivots]
    comp = comp_even + comp_odd
    basis_rows = S.basis() + [unit_vec(d, j) for j in comp]
    ns = len(S.basis())
    brackets = {}
    for a, ja in enumerate(comp):
        for b, jb in enumerate(comp):
            w = L.bracket(unit_vec(d, ja), unit_vec(d, jb))
            if not any(w):
                continue
            coords = solve_coords(basis_rows, w, d)
            assert coords is not None
            row = {cidx: coeff for cidx, coeff in enumerate(coords[ns:]) if coeff}
            if row:
                brackets[(a, b)] = row
    labels = [L.labels[j] for j in comp]
    return LieSuperAlgebra(len(comp_even), len(comp_odd), brackets, labels,
                           name=f"{L.name}/ideal" if L.name else "")


def direct_sum(a: LieSuperAlgebra, b: LieSuperAlgebra) -> LieSuperAlgebra:
    """Direct sum with basis reordered to evens first."""
    def embed(L, even_offset, odd_offset):
        def mapped(i):
            if i < L.m:
                return even_offset + i
            return odd_offset + (i - L.m)
        return mapped

    map_a = embed(a, 0, a.m + b.m)
    map_b = embed(b, a.m, a.m + b.m + a.n)
    brackets = {}
    for src, mp in ((a, map_a), (b, map_b)):
        for (i, j), row in src.c.items():
            brackets[(mp(i), mp(j))] = {mp(k): coeff for k, coeff in row.items()}
    labels = [""] * (a.dim + b.dim)
    for i in range(a.dim):
        labels[map_a(i)] = f"a.{a.labels[i]}"
    for i in range(b.dim):
        labels[map_b(i)] = f"b.{b.labels[i]}"
    return LieSuperAlgebra(a.m + b.m, a.n + b.n, brackets, labels,
                           name=f"{a.name}+{b.name}")


# -- tensoring with a Grassmann algebra --------------------------------------


class GrassmannTensorBracket:
    """Bracket evaluator on L tensor Lambda(q).

    Elements are coordinate vectors of Grassmann coefficients; the bracket of
    x tensor a and y tensor b is (-1)^{|a||y|} [x, y] tensor ab.
    """

    def __init__(self, L: LieSuperAlgebra, q: int):
        self.L = L
        self.q = q

    def zero(self) -> list[GrassmannElement]:
        return [GrassmannElement.zero(self.q) for _ in range(self.L.dim)]

    def basis_tensor(self, i: int, a: GrassmannElement) -> list[GrassmannElement]:
        out = self.zero()
        out[i] = a
        return out

    def bracket(self, u, v) -> list[GrassmannElement]:
        L, q = self.L, self.q
        out = self.zero()
        for i, a in enumerate(u):
            if a.is_zero():
                continue
            for pa in (0, 1):
                ap = a.homogeneous_part(pa)
                if ap.is_zero():
                    continue
                for j, b in enumerate(v):
                    if b.is_zero():
                        continue
                    row = L.bracket_basis(i, j)
                    if not row:
                        continue
                    coeff = ap * b
                    if pa and L.parity(j):
                        coeff = -coeff
                    for k, cf in row.items():
                        out[k] = out[k] + coeff * cf
        return out


def tensor_grassmann_algebra(
    L: LieSuperAlgebra, nodd: int
) -> tuple[LieSuperAlgebra, list[tuple[int, int]]]:
    """Materialize L tensor Lambda(nodd) as a structure-constant algebra.

    Returns the algebra and its basis labels (i, mask): basis vector i of L
    tensor the odd monomial with generator set ``mask``.  Basis order is all
    even vectors first, odd vectors after, each block in (i, mask) order.
    """
    items = [(i, mask) for i in range(L.dim) for mask in range(1 << nodd)]
    def par(item):
        i, mask = item
        return (L.parity(i) + mask.bit_count()) & 1
    ordered = [it for it in items if par(it) == 0] + [it for it in items if par(it) == 1]
    index = {it: a for a, it in enumerate(ordered)}
    m = sum(1 for it in items if par(it) == 0)
    brackets = {}
    for (i, si) in ordered:
        for (j, sj) in ordered:
            row = L.bracket_basis(i, j)
            if not row:
                continue
            sign = merge_sign(si, sj)
            if not sign:
                continue
            if (si.bit_count() & 1) and L.parity(j):
                sign = -sign
            a, b = index[(i, si)], index[(j, sj)]
            target_mask = si | sj
            entry = {index[(k, target_mask)]: sign * coeff for k, coeff in row.items()}
            brackets[(a, b)] = entry
    labels = []
    for (i, mask) in ordered:
        gens = "".join(f"z{t + 1}" for t in range(nodd) if mask >> t & 1)
        labels.append(f"{L.labels[i]}*{gens}" if gens else L.labels[i])
    alg = LieSuperAlgebra(m, len(ordered) - m, brackets, labels,
                          name=f"{L.name}(x)Sym({nodd})" if L.name else "")
    return alg, ordered


# -- even-part radical and quasireductivity ----------------------------------


def even_killing_form(L: LieSuperAlgebra) -> list[list[Fraction]]:
    """Killing form of the even part acting on itself."""
    m = L.m
    ads = []
    for i in range(m):
        mat = zero_mat(m, m)
        for k in range(m):
            for s, coeff in L.bracket_basis(k, i).items():
                if s < m:
                    mat[k][s] = coeff
        ads.append(mat)
    form = zero_mat(m, m)
    for i in range(m):
        for j in range(i, m):
            val = ZERO
            for r in range(m):
                for t in range(m):
                    val += ads[i][r][t] * ads[j][t][r]
            form[i][j] = val
            form[j][i] = val
    return form


def even_radical(L: LieSuperAlgebra) -> Subspace:
    """Solvable radical of the even part: the Killing-orthogonal of [L0, L0].

    Classical characterization in characteristic zero; no solvable series
    needs to be followed.
    """
    m = L.m
    form = even_killing_form(L)
    commutant_rows = []
    for i in range(m):
        for j in range(i, m):
            row = L.bracket_basis(i, j)
            if row:
                v = zero_vec(m)
                for k, coeff in row.items():
                    v[k] = coeff
                commutant_rows.append(v)
    ech = Echelon(m)
    for w in commutant_rows:
        constraint = zero_vec(m)
        for i in range(m):
            constraint[i] = sum((w[j] * form[i][j] for j in range(m)), ZERO)
        ech.add(constraint)
    padded = [v + zero_vec(L.n) for v in ech.nullspace()]
    return Subspace.from_vectors(L.parities, padded)


def even_center(L: LieSuperAlgebra) -> Subspace:
    """Center of the even part inside the even part."""
    m = L.m
    ech = Echelon(m)
    rows: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), row in L.c.items():
        if i >= m or j >= m:
            continue
        for s, coeff in row.items():
            if s < m:
                rows.setdefault((j, s), {})[i] = coeff
    for row in rows.values():
        ech.add(row)
    padded = [v + zero_vec(L.n) for v in ech.nullspace()]
    return Subspace.from_vectors(L.parities, padded)


@dataclass
class QuasireductivityCertificate:
    quasireductive: bool
    radical: Subspace
    center0: Subspace
    radical_is_center: bool
    central_actions_semisimple: bool
    failing_element: list[Fraction] | None
    detail: str


def is_quasireductive(L: LieSuperAlgebra) -> QuasireductivityCertificate:
    """Even part reductive and its center acting ad-semisimply on all of L.

    Both conditions are decided exactly: the radical by the Killing-form
    criterion and semisimplicity by a vanishing Jordan nilpotent part.  Only
    Lie-algebra-level data enters the verdict.
    """
    rad = even_radical(L)
    z0 = even_center(L)
    cond_a = rad == z0
    cond_b = True
    failing = None
    detail = ""
    if not cond_a:
        detail = (f"even radical has dim {rad.dim}, even-part center has dim "
                  f"{z0.dim}; the even part is not reductive")
    if cond_a:
        for z in z0.basis():
            split = jordan.jordan_chevalley(L.ad_vec(z))
            if not is_zero_mat(split.nilpotent):
                cond_b = False
                failing = z
                detail = "a central element of the even part acts with a nonzero nilpotent Jordan part"
                break
    ok = cond_a and cond_b
    return QuasireductivityCertificate(ok, rad, z0, cond_a, cond_b, failing, detail)


# -- constructors -------------------------------------------------------------


def make_gl(m: int, n: int) -> LieSuperAlgebra:
    """gl(m|n) on elementary matrices, even units first in grid order."""
    d = m + n
    def rho(i):
        return 0 if i < m else 1
    grid = [(i, j) for i in range(d) for j in range(d)]
    even = [(i, j) for (i, j) in grid if rho(i) == rho(j)]
    odd = [(i, j) for (i, j) in grid if rho(i) != rho(j)]
    basis = even + odd
    index = {pair: a for a, pair in enumerate(basis)}
    brackets = {}
    for a, (i, j) in enumerate(basis):
        pa = (rho(i) + rho(j)) & 1
        for b, (k, l) in enumerate(basis):
            pb = (rho(k) + rho(l)) & 1
            row: dict[int, Fraction] = {}
            if j == k:
                t = index[(i, l)]
                row[t] = row.get(t, ZERO) + 1
            if l == i:
                t = index[(k, j)]
                sign = -1 if (pa * pb) % 2 else 1
                row[t] = row.get(t, ZERO) - sign
            row = {t: frac(v) for t, v in row.items() if v}
            if row:
                brackets[(a, b)] = row
    labels = [f"E[{i + 1},{j + 1}]" for (i, j) in basis]
    return LieSuperAlgebra(len(even), len(odd), brackets, labels, name=f"gl({m}|{n})")


def make_sl2() -> LieSuperAlgebra:
    brackets = {
        (0, 1): {1: frac(2)},
        (1, 0): {1: frac(-2)},
        (0, 2): {2: frac(-2)},
        (2, 0): {2: frac(2)},
        (1, 2): {0: frac(1)},
        (2, 1): {0: frac(-1)},
    }
    return LieSuperAlgebra(3, 0, brackets, ["h", "e", "f"], name="sl2")


def make_abelian(m: int, n: int) -> LieSuperAlgebra:
    return LieSuperAlgebra(m, n, {}, name=f"abelian({m}|{n})")


def make_affine_line() -> LieSuperAlgebra:
    """The 2-dimensional nonabelian Lie algebra [h, e] = e."""
    brackets = {(0, 1): {1: frac(1)}, (1, 0): {1: frac(-1)}}
    return LieSuperAlgebra(2, 0, brackets, ["h", "e"], name="aff1")


def make_mixed_pair_line() -> LieSuperAlgebra:
    """Two commuting even elements and one odd v with [v, v] = 2x + 4y.

    The square of the odd generator has a Jordan decomposition whose parts
    do not stay in the line it spans; see the folded triangular supergroup
    in :mod:`superlie.points` for the group this comes from.
    """
    brackets = {(2, 2): {0: frac(2), 1: frac(4)}}
    return LieSuperAlgebra(2, 1, brackets, ["x", "y", "v"], name="mixed-jordan")
