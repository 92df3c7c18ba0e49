"""Superderivations: solving for them, composing them, tensoring them.

A superderivation of parity p acts on coordinate row vectors from the right
and satisfies the right Leibniz rule

    ([x, y])D = [x, (y)D] + (-1)^{p |y|} [(x)D, y]

for homogeneous y.  Adjoint operators x -> [x, z] are derivations in exactly
this sense.  The same convention, with the bracket replaced by the product,
governs derivations of the odd symmetric algebra Sym(n) = Lambda(z_1..z_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import jordan
from .grassmann import merge_sign
from .liealg import (
    LieSuperAlgebra,
    Subspace,
    make_sl2,
    tensor_grassmann_algebra,
)
from .linalg import (
    Echelon,
    ZERO,
    flatten,
    frac,
    mat_mul,
    mat_sub,
    mat_vec,
    solve_coords,
    unit_vec,
    zero_mat,
    zero_vec,
)


class SuperDerivation:
    """A parity-tagged operator matrix in the row-vector convention."""

    __slots__ = ("parity", "matrix")

    def __init__(self, parity: int, matrix):
        self.parity = parity & 1
        self.matrix = [[frac(x) for x in row] for row in matrix]

    @property
    def size(self) -> int:
        return len(self.matrix)

    def apply(self, v) -> list[Fraction]:
        return mat_vec(v, self.matrix)

    def bracket(self, other: "SuperDerivation") -> "SuperDerivation":
        ab = mat_mul(self.matrix, other.matrix)
        ba = mat_mul(other.matrix, self.matrix)
        if self.parity and other.parity:
            out = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]
        else:
            out = mat_sub(ab, ba)
        return SuperDerivation(self.parity ^ other.parity, out)

    def __eq__(self, other):
        if not isinstance(other, SuperDerivation):
            return NotImplemented
        return self.parity == other.parity and self.matrix == other.matrix

    def __repr__(self):
        return f"<SuperDerivation parity {self.parity} on dim {self.size}>"


def is_superderivation(L: LieSuperAlgebra, der: SuperDerivation) -> bool:
    """Right Leibniz rule on every pair of basis vectors."""
    d = L.dim
    for i in range(d):
        ei = unit_vec(d, i)
        di = der.matrix[i]
        for j in range(d):
            ej = unit_vec(d, j)
            lhs = zero_vec(d)
            for k, cf in L.bracket_basis(i, j).items():
                for s, x in enumerate(der.matrix[k]):
                    if x:
                        lhs[s] += cf * x
            rhs = L.bracket(ei, der.matrix[j])
            second = L.bracket(di, ej)
            sign = -1 if (der.parity and L.parity(j)) else 1
            for s in range(d):
                rhs[s] += sign * second[s]
            if lhs != rhs:
                return False
    return True


@dataclass
class DerivationSpace:
    L: LieSuperAlgebra
    even: list[SuperDerivation]
    odd: list[SuperDerivation]

    @property
    def dim(self) -> int:
        return len(self.even) + len(self.odd)

    def basis(self) -> list[SuperDerivation]:
        return self.even + self.odd

    def contains(self, parity: int, matrix) -> bool:
        mats = self.even if parity % 2 == 0 else self.odd
        d = self.L.dim
        ech = Echelon(d * d)
        for der in mats:
            ech.add(flatten(der.matrix))
        return ech.contains(flatten(matrix))


def derivation_space(L: LieSuperAlgebra) -> DerivationSpace:
    """Solve the Leibniz constraints for all superderivations of L.

    The unknowns are the matrix entries D_{ks}; the parity constraint
    |x_s| = |x_k| + p splits the problem into independent even and odd
    systems.  Every adjoint operator is asserted to be a solution, which
    pins the sign conventions.
    """
    d = L.dim
    right_of: dict[tuple[int, int], dict[int, Fraction]] = {}
    left_of: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, t), row in L.c.items():
        for s, cf in row.items():
            right_of.setdefault((i, s), {})[t] = cf
            left_of.setdefault((t, s), {})[i] = cf
    by_parity: list[list[SuperDerivation]] = [[], []]
    for p in (0, 1):
        admissible = [(k, s) for k in range(d) for s in range(d)
                      if (L.parity(k) + L.parity(s)) % 2 == p]
        index = {ks: u for u, ks in enumerate(admissible)}
        ech = Echelon(len(admissible))
        for i in range(d):
            for j in range(d):
                sign = -1 if (p and L.parity(j)) else 1
                pair = L.bracket_basis(i, j)
                for s in range(d):
                    row: dict[int, Fraction] = {}
                    for k, cf in pair.items():
                        u = index.get((k, s))
                        if u is not None:
                            row[u] = row.get(u, ZERO) + cf
                    for t, cf in right_of.get((i, s), {}).items():
                        u = index.get((j, t))
                        if u is not None:
                            row[u] = row.get(u, ZERO) - cf
                    for t, cf in left_of.get((j, s), {}).items():
                        u = index.get((i, t))
                        if u is not None:
                            row[u] = row.get(u, ZERO) - sign * cf
                    if row:
                        ech.add(row)
        for v in ech.nullspace():
            mat = zero_mat(d, d)
            for u, (k, s) in enumerate(admissible):
                mat[k][s] = v[u]
            by_parity[p].append(SuperDerivation(p, mat))
    space = DerivationSpace(L, by_parity[0], by_parity[1])
    for i in range(d):
        assert space.contains(L.parity(i), L.ad(i)), \
            "adjoint operators must be superderivations"
    return space


def adjoint_derivations(L: LieSuperAlgebra) -> list[SuperDerivation]:
    return [SuperDerivation(L.parity(i), L.ad(i)) for i in range(L.dim)]


def inner_rank(L: LieSuperAlgebra) -> int:
    """Dimension of the adjoint image, equal to dim L minus dim of the center."""
    d = L.dim
    total = 0
    for p in (0, 1):
        ech = Echelon(d * d)
        for i in range(d):
            if L.parity(i) == p:
                ech.add(flatten(L.ad(i)))
        total += ech.rank
    return total


def outer_dimension(L: LieSuperAlgebra, space: DerivationSpace | None = None) -> int:
    if space is None:
        space = derivation_space(L)
    return space.dim - inner_rank(L)


# -- derivations of the odd symmetric algebra ---------------------------------


def sym_partial(n: int, i: int) -> list[list[Fraction]]:
    """Right partial derivative by z_i (1-based) on Sym(n), as a matrix.

    Coordinates are indexed by generator bitmasks; the sign counts the
    generators above z_i that the derivative moves past:
    (z_S) d_i = (-1)^{#{j in S : j > i}} z_{S minus i}.
    """
    size = 1 << n
    mat = zero_mat(size, size)
    bit = 1 << (i - 1)
    for mask in range(size):
        if mask & bit:
            above = (mask >> i).bit_count()
            mat[mask][mask ^ bit] = frac(-1 if above & 1 else 1)
    return mat


def sym_mult(n: int, smask: int) -> list[list[Fraction]]:
    """Right multiplication by the monomial with generator set ``smask``."""
    size = 1 << n
    mat = zero_mat(size, size)
    for mask in range(size):
        sg = merge_sign(mask, smask)
        if sg:
            mat[mask][mask | smask] = frac(sg)
    return mat


def grassmann_derivations(n: int):
    """Basis of Der(Sym(n)): derive by z_i, then multiply by a monomial.

    Returns (operators, descriptors); descriptor (i, smask) names the
    operator x -> ((x) d_i) z_{smask}, of parity 1 + |smask|.  There are
    n 2^n of them and they are linearly independent.
    """
    ops: list[SuperDerivation] = []
    descr: list[tuple[int, int]] = []
    for i in range(1, n + 1):
        dmat = sym_partial(n, i)
        for smask in range(1 << n):
            mat = mat_mul(dmat, sym_mult(n, smask))
            ops.append(SuperDerivation((1 + smask.bit_count()) & 1, mat))
            descr.append((i, smask))
    return ops, descr


def is_associative_derivation(n: int, der: SuperDerivation) -> bool:
    """Right Leibniz rule against the product of Sym(n), on basis monomials."""
    size = 1 << n
    for tmask in range(size):
        for umask in range(size):
            sg = merge_sign(tmask, umask)
            lhs = zero_vec(size)
            if sg:
                for s, x in enumerate(der.matrix[tmask | umask]):
                    if x:
                        lhs[s] = sg * x
            rhs = zero_vec(size)
            # z_T ((z_U)D): multiply each component of row U back by z_T
            for w, x in enumerate(der.matrix[umask]):
                if x:
                    sg2 = merge_sign(tmask, w)
                    if sg2:
                        rhs[tmask | w] += sg2 * x
            sign = -1 if (der.parity and umask.bit_count() & 1) else 1
            for w, x in enumerate(der.matrix[tmask]):
                if x:
                    sg2 = merge_sign(w, umask)
                    if sg2:
                        rhs[w | umask] += sign * sg2 * x
            if lhs != rhs:
                return False
    return True


# -- the tensor-product derivation algebra ------------------------------------


def _coords_in_basis(basis_flat: list[tuple[int, list[Fraction]]],
                     target: list[Fraction], ncols: int):
    rows = [v for _, v in basis_flat]
    coords = solve_coords(rows, target, ncols)
    if coords is None:
        return None
    return {basis_flat[i][0]: c for i, c in enumerate(coords) if c}


class TensorDerAlgebra:
    """Derivations of L tensor Sym(n) spanned by der(L) tensor Sym and 1 tensor der(Sym).

    The abstract bracket is built from the two product rules

        [d tensor a, d' tensor a'] = (-1)^{|a||d'|} [d, d'] tensor aa'
        [d tensor a, 1 tensor e]   = d tensor (a)e

    and every abstract basis element realizes as an operator matrix on the
    coordinates of the materialized algebra L tensor Sym(n).
    """

    def __init__(self, L: LieSuperAlgebra, nodd: int, der_basis=None):
        self.L = L
        self.nodd = nodd
        self.base, self.base_items = tensor_grassmann_algebra(L, nodd)
        self._base_index = {it: r for r, it in enumerate(self.base_items)}
        if der_basis is None:
            ds = derivation_space(L)
            der_basis = ds.even + ds.odd
        self.der_basis = list(der_basis)
        self.sym_ops, self.sym_descr = grassmann_derivations(nodd)
        self._build_algebra()
        self._realized: dict[int, SuperDerivation] = {}
        self._inner_cache: dict[int, dict[int, Fraction]] = {}

    # construction ----------------------------------------------------------

    def _build_algebra(self):
        nd, ns = len(self.der_basis), len(self.sym_ops)
        d2 = self.L.dim ** 2
        raw = [("der", a, m) for a in range(nd) for m in range(1 << self.nodd)]
        raw += [("sym", b) for b in range(ns)]

        def par(desc):
            if desc[0] == "der":
                return (self.der_basis[desc[1]].parity + desc[2].bit_count()) & 1
            return self.sym_ops[desc[1]].parity

        ordered = [x for x in raw if par(x) == 0] + [x for x in raw if par(x) == 1]
        index = {x: i for i, x in enumerate(ordered)}
        m = sum(1 for x in raw if par(x) == 0)

        der_flat = [[], []]
        for a, der in enumerate(self.der_basis):
            der_flat[der.parity].append((a, flatten(der.matrix)))
        s2 = (1 << self.nodd) ** 2
        sym_flat = [[], []]
        for b, op in enumerate(self.sym_ops):
            sym_flat[op.parity].append((b, flatten(op.matrix)))

        der_comm: dict[tuple[int, int], dict[int, Fraction]] = {}
        for a in range(nd):
            for a2 in range(nd):
                br = self.der_basis[a].bracket(self.der_basis[a2])
                coords = _coords_in_basis(der_flat[br.parity], flatten(br.matrix), d2)
                if coords is None:
                    raise ValueError("derivation basis is not bracket closed")
                der_comm[(a, a2)] = coords
        sym_comm: dict[tuple[int, int], dict[int, Fraction]] = {}
        for b in range(ns):
            for b2 in range(ns):
                br = self.sym_ops[b].bracket(self.sym_ops[b2])
                coords = _coords_in_basis(sym_flat[br.parity], flatten(br.matrix), s2)
                assert coords is not None, "Der(Sym) must be bracket closed"
                sym_comm[(b, b2)] = coords

        brackets: dict[tuple[int, int], dict[int, Fraction]] = {}

        def put(i, j, target, coeff):
            if coeff:
                row = brackets.setdefault((i, j), {})
                row[target] = row.get(target, ZERO) + coeff
                if not row[target]:
                    del row[target]

        for x in ordered:
            i = index[x]
            for y in ordered:
                j = index[y]
                if x[0] == "der" and y[0] == "der":
                    _, a, s1 = x
                    _, a2, s22 = y
                    ms = merge_sign(s1, s22)
                    if not ms:
                        continue
                    sign = ms
                    if (s1.bit_count() & 1) and self.der_basis[a2].parity:
                        sign = -sign
                    for a3, cf in der_comm[(a, a2)].items():
                        put(i, j, index[("der", a3, s1 | s22)], sign * cf)
                elif x[0] == "der" and y[0] == "sym":
                    _, a, s1 = x
                    row = self.sym_ops[y[1]].matrix[s1]
                    for t, cf in enumerate(row):
                        if cf:
                            put(i, j, index[("der", a, t)], cf)
                elif x[0] == "sym" and y[0] == "der":
                    _, a, s1 = y
                    row = self.sym_ops[x[1]].matrix[s1]
                    sign = -1 if (par(x) and par(y)) else 1
                    for t, cf in enumerate(row):
                        if cf:
                            put(i, j, index[("der", a, t)], -sign * cf)
                else:
                    for b3, cf in sym_comm[(x[1], y[1])].items():
                        put(i, j, index[("sym", b3)], cf)

        brackets = {k: v for k, v in brackets.items() if v}
        labels = []
        for x in ordered:
            if x[0] == "der":
                gens = "".join(f"z{t + 1}" for t in range(self.nodd)
                               if x[2] >> t & 1)
                labels.append(f"d{x[1] + 1}*{gens}" if gens else f"d{x[1] + 1}")
            else:
                i, smask = self.sym_descr[x[1]]
                gens = "".join(f"z{t + 1}" for t in range(self.nodd)
                               if smask >> t & 1)
                labels.append(f"del{i}{gens}" if gens else f"del{i}")
        self.descriptors = ordered
        self.index = index
        self.algebra = LieSuperAlgebra(m, len(ordered) - m, brackets, labels,
                                       name="der-tensor")

    # realization -------------------------------------------------------------

    def realize(self, t: int) -> SuperDerivation:
        """Operator matrix of abstract basis element t on L tensor Sym(n)."""
        cached = self._realized.get(t)
        if cached is not None:
            return cached
        size = len(self.base_items)
        mat = zero_mat(size, size)
        desc = self.descriptors[t]
        if desc[0] == "der":
            der = self.der_basis[desc[1]]
            smask = desc[2]
            for r, (k, tmask) in enumerate(self.base_items):
                ms = merge_sign(tmask, smask)
                if not ms:
                    continue
                sign = ms
                if der.parity and tmask.bit_count() & 1:
                    sign = -sign
                for s, cf in enumerate(der.matrix[k]):
                    if cf:
                        mat[r][self._base_index[(s, tmask | smask)]] += sign * cf
            parity = (der.parity + smask.bit_count()) & 1
        else:
            op = self.sym_ops[desc[1]]
            for r, (k, tmask) in enumerate(self.base_items):
                for t2, cf in enumerate(op.matrix[tmask]):
                    if cf:
                        mat[r][self._base_index[(k, t2)]] += cf
            parity = op.parity
        out = SuperDerivation(parity, mat)
        self._realized[t] = out
        return out

    def realize_vec(self, coords) -> SuperDerivation:
        """Realize a coordinate vector; it must be parity homogeneous."""
        size = len(self.base_items)
        mat = zero_mat(size, size)
        parities = set()
        for t, cf in enumerate(coords):
            if not cf:
                continue
            op = self.realize(t)
            parities.add(op.parity)
            for r in range(size):
                row = op.matrix[r]
                out = mat[r]
                for s in range(size):
                    if row[s]:
                        out[s] += cf * row[s]
        if len(parities) > 1:
            raise ValueError("cannot realize a parity-mixed combination")
        return SuperDerivation(parities.pop() if parities else 0, mat)

    def sym_index(self, i: int, smask: int) -> int:
        """Abstract index of 1 tensor ((.) d_i) z_{smask}."""
        b = self.sym_descr.index((i, smask))
        return self.index[("sym", b)]

    # the inner copy of L tensor Sym(n) ---------------------------------------

    def inner_coords(self, i: int, smask: int) -> list[Fraction]:
        """ad(x_i tensor z_{smask}) in abstract coordinates.

        The adjoint action of x_i tensor z_S on L tensor Sym(n) equals the
        tensor operator ad(x_i) tensor z_S, so its coordinates put the
        der-basis expansion of ad(x_i) in the S slots.
        """
        alpha = self._inner_cache.get(i)
        if alpha is None:
            d2 = self.L.dim ** 2
            p = self.L.parity(i)
            basis_flat = [(a, flatten(der.matrix))
                          for a, der in enumerate(self.der_basis)
                          if der.parity == p]
            alpha = _coords_in_basis(basis_flat, flatten(self.L.ad(i)), d2)
            assert alpha is not None, \
                "adjoint operators must lie in the derivation basis span"
            self._inner_cache[i] = alpha
        out = zero_vec(self.algebra.dim)
        for a, cf in alpha.items():
            out[self.index[("der", a, smask)]] = cf
        return out

    def inner_subspace(self) -> Subspace:
        vectors = [self.inner_coords(i, smask)
                   for i in range(self.L.dim)
                   for smask in range(1 << self.nodd)]
        return Subspace.from_vectors(self.algebra.parities, vectors)


def tensor_der(L: LieSuperAlgebra, nodd: int, der_basis=None) -> TensorDerAlgebra:
    return TensorDerAlgebra(L, nodd, der_basis)


# -- semisimplicity of subalgebras between U and Der(U) -----------------------


@dataclass
class KacReport:
    contains_inner: bool
    bracket_closed: bool
    degree_minus_one_rank: int
    required_rank: int
    semisimple: bool

    def summary(self) -> str:
        return (f"contains inner: {self.contains_inner}; closed: "
                f"{self.bracket_closed}; constant-derivative rank "
                f"{self.degree_minus_one_rank} of {self.required_rank}; "
                f"semisimple: {self.semisimple}")


def kac_semisimple_check(tda: TensorDerAlgebra, H: Subspace) -> KacReport:
    """Semisimplicity test for U <= H <= Der(U), U = L tensor Sym(n), L simple.

    H must contain the inner copy of U, be closed under the bracket, and
    project onto the full n-dimensional space of constant-coefficient
    derivatives 1 tensor d_i (the degree -1 layer of Der(Sym(n))).
    """
    inner = tda.inner_subspace()
    contains_inner = H.contains_subspace(inner)
    basis = H.basis()
    closed = all(H.contains(tda.algebra.bracket(u, w))
                 for u in basis for w in basis)
    const_cols = [tda.sym_index(i, 0) for i in range(1, tda.nodd + 1)]
    ech = Echelon(len(const_cols))
    for v in basis:
        ech.add([v[c] for c in const_cols])
    rk = ech.rank
    ok = contains_inner and closed and rk == tda.nodd
    return KacReport(contains_inner, closed, rk, tda.nodd, ok)


# -- a semisimple H whose even part has a non-algebraic image ------------------


@dataclass
class NonalgebraicityReport:
    tda: TensorDerAlgebra
    h: Subspace
    kac: KacReport
    module_dim: int
    operator: list[list[Fraction]]
    split: jordan.JordanSplit
    image_dim: int
    semisimple_in_image: bool
    nilpotent_in_image: bool

    @property
    def verdict(self) -> str:
        if not (self.semisimple_in_image and self.nilpotent_in_image):
            return "NotAlgebraic"
        return "Inconclusive"


def _degree_one_restriction(tda: TensorDerAlgebra, coords) -> list[list[Fraction]]:
    """Restrict an even realized operator to the span of x_i tensor z_j.

    That span is invariant under every even element here: degree-0 operators
    preserve it and degree-2 ones annihilate it, which the slicing asserts.
    """
    keep = [r for r, (_, tmask) in enumerate(tda.base_items)
            if tmask.bit_count() == 1]
    kept = set(keep)
    op = tda.realize_vec(coords)
    for r in keep:
        for c, x in enumerate(op.matrix[r]):
            if x and c not in kept:
                raise ValueError("operator does not preserve the degree-one layer")
    return [[op.matrix[r][c] for c in keep] for r in keep]


def nonalgebraic_subalgebra_example() -> NonalgebraicityReport:
    """A bracket-closed semisimple H whose even part acts non-algebraically.

    Take L = sl2 with its adjoint derivations, n = 2 odd generators, and

        H = inner(L tensor Sym(2))
            + span{1 tensor d1, 1 tensor d2, 1 tensor e},
        e = ((.) d1) z1 + ((.) d1) z2 + ((.) d2) z2.

    H passes the semisimplicity test, yet on the 6-dimensional module
    V = L tensor span{z1, z2} the Jordan parts of the even operator
    1 tensor e both fall outside the image of the even part of H, so that
    image is not the Lie algebra of any algebraic group.
    """
    L = make_sl2()
    tda = TensorDerAlgebra(L, 2, der_basis=adjoint_derivations(L))
    dim = tda.algebra.dim
    vectors = [tda.inner_coords(i, smask)
               for i in range(L.dim) for smask in range(4)]
    for i, smask in ((1, 0), (2, 0)):
        vectors.append(unit_vec(dim, tda.sym_index(i, smask)))
    mix = zero_vec(dim)
    for i, smask in ((1, 1), (1, 2), (2, 2)):
        mix[tda.sym_index(i, smask)] = frac(1)
    vectors.append(mix)
    H = Subspace.from_vectors(tda.algebra.parities, vectors)
    kac = kac_semisimple_check(tda, H)

    operator = _degree_one_restriction(tda, mix)
    split = jordan.jordan_chevalley(operator)
    vdim = len(operator)
    ech = Echelon(vdim * vdim)
    for v in H.even_rows:
        ech.add(flatten(_degree_one_restriction(tda, v)))
    s_in = ech.contains(flatten(split.semisimple))
    n_in = ech.contains(flatten(split.nilpotent))
    return NonalgebraicityReport(tda, H, kac, vdim, operator, split,
                                 ech.rank, s_in, n_in)
