"""Coactions of a supergroup on an abelian supergroup, at coordinate level.

A coaction is an algebra morphism rho: K[X] -> K[X] (x) K[G].  On the
unipotent coordinates it is linear, rho(z_i) = sum_j z_j (x) f_ji, and on a
character g it takes the exponential form

    rho(g) = (g (x) 1) * exp( sum_i z_i (x) f_i(g) )

with f_i additive in g and each f_i(g) nilpotent, so the series is finite.
Expanding the exponential reproduces the divided-power coefficients
prod_i f_i(g)^{lambda_i} / lambda_i! together with the Koszul signs that the
tensor-algebra product inserts; those signs are forced by the morphism
property and are part of the expected values below.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .hopf import (
    AbelianHopfAlgebra,
    FreeHopfSuperalgebra,
    HopfElement,
    MonomialHopfAlgebra,
    TensorElement,
    tensor,
)
from .linalg import Echelon, ZERO, frac


class NonNilpotentError(ValueError):
    pass


@dataclass(frozen=True)
class CoactionData:
    """Linear data defining a coaction: the coordinate matrix and the
    character-to-nilpotent maps, the latter stored by their values on the
    standard character generators and extended additively."""

    source: MonomialHopfAlgebra
    target: MonomialHopfAlgebra
    matrix: tuple           # matrix[i][j] = f_{(i+1)(j+1)} in the target
    char_values: tuple      # char_values[i][p] = f_{i+1}(t_{p+1})

    @staticmethod
    def build(source, target, matrix, char_values) -> "CoactionData":
        n = source.l + source.k
        matrix = tuple(tuple(target.coerce(x) for x in row) for row in matrix)
        char_values = tuple(tuple(target.coerce(x) for x in row)
                            for row in char_values)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError("coordinate matrix must be square of size l + k")
        if len(char_values) != n or any(len(row) != source.r
                                        for row in char_values):
            raise ValueError("one character value per coordinate and torus factor")
        return CoactionData(source, target, matrix, char_values)


def trivial_coaction_data(source, target) -> CoactionData:
    n = source.l + source.k
    matrix = [[target.one() if i == j else target.zero() for j in range(n)]
              for i in range(n)]
    chars = [[target.zero()] * source.r for _ in range(n)]
    return CoactionData.build(source, target, matrix, chars)


class Coaction:
    """Evaluator for the coaction defined by a CoactionData.

    Construction validates parities and nilpotency; the compatibility
    equations themselves are the business of verify_coaction.
    """

    def __init__(self, data: CoactionData):
        X, G = data.source, data.target
        n = X.l + X.k
        for i in range(n):
            pi = X.coordinate_parity(i + 1)
            for j in range(n):
                el = data.matrix[i][j]
                if not el.is_zero() and el.parity() != (pi + X.coordinate_parity(j + 1)) % 2:
                    raise ValueError(f"matrix entry ({i + 1},{j + 1}) has wrong parity")
            for p in range(X.r):
                el = data.char_values[i][p]
                if el.is_zero():
                    continue
                if el.parity() != pi:
                    raise ValueError(f"character value for coordinate {i + 1} has wrong parity")
                if not el.is_nilpotent():
                    raise NonNilpotentError(
                        f"character value for coordinate {i + 1} is not nilpotent")
        self.data = data
        self.X, self.G = X, G
        self._mono_cache: dict = {}

    # -- the two generator images ------------------------------------------

    def f(self, i: int, exponents) -> HopfElement:
        """f_i(g) for the character with the given exponent vector, 1-based i."""
        out = self.G.zero()
        for p, e in enumerate(exponents):
            if e:
                out = out + e * self.data.char_values[i - 1][p]
        return out

    def coordinate_image(self, i: int) -> TensorElement:
        X, G = self.X, self.G
        out = TensorElement.zero((X, G))
        for j in range(1, X.l + X.k + 1):
            fji = self.data.matrix[j - 1][i - 1]
            if not fji.is_zero():
                out = out + tensor(X.coordinate(j), fji)
        return out

    def character_image(self, exponents) -> TensorElement:
        X, G = self.X, self.G
        z_of_g = TensorElement.zero((X, G))
        for i in range(1, X.l + X.k + 1):
            fi = self.f(i, exponents)
            if not fi.is_zero():
                z_of_g = z_of_g + tensor(X.coordinate(i), fi)
        # exp(z(g)); finite because every f_i(g) is nilpotent
        acc = TensorElement.one((X, G))
        term = acc
        p = 1
        while True:
            term = term * z_of_g * Fraction(1, p)
            if term.is_zero():
                break
            acc = acc + term
            p += 1
        return tensor(X.character(exponents), G.one()) * acc

    # -- evaluation ----------------------------------------------------------

    def apply_monomial(self, mon) -> TensorElement:
        mon = self.X.check_monomial(mon)
        hit = self._mono_cache.get(mon)
        if hit is not None:
            return hit
        X = self.X
        out = self.character_image(mon[:X.r])
        for i in range(1, X.l + X.k + 1):
            image = None
            for _ in range(mon[X.r + i - 1]):
                image = image if image is not None else self.coordinate_image(i)
                out = out * image
        self._mono_cache[mon] = out
        return out

    def apply(self, element: HopfElement) -> TensorElement:
        out = TensorElement.zero((self.X, self.G))
        for mon, c in element.terms.items():
            out = out + c * self.apply_monomial(mon)
        return out

    __call__ = apply

    def coact_slot(self, te: TensorElement) -> TensorElement:
        """Apply the coaction to slot 0 of an X (x) ... tensor.

        The coaction is parity preserving, so splicing needs no signs.
        """
        assert te.algebras[0] is self.X
        algebras = (self.X, self.G) + te.algebras[1:]
        out: dict = {}
        for key, c in te.terms.items():
            for key2, c2 in self.apply_monomial(key[0]).terms.items():
                nk = key2 + key[1:]
                val = out.get(nk, ZERO) + c * c2
                if val:
                    out[nk] = val
                else:
                    out.pop(nk, None)
        return TensorElement(algebras, out)

    def read_back_f(self, i: int, exponents) -> HopfElement:
        """Recover f_i(g) as the z_i-coefficient of rho(g); round-trip check."""
        X = self.X
        target = list(X.character(tuple(exponents)).terms)[0]
        want = tuple(target[p] for p in range(X.r)) + tuple(
            1 if s == X.r + i - 1 else 0 for s in range(X.r, X.nslots))
        out = self.G.zero()
        for (mx, mg), c in self.character_image(exponents).terms.items():
            if mx == want:
                out = out + self.G.monomial(mg, c)
        return out


def build_coaction(data: CoactionData) -> Coaction:
    return Coaction(data)


# -- verification ---------------------------------------------------------------


@dataclass
class CoactionReport:
    ok: bool
    checked: int
    failures: list[str]

    def first_failure(self):
        return self.failures[0] if self.failures else None


def verify_coaction(data: CoactionData, max_degree: int = 3,
                    max_failures: int = 8) -> CoactionReport:
    """Exact scan of the comodule and compatibility conditions.

    Checks, in order: the supermodule equations on the coordinate matrix;
    the comultiplication compatibility of each character map; comodule
    coassociativity and the counit law on every generator; the morphism
    property on basis-monomial pairs up to max_degree; and coassociativity
    plus counit again on the full degree-bounded basis.
    """
    rho = build_coaction(data)
    X, G = data.source, data.target
    n = X.l + X.k
    failures: list[str] = []
    checked = 0

    def note(msg):
        if len(failures) < max_failures:
            failures.append(msg)

    # supermodule conditions on the coordinate matrix
    for i in range(n):
        for j in range(n):
            checked += 1
            fij = data.matrix[i][j]
            want = G.comultiply(fij)
            got = TensorElement.zero((G, G))
            for t in range(n):
                got = got + tensor(data.matrix[i][t], data.matrix[t][j])
            if got != want:
                note(f"matrix comultiplication fails at ({i + 1},{j + 1})")
            delta = frac(1 if i == j else 0)
            if G.counit(fij) != delta:
                note(f"matrix counit fails at ({i + 1},{j + 1})")

    # compatibility of the character maps (one equation per i and generator)
    for p in range(X.r):
        g = tuple(1 if q == p else 0 for q in range(X.r))
        for i in range(1, n + 1):
            checked += 1
            fi = rho.f(i, g)
            want = G.comultiply(fi)
            got = tensor(fi, G.one())
            for j in range(1, n + 1):
                fj = rho.f(j, g)
                if not fj.is_zero():
                    got = got + tensor(data.matrix[i - 1][j - 1], fj)
            if got != want:
                note(f"character compatibility fails for coordinate {i}, "
                     f"torus generator {p + 1}")

    # comodule coassociativity and counit on every generator
    generators = [X.coordinate(i) for i in range(1, n + 1)]
    generators += [X.character(tuple(1 if q == p else 0 for q in range(X.r)))
                   for p in range(X.r)]
    for gen in generators:
        checked += 1
        image = rho.apply(gen)
        if rho.coact_slot(image) != image.comultiply_slot(1):
            note(f"comodule coassociativity fails on {gen}")
        if image.counit_slot(1).slot_element() != gen:
            note(f"comodule counit fails on {gen}")

    # morphism property on basis pairs
    monomials = list(X.basis_monomials(max_degree, group_range=1))
    for m1 in monomials:
        d1 = X.monomial_degree(m1)
        for m2 in monomials:
            if d1 + X.monomial_degree(m2) > max_degree:
                continue
            checked += 1
            prod = X.monomial(m1) * X.monomial(m2)
            if rho.apply(prod) != rho.apply_monomial(m1) * rho.apply_monomial(m2):
                note(f"morphism property fails on {X.monomial_str(m1)} * "
                     f"{X.monomial_str(m2)}")

    # coassociativity and counit on the whole bounded basis
    for m in monomials:
        checked += 1
        image = rho.apply_monomial(m)
        if rho.coact_slot(image) != image.comultiply_slot(1):
            note(f"full-basis coassociativity fails on {X.monomial_str(m)}")
        if image.counit_slot(1).slot_element() != X.monomial(m):
            note(f"full-basis counit fails on {X.monomial_str(m)}")

    return CoactionReport(not failures, checked, failures)


# -- the fixed counterexample action ---------------------------------------------


def _element_vector(G, el, index):
    v = [ZERO] * len(index)
    for mon, c in el.terms.items():
        v[index[mon]] = c
    return v


@dataclass
class SubgroupCase:
    even_part: str
    odd_part: str
    residue_is_zero: bool
    witness: str | None


@dataclass
class SubgroupResidueReport:
    """Every proper graded coordinate subspace leaves a nonzero residue.

    The parameterized odd lines are covered by a rank certificate (the two
    odd character values stay independent, so any single substitution leaves
    a nonzero degree-one term) plus exact spot checks on sample slopes.
    """

    cases: list = field(default_factory=list)
    sampled_lines: list = field(default_factory=list)
    line_rank: int = 0
    line_rank_required: int = 2
    structure_rank: int = 0
    full_space_residue_zero: bool = False
    ok: bool = False


@dataclass
class IdealCase:
    line: str
    ideal_dim: int
    degree_one_dim: int
    contains_u: bool
    contains_v: bool
    contains_uv: bool
    all_inside: bool


@dataclass
class IdealExclusionReport:
    """No quotient by a proper nonzero Hopf ideal can absorb all the
    structure elements of the action, so only the trivial kernel acts."""

    cases: list = field(default_factory=list)
    generator_rank: int = 0
    ok: bool = False


def unitriangular_coaction_data() -> CoactionData:
    """One even and two odd coordinates over a torus, acted on by the odd
    abelian supergroup with two primitive generators."""
    X = AbelianHopfAlgebra(1, 1, 2)
    G = FreeHopfSuperalgebra(odd=("u", "v"))
    u, v = G.by_name("u"), G.by_name("v")
    one, zero = G.one(), G.zero()
    matrix = [
        [one, -v, u],
        [zero, one, zero],
        [zero, zero, one],
    ]
    chars = [[u * v], [u], [v]]
    return CoactionData.build(X, G, matrix, chars)


def _substituted(X, mon, kill_even, odd_images):
    """Image of a coordinate monomial with torus exponents set to zero and
    each coordinate replaced by its residue class."""
    out = X.one()
    if kill_even and mon[X.r]:
        return X.zero()
    for i in range(1, X.l + X.k + 1):
        e = mon[X.r + i - 1]
        for _ in range(e):
            repl = odd_images.get(i)
            out = out * (repl if repl is not None else X.coordinate(i))
            if out.is_zero():
                return out
    return out


def _residue(rho_te: TensorElement, kill_even: bool, odd_images) -> TensorElement:
    X, G = rho_te.algebras
    out = TensorElement.zero((X, G))
    for (mx, mg), c in rho_te.terms.items():
        sub = _substituted(X, mx, kill_even, odd_images)
        if not sub.is_zero():
            out = out + c * tensor(sub, G.monomial(mg))
    return out


def subgroup_residue_report(data: CoactionData) -> SubgroupResidueReport:
    X, G = data.source, data.target
    rho = build_coaction(data)
    t_minus_1 = X.character((1,)) - X.one()
    image = rho.apply(t_minus_1)
    report = SubgroupResidueReport()

    def line_images(a, b):
        # residue classes modulo the linear form a*z2 + b*z3
        a, b = frac(a), frac(b)
        if a:
            return {2: (-b / a) * X.coordinate(3), 3: X.coordinate(3)}
        return {3: X.zero()}

    odd_cases = [("0", {}), ("span{z2,z3}", {2: X.zero(), 3: X.zero()})]
    samples = [(1, 0), (0, 1), (1, 1), (2, -3), (5, 7)]
    for a, b in samples:
        odd_cases.append((f"line {a}*z2+{b}*z3", line_images(a, b)))
        report.sampled_lines.append((a, b))

    all_nonzero = True
    for even_name, kill_even in (("0", False), ("span{z1}", True)):
        for odd_name, images in odd_cases:
            if kill_even and odd_name == "span{z2,z3}":
                continue  # that combination is the whole space, handled below
            res = _residue(image, kill_even, images)
            witness = None if res.is_zero() else str(sorted(res.terms)[0])
            report.cases.append(SubgroupCase(even_name, odd_name,
                                             res.is_zero(), witness))
            all_nonzero = all_nonzero and not res.is_zero()

    # consistency row: the full coordinate space leaves nothing behind
    full = _residue(image, True, {2: X.zero(), 3: X.zero()})
    report.full_space_residue_zero = full.is_zero()

    # rank certificate covering every slope of the parameterized line:
    # independence of the two odd character values means any single linear
    # substitution keeps a nonzero degree-one term
    index = {m: i for i, m in enumerate(sorted(
        G.basis_monomials(2, group_range=0)))}
    ech = Echelon(len(index))
    for i in (2, 3):
        ech.add(_element_vector(G, rho.f(i, (1,)), index))
    report.line_rank = ech.rank
    # independence of all three character values; the residue witnesses
    # stay nonzero exactly because no cancellation among them is possible
    full_ech = Echelon(len(index))
    for i in (1, 2, 3):
        full_ech.add(_element_vector(G, rho.f(i, (1,)), index))
    report.structure_rank = full_ech.rank
    report.ok = (all_nonzero and report.full_space_residue_zero
                 and report.line_rank >= report.line_rank_required
                 and report.structure_rank == 3)
    return report


def ideal_exclusion_report(data: CoactionData) -> IdealExclusionReport:
    G = data.target
    u, v = G.by_name("u"), G.by_name("v")
    uv = u * v
    report = IdealExclusionReport()
    index = {m: i for i, m in enumerate(sorted(
        G.basis_monomials(2, group_range=0)))}

    gen_rank = Echelon(len(index))
    gen_rank.add(_element_vector(G, u, index))
    gen_rank.add(_element_vector(G, v, index))
    report.generator_rank = gen_rank.rank

    for name, w in (("u", u), ("v", v), ("u + v", u + v)):
        # the ideal generated by one odd primitive: w times every monomial
        ech = Echelon(len(index))
        degree_one = Echelon(len(index))
        for mon in G.basis_monomials(2, group_range=0):
            el = w * G.monomial(mon)
            if el.is_zero():
                continue
            ech.add(_element_vector(G, el, index))
            if el.z_degree() == 1:
                degree_one.add(_element_vector(G, el, index))
        inside = {}
        for label, el in (("u", u), ("v", v), ("uv", uv)):
            inside[label] = ech.contains(_element_vector(G, el, index))
        case = IdealCase(name, ech.rank, degree_one.rank,
                         inside["u"], inside["v"], inside["uv"],
                         all(inside.values()))
        report.cases.append(case)
    report.ok = (report.generator_rank == 2
                 and all(not c.all_inside for c in report.cases)
                 and all(c.degree_one_dim == 1 for c in report.cases))
    return report


def unitriangular_fixture():
    """The counterexample action plus its two no-go reports."""
    data = unitriangular_coaction_data()
    return data, subgroup_residue_report(data), ideal_exclusion_report(data)
