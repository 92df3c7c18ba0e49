"""Coordinate Hopf superalgebras of abelian supergroups.

Basis monomials are g z^lambda with g a multiplicative character (exponent
vector in Z^r) and z^lambda a product of unipotent coordinates: l even ones
with exponents in N and k odd ones with exponents in {0, 1}.  The structure
maps are

    product:  odd coordinates anticommute, everything else commutes
    Delta(g) = g tensor g
    Delta(z^lambda) = sum over mu <= lambda of
        (-1)^{inv(lambda, mu)} binom(lambda, mu) z^mu tensor z^{lambda - mu}
    eps(g z^lambda) = [lambda = 0]
    s(g z^lambda) = (-1)^{|lambda|} g^{-1} z^lambda

where inv(lambda, mu) counts pairs of odd slots j < i with mu_i = 1 and
(lambda - mu)_j = 1.  That sign makes Delta the algebra morphism determined
by Delta(z_i) = z_i tensor 1 + 1 tensor z_i, which axiom scans confirm.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .grassmann import merge_sign
from .linalg import ZERO, frac


def standard_inversions(lam, mu, r: int, l: int) -> int:
    """Count odd pairs j < i with mu_i = 1 and (lambda - mu)_j = 1."""
    count = 0
    first_odd = r + l
    for i in range(first_odd, len(lam)):
        if mu[i]:
            for j in range(first_odd, i):
                if lam[j] - mu[j] == 1:
                    count += 1
    return count


class HopfElement:
    """Finite rational combination of monomials of one monomial Hopf algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {m: c for m, c in terms.items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def parity(self):
        """0, 1, or None when parity-mixed; zero counts as even."""
        found = {self.algebra.monomial_parity(m) for m in self.terms}
        if not found:
            return 0
        return found.pop() if len(found) == 1 else None

    def z_degree(self) -> int:
        return max((self.algebra.monomial_degree(m) for m in self.terms),
                   default=0)

    def coefficient(self, mon) -> Fraction:
        return self.terms.get(tuple(mon), ZERO)

    def is_nilpotent(self) -> bool:
        """True iff every monomial contains an odd coordinate.

        Killing the odd coordinates lands in a reduced commutative ring, so
        the condition is necessary; with k odd coordinates available, the
        (k+1)-th power of such an element vanishes, so it is sufficient.
        """
        alg = self.algebra
        return all(any(m[s] for s in range(alg.r + alg.l, alg.nslots))
                   for m in self.terms)

    def __add__(self, other):
        other = self.algebra.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return HopfElement(self.algebra, out)

    def __sub__(self, other):
        return self + (-self.algebra.coerce(other))

    def __neg__(self):
        return HopfElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = frac(other)
            return HopfElement(self.algebra,
                               {m: c * x for m, x in self.terms.items()})
        other = self.algebra.coerce(other)
        out: dict = {}
        mul = self.algebra.mul_monomials
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                hit = mul(m1, m2)
                if hit is None:
                    continue
                sign, m = hit
                val = out.get(m, ZERO) + sign * c1 * c2
                if val:
                    out[m] = val
                else:
                    out.pop(m, None)
        return HopfElement(self.algebra, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        return self * (Fraction(1) / frac(other))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.coerce(other)
        if not isinstance(other, HopfElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.algebra), frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms):
            c = self.terms[m]
            name = self.algebra.monomial_str(m)
            if name == "1":
                bits.append(str(c))
            elif c == 1:
                bits.append(name)
            elif c == -1:
                bits.append(f"-{name}")
            else:
                bits.append(f"{c}*{name}")
        out = " + ".join(bits)
        return out.replace("+ -", "- ")

    __repr__ = __str__


class TensorElement:
    """Element of a tensor product of monomial Hopf algebras.

    Keys are tuples of monomials, one per factor.  Products of pure tensors
    pick up the Koszul sign from every pair of factors that cross.
    """

    __slots__ = ("algebras", "terms")

    def __init__(self, algebras, terms):
        self.algebras = tuple(algebras)
        self.terms = {m: c for m, c in terms.items() if c}

    @classmethod
    def zero(cls, algebras):
        return cls(algebras, {})

    @classmethod
    def one(cls, algebras):
        return cls(algebras, {tuple(a.unit_monomial() for a in algebras): frac(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        assert self.algebras == other.algebras
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return TensorElement(self.algebras, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorElement(self.algebras,
                             {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = frac(other)
            return TensorElement(self.algebras,
                                 {m: c * x for m, x in self.terms.items()})
        assert self.algebras == other.algebras
        algs = self.algebras
        out: dict = {}
        for key1, c1 in self.terms.items():
            for key2, c2 in other.terms.items():
                sign = 1
                # slot i of key1 moves past slots j < i of key2
                for i in range(1, len(algs)):
                    if algs[i].monomial_parity(key1[i]):
                        for j in range(i):
                            if algs[j].monomial_parity(key2[j]):
                                sign = -sign
                parts = []
                dead = False
                for a, m1, m2 in zip(algs, key1, key2):
                    hit = a.mul_monomials(m1, m2)
                    if hit is None:
                        dead = True
                        break
                    s, m = hit
                    sign *= s
                    parts.append(m)
                if dead:
                    continue
                key = tuple(parts)
                val = out.get(key, ZERO) + sign * c1 * c2
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
        return TensorElement(self.algebras, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.algebras == other.algebras and self.terms == other.terms

    def comultiply_slot(self, slot: int) -> "TensorElement":
        alg = self.algebras[slot]
        algebras = self.algebras[:slot] + (alg, alg) + self.algebras[slot + 1:]
        out: dict = {}
        for key, c in self.terms.items():
            for (m1, m2), c2 in alg.comultiply_monomial(key[slot]).items():
                nk = key[:slot] + (m1, m2) + key[slot + 1:]
                val = out.get(nk, ZERO) + c * c2
                if val:
                    out[nk] = val
                else:
                    out.pop(nk, None)
        return TensorElement(algebras, out)

    def counit_slot(self, slot: int) -> "TensorElement":
        alg = self.algebras[slot]
        algebras = self.algebras[:slot] + self.algebras[slot + 1:]
        out: dict = {}
        for key, c in self.terms.items():
            e = alg.counit_monomial(key[slot])
            if not e:
                continue
            nk = key[:slot] + key[slot + 1:]
            val = out.get(nk, ZERO) + c * e
            if val:
                out[nk] = val
            else:
                out.pop(nk, None)
        return TensorElement(algebras, out)

    def antipode_slot(self, slot: int) -> "TensorElement":
        alg = self.algebras[slot]
        out: dict = {}
        for key, c in self.terms.items():
            sign, m = alg.antipode_monomial(key[slot])
            nk = key[:slot] + (m,) + key[slot + 1:]
            val = out.get(nk, ZERO) + sign * c
            if val:
                out[nk] = val
            else:
                out.pop(nk, None)
        return TensorElement(self.algebras, out)

    def multiply_slots(self, slot: int) -> "TensorElement":
        """Multiply adjacent slots slot and slot+1 inside their algebra."""
        alg = self.algebras[slot]
        assert self.algebras[slot + 1] is alg
        algebras = self.algebras[:slot] + self.algebras[slot + 1:]
        out: dict = {}
        for key, c in self.terms.items():
            hit = alg.mul_monomials(key[slot], key[slot + 1])
            if hit is None:
                continue
            sign, m = hit
            nk = key[:slot] + (m,) + key[slot + 2:]
            val = out.get(nk, ZERO) + sign * c
            if val:
                out[nk] = val
            else:
                out.pop(nk, None)
        return TensorElement(algebras, out)

    def slot_element(self) -> HopfElement:
        assert len(self.algebras) == 1
        return HopfElement(self.algebras[0], {k[0]: c for k, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms):
            c = self.terms[key]
            name = " (x) ".join(a.monomial_str(m) for a, m in zip(self.algebras, key))
            bits.append(name if c == 1 else f"{c}*[{name}]")
        return " + ".join(bits).replace("+ -", "- ")

    __repr__ = __str__


def tensor(a: HopfElement, b: HopfElement) -> TensorElement:
    out: dict = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            out[(m1, m2)] = c1 * c2
    return TensorElement((a.algebra, b.algebra), out)


class MonomialHopfAlgebra:
    """Shared engine: Z^r characters, l even and k odd primitive coordinates."""

    def __init__(self, r: int, l: int, k: int, names=None, sign_rule=None):
        if min(r, l, k) < 0:
            raise ValueError("slot counts must be nonnegative")
        self.r, self.l, self.k = r, l, k
        self.nslots = r + l + k
        if names is None:
            gnames = ["t"] if r == 1 else [f"t{i + 1}" for i in range(r)]
            names = gnames + [f"z{i + 1}" for i in range(l + k)]
        if len(names) != self.nslots:
            raise ValueError("one name per generator required")
        self.names = list(names)
        self.sign_rule = sign_rule or standard_inversions

    # -- monomial helpers ----------------------------------------------------

    def unit_monomial(self):
        return (0,) * self.nslots

    def check_monomial(self, mon):
        mon = tuple(int(x) for x in mon)
        if len(mon) != self.nslots:
            raise ValueError("wrong exponent tuple length")
        for s in range(self.r, self.r + self.l):
            if mon[s] < 0:
                raise ValueError("even coordinate exponents must be nonnegative")
        for s in range(self.r + self.l, self.nslots):
            if mon[s] not in (0, 1):
                raise ValueError("odd coordinate exponents must be 0 or 1")
        return mon

    def monomial_parity(self, mon) -> int:
        return sum(mon[self.r + self.l:]) & 1

    def monomial_degree(self, mon) -> int:
        return sum(mon[self.r:])

    def _odd_mask(self, mon) -> int:
        mask = 0
        for b, s in enumerate(range(self.r + self.l, self.nslots)):
            if mon[s]:
                mask |= 1 << b
        return mask

    def mul_monomials(self, m1, m2):
        """(sign, product monomial), or None when an odd square appears."""
        sign = merge_sign(self._odd_mask(m1), self._odd_mask(m2))
        if sign == 0:
            return None
        return sign, tuple(x + y for x, y in zip(m1, m2))

    def monomial_str(self, mon) -> str:
        bits = []
        for s, e in enumerate(mon):
            if not e:
                continue
            bits.append(self.names[s] if e == 1 else f"{self.names[s]}^{e}")
        return "*".join(bits) if bits else "1"

    # -- element constructors -------------------------------------------------

    def zero(self) -> HopfElement:
        return HopfElement(self, {})

    def one(self) -> HopfElement:
        return HopfElement(self, {self.unit_monomial(): frac(1)})

    def coerce(self, value) -> HopfElement:
        if isinstance(value, HopfElement):
            if value.algebra is not self:
                raise ValueError("element belongs to a different algebra")
            return value
        if isinstance(value, (int, Fraction)):
            return HopfElement(self, {self.unit_monomial(): frac(value)})
        raise TypeError(f"cannot coerce {value!r}")

    def monomial(self, mon, coeff=1) -> HopfElement:
        return HopfElement(self, {self.check_monomial(mon): frac(coeff)})

    def coordinate(self, i: int) -> HopfElement:
        """z_i, 1-based among the l + k unipotent coordinates."""
        if not 1 <= i <= self.l + self.k:
            raise ValueError("coordinate index out of range")
        mon = [0] * self.nslots
        mon[self.r + i - 1] = 1
        return self.monomial(mon)

    def character(self, exponents) -> HopfElement:
        exponents = tuple(exponents)
        if len(exponents) != self.r:
            raise ValueError("one exponent per torus factor required")
        return self.monomial(exponents + (0,) * (self.l + self.k))

    def by_name(self, name: str) -> HopfElement:
        s = self.names.index(name)
        mon = [0] * self.nslots
        mon[s] = 1
        return self.monomial(mon)

    def coordinate_parity(self, i: int) -> int:
        return 1 if i > self.l else 0

    # -- Hopf structure maps ---------------------------------------------------

    def comultiply_monomial(self, mon) -> dict:
        zslots = range(self.r, self.nslots)
        ranges = [range(mon[s] + 1) for s in zslots]
        gpart = mon[:self.r]
        out = {}
        for mu_z in itertools.product(*ranges):
            mu = gpart + mu_z
            nu = gpart + tuple(mon[s] - mu[s] for s in zslots)
            coeff = 1
            for s in range(self.r, self.r + self.l):
                coeff *= comb(mon[s], mu[s])
            if self.sign_rule(mon, mu, self.r, self.l) & 1:
                coeff = -coeff
            out[(mu, nu)] = frac(coeff)
        return out

    def comultiply(self, element: HopfElement) -> TensorElement:
        out: dict = {}
        for mon, c in element.terms.items():
            for key, c2 in self.comultiply_monomial(mon).items():
                val = out.get(key, ZERO) + c * c2
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
        return TensorElement((self, self), out)

    def counit_monomial(self, mon) -> Fraction:
        return frac(1) if not any(mon[self.r:]) else ZERO

    def counit(self, element: HopfElement) -> Fraction:
        return sum((c * self.counit_monomial(m)
                    for m, c in element.terms.items()), ZERO)

    def antipode_monomial(self, mon):
        sign = -1 if sum(mon[self.r:]) & 1 else 1
        flipped = tuple(-e for e in mon[:self.r]) + mon[self.r:]
        return sign, flipped

    def antipode(self, element: HopfElement) -> HopfElement:
        out: dict = {}
        for mon, c in element.terms.items():
            sign, m = self.antipode_monomial(mon)
            out[m] = out.get(m, ZERO) + sign * c
        return HopfElement(self, out)

    # -- basis enumeration -----------------------------------------------------

    def basis_monomials(self, max_degree: int, group_range: int = 1):
        """Monomials with z-degree <= max_degree, character exponents boxed."""
        gvals = range(-group_range, group_range + 1)
        even_vals = range(max_degree + 1)
        for g in itertools.product(gvals, repeat=self.r):
            for ev in itertools.product(even_vals, repeat=self.l):
                if sum(ev) > max_degree:
                    continue
                room = max_degree - sum(ev)
                for od in itertools.product((0, 1), repeat=self.k):
                    if sum(od) > room:
                        continue
                    yield g + ev + od


class AbelianHopfAlgebra(MonomialHopfAlgebra):
    """Functions on a torus times even and odd unipotent one-parameter factors."""

    def __init__(self, r: int, l: int, k: int, sign_rule=None):
        super().__init__(r, l, k, sign_rule=sign_rule)


class FreeHopfSuperalgebra(MonomialHopfAlgebra):
    """Supercommutative Hopf algebra on named generators.

    Even generators are declared primitive or grouplike; odd generators are
    primitive.  Grouplike generators are invertible, with the antipode
    inverting their exponents.
    """

    def __init__(self, even=(), odd=(), truncation: int = 6):
        grouplike = [name for name, kind in even if kind == "grouplike"]
        primitive = []
        for name, kind in even:
            if kind == "primitive":
                primitive.append(name)
            elif kind != "grouplike":
                raise ValueError(f"unknown even generator kind {kind!r}")
        names = grouplike + primitive + list(odd)
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        super().__init__(len(grouplike), len(primitive), len(odd), names)
        self.truncation = truncation


# -- axiom scanning ------------------------------------------------------------


@dataclass
class HopfReport:
    ok: bool
    checked: int
    failures: list[str]

    def first_failure(self) -> str | None:
        return self.failures[0] if self.failures else None


def verify_hopf(H: MonomialHopfAlgebra, max_degree: int,
                check_morphism: bool = True, group_range: int = 1,
                max_failures: int = 8) -> HopfReport:
    """Scan coassociativity, counit, antipode, and the morphism property.

    All identities are checked exactly on every basis monomial of z-degree
    at most max_degree (characters boxed to |exponent| <= group_range), and
    the morphism property on all pairs with combined degree in bound.
    """
    failures: list[str] = []
    checked = 0
    monomials = list(H.basis_monomials(max_degree, group_range))

    def note(msg):
        if len(failures) < max_failures:
            failures.append(msg)

    for mon in monomials:
        checked += 1
        el = H.monomial(mon)
        label = H.monomial_str(mon)
        delta = H.comultiply(el)
        if delta.comultiply_slot(0) != delta.comultiply_slot(1):
            note(f"coassociativity fails on {label}")
        lhs = delta.counit_slot(0)
        rhs = delta.counit_slot(1)
        if lhs.slot_element() != el or rhs.slot_element() != el:
            note(f"counit law fails on {label}")
        want = H.counit(el) * TensorElement.one((H,))
        if delta.antipode_slot(0).multiply_slots(0) != want:
            note(f"antipode identity (left) fails on {label}")
        if delta.antipode_slot(1).multiply_slots(0) != want:
            note(f"antipode identity (right) fails on {label}")
    if check_morphism:
        for m1 in monomials:
            d1 = H.monomial_degree(m1)
            for m2 in monomials:
                if d1 + H.monomial_degree(m2) > max_degree:
                    continue
                checked += 1
                a, b = H.monomial(m1), H.monomial(m2)
                if H.comultiply(a * b) != H.comultiply(a) * H.comultiply(b):
                    note("morphism property fails on "
                         f"{H.monomial_str(m1)} * {H.monomial_str(m2)}")
    return HopfReport(not failures, checked, failures)
