"""Finite Grassmann (exterior) algebras with exact rational coefficients.

An element of L(q) is a map from generator subsets, stored as bitmasks, to
nonzero Fractions.  Monomials keep their generators in increasing index
order; the sign of a product is the parity of the inversion count of the
merge, and overlapping subsets multiply to zero.
"""

from __future__ import annotations

from fractions import Fraction

from .config import generator_budget
from .linalg import ONE, ZERO, frac


class ParityError(ValueError):
    pass


class NotUnitError(ValueError):
    pass


def merge_sign(a: int, b: int) -> int:
    """Sign of z_a . z_b -> z_(a|b) for disjoint masks; 0 on overlap.

    Counts the generator pairs (i in a, j in b) with i > j, i.e. the
    transpositions needed to interleave b into a.
    """
    if a & b:
        return 0
    inversions = 0
    rest = a
    while rest:
        low = rest & -rest
        # generators of b below this generator of a
        inversions += (b & (low - 1)).bit_count()
        rest ^= low
    return -1 if inversions & 1 else 1


class GrassmannElement:
    """Element of the Grassmann algebra on q odd generators."""

    __slots__ = ("q", "terms")

    def __init__(self, q: int, terms: dict[int, Fraction] | None = None):
        budget = generator_budget()
        if q < 0 or q > budget:
            raise ValueError(f"generator count {q} outside budget 0..{budget}")
        self.q = q
        self.terms: dict[int, Fraction] = {}
        if terms:
            limit = 1 << q
            for mask, coeff in terms.items():
                if not 0 <= mask < limit:
                    raise ValueError(f"monomial mask {mask} out of range for q={q}")
                c = frac(coeff)
                if c:
                    self.terms[mask] = c

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, q: int) -> "GrassmannElement":
        return cls(q)

    @classmethod
    def one(cls, q: int) -> "GrassmannElement":
        return cls(q, {0: ONE})

    @classmethod
    def scalar(cls, q: int, value) -> "GrassmannElement":
        return cls(q, {0: frac(value)})

    @classmethod
    def generator(cls, q: int, i: int) -> "GrassmannElement":
        """The i-th generator, 1-based."""
        if not 1 <= i <= q:
            raise ValueError(f"generator index {i} outside 1..{q}")
        return cls(q, {1 << (i - 1): ONE})

    @classmethod
    def monomial(cls, q: int, mask: int, coeff=ONE) -> "GrassmannElement":
        return cls(q, {mask: frac(coeff)})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def body(self) -> Fraction:
        """Coefficient of the empty monomial."""
        return self.terms.get(0, ZERO)

    def coefficient(self, mask: int) -> Fraction:
        return self.terms.get(mask, ZERO)

    def has_parity(self, p: int) -> bool:
        return all(mask.bit_count() & 1 == p for mask in self.terms)

    def parity(self) -> int | None:
        """0 or 1 for homogeneous elements (zero counts as even), None if mixed."""
        if not self.terms:
            return 0
        parities = {mask.bit_count() & 1 for mask in self.terms}
        return parities.pop() if len(parities) == 1 else None

    def homogeneous_part(self, p: int) -> "GrassmannElement":
        return GrassmannElement(
            self.q, {m: c for m, c in self.terms.items() if m.bit_count() & 1 == p}
        )

    def max_degree(self) -> int:
        return max((m.bit_count() for m in self.terms), default=0)

    # -- arithmetic ---------------------------------------------------------

    def _check_compatible(self, other: "GrassmannElement"):
        if self.q != other.q:
            raise ValueError(f"mixing Grassmann algebras with q={self.q} and q={other.q}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GrassmannElement.scalar(self.q, other)
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self.terms)
        for mask, c in other.terms.items():
            new = terms.get(mask, ZERO) + c
            if new:
                terms[mask] = new
            else:
                terms.pop(mask, None)
        return GrassmannElement(self.q, terms)

    __radd__ = __add__

    def __neg__(self):
        return GrassmannElement(self.q, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GrassmannElement.scalar(self.q, other)
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = frac(other)
            return GrassmannElement(self.q, {m: c * x for m, x in self.terms.items()})
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        self._check_compatible(other)
        terms: dict[int, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                sign = merge_sign(ma, mb)
                if not sign:
                    continue
                mask = ma | mb
                new = terms.get(mask, ZERO) + sign * ca * cb
                if new:
                    terms[mask] = new
                else:
                    terms.pop(mask, None)
        return GrassmannElement(self.q, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GrassmannElement.scalar(self.q, other)
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        return self.q == other.q and self.terms == other.terms

    def __hash__(self):
        return hash((self.q, frozenset(self.terms.items())))

    def inverse(self) -> "GrassmannElement":
        """Inverse of an even unit.

        With body c, write self = c(1 - u); u is even nilpotent, so the
        geometric series 1 + u + u^2 + ... terminates by degree q.
        """
        if not self.has_parity(0):
            raise ParityError("only even elements are invertible")
        c = self.body()
        if not c:
            raise NotUnitError("zero body, not a unit")
        u = GrassmannElement.one(self.q) - self * (ONE / c)
        acc = GrassmannElement.one(self.q)
        power = GrassmannElement.one(self.q)
        # u has no scalar term and is even: u^(q//2 + 1) = 0
        for _ in range(self.q // 2 + 1):
            power = power * u
            if power.is_zero():
                break
            acc = acc + power
        inv = acc * (ONE / c)
        assert (self * inv) == GrassmannElement.one(self.q)
        return inv

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (ONE / frac(other))
        return NotImplemented

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mask in sorted(self.terms, key=lambda m: (m.bit_count(), m)):
            c = self.terms[mask]
            gens = "".join(f"th{i + 1}" for i in range(self.q) if mask >> i & 1)
            if not gens:
                parts.append(str(c))
            elif c == 1:
                parts.append(gens)
            elif c == -1:
                parts.append(f"-{gens}")
            else:
                parts.append(f"{c}*{gens}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def unit_inverse(a: GrassmannElement) -> GrassmannElement:
    """Inverse of any element with nonzero body, mixed parity allowed.

    Same geometric series as :meth:`GrassmannElement.inverse` but without the
    evenness restriction; u = 1 - a/c has zero body, hence u^(q+1) = 0.
    """
    c = a.body()
    if not c:
        raise NotUnitError("zero body, not a unit")
    u = GrassmannElement.one(a.q) - a * (ONE / c)
    acc = GrassmannElement.one(a.q)
    power = GrassmannElement.one(a.q)
    for _ in range(a.q + 1):
        power = power * u
        if power.is_zero():
            break
        acc = acc + power
    inv = acc * (ONE / c)
    assert (a * inv) == GrassmannElement.one(a.q)
    return inv


def random_element(
    rng, q: int, parity: int | None = None, terms: int = 3, bound: int = 4
) -> GrassmannElement:
    """Random sparse element with small integer coefficients (seeded rng)."""
    masks = [m for m in range(1 << q) if parity is None or m.bit_count() & 1 == parity]
    out = GrassmannElement.zero(q)
    for _ in range(terms):
        c = rng.randint(-bound, bound)
        if c:
            out = out + GrassmannElement.monomial(q, rng.choice(masks), c)
    return out


def random_unit(rng, q: int, terms: int = 3, bound: int = 4) -> GrassmannElement:
    """Random even unit: nonzero rational body plus even nilpotent noise."""
    body = Fraction(rng.choice([x for x in range(-bound, bound + 1) if x]),
                    rng.randint(1, 3))
    noise = random_element(rng, q, parity=0, terms=terms, bound=bound)
    return GrassmannElement.scalar(q, body) + noise - GrassmannElement.scalar(q, noise.body())
