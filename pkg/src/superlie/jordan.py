"""Exact Jordan-Chevalley decomposition over the rationals.

A square rational matrix M splits uniquely as M = S + N with S and N
rational polynomials in M, S semisimple (square-free minimal polynomial),
N nilpotent, SN = NS.  The split is computed with a Newton iteration against
the square-free part of the characteristic polynomial; no eigenvalues are
ever extracted, so nothing leaves the rationals.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    ONE,
    ZERO,
    Echelon,
    flatten,
    identity_mat,
    is_zero_mat,
    mat_add,
    mat_mul,
    mat_scale,
    mat_sub,
    solve_coords,
    trace,
    vec,
    zero_mat,
)

# polynomials are coefficient lists, ascending degree, normalized (no top zeros)


def _ptrim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _padd(a, b):
    out = [ZERO] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _ptrim(out)


def _pneg(a):
    return [-x for x in a]


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return _ptrim(out)


def _pscale(c, a):
    return _ptrim([c * x for x in a])


def _pderiv(a):
    return _ptrim([i * x for i, x in enumerate(a)][1:])


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [ZERO] * max(len(a) - len(b) + 1, 0)
    inv = ONE / b[-1]
    while len(a) >= len(b):
        c = a[-1] * inv
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] -= c * y
        _ptrim(a)
        if not a:
            break
    return _ptrim(q), a


def _pmonic(a):
    return _pscale(ONE / a[-1], a) if a else a


def poly_gcd(a, b) -> list[Fraction]:
    """Monic gcd by the Euclidean algorithm."""
    a, b = list(a), list(b)
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    return _pmonic(a)


def poly_xgcd(a, b):
    """(g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [ONE], []
    t0, t1 = [], [ONE]
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
        t0, t1 = t1, _psub(t0, _pmul(q, t1))
    if r0:
        c = ONE / r0[-1]
        r0, s0, t0 = _pscale(c, r0), _pscale(c, s0), _pscale(c, t0)
    return r0, s0, t0


def poly_eval_matrix(p, m) -> list[list[Fraction]]:
    """Horner evaluation of a polynomial at a square matrix."""
    d = len(m)
    acc = zero_mat(d, d)
    for c in reversed(p):
        acc = mat_mul(acc, m)
        if c:
            for i in range(d):
                acc[i][i] += c
    return acc


def charpoly(m) -> list[Fraction]:
    """Characteristic polynomial det(xI - M), monic, by Faddeev-LeVerrier."""
    d = len(m)
    coeffs = [ZERO] * (d + 1)
    coeffs[d] = ONE
    a = [vec(row) for row in m]
    work = zero_mat(d, d)
    for k in range(1, d + 1):
        if k == 1:
            work = [list(row) for row in a]
        else:
            work = mat_mul(a, work)
        c = -trace(work) / k
        coeffs[d - k] = c
        for i in range(d):
            work[i][i] += c
    return coeffs


def squarefree_part(p) -> list[Fraction]:
    """p / gcd(p, p'), monic; the radical of p in characteristic zero."""
    g = poly_gcd(p, _pderiv(p))
    q, r = _pdivmod(p, g)
    assert not r
    return _pmonic(q)


def is_squarefree(p) -> bool:
    return len(poly_gcd(p, _pderiv(p))) == 1


def minimal_polynomial(m) -> list[Fraction]:
    """Monic minimal polynomial via the first linear dependence among powers."""
    d = len(m)
    ech = Echelon(d * d)
    powers = [identity_mat(d)]
    basis_rows = []
    while True:
        row = flatten(powers[-1])
        if ech.add(row) is None:
            coords = solve_coords(basis_rows, row, d * d)
            assert coords is not None
            return _ptrim([-c for c in coords] + [ONE])
        basis_rows.append(row)
        powers.append(mat_mul(powers[-1], m))


@dataclass(frozen=True)
class JordanSplit:
    semisimple: list[list[Fraction]]
    nilpotent: list[list[Fraction]]


class OneDimVerdict(enum.Enum):
    NOT_ALGEBRAIC = "NotAlgebraic"
    SEMISIMPLE_CASE = "SemisimpleCase"
    NILPOTENT_CASE = "NilpotentCase"


def jordan_chevalley(m) -> JordanSplit:
    """Split M = S + N; raises on a non-square input.

    Newton iteration X <- X - p(X) b(X) against the square-free part p of the
    characteristic polynomial, where b is the Bezout inverse of p' modulo p
    (so also modulo every power of p on the nilpotent ideal where the
    iteration lives).  Quadratic convergence gives the ceil(log2 d) + 1 bound.
    """
    d = len(m)
    if any(len(row) != d for row in m):
        raise ValueError("matrix must be square")
    m = [vec(row) for row in m]
    if d == 0:
        return JordanSplit([], [])
    p = squarefree_part(charpoly(m))
    g, _, b = poly_xgcd(p, _pderiv(p))
    assert len(g) == 1, "square-free part must be coprime to its derivative"
    x = [list(row) for row in m]
    iterations = d.bit_length() + 2
    for _ in range(iterations):
        px = poly_eval_matrix(p, x)
        if is_zero_mat(px):
            break
        x = mat_sub(x, mat_mul(px, poly_eval_matrix(b, x)))
    else:
        raise AssertionError("Newton iteration failed to terminate")
    s = x
    n = mat_sub(m, s)
    # the defining properties, checked before anything is returned
    assert mat_add(s, n) == m
    assert mat_mul(s, n) == mat_mul(n, s)
    assert is_zero_mat(_matrix_power(n, d))
    assert is_squarefree(minimal_polynomial(s))
    return JordanSplit(s, n)


def _matrix_power(m, k):
    d = len(m)
    acc = identity_mat(d)
    for _ in range(k):
        acc = mat_mul(acc, m)
        if is_zero_mat(acc):
            break
    return acc


def one_dim_algebraicity(m) -> OneDimVerdict:
    """Classify the matrix of a one-dimensional action.

    NotAlgebraic when both Jordan parts are nonzero: neither part alone stays
    inside the line spanned by M, so no algebraic hull of dimension one
    exists.  Pure cases make no algebraicity claim either way.
    """
    if is_zero_mat(m):
        raise ValueError("zero matrix spans no one-dimensional action")
    split = jordan_chevalley(m)
    s_zero = is_zero_mat(split.semisimple)
    n_zero = is_zero_mat(split.nilpotent)
    if not s_zero and not n_zero:
        return OneDimVerdict.NOT_ALGEBRAIC
    if n_zero:
        return OneDimVerdict.SEMISIMPLE_CASE
    return OneDimVerdict.NILPOTENT_CASE
