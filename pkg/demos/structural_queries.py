"""Structural queries on small Lie superalgebras.

Builds a few algebras from factories and from bundled files, then walks
through the bracket-law validator and the standard invariants: center,
commutant, derived series, even radical, quasireductivity.
"""

from superlie import liealg
from superlie.formats import load_algebra


def describe(L):
    print(f"== {L.name} (dim {L.m}|{L.n}, basis {', '.join(L.labels)})")
    report = liealg.validate(L)
    print(f"   bracket laws: {'ok' if report.ok else report.first_failure()}")
    print(f"   center dim {liealg.center(L).dim}, "
          f"commutant dim {liealg.commutant(L).dim}")
    dims = [s.dim for s in liealg.derived_series(L)]
    print(f"   derived series dims {dims}")
    cert = liealg.is_quasireductive(L)
    verdict = "yes" if cert.quasireductive else f"no ({cert.detail})"
    print(f"   quasireductive: {verdict}")
    print()


def main():
    describe(liealg.make_sl2())
    describe(liealg.make_gl(1, 1))
    describe(load_algebra("@mixed_jordan"))
    describe(load_algebra("@aff1"))

    # quotient by the center keeps the bracket and drops the central line
    L = liealg.make_gl(1, 1)
    Q = liealg.quotient(L, liealg.center(L))
    print(f"gl(1|1) mod center: dim {Q.m}|{Q.n}, "
          f"commutant dim {liealg.commutant(Q).dim}")


if __name__ == "__main__":
    main()
