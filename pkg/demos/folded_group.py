"""The folded triangular supergroup and its one-line tangent obstruction.

Points are pairs of 2x2 blocks (A|B) with A unipotent-triangular shaped by
one even unit a1, one even entry a2, and one odd entry t.  The script
multiplies and inverts a few points over a Grassmann algebra, checks the
closed commutator form against the raw 4x4 block product, and finishes
with the tangent computation: the square of the odd generator lands on
2x + 4y, whose Jordan parts escape every line through it.
"""

from superlie.grassmann import GrassmannElement
from superlie.points import FoldedTriangularPoint, folded_tangent_report


def theta(q, i):
    return GrassmannElement.generator(q, i)


def show(label, p):
    print(f"{label}: a1 = {p.a1}, a2 = {p.a2}, t = {p.t}")


def main():
    q = 3
    p1 = FoldedTriangularPoint(q, 1, 2, theta(q, 1))
    p2 = FoldedTriangularPoint(q, GrassmannElement.one(q) * 2, 0, theta(q, 2))
    show("p1", p1)
    show("p2", p2)
    show("p1 * p2", p1 * p2)
    show("p1^-1", p1.inverse())

    # the commutator recomputes itself as a raw 4x4 product internally,
    # so printing it doubles as a verification
    com = p1.commutator(p2)
    show("[p1, p2]", com)
    print(f"odd part of the commutator vanishes: {com.t == 0}")
    print()

    x, y, v, report = folded_tangent_report()
    rows = lambda m: " ; ".join(" ".join(str(x) for x in row) for row in m)
    print("tangent relations: [x,y] = [x,v] = [y,v] = 0,",
          "[v,v] = 2x + 4y:", report.relations_ok)
    print("action of [v,v] on the span of x, y:", rows(report.even_action))
    print("semisimple part:", rows(report.jordan.semisimple))
    print("nilpotent part:", rows(report.jordan.nilpotent))
    print("line verdict:", report.verdict.value)


if __name__ == "__main__":
    main()
