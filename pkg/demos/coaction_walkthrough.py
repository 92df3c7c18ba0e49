"""A coaction on a torus times odd affine lines, and why it has no
proper invariant subgroup.

The coacting Hopf superalgebra is free on two odd primitives u, v.  The
coacted coordinate algebra has one torus coordinate t and three odd
coordinates z1, z2, z3; the structure matrix is unitriangular with odd
entries.  The script prints the coordinate images, verifies the comodule
axioms at truncation 4, and then runs the two exclusion arguments: every
proper graded coordinate subspace leaves a nonzero residue, and no odd
line generates a Hopf ideal containing both u and v.
"""

from superlie.coaction import (
    Coaction,
    ideal_exclusion_report,
    subgroup_residue_report,
    unitriangular_coaction_data,
    verify_coaction,
)


def main():
    data = unitriangular_coaction_data()
    rho = Coaction(data)

    for i in (1, 2, 3):
        print(f"rho(z{i}) = {rho.coordinate_image(i)}")
    print(f"rho(t)  = {rho.character_image((1,))}")
    print()

    report = verify_coaction(data, max_degree=4)
    print(f"comodule axioms at degree 4: {report.ok} "
          f"({report.checked} identities)")

    residue = subgroup_residue_report(data)
    print(f"proper subspace cases: {len(residue.cases)}, "
          f"all leave a residue: {residue.ok}")
    print(f"rank certificates: lines {residue.line_rank} of "
          f"{residue.line_rank_required}, structure {residue.structure_rank}")

    exclusion = ideal_exclusion_report(data)
    for case in exclusion.cases:
        print(f"ideal of {case.line}: dim {case.ideal_dim}, "
              f"contains uv: {case.contains_uv}, "
              f"contains u and v: {case.contains_u and case.contains_v}")


if __name__ == "__main__":
    main()
