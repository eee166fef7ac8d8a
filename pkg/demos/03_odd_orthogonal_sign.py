"""
The sign in the odd orthogonal determinant
==========================================

For so(2k+1) the module U has a zero weight, so every term picks up a
factor Sym(E) = sum_n h_n.  At lambda = 0 the determinant entries are
L_{j-i} with a second term L_{2k+1-i-j}.  This script tries both signs for
the second term and shows which one reproduces the partition sum.
"""

from jtchar.engine import CaseId, det_formula, make_space
from jtchar.oracle import lhs_partition_sum

case = CaseId("sym-odd", 2)
space = make_space(case, 5)
lhs = lhs_partition_sum(case, space)

for variant in ("display-minus", "display-plus"):
    det = det_formula(case, (0, 0), space, variant=variant)
    diff = lhs.first_difference(det)
    if diff is None:
        print(f"{variant:14s} agrees through degree 5")
    else:
        key, a, b = diff
        print(f"{variant:14s} first differs at {key}: partition sum {a}, determinant {b}")
