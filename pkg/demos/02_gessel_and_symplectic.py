"""
Gessel's determinant and the symplectic case
============================================

With one alphabet, the sum of s_nu over partitions with all columns of even
length is a k x k determinant in L_n = sum_j h_j h_{n+j}.  The entries are
L_{j-i} - L_{i+j}.  We compare three computations of the same series:

* the partition sum, read off directly,
* the signed sum over the hyperoctahedral group,
* the closed determinant.
"""

from jtchar.engine import CaseId, det_formula, entry_labels, det_shape, euler_raw, make_space
from jtchar.oracle import lhs_partition_sum

case = CaseId("skew", 2)
space = make_space(case, 6)

print("entries at lambda = 0:")
for row in entry_labels(det_shape(case, (0, 0), "display")):
    print("   ", row)

lhs = lhs_partition_sum(case, space)
print("Weyl group terms agree:", lhs == euler_raw(case, (0, 0), space))
print("determinant agrees:   ", lhs == det_formula(case, (0, 0), space, variant="display"))

# %%
# The first few coefficients in the monomial basis.  The series starts
# 1 + m[1,1] + ..., since the column (1,1) is the smallest even-column shape.
for key, c in list(lhs.items())[:8]:
    print(key, c)
