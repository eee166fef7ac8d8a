"""
Jacobi-Trudi from a Zelevinsky complex
======================================

For gl(k) acting on two alphabets x and y, the Cauchy sum over partitions
of length at most k of s_nu(x) s_nu(y) is the Euler characteristic of a
complex whose terms are indexed by the Weyl group.  Folding the terms
into a k x k determinant of L_n = sum_j h_{n+j}(x) h_j(y) gives the
Jacobi-Trudi shape.  This script checks both identities to a fixed degree.
"""

from jtchar.engine import CaseId, det_formula, euler_raw, format_complex, make_space
from jtchar.oracle import lhs_partition_sum

# %%
# The complex for k = 2 and lambda = 0.  Each line is one homological degree.
case = CaseId("generic", 2)
print(format_complex(case, (0, 0)))

# %%
# Truncate at total degree 4 in each alphabet with four variables each,
# so every Schur function that fits below the cap is nonzero.
space = make_space(case, 4)
lhs = lhs_partition_sum(case, space)
euler = euler_raw(case, (0, 0), space)
det = det_formula(case, (0, 0), space)
print("partition sum == Euler characteristic:", lhs == euler)
print("Euler characteristic == determinant:  ", euler == det)

# %%
# A nonzero highest weight shifts the indices: the entries become
# L_{lambda_i - i + j}.  Negative weights are allowed for gl(k).
for lam in [(1, 0), (2, -1), (0, -2)]:
    print(lam, euler_raw(case, lam, space) == det_formula(case, lam, space))
