"""
Skew Jacobi-Trudi and Littlewood-Richardson coefficients
========================================================

The skew determinant det(L_{lambda_i - mu_j - i + j}) expands as a sum of
determinants for gl(k) weights nu, weighted by the multiplicity of V_lambda in
V_mu (x) V_nu.  Some of the nu that occur have negative entries, so the
expansion has to run over all dominant gl(k) weights, not only partitions.
"""

from jtchar.engine import CaseId, make_space
from jtchar.oracle import lr_weights, skew_lr_check

k = 2
space = make_space(CaseId("generic", k), 3)

for lam, mu in [((2, 1), (1, 0)), ((2, 0), (1, 1)), ((3, 1), (2, 0))]:
    weights = lr_weights(k, lam, mu)
    det, rhs = skew_lr_check(k, lam, mu, space)
    print(f"lambda={lam} mu={mu}  nu with multiplicity: {weights}  equal: {det == rhs}")
