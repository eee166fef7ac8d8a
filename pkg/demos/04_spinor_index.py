"""
Spinor determinants and the row index
=====================================

For spinor highest weights, lambda - (1/2, ..., 1/2) is a partition mu.
Reindexing rows by i -> k+1-i turns the column-reduced entries
L_{mu_i - i + j} into L_{mu_{k+1-i} + i - j}.  A version with -i + j in the
first index agrees with it only when mu is a rectangle.  We scan a few
weights and report where each form agrees with the signed Weyl group sum.
"""

from fractions import Fraction

from jtchar.engine import CaseId, det_formula, euler_raw, make_space

half = Fraction(1, 2)
case = CaseId("spinor-odd", 2)
space = make_space(case, 5)

for mu in [(0, 0), (1, 1), (1, 0), (2, 0), (2, 1)]:
    lam = tuple(m + half for m in mu)
    ref = euler_raw(case, lam, space)
    ok = {v: det_formula(case, lam, space, variant=v) == ref
          for v in ("proposition", "column-reduced", "printed")}
    print(mu, ok)
