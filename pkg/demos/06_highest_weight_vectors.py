"""
Counting highest weight vectors directly
========================================

Independently of any determinant, one can expand the torus character of
Sym(E (x) U) slice by slice and peel off irreducible characters of the
classical group, highest weight first.  The multiplicity of V_lambda in each
slice is the coefficient of the highest weight vector character.  For the
base weight it reproduces the partition sum, and for other weights it is an
independent check on the closed forms.
"""

from jtchar.engine import CaseId, det_formula, make_space
from jtchar.oracle import decompose_u, hwv_char, irreducible_character
from jtchar.weyl import RootType, Weight

# %%
# The character of the 5-dimensional representation of so(5), and its
# decomposition back into irreducibles.
t = RootType("B", 2)
chi = irreducible_character(t, Weight.of(1, 0))
print("terms in chi_(1,0):", len(chi.terms))
print("decomposed:", {str(w): m for w, m in decompose_u(t, chi).items()})

# %%
for name, lam in [("skew", (1, 0)), ("sym-even", (2, 0)), ("sym-odd", (1, 1))]:
    case = CaseId(name, 2)
    space = make_space(case, 4)
    print(name, lam, hwv_char(case, lam, space) == det_formula(case, lam, space))
