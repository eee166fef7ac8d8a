"""Zelevinsky complexes, their Euler characteristics, and the closed-form determinants.

Six settings are supported, each a Lie algebra acting on a polynomial-type
module together with the Weyl group that indexes the complex:

=============  ======  ============================================
case           family  module
=============  ======  ============================================
generic        A       Sym(E (x) U*) (x) Sym(U (x) F*), gl(U)
skew           C       Sym(E (x) U), U symplectic of dim 2k
sym-even       D       Sym(E (x) U), U orthogonal of dim 2k
sym-odd        B       Sym(E (x) U), U orthogonal of dim 2k+1
spinor-odd     B       Sym(E (x) U) (x) spinors, dim U = 2k+1
spinor-even    D       Sym(E (x) U) (x) spinors, dim U = 2k
=============  ======  ============================================
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .charring import (CharSeries, SeriesSpace, L_series, M_series, det_ring, halve_exact,
                       symE_series)
from .weyl import (RootType, Weight, enumerate_weyl, is_dominant, spin_weight_set,
                   zelevinsky_weight)

CASE_FAMILY = {
    "generic": "A",
    "skew": "C",
    "sym-even": "D",
    "sym-odd": "B",
    "spinor-odd": "B",
    "spinor-even": "D",
}

VARIANTS = ("proposition", "display", "display-plus", "display-minus",
            "unsimplified", "column-reduced", "printed")


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class CaseId:
    name: str
    k: int

    def __post_init__(self):
        if self.name not in CASE_FAMILY:
            raise ValueError(f"unknown case {self.name!r}; choose from {sorted(CASE_FAMILY)}")
        if self.k < 0:
            raise ValueError("k must be nonnegative")

    @property
    def root_type(self) -> RootType:
        return RootType(CASE_FAMILY[self.name], self.k)

    @property
    def mode(self) -> str:
        return "two" if self.name == "generic" else "single"

    @property
    def spinor(self) -> bool:
        return self.name.startswith("spinor")

    @property
    def has_symE(self) -> bool:
        """Odd orthogonal cases carry an extra [Sym(E)] factor from the zero weight of U."""
        return self.name in ("sym-odd", "spinor-odd")

    def base_weight(self) -> Weight:
        """lambda = 0, or (1/2, ..., 1/2) for the spinor cases."""
        return Weight.half(self.k) if self.spinor else Weight((0,) * self.k)

    def __str__(self):
        return f"{self.name}[k={self.k}]"


@dataclass(frozen=True)
class ComplexTerm:
    degree: int
    weights: tuple[Weight, ...]


def as_weight(lam, k: int) -> Weight:
    """Accept a Weight, or a sequence of ints / Fractions / strings like '1/2'; pad with zeros."""
    if isinstance(lam, Weight):
        w = lam
    else:
        vals = list(lam)
        if len(vals) > k:
            raise DomainError(f"weight {tuple(vals)} longer than k={k}")
        w = Weight.of(*(vals + [0] * (k - len(vals)))) if k else Weight(())
    if len(w) != k:
        raise DomainError(f"weight {w} has length {len(w)}, expected {k}")
    return w


def check_domain(case: CaseId, lam: Weight) -> None:
    d = lam.doubled
    if len(d) != case.k:
        raise DomainError(f"{case}: weight {lam} has the wrong length")
    dec = all(a >= b for a, b in zip(d, d[1:]))
    if case.spinor:
        if not lam.is_half_odd:
            raise DomainError(f"{case}: spinor weights need all entries in 1/2 + Z, got {lam}")
        mu = [(x - 1) // 2 for x in d]
        if not dec:
            raise DomainError(f"{case}: {lam} is not weakly decreasing")
        if case.name == "spinor-odd" and mu and mu[-1] < 0:
            raise DomainError(f"{case}: lambda - (1/2,...,1/2) must be a partition, got {lam}")
        if case.name == "spinor-even" and len(mu) >= 2 and mu[-2] < abs(mu[-1]):
            raise DomainError(f"{case}: need mu_(k-1) >= |mu_k| for mu = lambda - 1/2, got {lam}")
        return
    if not lam.is_integral:
        raise DomainError(f"{case}: weight must be integral, got {lam}")
    if not dec:
        raise DomainError(f"{case}: {lam} is not weakly decreasing")
    if case.name != "generic" and d and d[-1] < 0:
        raise DomainError(f"{case}: lambda must be a partition, got {lam}")


def make_space(case: CaseId, cap: int, nvars: int | None = None, cap_y: int | None = None,
               nvars_y: int | None = None) -> SeriesSpace:
    if case.mode == "two":
        return SeriesSpace.two(cap, cap_y, nvars, nvars_y)
    return SeriesSpace.single(cap, nvars)


def _check_space(case: CaseId, space: SeriesSpace):
    if space.mode != case.mode:
        raise ValueError(f"{case} needs a {case.mode}-alphabet space, got {space.mode}")


# complexes


def complex_terms(case: CaseId, lam) -> list[ComplexTerm]:
    """Terms F_i = sum over l(w) = i of V_{lam + rho - w^{-1} rho}, grouped by i."""
    lam = as_weight(lam, case.k)
    check_domain(case, lam)
    t = case.root_type
    by_degree: dict[int, list[Weight]] = {}
    for w in enumerate_weyl(t):
        by_degree.setdefault(w.length, []).append(zelevinsky_weight(t, lam, w))
    return [ComplexTerm(i, tuple(sorted(ws, reverse=True))) for i, ws in sorted(by_degree.items())]


# characters


@lru_cache(maxsize=65536)
def _weight_space_char(name: str, k: int, doubled: tuple[int, ...], space: SeriesSpace) -> CharSeries:
    case = CaseId(name, k)
    if case.spinor:
        if not all(d % 2 for d in doubled):
            raise DomainError(f"{case}: weight space index {Weight(doubled)} must be half-odd")
        total = CharSeries.zero(space)
        for delta in spin_weight_set(k):
            idx = [(c - s) // 2 for c, s in zip(doubled, delta.doubled)]
            total = total + _L_product(idx, space)
    else:
        if any(d % 2 for d in doubled):
            raise DomainError(f"{case}: weight space index {Weight(doubled)} must be integral")
        total = _L_product([d // 2 for d in doubled], space)
    if case.has_symE:
        total = symE_series(space) * total
    return total


def _L_product(indices: Sequence[int], space: SeriesSpace) -> CharSeries:
    out = CharSeries.one(space)
    for n in indices:
        out = out * L_series(n, space)
        if out.is_zero():
            break
    return out


def weight_space_char(case: CaseId, chi, space: SeriesSpace) -> CharSeries:
    """Character of the chi-weight space of the module, truncated to the space's caps."""
    _check_space(case, space)
    chi = as_weight(chi, case.k)
    return _weight_space_char(case.name, case.k, chi.doubled, space)


def euler_raw(case: CaseId, lam, space: SeriesSpace, rho_shift=0) -> CharSeries:
    """Signed sum over the Weyl group: sum_w (-1)^l(w) [V_{lam + rho - w^{-1} rho}]."""
    _check_space(case, space)
    lam = as_weight(lam, case.k)
    check_domain(case, lam)
    t = case.root_type
    total = CharSeries.zero(space)
    for w in enumerate_weyl(t):
        chi = zelevinsky_weight(t, lam, w, rho_shift)
        term = _weight_space_char(case.name, case.k, chi.doubled, space)
        total = total - term if w.length % 2 else total + term
    return total


# determinant entry rules


@dataclass(frozen=True)
class DetShape:
    """Entry matrix of signed L-indices plus the scalar prefactors of a closed form."""

    entries: tuple[tuple[tuple[tuple[int, int], ...], ...], ...]
    halve: bool = False
    symE: bool = False


def _base_lambda_required(case: CaseId, lam: Weight, variant: str):
    if lam != case.base_weight():
        raise DomainError(f"variant {variant!r} is the specialization at {case.base_weight()}, got {lam}")


def det_shape(case: CaseId, lam, variant: str = "proposition") -> DetShape:
    """Symbolic entries ((sign, n), ...) for L_n terms of the chosen closed form."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; choose from {VARIANTS}")
    lam = as_weight(lam, case.k)
    check_domain(case, lam)
    k = case.k
    name = case.name
    if case.spinor:
        l = [(d - 1) // 2 for d in lam.doubled]  # lambda - 1/2
    else:
        l = list(lam.integers())
    rng = range(1, k + 1)

    def build(rule):
        return tuple(tuple(tuple(rule(i, j)) for j in rng) for i in rng)

    if variant in ("display", "display-plus", "display-minus"):
        _base_lambda_required(case, lam, variant)
        if name == "generic":
            return DetShape(build(lambda i, j: [(1, j - i)]))
        if name == "skew":
            return DetShape(build(lambda i, j: [(1, j - i), (-1, i + j)]))
        if name == "sym-even":
            return DetShape(build(lambda i, j: [(1, j - i), (1, 2 * k - i - j)]), halve=True)
        if name == "sym-odd":
            s = -1 if variant == "display-minus" else 1
            return DetShape(build(lambda i, j: [(1, j - i), (s, 2 * k + 1 - i - j)]), symE=True)
        if name == "spinor-odd":
            return DetShape(build(lambda i, j: [(1, j - i), (-1, i + j)]), symE=True)
        return DetShape(build(lambda i, j: [(1, j - i), (1, i + j - 1)]))

    if variant in ("unsimplified", "column-reduced", "printed") and not case.spinor:
        raise ValueError(f"variant {variant!r} only exists for the spinor cases")

    if name == "generic":
        return DetShape(build(lambda i, j: [(1, l[i - 1] - i + j)]))
    if name == "skew":
        return DetShape(build(lambda i, j: [(1, l[i - 1] - i + j), (-1, l[i - 1] - i + 2 * k + 2 - j)]))
    if name == "sym-even":
        return DetShape(build(lambda i, j: [(1, l[i - 1] - i + j), (1, l[i - 1] - i + 2 * k - j)]),
                        halve=True)
    if name == "sym-odd":
        return DetShape(build(lambda i, j: [(1, l[i - 1] - i + j), (-1, l[i - 1] + 2 * k + 1 - i - j)]),
                        symE=True)

    # spinor cases; l holds lambda - 1/2
    rev = lambda i: l[k - i]  # noqa: E731  (lambda_{k+1-i} - 1/2)
    if name == "spinor-odd":
        if variant == "unsimplified":
            return DetShape(build(lambda i, j: [
                (1, l[i - 1] - i + j), (-1, l[i - 1] + 2 * k - i + 1 - j),
                (1, l[i - 1] - i + 1 + j), (-1, l[i - 1] + 2 * k - i + 2 - j)]), symE=True)
        if variant == "column-reduced":
            return DetShape(build(lambda i, j: [(1, l[i - 1] - i + j), (-1, l[i - 1] + 2 * k - i + 2 - j)]),
                            symE=True)
        if variant == "printed":
            return DetShape(build(lambda i, j: [(1, rev(i) - i + j), (-1, rev(i) + i + j)]), symE=True)
        return DetShape(build(lambda i, j: [(1, rev(i) + i - j), (-1, rev(i) + i + j)]), symE=True)
    if variant == "unsimplified":
        return DetShape(build(lambda i, j: [
            (1, l[i - 1] - i + j), (1, l[i - 1] - i - j + 2 * k),
            (1, l[i - 1] - i + j + 1), (1, l[i - 1] - i - j + 2 * k + 1)]), halve=True)
    if variant == "column-reduced":
        return DetShape(build(lambda i, j: [(1, l[i - 1] - i + j), (1, l[i - 1] - i - j + 2 * k + 1)]))
    if variant == "printed":
        return DetShape(build(lambda i, j: [(1, rev(i) - i + j), (1, rev(i) + i + j - 1)]))
    return DetShape(build(lambda i, j: [(1, rev(i) + i - j), (1, rev(i) + i + j - 1)]))


def evaluate_shape(shape: DetShape, space: SeriesSpace, kind: str = "h") -> CharSeries:
    """Evaluate a symbolic determinant over the character ring."""
    matrix = []
    for row in shape.entries:
        out_row = []
        for entry in row:
            val = CharSeries.zero(space)
            for sign, n in entry:
                term = L_series(n, space, kind)
                val = val + term if sign > 0 else val - term
            out_row.append(val)
        matrix.append(out_row)
    value = det_ring(matrix, space=space) if matrix else CharSeries.one(space)
    # the 1/2 counts the two sign classes of D_k; for k = 0 there is only one
    if shape.halve and matrix:
        value = halve_exact(value)
    if shape.symE:
        value = symE_series(space) * value
    return value


def det_formula(case: CaseId, lam, space: SeriesSpace, variant: str = "proposition",
                kind: str = "h") -> CharSeries:
    """The closed-form determinant of the case, evaluated in ``space``."""
    _check_space(case, space)
    return evaluate_shape(det_shape(case, lam, variant), space, kind)


def skew_det(k: int, lam, mu, space: SeriesSpace) -> CharSeries:
    """det([L_{lam_i - mu_j - i + j}]) in the generic two-alphabet setting."""
    lam = as_weight(lam, k).integers()
    mu = as_weight(mu, k).integers()
    entries = tuple(tuple(((1, lam[i] - mu[j] - i + j),) for j in range(k)) for i in range(k))
    return evaluate_shape(DetShape(entries), space)


# parity refinement


def parity_split(k: int, lam, sign: int, space: SeriesSpace) -> CharSeries:
    """Character of the (+1 or -1)-eigenspace of the central -1 in O(2k+1) on V[lam].

    Double sum over sign vectors alpha and permutations w, weighted by
    M_{|lam| + |alpha|} (sign +) or M_{|lam| + |alpha| + 1} (sign -).
    """
    from itertools import permutations, product

    case = CaseId("sym-odd", k)
    _check_space(case, space)
    lam_w = as_weight(lam, k)
    check_domain(case, lam_w)
    lam_i = lam_w.integers()
    size = sum(lam_i)
    # 2 * rho_m for m = 1..k is 2k - 2m + 1
    rho2 = [2 * k - 2 * m + 1 for m in range(1, k + 1)]
    M = {p: M_series(p, space) for p in (0, 1)}
    total = CharSeries.zero(space)
    for alpha in product((1, -1), repeat=k):
        neg = sum(1 for a in alpha if a < 0)
        parity = (size + neg + (0 if sign > 0 else 1)) % 2
        for w in permutations(range(k)):
            idx = [(2 * lam_i[i] + rho2[i] - alpha[i] * rho2[w[i]]) // 2 for i in range(k)]
            term = M[parity] * _L_product(idx, space)
            s = (-1) ** neg * _perm_sign(w)
            total = total + term if s > 0 else total - term
    return total


def _perm_sign(perm) -> int:
    s = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                s = -s
    return s


# labels


def _fmt_index(x: Fraction) -> str:
    return str(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def term_label(case: CaseId, chi: Weight, parity: int | None = None) -> str:
    """Printed name of one weight-space summand, e.g. ``L_1⊗L_-1`` or ``M_1⊗L_1``."""
    if case.spinor:
        body = "V_(" + ",".join(_fmt_index(v) for v in chi.values) + ")"
    else:
        body = "⊗".join(f"L_{n}" for n in chi.integers()) or "1"
    if parity is not None:
        return f"M_{parity}⊗{body}"
    if case.has_symE:
        return f"SymE⊗{body}"
    return body


def complex_lines(case: CaseId, lam, parity: int | None = None) -> list[tuple[int, list[str]]]:
    """(degree, labels) per homological degree, highest degree first."""
    out = []
    for term in reversed(complex_terms(case, lam)):
        labels = []
        for chi in term.weights:
            p = None
            if parity is not None:
                if case.name != "sym-odd":
                    raise ValueError("parity refinement only exists for sym-odd")
                p = (sum(chi.integers()) + (0 if parity > 0 else 1)) % 2
            labels.append(term_label(case, chi, p))
        out.append((term.degree, labels))
    return out


def normalize_label(label: str) -> str:
    """Identify L_-n with L_n (valid in the single-alphabet cases)."""
    import re

    return re.sub(r"L_-(\d+)", r"L_\1", label)


def format_complex(case: CaseId, lam, parity: int | None = None, chain: bool = False) -> str:
    lines = complex_lines(case, lam, parity)
    if chain:
        return " → ".join(f"F{d}: " + " ⊕ ".join(labels) for d, labels in lines)
    return "\n".join(f"F{d}: " + " ⊕ ".join(labels) for d, labels in lines)


def entry_labels(shape: DetShape) -> list[list[str]]:
    """Entry matrix as text, e.g. ``L[0]-L[2]``."""
    rows = []
    for row in shape.entries:
        out = []
        for entry in row:
            s = ""
            for sign, n in entry:
                s += ("-" if sign < 0 else ("+" if s else "")) + f"L[{n}]"
            out.append(s)
        rows.append(out)
    return rows


def admissible_weights(case: CaseId, max_size: int) -> list[Weight]:
    """Every admissible lambda whose underlying partition data has size <= max_size.

    For the generic case this means integer vectors with sum |lambda_i| <= max_size.
    """
    from itertools import product as iproduct

    k = case.k
    out = []
    rng = range(-max_size, max_size + 1)
    for vec in iproduct(rng, repeat=k):
        if sum(abs(v) for v in vec) > max_size:
            continue
        if case.spinor:
            lam = Weight(tuple(2 * v + 1 for v in vec))
        else:
            lam = Weight(tuple(2 * v for v in vec))
        try:
            check_domain(case, lam)
        except DomainError:
            continue
        out.append(lam)
    return sorted(out, key=lambda w: (sum(abs(x) for x in w.doubled), w.doubled))


def dominant_for(case: CaseId, lam: Weight) -> bool:
    return is_dominant(case.root_type, lam)


__all__ = [
    "CaseId", "ComplexTerm", "DomainError", "DetShape", "as_weight", "check_domain", "make_space",
    "complex_terms", "weight_space_char", "euler_raw", "det_shape", "evaluate_shape", "det_formula",
    "skew_det", "parity_split", "term_label", "complex_lines", "format_complex", "normalize_label",
    "entry_labels", "admissible_weights", "dominant_for", "Iterable",
]
