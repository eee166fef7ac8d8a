"""Independent ground truth for the determinant identities.

Two routes, neither of which touches the Weyl-group signed sum:

* ``lhs_partition_sum`` evaluates the explicit Schur-function sums.
* ``hwv_char`` builds the torus character of the module slice by slice and
  peels off classical irreducible characters until nothing is left.

Torus exponents are doubled throughout so spin weights stay integral: the
Laurent variable ``u_j`` in this module stands for the square root of the
usual torus coordinate.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .charring import CharSeries, SeriesSpace, leibniz_det
from .engine import CaseId, as_weight, skew_det
from .partitions import conjugate, enumerate_partitions
from .poly import Alphabet, InexactDivision, Poly, compositions
from .symfun import gl_tensor_multiplicity, schur_series
from .weyl import RootType, Weight, is_dominant, rho

CACHE_VERSION = 1


class FaithfulnessError(ValueError):
    pass


class NotACharacter(ArithmeticError):
    """Greedy subtraction hit a negative multiplicity or left a residue."""


def u_alphabet(k: int) -> Alphabet:
    return Alphabet("u", k, laurent=True)


# explicit partition sums


def _two_family(m: int, cap: int) -> list[tuple[int, ...]]:
    """Shapes (1+2mu_1, ..., 1+2mu_m) and 2mu, with l(mu) <= m.

    The families are disjoint once m >= 1; for m = 0 both reduce to the empty shape.
    """
    shapes = []
    for mu in enumerate_partitions(cap, max_length=m):
        odd = tuple(1 + 2 * x for x in mu + (0,) * (m - len(mu)))
        if sum(odd) <= cap:
            shapes.append(odd)
        if m or not shapes:
            shapes.append(tuple(2 * x for x in mu))
    return [s for s in shapes if sum(s) <= cap]


def lhs_shapes(case: CaseId, cap: int) -> list[tuple]:
    """Index set of the explicit Schur sum, truncated at size ``cap``."""
    k = case.k
    if case.name == "generic":
        return [(p, p) for p in enumerate_partitions(cap, max_length=k)]
    if case.name == "skew":
        return [tuple(conjugate(tuple(2 * x for x in p)))
                for p in enumerate_partitions(cap, max_part=k) if 2 * sum(p) <= cap]
    if case.name in ("sym-even", "sym-odd"):
        return _two_family(2 * k if case.name == "sym-even" else 2 * k + 1, cap)
    m = 2 * k + 1 if case.name == "spinor-odd" else 2 * k
    return enumerate_partitions(cap, max_length=m)


def lhs_partition_sum(case: CaseId, space: SeriesSpace) -> CharSeries:
    """The case's explicit Schur-function sum, truncated to the space's caps."""
    if not space.faithful:
        raise FaithfulnessError(f"alphabet sizes {space.nvars} below caps {space.caps}")
    total = CharSeries.zero(space)
    if case.name == "generic":
        for p, q in lhs_shapes(case, min(space.caps)):
            total = total + schur_series(p, space, 0) * schur_series(q, space, 1)
        return total
    for p in lhs_shapes(case, space.caps[0]):
        total = total + schur_series(tuple(p), space)
    return total


# irreducible characters


def _alternant(u: Alphabet, exps: tuple[int, ...], mode: str) -> Poly:
    """det(u_j^{e_i}), det(u_j^{e_i} - u_j^{-e_i}) or det(u_j^{e_i} + u_j^{-e_i})."""
    k = u.size
    unit = [0] * k

    def var(j, e):
        v = list(unit)
        v[j] = e
        return tuple(v)

    matrix = []
    for e in exps:
        row = []
        for j in range(k):
            if mode == "a":
                terms = {var(j, e): 1}
            elif mode == "-":
                terms = {var(j, e): 1}
                terms[var(j, -e)] = terms.get(var(j, -e), 0) - 1
            else:
                terms = {var(j, e): 1}
                terms[var(j, -e)] = terms.get(var(j, -e), 0) + 1
            row.append(Poly((u,), terms))
        matrix.append(row)
    return leibniz_det(matrix, Poly.one((u,)))


@lru_cache(maxsize=None)
def _irreducible(family: str, k: int, doubled_hw: tuple[int, ...]) -> Poly:
    t = RootType(family, k)
    u = u_alphabet(k)
    r = rho(t).doubled
    top = tuple(a + b for a, b in zip(doubled_hw, r))
    if family == "A":
        num, den = _alternant(u, top, "a"), _alternant(u, r, "a")
    elif family in "BC":
        num, den = _alternant(u, top, "-"), _alternant(u, r, "-")
    else:
        num = _alternant(u, top, "+") + _alternant(u, top, "-")
        den = _alternant(u, r, "+") + _alternant(u, r, "-")
    q = num.divide_exact(den)
    if q * den != num:
        raise InexactDivision(f"character ratio for {t}, hw {Weight(doubled_hw)} is not exact")
    return q


def _lookup(family: str, k: int, doubled_hw: tuple[int, ...]) -> Poly:
    """_irreducible, going through the on-disk memo when one is installed."""
    if _CACHE is None:
        return _irreducible(family, k, doubled_hw)
    t, hw = RootType(family, k), Weight(doubled_hw)
    hit = _CACHE.get_irreducible(t, hw)
    if hit is None:
        hit = _irreducible(family, k, doubled_hw)
        _CACHE.put_irreducible(t, hw, hit)
    return hit


def irreducible_character(t: RootType, hw, u: Alphabet | None = None) -> Poly:
    """Character of the irreducible representation with highest weight ``hw``.

    Exponents of ``u`` are doubled weights, so ``u_1^2`` is the weight e_1.
    """
    hw = as_weight(hw, t.k)
    if not is_dominant(t, hw):
        raise ValueError(f"{hw} is not dominant for {t}")
    if t.k == 0:
        raise ValueError("rank 0 has no torus alphabet")
    if t.family == "A" and not hw.is_integral:
        raise ValueError("type A weights must be integral")
    if t.family in "AC" and not hw.is_integral:
        raise ValueError(f"{t} weights must be integral")
    if t.family in "BD" and not (hw.is_integral or hw.is_half_odd):
        raise ValueError(f"{hw} mixes integral and half-integral entries")
    q = _lookup(t.family, t.k, hw.doubled)
    if u is not None and u != q.alphabets[0]:
        return Poly((u,), q.terms)
    return q


# module torus characters


def _u_weights(case: CaseId) -> tuple[tuple[int, ...], ...]:
    """Doubled torus weights of U (for the generic case: of U*)."""
    k = case.k
    basis = [tuple(2 if j == i else 0 for j in range(k)) for i in range(k)]
    neg = [tuple(-x for x in b) for b in basis]
    if case.name == "generic":
        return tuple(neg)
    ws = basis + neg
    if case.root_type.family == "B":
        ws.append((0,) * k)
    return tuple(ws)


@lru_cache(maxsize=None)
def _h_of_weights(weights: tuple[tuple[int, ...], ...], d: int, k: int) -> dict:
    """h_d evaluated at the monomials u^w (each of length k), as {exponent: coeff}."""
    if d == 0:
        return {(0,) * k: 1}
    if not weights:
        return {}
    first, rest = weights[0], weights[1:]
    out: dict = {}
    for a in range(d + 1):
        for m, c in _h_of_weights(rest, d - a, k).items():
            key = tuple(x + a * f for x, f in zip(m, first))
            out[key] = out.get(key, 0) + c
    return out


def _mul_dicts(a: dict, b: dict) -> dict:
    out: dict = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            key = tuple(x + y for x, y in zip(m1, m2))
            out[key] = out.get(key, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def _spin_factor(k: int) -> dict:
    """prod_j (u_j + u_j^{-1}) in doubled exponents: the spinor weights."""
    out = {(0,) * k: 1}
    for j in range(k):
        f = {tuple(s if i == j else 0 for i in range(k)): 1 for s in (1, -1)}
        out = _mul_dicts(out, f)
    return out


def _slice_dict(case: CaseId, key: tuple) -> dict:
    """Coefficient of the x(,y)-monomial ``key`` in the module character, as a u-exponent dict."""
    k = case.k
    ws = _u_weights(case)
    out = {(0,) * k: 1}
    for d in key[0]:
        out = _mul_dicts(out, _h_of_weights(ws, d, k))
    if case.name == "generic":
        dual = tuple(tuple(-x for x in w) for w in ws)
        for d in key[1]:
            out = _mul_dicts(out, _h_of_weights(dual, d, k))
    if case.spinor:
        out = _mul_dicts(out, _spin_factor(k))
    return out


def torus_slice(case: CaseId, key: tuple) -> Poly:
    """u-character of the weight space of E (and F) indexed by one dominant monomial."""
    if case.k == 0:
        raise ValueError("rank 0 has no torus alphabet")
    return Poly((u_alphabet(case.k),), _slice_dict(case, key))


def module_torus_character(case: CaseId, degree, space: SeriesSpace) -> Poly:
    """Full character of one degree slice over x (and y) and the doubled torus alphabet u.

    ``degree`` is an int for the single-alphabet cases and an (x, y) pair for generic.
    """
    if case.k == 0:
        raise ValueError("rank 0 has no torus alphabet")
    degrees = (degree,) if isinstance(degree, int) else tuple(degree)
    if len(degrees) != len(space.names):
        raise ValueError(f"degree {degree} does not match the space {space.names}")
    if any(d > c for d, c in zip(degrees, space.caps)):
        raise ValueError(f"degree {degree} exceeds caps {space.caps}")
    alphs = space.alphabets() + (u_alphabet(case.k),)
    ctx = Poly.zero(alphs)
    out: dict = {}
    blocks = [list(compositions(d, n)) for d, n in zip(degrees, space.nvars)]
    for monos in product(*blocks):
        key = tuple(tuple(sorted((e for e in m if e), reverse=True)) for m in monos)
        for uexp, c in _slice_dict(case, key).items():
            spec = {name: m for name, m in zip(space.names, monos)}
            spec["u"] = uexp
            out[ctx.monomial_key(spec)] = c
    return Poly(alphs, out)


# greedy decomposition


@dataclass
class DecompositionResult:
    """Multiplicity-space characters indexed by highest weight."""

    root_type: RootType
    parts: dict = field(default_factory=dict)

    def weights(self) -> list[Weight]:
        return sorted(self.parts, key=lambda w: w.doubled, reverse=True)

    def __getitem__(self, hw) -> object:
        return self.parts[as_weight(hw, self.root_type.k)]

    def get(self, hw, default=None):
        return self.parts.get(as_weight(hw, self.root_type.k), default)


@lru_cache(maxsize=None)
def _decompose_laurent(family: str, k: int, poly: Poly) -> tuple[tuple[tuple[int, ...], int], ...]:
    t = RootType(family, k)
    rest = dict(poly.terms)
    found = []
    guard = 10**6
    while rest:
        guard -= 1
        if guard < 0:
            raise NotACharacter("greedy subtraction did not terminate")
        lead = max(m for m in rest if is_dominant(t, Weight(m)))
        c = rest[lead]
        if c < 0:
            raise NotACharacter(f"negative multiplicity {c} at highest weight {Weight(lead)}")
        found.append((lead, c))
        for m, v in _lookup(family, k, lead).terms.items():
            nv = rest.get(m, 0) - c * v
            if nv:
                rest[m] = nv
            else:
                rest.pop(m, None)
        if lead in rest:
            raise NotACharacter(f"weight {Weight(lead)} did not cancel")
    return tuple(found)


def decompose_u(t: RootType, chi: Poly) -> dict[Weight, int]:
    """Multiplicities of irreducibles in a character over the doubled torus alphabet alone."""
    if len(chi.alphabets) != 1 or chi.alphabets[0].name != "u":
        raise ValueError("expected a polynomial in the torus alphabet u only")
    try:
        pieces = _decompose_laurent(t.family, t.k, chi)
    except ValueError as exc:  # max() over an empty dominant set
        raise NotACharacter(str(exc)) from exc
    return {Weight(m): c for m, c in pieces}


def greedy_decompose(chi: Poly, t: RootType, space: SeriesSpace | None = None) -> DecompositionResult:
    """Split ``chi`` (over u and possibly x, y) into irreducible u-characters.

    Each highest weight maps to its multiplicity-space character: an int when
    ``chi`` involves u alone, otherwise a Poly over the other alphabets (or a
    CharSeries when ``space`` is given).
    """
    names = [a.name for a in chi.alphabets]
    if "u" not in names:
        raise ValueError("chi has no torus alphabet u")
    if names == ["u"]:
        return DecompositionResult(t, decompose_u(t, chi))
    rest_alphs = tuple(a for a in chi.alphabets if a.name != "u")
    acc: dict[Weight, dict] = {}
    for other, upoly in chi.split_by("u").items():
        for hw, c in decompose_u(t, upoly).items():
            acc.setdefault(hw, {})[other] = c
    parts: dict = {}
    for hw, terms in acc.items():
        p = Poly(rest_alphs, terms)
        parts[hw] = CharSeries.from_poly(p, space) if space is not None else p
    return DecompositionResult(t, parts)


def decompose_module(case: CaseId, space: SeriesSpace) -> DecompositionResult:
    """Decompose every monomial slice of the module up to the space's caps."""
    t = case.root_type
    acc: dict[Weight, dict] = {}
    for key in space.keys():
        if case.k == 0:
            c = _rank0_coefficient(case, key)
            if c:
                acc.setdefault(Weight(()), {})[key] = c
            continue
        for hw, c in decompose_u(t, torus_slice(case, key)).items():
            acc.setdefault(hw, {})[key] = c
    return DecompositionResult(t, {hw: CharSeries(space, v) for hw, v in acc.items()})


def _rank0_coefficient(case: CaseId, key) -> int:
    # k = 0: U is 0-dimensional, except the odd orthogonal cases where V = Sym(E)
    if case.has_symE:
        return 1
    return 1 if all(not p for p in key) else 0


def hwv_char(case: CaseId, lam, space: SeriesSpace) -> CharSeries:
    """Character of the highest weight vectors of weight ``lam``, read off the decomposition."""
    t = case.root_type
    lam = as_weight(lam, case.k)
    if not is_dominant(t, lam):
        raise ValueError(f"{lam} is not dominant for {t}")
    if case.mode != space.mode:
        raise ValueError(f"{case} needs a {case.mode}-alphabet space")
    out = {}
    for key in space.keys():
        if case.k == 0:
            c = _rank0_coefficient(case, key)
        else:
            c = decompose_u(t, torus_slice(case, key)).get(lam, 0)
        if c:
            out[key] = c
    return CharSeries(space, out)


def parity_oracle(k: int, lam, sign: int, space: SeriesSpace) -> CharSeries:
    """V[lam]^+ or V[lam]^- for sym-odd: -1 in O(U) acts on degree d by (-1)^d."""
    full = hwv_char(CaseId("sym-odd", k), lam, space)
    return full.parity_part(0 if sign > 0 else 1)


def lr_weights(k: int, lam: tuple[int, ...], mu: tuple[int, ...]):
    """Dominant gl(k) weights nu with V_lam inside V_mu (x) V_nu, with multiplicities."""
    lo, hi = lam[-1] - mu[0], lam[0] - mu[-1]
    size = sum(lam) - sum(mu)
    out = []
    for nu in product(range(hi, lo - 1, -1), repeat=k):
        if sum(nu) != size or any(a < b for a, b in zip(nu, nu[1:])):
            continue
        c = gl_tensor_multiplicity(lam, mu, nu)
        if c:
            out.append((nu, c))
    return out


def skew_lr_check(k: int, lam, mu, space: SeriesSpace) -> tuple[CharSeries, CharSeries]:
    """(det[L_{lam_i - mu_j - i + j}], sum_nu c^lam_{mu nu} [V[nu]]) in the generic case."""
    case = CaseId("generic", k)
    lam_t = as_weight(lam, k).integers()
    mu_t = as_weight(mu, k).integers()
    for w in (lam_t, mu_t):
        if any(a < b for a, b in zip(w, w[1:])):
            raise ValueError(f"{w} is not weakly decreasing")
    lhs = skew_det(k, lam_t, mu_t, space)
    rhs = CharSeries.zero(space)
    for nu, c in lr_weights(k, lam_t, mu_t):
        rhs = rhs + hwv_char(case, nu, space).scale(c)
    return lhs, rhs


# optional on-disk memo


class OracleCache:
    """JSON memo for irreducible characters, keyed by (family, k, doubled highest weight)."""

    def __init__(self, path: str):
        self.path = path
        self.irreducible: dict[str, list] = {}
        self.dirty = False
        if os.path.exists(path):
            with open(path) as fh:
                data = json.load(fh)
            if data.get("version") == CACHE_VERSION:
                self.irreducible = data.get("irreducible", {})

    @staticmethod
    def _key(t: RootType, hw: Weight) -> str:
        return f"{t.family}|{t.k}|" + ",".join(map(str, hw.doubled))

    def get_irreducible(self, t: RootType, hw: Weight) -> Poly | None:
        hit = self.irreducible.get(self._key(t, hw))
        if hit is None:
            return None
        return Poly((u_alphabet(t.k),), {tuple(m): c for m, c in hit})

    def put_irreducible(self, t: RootType, hw: Weight, p: Poly):
        key = self._key(t, hw)
        if key not in self.irreducible:
            self.irreducible[key] = [[list(m), c] for m, c in p.items()]
            self.dirty = True

    def save(self):
        if not self.dirty:
            return
        tmp = self.path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump({"version": CACHE_VERSION, "irreducible": self.irreducible}, fh, sort_keys=True)
        os.replace(tmp, self.path)
        self.dirty = False


_CACHE: OracleCache | None = None


def use_cache(path: str | None) -> OracleCache | None:
    """Install (or with None, remove) the process-wide on-disk memo."""
    global _CACHE
    _CACHE = OracleCache(path) if path else None
    return _CACHE


__all__ = [
    "FaithfulnessError", "NotACharacter", "u_alphabet", "lhs_shapes", "lhs_partition_sum",
    "irreducible_character", "torus_slice", "module_torus_character", "DecompositionResult",
    "decompose_u", "greedy_decompose", "decompose_module", "hwv_char", "parity_oracle",
    "lr_weights", "skew_lr_check", "OracleCache", "use_cache",
]
