"""h, e and Schur polynomials, Schur expansions, LR coefficients and omega."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .charring import CharSeries, SeriesSpace, leibniz_det
from .partitions import conjugate, kostka, normalize, partitions_of, semistandard_tableaux
from .poly import Alphabet, Poly, compositions


@lru_cache(maxsize=None)
def h_polynomial(d: int, a: Alphabet) -> Poly:
    """Complete homogeneous symmetric polynomial; h_0 = 1 and h_d = 0 for d < 0."""
    if d < 0:
        return Poly.zero((a,))
    return Poly((a,), {c: 1 for c in compositions(d, a.size)})


@lru_cache(maxsize=None)
def e_polynomial(d: int, a: Alphabet) -> Poly:
    if d < 0 or d > a.size:
        return Poly.zero((a,))
    terms = {}
    for idx in combinations(range(a.size), d):
        mono = [0] * a.size
        for i in idx:
            mono[i] = 1
        terms[tuple(mono)] = 1
    return Poly((a,), terms)


@lru_cache(maxsize=None)
def schur_polynomial(lam, a: Alphabet) -> Poly:
    """s_lam in the variables of ``a`` via the Jacobi-Trudi determinant det(h_{lam_i - i + j})."""
    lam = normalize(lam)
    if len(lam) > a.size:
        return Poly.zero((a,))
    k = len(lam)
    matrix = [[h_polynomial(lam[i] - i + j, a) for j in range(k)] for i in range(k)]
    return leibniz_det(matrix, Poly.one((a,)))


def tableau_schur_polynomial(lam, a: Alphabet) -> Poly:
    """s_lam as the generating function of semistandard tableaux (independent of Jacobi-Trudi)."""
    lam = normalize(lam)
    terms: dict = {}
    for t in semistandard_tableaux(lam, a.size):
        mono = [0] * a.size
        for row in t:
            for v in row:
                mono[v - 1] += 1
        mono = tuple(mono)
        terms[mono] = terms.get(mono, 0) + 1
    return Poly((a,), terms)


@lru_cache(maxsize=None)
def schur_series(lam, space: SeriesSpace, alphabet: int = 0) -> CharSeries:
    """s_lam in one alphabet of ``space``, through Kostka numbers K_{lam, mu}."""
    lam = normalize(lam)
    d = sum(lam)
    n = space.nvars[alphabet]
    if d > space.caps[alphabet] or len(lam) > n:
        return CharSeries.zero(space)
    out = {}
    for mu in partitions_of(d, max_length=n):
        c = kostka(lam, mu)
        if c:
            key = [()] * len(space.names)
            key[alphabet] = mu
            out[tuple(key)] = c
    return CharSeries(space, out)


def schur_product_series(key, space: SeriesSpace) -> CharSeries:
    """s_{key[0]}(x) s_{key[1]}(y) ... as one series."""
    out = CharSeries.one(space)
    for i, lam in enumerate(key):
        out = out * schur_series(tuple(lam), space, i)
    return out


class SchurExpansion:
    """Finitely supported ``{(lam_x[, lam_y]): coeff}`` in the Schur basis."""

    __slots__ = ("arity", "coeffs")

    def __init__(self, coeffs: dict | None = None, arity: int = 1):
        self.arity = arity
        clean = {}
        for k, v in (coeffs or {}).items():
            k = self._key(k)
            if v:
                clean[k] = clean.get(k, 0) + v
        self.coeffs = {k: v for k, v in clean.items() if v}

    def _key(self, k):
        if self.arity == 1 and (not k or isinstance(k[0], int)):
            return (normalize(k),)
        if len(k) != self.arity:
            raise ValueError(f"key {k} does not have {self.arity} partitions")
        return tuple(normalize(p) for p in k)

    def __getitem__(self, k) -> int:
        return self.coeffs.get(self._key(k), 0)

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.arity == other.arity and self.coeffs == other.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return SchurExpansion(out, self.arity)

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (tuple(sum(p) for p in kv[0]), kv[0]))

    def to_series(self, space: SeriesSpace) -> CharSeries:
        out = CharSeries.zero(space)
        for k, v in self.coeffs.items():
            out = out + schur_product_series(k, space).scale(v)
        return out

    def __repr__(self):
        body = " + ".join(f"{v}*s{list(k[0]) if self.arity == 1 else [list(p) for p in k]}"
                          for k, v in self.items())
        return f"SchurExpansion({body or '0'})"


def schur_decompose(p, space: SeriesSpace | None = None) -> SchurExpansion:
    """Expand a symmetric polynomial (Poly or CharSeries) in Schur polynomials.

    Peels off the lexicographically largest dominant monomial each round.  In
    fewer variables than the degree the expansion is still unique but only
    covers Schur polynomials with at most that many rows.
    """
    if isinstance(p, Poly):
        if space is None:
            names = tuple(a.name for a in p.alphabets)
            caps = tuple(max(p.degrees(n), default=0) for n in names)
            space = SeriesSpace(names, tuple(a.size for a in p.alphabets), caps)
        series = CharSeries.from_poly(p, space)
    else:
        series = p
        space = series.space
    rest = dict(series.coeffs)
    out = {}
    guard = len(space.keys()) + 1
    while rest:
        guard -= 1
        if guard < 0:
            raise RuntimeError("Schur peeling did not terminate; input is not symmetric")
        lead = max(rest)
        c = rest[lead]
        out[lead] = c
        for k, v in schur_product_series(lead, space).coeffs.items():
            nv = rest.get(k, 0) - c * v
            if nv:
                rest[k] = nv
            else:
                rest.pop(k, None)
        if lead in rest:
            raise RuntimeError(f"leading coefficient at {lead} did not cancel")
    return SchurExpansion(out, len(space.names))


@lru_cache(maxsize=None)
def lr_coefficient(lam, mu, nu) -> int:
    """c^lam_{mu nu}: multiplicity of s_lam in s_mu * s_nu."""
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    d = sum(lam)
    if d != sum(mu) + sum(nu):
        return 0
    space = SeriesSpace.single(d, max(d, 1))
    prod = schur_series(mu, space) * schur_series(nu, space)
    return schur_decompose(prod)[lam]


def gl_tensor_multiplicity(lam, mu, nu) -> int:
    """Multiplicity of V_lam in V_mu (x) V_nu for gl(k), weights given as decreasing int k-vectors.

    Twisting every weight by a power of det turns them into partitions with at
    most k rows, where the answer is an LR coefficient.
    """
    k = len(lam)
    if not (len(mu) == len(nu) == k):
        raise ValueError("weights must share one length")
    shift_mu = max(0, -min(mu, default=0))
    shift_nu = max(0, -min(nu, default=0))
    shift_lam = shift_mu + shift_nu
    if min(lam, default=0) + shift_lam < 0:
        return 0
    L = normalize(tuple(x + shift_lam for x in lam))
    M = normalize(tuple(x + shift_mu for x in mu))
    N = normalize(tuple(x + shift_nu for x in nu))
    if len(L) > k:
        return 0
    return lr_coefficient(L, M, N)


def omega(x: SchurExpansion) -> SchurExpansion:
    """Transpose every index partition (each alphabet independently)."""
    return SchurExpansion({tuple(conjugate(p) for p in k): v for k, v in x.coeffs.items()}, x.arity)


__all__ = [
    "h_polynomial", "e_polynomial", "schur_polynomial", "tableau_schur_polynomial",
    "schur_series", "schur_product_series", "SchurExpansion", "schur_decompose",
    "lr_coefficient", "gl_tensor_multiplicity", "omega",
]
