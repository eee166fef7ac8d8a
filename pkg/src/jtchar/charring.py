"""Degree-capped rings of symmetric characters.

A :class:`CharSeries` is a polynomial that is symmetric in each of its
alphabets.  Such a polynomial is determined by its coefficients on dominant
monomials (exponent vectors sorted decreasingly), so that is all we store:
one integer per tuple of partitions, i.e. the expansion in monomial symmetric
polynomials ``m_nu``.  Products are computed directly in that basis, which is
exact and far cheaper than multiplying the full polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Sequence

from .partitions import partitions_of, pad
from .poly import Alphabet, Poly, bounded_vectors


class CapMismatch(ValueError):
    pass


class NonSymmetric(ValueError):
    pass


class HalvingError(ArithmeticError):
    pass


@dataclass(frozen=True)
class SeriesSpace:
    """Alphabet names, their variable counts, and per-alphabet degree caps."""

    names: tuple[str, ...]
    nvars: tuple[int, ...]
    caps: tuple[int, ...]

    def __post_init__(self):
        if not (len(self.names) == len(self.nvars) == len(self.caps)):
            raise ValueError("names, nvars and caps must have equal length")
        if any(n < 1 for n in self.nvars) or any(c < 0 for c in self.caps):
            raise ValueError(f"bad space {self}")

    @classmethod
    def single(cls, cap: int, nvars: int | None = None, name: str = "x") -> SeriesSpace:
        return cls((name,), (max(cap, 1) if nvars is None else nvars,), (cap,))

    @classmethod
    def two(cls, cap_x: int, cap_y: int | None = None, nx: int | None = None, ny: int | None = None) -> SeriesSpace:
        cap_y = cap_x if cap_y is None else cap_y
        return cls(("x", "y"),
                   (max(cap_x, 1) if nx is None else nx, max(cap_y, 1) if ny is None else ny),
                   (cap_x, cap_y))

    @property
    def mode(self) -> str:
        return "single" if len(self.names) == 1 else "two"

    @property
    def faithful(self) -> bool:
        """True when every alphabet has at least as many variables as its cap."""
        return all(n >= c for n, c in zip(self.nvars, self.caps))

    def alphabets(self) -> tuple[Alphabet, ...]:
        return tuple(Alphabet(n, v) for n, v in zip(self.names, self.nvars))

    def keys(self) -> list[tuple]:
        per = [[p for d in range(c + 1) for p in partitions_of(d, max_length=n)]
               for n, c in zip(self.nvars, self.caps)]
        return [k for k in product(*per)]

    def admits(self, key) -> bool:
        return all(sum(p) <= c and len(p) <= n for p, c, n in zip(key, self.caps, self.nvars))

    def swapped(self) -> SeriesSpace:
        return SeriesSpace(self.names, self.nvars[::-1], self.caps[::-1])


def _key_order(key):
    return (tuple(sum(p) for p in key), key)


@lru_cache(maxsize=None)
def _splits(nu: tuple[int, ...]) -> tuple[tuple[tuple, tuple, int], ...]:
    """(a, b, count): ways to write nu = alpha + beta with sort(alpha)=a, sort(beta)=b."""
    counts: dict = {}
    for alpha in bounded_vectors(nu):
        a = tuple(sorted((x for x in alpha if x), reverse=True))
        b = tuple(sorted((n - x for n, x in zip(nu, alpha) if n - x), reverse=True))
        counts[(a, b)] = counts.get((a, b), 0) + 1
    return tuple((a, b, c) for (a, b), c in counts.items())


def _multiset_permutations(vec: tuple[int, ...]):
    if not vec:
        yield ()
        return
    for v in sorted(set(vec), reverse=True):
        rest = list(vec)
        rest.remove(v)
        for tail in _multiset_permutations(tuple(rest)):
            yield (v,) + tail


class CharSeries:
    """Immutable truncated symmetric series, stored as ``{(nu_x[, nu_y]): coeff}``."""

    __slots__ = ("space", "_c")

    def __init__(self, space: SeriesSpace, coeffs: dict | None = None):
        self.space = space
        c = {}
        for k, v in (coeffs or {}).items():
            if v and space.admits(k):
                c[k] = v
        self._c = c

    @classmethod
    def _raw(cls, space, coeffs):
        obj = cls.__new__(cls)
        obj.space = space
        obj._c = coeffs
        return obj

    @classmethod
    def zero(cls, space: SeriesSpace) -> CharSeries:
        return cls._raw(space, {})

    @classmethod
    def one(cls, space: SeriesSpace) -> CharSeries:
        return cls._raw(space, {tuple(() for _ in space.names): 1})

    @property
    def mode(self) -> str:
        return self.space.mode

    def coefficient(self, key) -> int:
        if self.space.mode == "single" and (not key or isinstance(key[0], int)):
            key = (tuple(key),)
        return self._c.get(tuple(tuple(p) for p in key), 0)

    def items(self):
        return sorted(self._c.items(), key=lambda kv: _key_order(kv[0]))

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def _check(self, other):
        if not isinstance(other, CharSeries):
            raise TypeError(f"cannot combine CharSeries with {type(other).__name__}")
        if other.space != self.space:
            raise CapMismatch(f"{self.space} vs {other.space}")

    def __eq__(self, other):
        if not isinstance(other, CharSeries):
            return NotImplemented
        return self.space == other.space and self._c == other._c

    def __hash__(self):
        return hash((self.space, frozenset(self._c.items())))

    def __add__(self, other):
        self._check(other)
        out = dict(self._c)
        for k, v in other._c.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return CharSeries._raw(self.space, out)

    def __neg__(self):
        return CharSeries._raw(self.space, {k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> CharSeries:
        if not c:
            return CharSeries.zero(self.space)
        return CharSeries._raw(self.space, {k: c * v for k, v in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        return _multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    # slicing

    def degree_part(self, *degrees: int) -> CharSeries:
        """Homogeneous component of the given (multi)degree."""
        return CharSeries._raw(self.space, {k: v for k, v in self._c.items()
                                            if tuple(sum(p) for p in k) == tuple(degrees)})

    def parity_part(self, parity: int) -> CharSeries:
        """Terms whose total degree has the given parity."""
        return CharSeries._raw(self.space, {k: v for k, v in self._c.items()
                                            if sum(sum(p) for p in k) % 2 == parity % 2})

    def swap_alphabets(self) -> CharSeries:
        if self.space.mode != "two":
            raise ValueError("swap_alphabets needs a two-alphabet series")
        return CharSeries._raw(self.space.swapped(), {(k[1], k[0]): v for k, v in self._c.items()})

    def first_difference(self, other: CharSeries):
        """(key, self coeff, other coeff) for the first differing key in canonical order, or None."""
        self._check(other)
        keys = set(self._c) | set(other._c)
        for k in sorted(keys, key=_key_order):
            a, b = self._c.get(k, 0), other._c.get(k, 0)
            if a != b:
                return k, a, b
        return None

    # conversion

    def to_poly(self) -> Poly:
        """Expand into a full polynomial over the space's alphabets."""
        alphs = self.space.alphabets()
        ctx = Poly.zero(alphs)
        terms = {}
        for key, c in self._c.items():
            blocks = [list(_multiset_permutations(pad(p, n))) for p, n in zip(key, self.space.nvars)]
            for combo in product(*blocks):
                spec = dict(zip(self.space.names, combo))
                terms[ctx.monomial_key(spec)] = c
        return Poly(alphs, terms)

    @classmethod
    def from_poly(cls, p: Poly, space: SeriesSpace, check_symmetric: bool = True) -> CharSeries:
        """Read off dominant coefficients of a polynomial symmetric in each alphabet.

        Terms above the caps are dropped.
        """
        if tuple(a.name for a in p.alphabets) != tuple(sorted(space.names)):
            raise CapMismatch(f"polynomial alphabets {p.alphabets} do not match {space.names}")
        for name, n in zip(space.names, space.nvars):
            if p.alphabet(name).size != n:
                raise CapMismatch(f"alphabet {name} has {p.alphabet(name).size} variables, space says {n}")
            if check_symmetric and not p.is_symmetric(name):
                raise NonSymmetric(f"polynomial is not symmetric in {name}")
        out = {}
        for mono, c in p.terms.items():
            blocks = [p.exponents(mono, name) for name in space.names]
            if all(all(a >= b for a, b in zip(bl, bl[1:])) for bl in blocks):
                key = tuple(tuple(e for e in bl if e) for bl in blocks)
                if space.admits(key):
                    out[key] = c
        return cls._raw(space, out)

    def __repr__(self):
        if not self._c:
            return "CharSeries(0)"
        parts = []
        for k, v in self.items():
            label = "*".join(f"m{list(p)}({n})" for p, n in zip(k, self.space.names) if p) or "1"
            parts.append(f"{v}*{label}")
        return "CharSeries(" + " + ".join(parts) + ")"


def _multiply(f: CharSeries, g: CharSeries) -> CharSeries:
    sp = f.space
    if not f._c or not g._c:
        return CharSeries.zero(sp)
    na = len(sp.names)
    fdeg = [{sum(k[a]) for k in f._c} for a in range(na)]
    gdeg = [{sum(k[a]) for k in g._c} for a in range(na)]
    targets = []
    for a in range(na):
        degs = sorted({x + y for x in fdeg[a] for y in gdeg[a] if x + y <= sp.caps[a]})
        if not degs:
            return CharSeries.zero(sp)
        targets.append([p for d in degs for p in partitions_of(d, max_length=sp.nvars[a])])
    fc, gc = f._c, g._c
    out = {}
    if na == 1:
        for nu in targets[0]:
            s = 0
            for a, b, cnt in _splits(nu):
                x = fc.get((a,))
                if x:
                    y = gc.get((b,))
                    if y:
                        s += cnt * x * y
            if s:
                out[(nu,)] = s
        return CharSeries._raw(sp, out)
    if na == 2:
        f_by, g_by = {}, {}
        for (ax, ay), v in fc.items():
            f_by.setdefault(ax, {})[ay] = v
        for (bx, by), v in gc.items():
            g_by.setdefault(bx, {})[by] = v
        for nu in targets[0]:
            pairs = [(cx, f_by[ax], g_by[bx]) for ax, bx, cx in _splits(nu)
                     if ax in f_by and bx in g_by]
            if not pairs:
                continue
            for mu in targets[1]:
                ysplits = _splits(mu)
                s = 0
                for cx, F, G in pairs:
                    for ay, by, cy in ysplits:
                        x = F.get(ay)
                        if x:
                            y = G.get(by)
                            if y:
                                s += cx * cy * x * y
                if s:
                    out[(nu, mu)] = s
        return CharSeries._raw(sp, out)
    for key in product(*targets):
        s = 0
        for combo in product(*(_splits(nu) for nu in key)):
            x = fc.get(tuple(c[0] for c in combo))
            if x:
                y = gc.get(tuple(c[1] for c in combo))
                if y:
                    cnt = 1
                    for c in combo:
                        cnt *= c[2]
                    s += cnt * x * y
        if s:
            out[key] = s
    return CharSeries._raw(sp, out)


# building blocks


def h_series(d: int, space: SeriesSpace, alphabet: int = 0) -> CharSeries:
    """Complete homogeneous h_d in one alphabet of the space (0 for d < 0)."""
    if d < 0 or d > space.caps[alphabet]:
        return CharSeries.zero(space)
    out = {}
    for p in partitions_of(d, max_length=space.nvars[alphabet]):
        key = [()] * len(space.names)
        key[alphabet] = p
        out[tuple(key)] = 1
    return CharSeries._raw(space, out)


def e_series(d: int, space: SeriesSpace, alphabet: int = 0) -> CharSeries:
    """Elementary e_d in one alphabet of the space (0 for d < 0 or d > nvars)."""
    if d < 0 or d > space.caps[alphabet] or d > space.nvars[alphabet]:
        return CharSeries.zero(space)
    key = [()] * len(space.names)
    key[alphabet] = (1,) * d
    return CharSeries._raw(space, {tuple(key): 1})


@lru_cache(maxsize=4096)
def L_series(n: int, space: SeriesSpace, kind: str = "h") -> CharSeries:
    """sum_{d >= 0, d+n >= 0} h_d(x) h_{d+n}(y), or h_d(x) h_{d+n}(x) for a single alphabet.

    ``kind="e"`` uses elementary symmetric functions instead of h.
    """
    base = {"h": h_series, "e": e_series}[kind]
    total = CharSeries.zero(space)
    d = max(0, -n)
    if space.mode == "two":
        while d <= space.caps[0] and d + n <= space.caps[1]:
            total = total + base(d, space, 0) * base(d + n, space, 1)
            d += 1
        return total
    while 2 * d + n <= space.caps[0]:
        total = total + base(d, space) * base(d + n, space)
        d += 1
    return total


@lru_cache(maxsize=256)
def symE_series(space: SeriesSpace) -> CharSeries:
    """[Sym(E)] = sum_d h_d, single alphabet."""
    _need_single(space)
    total = CharSeries.zero(space)
    for d in range(space.caps[0] + 1):
        total = total + h_series(d, space)
    return total


@lru_cache(maxsize=256)
def M_series(parity: int, space: SeriesSpace) -> CharSeries:
    """Even (parity 0) or odd (parity 1) part of [Sym(E)]."""
    _need_single(space)
    total = CharSeries.zero(space)
    for d in range(parity % 2, space.caps[0] + 1, 2):
        total = total + h_series(d, space)
    return total


def _need_single(space):
    if space.mode != "single":
        raise ValueError("this series lives in a single alphabet")


def halve_exact(s: CharSeries) -> CharSeries:
    """Divide every coefficient by 2, refusing if any coefficient is odd."""
    for k, v in s.items():
        if v % 2:
            raise HalvingError(f"odd coefficient {v} at monomial {format_key(k, s.space)}")
    return CharSeries._raw(s.space, {k: v // 2 for k, v in s._c.items()})


def format_key(key, space: SeriesSpace) -> str:
    """Dominant monomial as text, e.g. ``x1^2*x2*y1``; ``1`` for the constant."""
    parts = []
    for p, name in zip(key, space.names):
        for i, e in enumerate(p):
            parts.append(f"{name}{i + 1}" if e == 1 else f"{name}{i + 1}^{e}")
    return "*".join(parts) or "1"


# determinants


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def leibniz_det(matrix: Sequence[Sequence], one):
    """Leibniz expansion over any commutative ring supporting +, -, *."""
    k = len(matrix)
    total = None
    for perm in permutations(range(k)):
        term = one
        for i, j in enumerate(perm):
            entry = matrix[i][j]
            if not entry:
                term = None
                break
            term = term * entry
        if term is None:
            continue
        term = term if _perm_sign(perm) > 0 else -term
        total = term if total is None else total + term
    return one - one if total is None else total


def cofactor_det(matrix: Sequence[Sequence], one):
    """Laplace expansion along rows, memoized on the surviving column set."""
    k = len(matrix)
    memo = {}

    def minor(row: int, cols: tuple[int, ...]):
        if row == k:
            return one
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = one - one
        for pos, c in enumerate(cols):
            entry = matrix[row][c]
            if not entry:
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            term = entry * sub
            total = total + term if pos % 2 == 0 else total - term
        memo[key] = total
        return total

    return minor(0, tuple(range(k)))


def _validate(matrix, space):
    k = len(matrix)
    if any(len(row) != k for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    spaces = {e.space for row in matrix for e in row}
    if space is not None:
        spaces.add(space)
    if len(spaces) > 1:
        raise CapMismatch(f"matrix entries live in different spaces: {spaces}")
    if not spaces:
        raise ValueError("empty matrix needs an explicit space")
    return spaces.pop()


def det_ring(matrix: Sequence[Sequence[CharSeries]], space: SeriesSpace | None = None,
             method: str = "auto") -> CharSeries:
    """Exact determinant of a square matrix of CharSeries sharing one space.

    ``method`` is ``"leibniz"``, ``"cofactor"`` or ``"auto"`` (Leibniz up to 6x6).
    """
    sp = _validate(matrix, space)
    one = CharSeries.one(sp)
    if method == "auto":
        method = "leibniz" if len(matrix) <= 6 else "cofactor"
    if method == "leibniz":
        return leibniz_det(matrix, one)
    if method == "cofactor":
        return cofactor_det(matrix, one)
    raise ValueError(f"unknown method {method!r}")
