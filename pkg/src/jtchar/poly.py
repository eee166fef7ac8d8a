"""Sparse multivariate Laurent polynomials with integer coefficients.

Variables are grouped into named alphabets.  A monomial is stored as one flat
tuple of exponents, alphabets concatenated in name order, so sorting the
terms gives the canonical order (alphabet name, variable index, exponent).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping


class AlphabetMismatch(ValueError):
    pass


class InexactDivision(ArithmeticError):
    pass


@dataclass(frozen=True, order=True)
class Alphabet:
    name: str
    size: int
    laurent: bool = False

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"alphabet {self.name!r} needs at least one variable")


def _context(alphabets: Iterable[Alphabet]) -> tuple[Alphabet, ...]:
    ctx = tuple(sorted(alphabets, key=lambda a: a.name))
    names = [a.name for a in ctx]
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate alphabet names in {names}")
    return ctx


class Poly:
    """Immutable sparse polynomial over a fixed tuple of alphabets."""

    __slots__ = ("alphabets", "_terms", "_offsets", "_hash")

    def __init__(self, alphabets: Iterable[Alphabet], terms: Mapping | None = None, *, _trusted=False):
        self.alphabets = _context(alphabets)
        offsets, pos = {}, 0
        for a in self.alphabets:
            offsets[a.name] = (pos, pos + a.size)
            pos += a.size
        self._offsets = offsets
        self._hash = None
        if _trusted:
            self._terms = terms
            return
        clean = {}
        nvars = pos
        for mono, c in (terms or {}).items():
            mono = self._as_key(mono) if not isinstance(mono, tuple) else mono
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has wrong length for {self.alphabets}")
            if c:
                clean[mono] = clean.get(mono, 0) + int(c)
        clean = {m: c for m, c in clean.items() if c}
        for mono in clean:
            for a in self.alphabets:
                lo, hi = offsets[a.name]
                if not a.laurent and any(e < 0 for e in mono[lo:hi]):
                    raise ValueError(f"negative exponent in non-Laurent alphabet {a.name!r}")
        self._terms = clean

    # construction helpers

    def _as_key(self, spec: Mapping[str, Iterable[int]]) -> tuple[int, ...]:
        key = []
        for a in self.alphabets:
            exps = tuple(spec.get(a.name, (0,) * a.size))
            if len(exps) != a.size:
                raise ValueError(f"expected {a.size} exponents for {a.name!r}, got {exps}")
            key.extend(exps)
        return tuple(key)

    def monomial_key(self, spec: Mapping[str, Iterable[int]]) -> tuple[int, ...]:
        """Flat exponent tuple for ``{alphabet name: exponent vector}``; omitted alphabets are 0."""
        return self._as_key(spec)

    @classmethod
    def zero(cls, alphabets) -> Poly:
        return cls(alphabets, {}, _trusted=True)

    @classmethod
    def constant(cls, alphabets, c: int) -> Poly:
        p = cls.zero(alphabets)
        n = sum(a.size for a in p.alphabets)
        return cls(p.alphabets, {(0,) * n: c} if c else {}, _trusted=True)

    @classmethod
    def one(cls, alphabets) -> Poly:
        return cls.constant(alphabets, 1)

    @classmethod
    def variable(cls, alphabets, name: str, index: int, power: int = 1) -> Poly:
        p = cls.zero(alphabets)
        lo, hi = p._offsets[name]
        key = [0] * sum(a.size for a in p.alphabets)
        key[lo + index] = power
        return cls(p.alphabets, {tuple(key): 1})

    @classmethod
    def from_terms(cls, alphabets, terms: Iterable[tuple[Mapping[str, Iterable[int]], int]]) -> Poly:
        p = cls.zero(alphabets)
        acc: dict = {}
        for spec, c in terms:
            k = p._as_key(spec)
            acc[k] = acc.get(k, 0) + c
        return cls(p.alphabets, acc)

    def _new(self, terms: dict) -> Poly:
        return Poly(self.alphabets, terms, _trusted=True)

    # basic protocol

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (lexicographic) order."""
        return sorted(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, int):
            return self == Poly.constant(self.alphabets, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.alphabets == other.alphabets and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.alphabets, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other: Poly):
        if not isinstance(other, Poly):
            raise TypeError(f"cannot combine Poly with {type(other).__name__}")
        if other.alphabets != self.alphabets:
            raise AlphabetMismatch(f"{self.alphabets} vs {other.alphabets}")

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.constant(self.alphabets, other)
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly.constant(self.alphabets, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> Poly:
        if not c:
            return self._new({})
        return self._new({m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return self.mul(other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        out = Poly.one(self.alphabets)
        for _ in range(n):
            out = out * self
        return out

    def mul(self, other: Poly, caps: Mapping[str, int] | None = None) -> Poly:
        """Product, discarding every term whose degree in some alphabet exceeds its cap."""
        self._check(other)
        spans = self._cap_spans(caps)
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                if spans and any(sum(m[lo:hi]) > cap for lo, hi, cap in spans):
                    continue
                out[m] = out.get(m, 0) + c1 * c2
        return self._new({m: c for m, c in out.items() if c})

    def _cap_spans(self, caps):
        if not caps:
            return ()
        spans = []
        for name, cap in caps.items():
            if name not in self._offsets:
                raise AlphabetMismatch(f"cap given for unknown alphabet {name!r}")
            lo, hi = self._offsets[name]
            spans.append((lo, hi, cap))
        return tuple(spans)

    def truncate(self, caps: Mapping[str, int]) -> Poly:
        spans = self._cap_spans(caps)
        return self._new({m: c for m, c in self._terms.items()
                          if not any(sum(m[lo:hi]) > cap for lo, hi, cap in spans)})

    # inspection

    def coefficient(self, mono) -> int:
        if not isinstance(mono, tuple):
            mono = self._as_key(mono)
        return self._terms.get(mono, 0)

    def exponents(self, mono: tuple[int, ...], name: str) -> tuple[int, ...]:
        lo, hi = self._offsets[name]
        return mono[lo:hi]

    def alphabet(self, name: str) -> Alphabet:
        for a in self.alphabets:
            if a.name == name:
                return a
        raise AlphabetMismatch(f"no alphabet {name!r} in {self.alphabets}")

    def degrees(self, name: str) -> set[int]:
        lo, hi = self._offsets[name]
        return {sum(m[lo:hi]) for m in self._terms}

    def homogeneous_part(self, name: str, degree: int) -> Poly:
        lo, hi = self._offsets[name]
        return self._new({m: c for m, c in self._terms.items() if sum(m[lo:hi]) == degree})

    def part(self, name: str, exps: Iterable[int]) -> Poly:
        """Coefficient of ``name^exps``, as a polynomial in the remaining alphabets."""
        a = self.alphabet(name)
        exps = tuple(exps)
        if len(exps) != a.size:
            raise ValueError(f"expected {a.size} exponents for {name!r}")
        rest = [b for b in self.alphabets if b.name != name]
        lo, hi = self._offsets[name]
        out = {}
        for m, c in self._terms.items():
            if m[lo:hi] == exps:
                out[m[:lo] + m[hi:]] = c
        if not rest:
            raise ValueError("cannot extract the only alphabet; use coefficient()")
        return Poly(rest, out, _trusted=True)

    def split_by(self, name: str) -> dict[tuple[int, ...], Poly]:
        """Group terms by the exponent vector of every alphabet except ``name``.

        Returns ``{other exponents: poly in name alone}``.
        """
        a = self.alphabet(name)
        lo, hi = self._offsets[name]
        groups: dict = {}
        for m, c in self._terms.items():
            groups.setdefault(m[:lo] + m[hi:], {})[m[lo:hi]] = c
        return {k: Poly((a,), v, _trusted=True) for k, v in groups.items()}

    def embed(self, alphabets: Iterable[Alphabet]) -> Poly:
        """Same polynomial viewed in a larger alphabet context."""
        target = Poly.zero(alphabets)
        for a in self.alphabets:
            if a not in target.alphabets:
                raise AlphabetMismatch(f"{a} missing from {target.alphabets}")
        out = {}
        for m, c in self._terms.items():
            spec = {a.name: self.exponents(m, a.name) for a in self.alphabets}
            out[target._as_key(spec)] = c
        return Poly(target.alphabets, out, _trusted=True)

    def permute(self, name: str, perm: Iterable[int]) -> Poly:
        """Relabel variables of one alphabet: variable i becomes variable perm[i]."""
        perm = tuple(perm)
        lo, hi = self._offsets[name]
        out = {}
        for m, c in self._terms.items():
            block = [0] * (hi - lo)
            for i, e in enumerate(m[lo:hi]):
                block[perm[i]] = e
            out[m[:lo] + tuple(block) + m[hi:]] = c
        return self._new(out)

    def rename(self, mapping: Mapping[str, str]) -> Poly:
        """Rename alphabets, e.g. ``{"x": "y", "y": "x"}`` swaps two alphabets of equal size."""
        new = [Alphabet(mapping.get(a.name, a.name), a.size, a.laurent) for a in self.alphabets]
        ctx = Poly.zero(new)
        out = {}
        for m, c in self._terms.items():
            spec = {mapping.get(a.name, a.name): self.exponents(m, a.name) for a in self.alphabets}
            out[ctx._as_key(spec)] = c
        return Poly(ctx.alphabets, out, _trusted=True)

    def is_symmetric(self, name: str) -> bool:
        a = self.alphabet(name)
        if a.size == 1:
            return True
        swap = list(range(a.size))
        swap[0], swap[1] = 1, 0
        cycle = list(range(1, a.size)) + [0]
        return self.permute(name, swap) == self and self.permute(name, cycle) == self

    def leading_term(self) -> tuple[tuple[int, ...], int]:
        m = max(self._terms)
        return m, self._terms[m]

    def divide_exact(self, other: Poly) -> Poly:
        """Exact quotient in the Laurent ring; raises InexactDivision on any remainder."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead_d, lc_d = other.leading_term()
        low_d = min(other._terms)
        rem = dict(self._terms)
        if not rem:
            return self._new({})
        floor = tuple(a - b for a, b in zip(min(rem), low_d))
        quot: dict = {}
        while rem:
            lead = max(rem)
            c = rem[lead]
            if c % lc_d:
                raise InexactDivision(f"coefficient {c} not divisible by {lc_d}")
            q_mono = tuple(a - b for a, b in zip(lead, lead_d))
            if q_mono < floor:
                raise InexactDivision("nonzero remainder")
            q = c // lc_d
            quot[q_mono] = q
            for m, v in other._terms.items():
                t = tuple(a + b for a, b in zip(q_mono, m))
                nv = rem.get(t, 0) - q * v
                if nv:
                    rem[t] = nv
                else:
                    rem.pop(t, None)
        return Poly(self.alphabets, quot)

    # display

    def _mono_str(self, mono) -> str:
        parts = []
        for a in self.alphabets:
            lo, _ = self._offsets[a.name]
            for i in range(a.size):
                e = mono[lo + i]
                if e == 0:
                    continue
                v = f"{a.name}{i + 1}"
                parts.append(v if e == 1 else f"{v}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for m, c in sorted(self._terms.items(), reverse=True):
            ms = self._mono_str(m)
            if not ms:
                out.append(str(c))
            elif c == 1:
                out.append(ms)
            elif c == -1:
                out.append("-" + ms)
            else:
                out.append(f"{c}*{ms}")
        return " + ".join(out).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self})"


def poly_mul(a: Poly, b: Poly, caps: Mapping[str, int] | None = None) -> Poly:
    return a.mul(b, caps)


def poly_coefficient(p: Poly, mono) -> int:
    return p.coefficient(mono)


def extract_alphabet_part(p: Poly, alphabet: Alphabet | str, exps: Iterable[int]) -> Poly:
    name = alphabet.name if isinstance(alphabet, Alphabet) else alphabet
    return p.part(name, exps)


def compositions(total: int, parts: int):
    """All length-``parts`` tuples of nonnegative ints summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def bounded_vectors(bounds: Iterable[int]):
    """All integer vectors v with 0 <= v[i] <= bounds[i]."""
    return product(*(range(b + 1) for b in bounds))
