"""Weyl groups of types A_{k-1} (as gl(k)), B_k, C_k, D_k as signed permutations.

Weights are stored doubled so half-integers stay exact.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Iterable

FAMILIES = ("A", "B", "C", "D")
DEFAULT_BOUND = 10**5


class GroupTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class RootType:
    family: str
    k: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.k < 0:
            raise ValueError("rank must be nonnegative")

    @property
    def order(self) -> int:
        k = self.k
        if self.family == "A":
            return factorial(k)
        if self.family in "BC":
            return 2**k * factorial(k)
        return 2 ** max(k - 1, 0) * factorial(k)

    def __str__(self):
        return f"{self.family}{self.k}"


def _parse(v) -> Fraction:
    if isinstance(v, str):
        return Fraction(v.strip())
    return Fraction(v)


@dataclass(frozen=True, order=True)
class Weight:
    """A k-tuple of half-integers, stored as the integer vector 2*weight."""

    doubled: tuple[int, ...]

    @classmethod
    def of(cls, *values) -> Weight:
        if len(values) == 1 and isinstance(values[0], (tuple, list)):
            values = tuple(values[0])
        out = []
        for v in values:
            f = _parse(v) * 2
            if f.denominator != 1:
                raise ValueError(f"{v} is not a half-integer")
            out.append(int(f))
        return cls(tuple(out))

    @classmethod
    def half(cls, k: int, sign_last: int = 1) -> Weight:
        """(1/2, ..., 1/2) or (1/2, ..., 1/2, -1/2)."""
        if k == 0:
            return cls(())
        return cls((1,) * (k - 1) + (sign_last,))

    def __len__(self):
        return len(self.doubled)

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(d, 2) for d in self.doubled)

    @property
    def is_integral(self) -> bool:
        return all(d % 2 == 0 for d in self.doubled)

    @property
    def is_half_odd(self) -> bool:
        return all(d % 2 for d in self.doubled)

    def integers(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise ValueError(f"{self} is not integral")
        return tuple(d // 2 for d in self.doubled)

    def __add__(self, other: Weight) -> Weight:
        _same_len(self, other)
        return Weight(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: Weight) -> Weight:
        _same_len(self, other)
        return Weight(tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __neg__(self):
        return Weight(tuple(-a for a in self.doubled))

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def _same_len(a: Weight, b: Weight):
    if len(a) != len(b):
        raise ValueError(f"weight lengths differ: {a} vs {b}")


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation in window notation.

    ``window[j] = s * i`` means coordinate j of ``w(v)`` is ``s * v[i-1]``.
    """

    window: tuple[int, ...]
    length: int = 0

    @property
    def perm(self) -> tuple[int, ...]:
        return tuple(abs(t) for t in self.window)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if t > 0 else -1 for t in self.window)

    @property
    def negatives(self) -> int:
        return sum(1 for t in self.window if t < 0)

    def inverse_window(self) -> tuple[int, ...]:
        inv = [0] * len(self.window)
        for j, t in enumerate(self.window, start=1):
            inv[abs(t) - 1] = j if t > 0 else -j
        return tuple(inv)

    def act(self, chi: Weight) -> Weight:
        return act(self, chi)


def act(w: WeylElement, chi: Weight) -> Weight:
    if len(chi) != len(w.window):
        raise ValueError(f"weight {chi} has length {len(chi)}, group rank is {len(w.window)}")
    d = chi.doubled
    return Weight(tuple(d[t - 1] if t > 0 else -d[-t - 1] for t in w.window))


def act_inverse(w: WeylElement, chi: Weight) -> Weight:
    return act(WeylElement(w.inverse_window(), w.length), chi)


def _generators(t: RootType):
    k = t.k
    gens = []
    for i in range(k - 1):
        def swap(win, i=i):
            w = list(win)
            w[i], w[i + 1] = w[i + 1], w[i]
            return tuple(w)
        gens.append(swap)
    if k >= 1 and t.family in "BC":
        gens.append(lambda win: win[:-1] + (-win[-1],))
    if k >= 2 and t.family == "D":
        gens.append(lambda win: win[:-2] + (-win[-1], -win[-2]))
    return gens


def enumerate_weyl(t: RootType, bound: int = DEFAULT_BOUND) -> list[WeylElement]:
    """Every group element once, with its Coxeter length from breadth-first search."""
    if t.order > bound:
        raise GroupTooLarge(f"|W({t})| = {t.order} exceeds bound {bound}")
    start = tuple(range(1, t.k + 1))
    dist = {start: 0}
    queue = deque([start])
    gens = _generators(t)
    while queue:
        cur = queue.popleft()
        for g in gens:
            nxt = g(cur)
            if nxt not in dist:
                dist[nxt] = dist[cur] + 1
                queue.append(nxt)
    if len(dist) != t.order:
        raise AssertionError(f"BFS found {len(dist)} elements, expected {t.order}")
    return [WeylElement(win, l) for win, l in sorted(dist.items(), key=lambda kv: (kv[1], kv[0]))]


def longest_length(t: RootType) -> int:
    k = t.k
    return {"A": k * (k - 1) // 2, "B": k * k, "C": k * k, "D": k * (k - 1)}[t.family]


def rho(t: RootType, shift: Fraction | int = 0) -> Weight:
    """Half the sum of positive roots; type A uses (k, ..., 1) plus an optional uniform shift."""
    k = t.k
    if t.family in "AC":
        vals = [k - i for i in range(k)]
    elif t.family == "B":
        vals = [Fraction(2 * (k - i) - 1, 2) for i in range(k)]
    else:
        vals = [k - 1 - i for i in range(k)]
    if shift:
        if t.family != "A":
            raise ValueError("rho can only be shifted in type A")
        vals = [v + _parse(shift) for v in vals]
    return Weight.of(*vals) if vals else Weight(())


def zelevinsky_weight(t: RootType, lam: Weight, w: WeylElement, rho_shift=0) -> Weight:
    """lam + rho - w^{-1}(rho)."""
    r = rho(t, rho_shift)
    return lam + r - act_inverse(w, r)


def is_dominant(t: RootType, chi: Weight) -> bool:
    d = chi.doubled
    dec = all(a >= b for a, b in zip(d, d[1:]))
    if t.family == "A" or not d:
        return dec
    if t.family in "BC":
        return dec and d[-1] >= 0
    if len(d) == 1:
        return True
    return all(a >= b for a, b in zip(d[:-1], d[1:-1])) and d[-2] >= abs(d[-1])


def spin_weight_set(k: int) -> list[Weight]:
    """The 2^k weights v - (1/2, ..., 1/2), v a 0-1 vector."""
    return [Weight(tuple(2 * v - 1 for v in vec)) for vec in product((0, 1), repeat=k)]


def inversions(perm: Iterable[int]) -> int:
    p = list(perm)
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
