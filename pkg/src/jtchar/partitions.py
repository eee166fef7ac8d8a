"""Integer partitions as plain tuples of positive ints, largest part first."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

Partition = tuple  # weakly decreasing positive ints


def normalize(parts: Iterable[int]) -> Partition:
    """Drop trailing zeros and validate."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x < 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"not a partition: {tuple(parts)}")
    return p


def is_partition(parts) -> bool:
    p = tuple(parts)
    return all(x > 0 for x in p) and all(a >= b for a, b in zip(p, p[1:]))


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def pad(p: Partition, n: int) -> tuple[int, ...]:
    if len(p) > n:
        raise ValueError(f"{p} has more than {n} parts")
    return tuple(p) + (0,) * (n - len(p))


def _of_size(n: int, max_part: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _of_size(n - first, first):
            yield (first,) + rest


def partitions_of(n: int, max_part: int | None = None, max_length: int | None = None) -> list[Partition]:
    """Partitions of exactly n, largest first in lexicographic order."""
    out = list(_of_size(n, n if max_part is None else max_part))
    if max_length is not None:
        out = [p for p in out if len(p) <= max_length]
    return out


def enumerate_partitions(
    max_size: int,
    *,
    exact_size: int | None = None,
    max_length: int | None = None,
    max_part: int | None = None,
    all_even: bool = False,
    odd_length: int | None = None,
) -> list[Partition]:
    """Partitions with |p| <= max_size satisfying every given constraint.

    ``odd_length=m`` keeps partitions with exactly m parts, all odd, i.e. those
    of the form (1+2mu_1, ..., 1+2mu_m).  Order: by size, then lexicographically
    decreasing within a size.
    """
    sizes = [exact_size] if exact_size is not None else range(max_size + 1)
    out = []
    for n in sizes:
        if n < 0 or n > max_size:
            continue
        for p in partitions_of(n, max_part, max_length):
            if all_even and any(x % 2 for x in p):
                continue
            if odd_length is not None and (len(p) != odd_length or any(x % 2 == 0 for x in p)):
                continue
            out.append(p)
    return out


def dominates(a: Partition, b: Partition) -> bool:
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return sa == sb


def _horizontal_strips(lam: Partition, size: int) -> Iterator[Partition]:
    """All nu contained in lam with lam/nu a horizontal strip of the given size."""
    n = len(lam)

    def rec(i, remaining, acc):
        if i == n:
            if remaining == 0:
                yield normalize(acc)
            return
        lower = lam[i + 1] if i + 1 < n else 0
        for take in range(min(remaining, lam[i] - lower), -1, -1):
            yield from rec(i + 1, remaining - take, acc + (lam[i] - take,))

    yield from rec(0, size, ())


@lru_cache(maxsize=None)
def kostka(lam: Partition, content: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of shape lam with the given content.

    Content entries may be zero and need not be sorted.
    """
    if sum(lam) != sum(content):
        return 0
    if not content:
        return 1 if not lam else 0
    last = content[-1]
    return sum(kostka(nu, content[:-1]) for nu in _horizontal_strips(lam, last))


def semistandard_tableaux(lam: Partition, max_entry: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Brute-force SSYT generator, row by row."""
    rows = len(lam)

    def fill_row(r, prev_row, done):
        if r == rows:
            yield tuple(done)
            return
        length = lam[r]

        def cells(c, acc):
            if c == length:
                yield tuple(acc)
                return
            lo = acc[-1] if acc else 1
            if prev_row is not None:
                lo = max(lo, prev_row[c] + 1)
            for v in range(lo, max_entry + 1):
                yield from cells(c + 1, acc + [v])

        for row in cells(0, []):
            yield from fill_row(r + 1, row, done + [row])

    yield from fill_row(0, None, [])
