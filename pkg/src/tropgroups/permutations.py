"""Permutations as 0-based tuples: sigma[i] is the image of i."""

from __future__ import annotations

import functools
from typing import Sequence


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def is_perm(sigma: Sequence[int]) -> bool:
    return sorted(sigma) == list(range(len(sigma)))


def compose_perm(s: Sequence[int], t: Sequence[int]) -> tuple[int, ...]:
    """(s∘t)(i) = s(t(i))."""
    return tuple(s[t[i]] for i in range(len(t)))


def invert_perm(s: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(s)
    for i, v in enumerate(s):
        inv[v] = i
    return tuple(inv)


def perm_sign(s: Sequence[int]) -> int:
    """Parity: +1 for even, −1 for odd."""
    seen = [False] * len(s)
    sign = 1
    for i in range(len(s)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = s[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def cycles_of(s: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Cycles sorted by least element, each starting at its least element."""
    seen = [False] * len(s)
    out = []
    for i in range(len(s)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = s[j]
        out.append(tuple(cyc))
    return tuple(out)


def transposition(n: int, i: int, j: int) -> tuple[int, ...]:
    s = list(range(n))
    s[i], s[j] = s[j], s[i]
    return tuple(s)


def sign_involution(m: int) -> tuple[int, ...]:
    """The sign involution on positions.

    Even m = 2n: positions (0..n−1, n..2n−1) are labels (1..n, −1..−n) and
    the involution swaps i ↔ i+n.  Odd m = 2n+1: position 0 is the label 0
    (the unique fixed point) and positions (1..n, n+1..2n) swap likewise.
    """
    if m % 2 == 0:
        n = m // 2
        return tuple((i + n) % m for i in range(m))
    n = m // 2
    out = [0]
    for i in range(1, m):
        out.append(i + n if i <= n else i - n)
    return tuple(out)


def commutes(s: Sequence[int], t: Sequence[int]) -> bool:
    return compose_perm(s, t) == compose_perm(t, s)


@functools.cache
def hexagon_group() -> frozenset[tuple[int, ...]]:
    """The 12 symmetries of a hexagon with vertices 0..5 in cyclic order."""
    elems = set()
    for k in range(6):
        elems.add(tuple((i + k) % 6 for i in range(6)))
        elems.add(tuple((k - i) % 6 for i in range(6)))
    return frozenset(elems)
