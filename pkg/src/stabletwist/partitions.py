"""Integer partitions (Young diagrams).

A partition is stored as a plain tuple of weakly decreasing positive
integers, wrapped in :class:`Partition` so it keeps tuple equality,
hashing and ordering.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations
from typing import Iterable


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped, so ``Partition((2, 1, 0)) == (2, 1)``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def multiplicities(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for p in self:
            counts[p] = counts.get(p, 0) + 1
        return counts

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


def _as_partition(parts) -> Partition:
    return parts if isinstance(parts, Partition) else Partition(parts)


def _generate(q: int, largest: int):
    if q == 0:
        yield ()
        return
    for first in range(min(q, largest), 0, -1):
        for rest in _generate(q - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _enumerate(q: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in sorted(_generate(q, q)))


def enumerate_partitions(q: int) -> list[Partition]:
    """All partitions of ``q``, ascending lexicographically.

    ``(1^q)`` comes first and ``(q)`` last, which is the column order of
    the published dimension tables.
    """
    if q < 0:
        raise ValueError("q must be nonnegative")
    return list(_enumerate(q))


def partition_count(q: int) -> int:
    """Number of partitions of ``q`` by Euler's pentagonal recurrence."""
    if q < 0:
        return 0
    p = [1] + [0] * q
    for n in range(1, q + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p[q]


def conjugate(lam) -> Partition:
    lam = _as_partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def remove_boxes_rho(lam) -> set[Partition]:
    """Shapes obtained by deleting at most one box from each row of ``lam``.

    Choices that break weak decrease are dropped. ``lam`` itself is always
    a member (no rows chosen).
    """
    lam = _as_partition(lam)
    result = set()
    rows = range(len(lam))
    for r in range(len(lam) + 1):
        for chosen in combinations(rows, r):
            parts = list(lam)
            for i in chosen:
                parts[i] -= 1
            if all(a >= b for a, b in zip(parts, parts[1:])):
                result.add(Partition(parts))
    return result


def pieri_additions(mu, b: int) -> set[Partition]:
    """Shapes ``lam`` with ``lam / mu`` a horizontal strip of ``b`` boxes.

    This is the Schur support of ``s_mu * h_b``.
    """
    if b < 0:
        raise ValueError("b must be nonnegative")
    mu = _as_partition(mu)
    # Row i may grow up to mu[i-1] (row 0 without limit); one new row allowed.
    bounds = [None] + list(mu)
    base = list(mu) + [0]
    out = set()

    def fill(i: int, left: int, parts: list[int]):
        if i == len(base):
            if left == 0:
                out.add(Partition(parts))
            return
        cap = left if bounds[i] is None else min(left, bounds[i] - base[i])
        for add in range(cap, -1, -1):
            fill(i + 1, left - add, parts + [base[i] + add])

    fill(0, b, [])
    return out


def dim_specht(lam) -> int:
    """Dimension of the Specht module, by the hook length formula."""
    from math import factorial

    lam = _as_partition(lam)
    lamc = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j) + (lamc[j] - i) - 1
    return factorial(lam.weight) // hooks


def dim_schur_module(lam, d: int) -> int:
    """Dimension of ``S_lam(C^d)`` by the hook-content formula."""
    lam = _as_partition(lam)
    lamc = conjugate(lam)
    num, den = 1, 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= d + j - i
            den *= (row - j) + (lamc[j] - i) - 1
    return num // den


# -- text syntax ---------------------------------------------------------------

_BRACKET = re.compile(r"^\s*[\[(]\s*([0-9,\s]*)[\])]\s*$")
_EXPONENT_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"[2,2,1]"`` or the exponent shorthand ``"2^2 1"``."""
    m = _BRACKET.match(text)
    if m:
        body = m.group(1).strip()
        if not body:
            return Partition()
        try:
            parts = [int(tok) for tok in body.replace(",", " ").split()]
        except ValueError:
            raise ValueError(f"malformed partition: {text!r}") from None
    else:
        parts = []
        for tok in text.split():
            t = _EXPONENT_TOKEN.match(tok)
            if not t:
                raise ValueError(f"malformed partition: {text!r}")
            parts += [int(t.group(1))] * int(t.group(2) or 1)
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {text!r}")
    return Partition(sorted(parts, reverse=True))


def format_partition(lam) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def format_exponent(lam) -> str:
    """Table-header form, e.g. ``(2^2 1^2)``; ``()`` for the empty shape."""
    lam = _as_partition(lam)
    if not lam:
        return "()"
    tokens = []
    for part, m in sorted(lam.multiplicities().items(), reverse=True):
        tokens.append(str(part) if m == 1 else f"{part}^{m}")
    return "(" + " ".join(tokens) + ")"
