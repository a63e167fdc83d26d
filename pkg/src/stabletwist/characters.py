"""Characters of the symmetric group.

Irreducible characters are evaluated with the Murnaghan-Nakayama rule on
beta-sets (first-column hook lengths): removing a border strip of length
``r`` is moving one bead from position ``b`` to ``b - r``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .partitions import Partition, enumerate_partitions


def z(mu) -> int:
    """Size of the centraliser of a permutation of cycle type ``mu``."""
    mu = Partition(mu)
    return prod(i**m * factorial(m) for i, m in mu.multiplicities().items())


def class_size(mu) -> int:
    mu = Partition(mu)
    return factorial(mu.weight) // z(mu)


def sign(mu) -> int:
    mu = Partition(mu)
    return -1 if (mu.weight - len(mu)) % 2 else 1


def _beta(lam: tuple[int, ...]) -> tuple[int, ...]:
    n = len(lam)
    return tuple(part + n - 1 - i for i, part in enumerate(lam))


def _from_beta(beta) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    n = len(beta)
    parts = [b - (n - 1 - i) for i, b in enumerate(beta)]
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


@lru_cache(maxsize=None)
def _strips(lam: tuple[int, ...], r: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All (shape after removing an r-border strip, sign) pairs."""
    beta = _beta(lam)
    occupied = set(beta)
    out = []
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        # leg length = beads strictly between target and b
        height = sum(1 for c in beta if target < c < b)
        rest = [c for c in beta if c != b] + [target]
        out.append((_from_beta(rest), -1 if height % 2 else 1))
    return tuple(out)


# (shape, cycle type) -> value. Plain dict: concurrent readers are safe and
# racing writers store the same value.
_MN_MEMO: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}


def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    # mu is weakly decreasing; strip the largest cycle first so that the
    # memo is shared across cycle types with common tails.
    value = _MN_MEMO.get((lam, mu))
    if value is not None:
        return value
    if not mu:
        value = 1 if not lam else 0
    else:
        r, rest = mu[0], mu[1:]
        value = 0
        for shape, s in _strips(lam, r):
            value += s * _mn(shape, rest)
    _MN_MEMO[(lam, mu)] = value
    return value


def seed_character_values(values) -> None:
    """Preload ``((lam, mu), value)`` pairs, e.g. from a persisted cache."""
    for (lam, mu), value in values:
        _MN_MEMO[(tuple(lam), tuple(mu))] = int(value)


def memoized_character_values(max_weight: int):
    """Memoized ``((lam, mu), value)`` pairs with 0 < |lam| = |mu| <= max_weight."""
    for (lam, mu), value in list(_MN_MEMO.items()):
        if lam and sum(lam) == sum(mu) <= max_weight:
            yield (lam, mu), value


def character_value(lam, mu) -> int:
    """``chi^lam(mu)`` for partitions of the same weight."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.weight != mu.weight:
        raise ValueError(f"weights differ: |{lam}| != |{mu}|")
    return _mn(tuple(lam), tuple(mu))


@dataclass(frozen=True)
class ClassFunction:
    """Rational-valued function on the conjugacy classes of S_q.

    ``values`` is keyed by cycle type; missing classes read as zero.
    """

    q: int
    values: dict = field(default_factory=dict)

    def __getitem__(self, mu) -> Fraction:
        return self.values.get(Partition(mu), 0)

    def _check(self, other: "ClassFunction"):
        if self.q != other.q:
            raise ValueError(f"class functions on S_{self.q} and S_{other.q}")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.q, {mu: self[mu] + other[mu] for mu in enumerate_partitions(self.q)})

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.q, {mu: self[mu] - other[mu] for mu in enumerate_partitions(self.q)})

    def __mul__(self, other) -> "ClassFunction":
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.q, {mu: self[mu] * other[mu] for mu in enumerate_partitions(self.q)})
        return ClassFunction(self.q, {mu: other * self[mu] for mu in enumerate_partitions(self.q)})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction) or self.q != other.q:
            return NotImplemented
        return all(self[mu] == other[mu] for mu in enumerate_partitions(self.q))

    def __hash__(self):
        return hash((self.q, tuple(self[mu] for mu in enumerate_partitions(self.q))))

    def degree(self):
        return self[(1,) * self.q]


def irreducible_character(lam) -> ClassFunction:
    lam = Partition(lam)
    q = lam.weight
    return ClassFunction(q, {mu: _mn(tuple(lam), tuple(mu)) for mu in enumerate_partitions(q)})


def trivial_character(q: int) -> ClassFunction:
    return ClassFunction(q, {mu: 1 for mu in enumerate_partitions(q)})


def sign_character(q: int) -> ClassFunction:
    return ClassFunction(q, {mu: sign(mu) for mu in enumerate_partitions(q)})


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """``(1/q!) * sum over S_q of f(sigma) g(sigma)``; characters here are real."""
    f._check(g)
    total = sum(Fraction(f[mu] * g[mu]) / z(mu) for mu in enumerate_partitions(f.q))
    return Fraction(total)


def sign_twist(f: ClassFunction) -> ClassFunction:
    return f * sign_character(f.q)


def decompose(f: ClassFunction) -> dict[Partition, Fraction]:
    """Multiplicity of each irreducible in ``f`` (nonzero entries only)."""
    out = {}
    for lam in enumerate_partitions(f.q):
        m = inner_product(f, irreducible_character(lam))
        if m:
            out[lam] = m
    return out


def character_table(q: int) -> dict[Partition, ClassFunction]:
    return {lam: irreducible_character(lam) for lam in enumerate_partitions(q)}


__all__ = [
    "ClassFunction",
    "character_table",
    "character_value",
    "class_size",
    "decompose",
    "inner_product",
    "irreducible_character",
    "sign",
    "sign_character",
    "sign_twist",
    "trivial_character",
    "z",
]
