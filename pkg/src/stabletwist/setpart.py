"""Set partitions of {1..q} and graded permutation characters on them.

A set partition is stored as its restricted-growth string: ``a[i]`` is the
block index of element ``i + 1``, blocks numbered in order of first
appearance. Labeled set partitions attach to each block a label drawn from
a graded alphabet that depends on the block size; a permutation fixes a
labeled partition when it permutes the blocks and every block orbit
carries a single label.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .characters import ClassFunction
from .errors import DomainError, ResourceLimitError
from .partitions import Partition, enumerate_partitions

MAX_SET_SIZE = 12


@dataclass(frozen=True)
class SetPartition:
    assignment: tuple[int, ...]

    def __post_init__(self):
        top = -1
        for a in self.assignment:
            if a < 0 or a > top + 1:
                raise ValueError(f"not a restricted-growth string: {self.assignment}")
            top = max(top, a)

    @property
    def q(self) -> int:
        return len(self.assignment)

    def blocks(self) -> list[frozenset[int]]:
        """Blocks as sets of elements of {1..q}, in order of first element."""
        out: list[set[int]] = []
        for i, a in enumerate(self.assignment, start=1):
            if a == len(out):
                out.append(set())
            out[a].add(i)
        return [frozenset(b) for b in out]

    def __str__(self) -> str:
        return "{" + ", ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.blocks()) + "}"


def _check_q(q: int):
    if q < 0:
        raise DomainError("q must be nonnegative")
    if q > MAX_SET_SIZE:
        raise ResourceLimitError(f"q = {q} exceeds the bound q <= {MAX_SET_SIZE}")


def _rgs(q: int):
    if q == 0:
        yield ()
        return
    a = [0] * q
    top = [0] * q  # top[i] = max(a[:i+1])

    def rec(i: int):
        if i == q:
            yield tuple(a)
            return
        for v in range(top[i - 1] + 2):
            a[i] = v
            top[i] = max(top[i - 1], v)
            yield from rec(i + 1)

    yield from rec(1)


@lru_cache(maxsize=None)
def _all_rgs(q: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_rgs(q))


def enumerate_set_partitions(q: int, forbid_singletons: bool = False) -> list[SetPartition]:
    """All set partitions of {1..q} in restricted-growth (lexicographic) order."""
    _check_q(q)
    out = []
    for a in _all_rgs(q):
        if forbid_singletons:
            counts = [0] * (max(a, default=-1) + 1)
            for b in a:
                counts[b] += 1
            if 1 in counts:
                continue
        out.append(SetPartition(a))
    return out


def bell_numbers(n: int) -> list[int]:
    """B(0), ..., B(n) from the Bell triangle."""
    out = [1]
    row = [1]
    for _ in range(n):
        new = [row[-1]]
        for x in row:
            new.append(new[-1] + x)
        row = new
        out.append(row[0])
    return out


# -- graded series ---------------------------------------------------------------

@dataclass(frozen=True)
class GradedSeries:
    """Nonnegative integer multiplicities by degree, truncated at ``max_degree``."""

    coefficients: dict = field(default_factory=dict)
    max_degree: int = 0

    def __post_init__(self):
        for d, c in self.coefficients.items():
            if d > self.max_degree:
                raise ValueError(f"degree {d} beyond max_degree {self.max_degree}")
            if c < 0:
                raise ValueError(f"negative coefficient {c} at degree {d}")

    def __getitem__(self, degree: int) -> int:
        return self.coefficients.get(degree, 0)

    def degrees(self) -> list[int]:
        return sorted(d for d, c in self.coefficients.items() if c)

    def items(self) -> list[tuple[int, int]]:
        return [(d, self.coefficients[d]) for d in self.degrees()]

    def to_json(self) -> dict[str, int]:
        return {str(d): c for d, c in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int], max_degree: int) -> "GradedSeries":
        return cls({int(d): int(c) for d, c in data.items()}, max_degree)


@dataclass(frozen=True)
class LabelSet:
    """Graded labels for one block size.

    Either a finite list of ``(degree, count)`` pairs or the infinite
    progression ``start, start + 2, start + 4, ...`` with one label per
    degree.
    """

    finite: tuple[tuple[int, int], ...] = ()
    start: int | None = None

    @classmethod
    def progression(cls, start: int) -> "LabelSet":
        return cls(start=start)

    @classmethod
    def single(cls, degree: int = 0) -> "LabelSet":
        return cls(finite=((degree, 1),))

    def min_degree(self) -> int | None:
        degrees = [d for d, c in self.finite if c > 0]
        if self.start is not None:
            degrees.append(self.start)
        return min(degrees) if degrees else None

    def series(self, upto: int) -> dict[int, int]:
        """Label counts by degree, for degrees <= upto."""
        out: dict[int, int] = {}
        for d, c in self.finite:
            if c and d <= upto:
                out[d] = out.get(d, 0) + c
        if self.start is not None:
            for d in range(self.start, upto + 1, 2):
                out[d] = out.get(d, 0) + 1
        return out


EMPTY_LABELS = LabelSet()


@dataclass(frozen=True)
class LabelAlphabet:
    """Block size -> LabelSet, with ``default`` for sizes not listed."""

    by_size: tuple[tuple[int, LabelSet], ...] = ()
    default: LabelSet = field(default_factory=LabelSet.single)

    @classmethod
    def trivial(cls) -> "LabelAlphabet":
        return cls()

    @classmethod
    def without_singletons(cls) -> "LabelAlphabet":
        return cls(by_size=((1, EMPTY_LABELS),))

    def labels(self, size: int) -> LabelSet:
        for s, labels in self.by_size:
            if s == size:
                return labels
        return self.default


# -- fixed points ------------------------------------------------------------------

def canonical_permutation(cycle_type) -> tuple[int, ...]:
    """0-based image list of the permutation with cycles (1..a)(a+1..a+b)...,
    longest cycle first."""
    perm = []
    start = 0
    for length in Partition(cycle_type):
        perm += [start + (i + 1) % length for i in range(length)]
        start += length
    return tuple(perm)


def block_orbits(assignment: tuple[int, ...], perm: tuple[int, ...]) -> list[tuple[int, int]] | None:
    """``(block size, orbit length)`` for each orbit of blocks under ``perm``,
    or None when ``perm`` does not map blocks to blocks."""
    image: dict[int, int] = {}
    for i, a in enumerate(assignment):
        b = assignment[perm[i]]
        if image.setdefault(a, b) != b:
            return None
    sizes: dict[int, int] = {}
    for a in assignment:
        sizes[a] = sizes.get(a, 0) + 1
    seen = set()
    orbits = []
    for a in sizes:
        if a in seen:
            continue
        length, b = 0, a
        while b not in seen:
            seen.add(b)
            length += 1
            b = image[b]
        orbits.append((sizes[a], length))
    return orbits


def _shifted_min(alphabet: LabelAlphabet, size: int, length: int) -> int | None:
    m = alphabet.labels(size).min_degree()
    return None if m is None else m * length


def _orbit_factor(alphabet: LabelAlphabet, size: int, length: int, upto: int) -> dict[int, int]:
    # every block in the orbit carries the same label, so degrees scale by length
    labels = alphabet.labels(size)
    return {d * length: c for d, c in labels.series(upto // length).items()}


def _orbit_series(alphabet: LabelAlphabet, orbits: list[tuple[int, int]], max_degree: int) -> dict[int, int]:
    mins = []
    for size, length in orbits:
        m = _shifted_min(alphabet, size, length)
        if m is None:
            return {}
        mins.append(m)
    total_min = sum(mins)
    if total_min > max_degree:
        return {}
    acc = {0: 1}
    for (size, length), m in zip(orbits, mins):
        # the other factors contribute at least total_min - m
        factor = _orbit_factor(alphabet, size, length, max_degree - (total_min - m))
        new: dict[int, int] = {}
        for d1, c1 in acc.items():
            for d2, c2 in factor.items():
                new[d1 + d2] = new.get(d1 + d2, 0) + c1 * c2
        acc = new
    return {d: c for d, c in acc.items() if d <= max_degree and c}


@lru_cache(maxsize=None)
def _fixed_signatures(cycle_type: Partition) -> dict[tuple, int]:
    # fixed set partitions, bucketed by their multiset of (block size, orbit length)
    perm = canonical_permutation(cycle_type)
    by_signature: dict[tuple, int] = {}
    for a in _all_rgs(cycle_type.weight):
        orbits = block_orbits(a, perm)
        if orbits is not None:
            key = tuple(sorted(orbits))
            by_signature[key] = by_signature.get(key, 0) + 1
    return by_signature


def fixed_count_series(cycle_type, alphabet: LabelAlphabet | None = None, max_degree: int = 0) -> GradedSeries:
    """Number of labeled set partitions fixed by a permutation of the given
    cycle type, graded by the sum of the label degrees."""
    cycle_type = Partition(cycle_type)
    q = cycle_type.weight
    _check_q(q)
    alphabet = alphabet or LabelAlphabet.trivial()
    total: dict[int, int] = {}
    for signature, count in _fixed_signatures(cycle_type).items():
        for d, c in _orbit_series(alphabet, list(signature), max_degree).items():
            total[d] = total.get(d, 0) + count * c
    return GradedSeries({d: c for d, c in total.items() if c}, max_degree)


def perm_character(q: int, alphabet: LabelAlphabet | None = None, max_degree: int = 0) -> dict[Partition, GradedSeries]:
    """Graded permutation character on labeled set partitions of {1..q}."""
    _check_q(q)
    return {mu: fixed_count_series(mu, alphabet, max_degree) for mu in enumerate_partitions(q)}


def character_in_degree(series: Mapping[Partition, GradedSeries], q: int, degree: int) -> ClassFunction:
    """Slice a graded character at one degree."""
    return ClassFunction(q, {mu: series[mu][degree] for mu in enumerate_partitions(q)})
