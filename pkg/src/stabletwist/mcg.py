"""Generator degrees for the twisted cohomology of surface mapping class groups.

H^*(Gamma; S_lam(H_Q)) is stably a free module over H^*(Gamma; Q). The
generators are counted by labeled set partitions of {1..q}: singleton
blocks and larger blocks draw labels from different graded alphabets, and
a labeled partition sits in degree q plus the sum of its label degrees.
"""

from __future__ import annotations

import enum

from .characters import inner_product, irreducible_character
from .errors import ConsistencyError, DomainError, ResourceLimitError
from .partitions import Partition, conjugate
from .setpart import GradedSeries, LabelAlphabet, LabelSet, character_in_degree, perm_character

MAX_WEIGHT = 8
MAX_DEGREE = 40


class SurfaceVariant(enum.Enum):
    CLOSED = "closed"
    ONE_BOUNDARY = "boundary"


def mcg_alphabet(variant: SurfaceVariant) -> LabelAlphabet:
    """Labels x_d by degree d: singletons from {2,4,6,...} (closed) or
    {0,2,4,...} (one boundary); larger blocks from {-2,0,2,...} for both."""
    singleton_start = 2 if variant is SurfaceVariant.CLOSED else 0
    return LabelAlphabet(
        by_size=((1, LabelSet.progression(singleton_start)),),
        default=LabelSet.progression(-2),
    )


def generator_series(variant: SurfaceVariant, lam, max_degree: int) -> GradedSeries:
    """Number of module generators of H^*(Gamma; S_lam(H_Q)) in each degree
    up to ``max_degree``."""
    lam = Partition(lam)
    q = lam.weight
    if q > MAX_WEIGHT:
        raise ResourceLimitError(f"|lambda| = {q} exceeds the bound {MAX_WEIGHT}")
    if max_degree > MAX_DEGREE:
        raise ResourceLimitError(f"max_degree = {max_degree} exceeds the bound {MAX_DEGREE}")
    if max_degree < 0:
        return GradedSeries({}, max_degree)
    if q == 0:
        return GradedSeries({0: 1}, max_degree)

    # Labels are summed to at most max_degree - q; the per-orbit truncation in
    # setpart already accounts for the -2 floor of the other blocks.
    label_bound = max_degree - q
    series = perm_character(q, mcg_alphabet(variant), label_bound)
    chi = irreducible_character(conjugate(lam))
    low = min((d for s in series.values() for d in s.degrees()), default=0)
    out = {}
    for label_degree in range(low, label_bound + 1):
        m = inner_product(chi, character_in_degree(series, q, label_degree))
        if m.denominator != 1 or m < 0:
            raise ConsistencyError(f"multiplicity {m} at label degree {label_degree}")
        if m:
            degree = q + label_degree
            if degree < 0:
                raise ConsistencyError(f"generator in negative degree {degree} for {lam}")
            out[degree] = int(m)
    return GradedSeries(out, max_degree)


def validate_variant(name: str) -> SurfaceVariant:
    try:
        return SurfaceVariant(name)
    except ValueError:
        raise DomainError(f"unknown surface variant {name!r}") from None
