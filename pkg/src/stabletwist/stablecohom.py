"""Stable twisted cohomology of Aut(F_n) and Out(F_n).

The stable group H^q(G; H^{tensor q}), tensored with the sign
representation, is the permutation module on set partitions of {1..q}
(all of them for Aut, singleton-free ones for Out). Dimensions of
H^{|lam|}(G; S_lam(H)) are extracted two ways:

* ``Method.CHARACTERS``: the multiplicity of ``chi^{lam'}`` in the raw
  permutation character (equivalently of ``chi^lam`` in its sign twist);
* ``Method.PLETHYSM``: stable plethysm multiplicities ``nu_infinity(lam')``
  for Out, summed over the box-removal set ``rho(lam)`` for Aut.

Only stable values are computed; dependence on n lives entirely in
:func:`stable_range`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .characters import ClassFunction, inner_product, irreducible_character, sign_twist
from .errors import ConsistencyError, DomainError, ResourceLimitError
from .partitions import (
    Partition,
    conjugate,
    enumerate_partitions,
    format_exponent,
    partition_count,
    remove_boxes_rho,
)
from .setpart import LabelAlphabet, perm_character
from .symfunc import nu_infinity

MAX_TENSOR_Q = 10
MAX_TABLE_WEIGHT = 9


class GroupFamily(enum.Enum):
    AUT = "aut"
    OUT = "out"


class Method(enum.Enum):
    CHARACTERS = "characters"
    PLETHYSM = "plethysm"


class Statement(enum.Enum):
    VANISHING_OFF_DIAGONAL = "vanishing-off-diagonal"
    DIAGONAL_IDENTIFIED = "diagonal-identified"
    STABILITY_OF_GROUPS = "stability-of-groups"


@dataclass(frozen=True)
class SchurOfH:
    lam: Partition

    @property
    def weight(self) -> int:
        return Partition(self.lam).weight


@dataclass(frozen=True)
class TensorOfH:
    q: int

    @property
    def weight(self) -> int:
        return self.q


@dataclass(frozen=True)
class ExteriorOfH:
    q: int

    @property
    def weight(self) -> int:
        return self.q


@dataclass(frozen=True)
class SymOfH:
    q: int

    @property
    def weight(self) -> int:
        return self.q


CoefficientTag = SchurOfH | TensorOfH | ExteriorOfH | SymOfH


# -- tensor powers -------------------------------------------------------------------

def _alphabet(group: GroupFamily) -> LabelAlphabet:
    return LabelAlphabet.trivial() if group is GroupFamily.AUT else LabelAlphabet.without_singletons()


def permutation_character(group: GroupFamily, q: int) -> ClassFunction:
    """Character of the permutation module on (singleton-free for Out) set
    partitions of {1..q}. This is H^q(G; H^{tensor q}) tensor sign."""
    if q > MAX_TENSOR_Q:
        raise ResourceLimitError(f"q = {q} exceeds the bound q <= {MAX_TENSOR_Q}")
    series = perm_character(q, _alphabet(group), 0)
    return ClassFunction(q, {mu: s[0] for mu, s in series.items()})


def tensor_character(group: GroupFamily, q: int) -> ClassFunction:
    """Character of H^q(G; H^{tensor q}) itself: the sign twist of
    :func:`permutation_character`."""
    return sign_twist(permutation_character(group, q))


# -- dimensions ------------------------------------------------------------------------

def _dim_characters(group: GroupFamily, lam: Partition) -> int:
    m = inner_product(irreducible_character(conjugate(lam)), permutation_character(group, lam.weight))
    if m.denominator != 1 or m < 0:
        raise ConsistencyError(f"non-integral multiplicity {m} for {lam}")
    return int(m)


def _dim_plethysm(group: GroupFamily, lam: Partition) -> int:
    if group is GroupFamily.OUT:
        return nu_infinity(conjugate(lam)).value
    return sum(nu_infinity(conjugate(mu)).value for mu in remove_boxes_rho(lam))


def dim_schur(group: GroupFamily, lam, method: Method = Method.CHARACTERS) -> int:
    """Stable dimension of H^{|lam|}(G; S_lam(H_Q))."""
    lam = Partition(lam)
    if not lam:
        return 1
    if method is Method.CHARACTERS:
        return _dim_characters(group, lam)
    if method is Method.PLETHYSM:
        return _dim_plethysm(group, lam)
    raise ValueError(f"unknown method {method!r}")


def dim_schur_checked(group: GroupFamily, lam) -> int:
    """:func:`dim_schur` by both methods, raising if they disagree."""
    a = dim_schur(group, lam, Method.CHARACTERS)
    b = dim_schur(group, lam, Method.PLETHYSM)
    if a != b:
        raise ConsistencyError(
            f"{group.value} {format_exponent(lam)}: characters give {a}, plethysm gives {b}")
    return a


def count_partitions_without_ones(q: int) -> int:
    return partition_count(q) - partition_count(q - 1) if q > 0 else 1


def dim_exterior(group: GroupFamily, q: int) -> int:
    """Stable dimension of H^q(G; wedge^q H_Q), cross-checked against the
    character computation at lam = (1^q)."""
    if q < 1:
        raise DomainError("q must be positive")
    if q > MAX_TENSOR_Q:
        raise ResourceLimitError(f"q = {q} exceeds the bound q <= {MAX_TENSOR_Q}")
    expected = partition_count(q) if group is GroupFamily.AUT else count_partitions_without_ones(q)
    computed = dim_schur(group, (1,) * q)
    if computed != expected:
        raise ConsistencyError(f"wedge^{q}: partition count {expected}, characters {computed}")
    return expected


def dim_symmetric(group: GroupFamily, q: int) -> int:
    """Stable dimension of H^q(G; Sym^q H_Q); computed, and always 0."""
    if q < 2:
        raise DomainError("Sym^q coefficients need q >= 2 (q = 1 is H itself, of dimension 1 for Aut)")
    if q > MAX_TENSOR_Q:
        raise ResourceLimitError(f"q = {q} exceeds the bound q <= {MAX_TENSOR_Q}")
    computed = dim_schur(group, (q,))
    if computed != 0:
        raise ConsistencyError(f"Sym^{q}: expected vanishing, characters give {computed}")
    return computed


# -- stable ranges ---------------------------------------------------------------------

@dataclass(frozen=True)
class StableRange:
    """The inequality ``n >= degree_coeff * i + weight_coeff * w + constant``.

    ``i`` is the cohomological degree (ignored when ``degree_coeff`` is 0)
    and ``w`` the weight of the coefficient module.
    """

    statement: Statement
    weight: int
    degree_coeff: int
    weight_coeff: int
    constant: int
    text: str

    def bound(self, degree: int | None = None) -> int:
        if self.degree_coeff and degree is None:
            raise DomainError(f"{self.text} depends on the cohomological degree")
        return self.degree_coeff * (degree or 0) + self.weight_coeff * self.weight + self.constant

    def holds(self, n: int, degree: int | None = None) -> bool:
        return n >= self.bound(degree)

    def __str__(self) -> str:
        return self.text


def stable_range(group: GroupFamily, coeff: CoefficientTag, statement: Statement) -> StableRange:
    """The published range in which a statement about H^*(G; coeff) holds."""
    w = coeff.weight
    S = Statement

    def rng(dc, wc, text):
        return StableRange(statement, w, dc, wc, 3, text)

    if statement is S.VANISHING_OFF_DIAGONAL:
        if isinstance(coeff, SymOfH):
            if w < 2:
                raise DomainError("Sym^q vanishing needs q >= 2")
            return rng(2, 1, "n >= 2i + q + 3")
        return rng(2, 1, "2i <= n - q - 3")
    if statement is S.DIAGONAL_IDENTIFIED:
        if isinstance(coeff, SymOfH):
            raise DomainError("Sym^q coefficients have no nonzero diagonal group; use vanishing")
        if group is GroupFamily.OUT:
            return rng(0, 4, "n >= 4q + 3" if not isinstance(coeff, SchurOfH) else "n >= 4|lambda| + 3")
        return rng(0, 2, "n >= 2q + 3" if not isinstance(coeff, SchurOfH) else "n >= 2|lambda| + 3")
    if statement is S.STABILITY_OF_GROUPS:
        if not isinstance(coeff, SchurOfH):
            raise DomainError("group stability is recorded for Schur functor coefficients only")
        if group is GroupFamily.OUT:
            return rng(0, 4, "n >= 4|lambda| + 3")
        return rng(2, 1, "2i <= n - q - 3")
    raise DomainError(f"unknown statement {statement!r}")


# -- tables ------------------------------------------------------------------------------

@dataclass(frozen=True)
class DimensionTable:
    group: GroupFamily
    rows: tuple[tuple[Partition, int], ...]

    def by_weight(self) -> dict[int, list[tuple[Partition, int]]]:
        out: dict[int, list[tuple[Partition, int]]] = {}
        for lam, d in self.rows:
            out.setdefault(lam.weight, []).append((lam, d))
        return out

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.rows)


def build_table(group: GroupFamily, max_weight: int) -> DimensionTable:
    """Both methods for every partition of weight <= max_weight."""
    if max_weight < 0:
        raise DomainError("max_weight must be nonnegative")
    if max_weight > MAX_TABLE_WEIGHT:
        raise ResourceLimitError(f"max_weight = {max_weight} exceeds the bound {MAX_TABLE_WEIGHT}")
    rows = []
    for q in range(max_weight + 1):
        for lam in enumerate_partitions(q):
            rows.append((lam, dim_schur_checked(group, lam)))
    return DimensionTable(group, tuple(rows))
