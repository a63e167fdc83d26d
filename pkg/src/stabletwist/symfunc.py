"""Symmetric functions: power sums, Schur functions, and plethysm h_k[h_l].

Expansions are kept in the power-sum basis with an integer numerator and
a common denominator, and converted to Schur coefficients with the
character table: if ``f = sum_rho c_rho p_rho`` then the coefficient of
``s_lam`` is ``sum_rho c_rho chi^lam(rho)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .characters import _mn, z
from .errors import DomainError, ResourceLimitError
from .partitions import Partition, enumerate_partitions

MAX_PLETHYSM_DEGREE = 36


@dataclass(frozen=True)
class PowerSumExpansion:
    degree: int
    coefficients: dict = field(default_factory=dict)

    def __post_init__(self):
        for rho in self.coefficients:
            if sum(rho) != self.degree:
                raise ValueError(f"{rho} is not of weight {self.degree}")


@dataclass(frozen=True)
class SchurExpansion:
    degree: int
    coefficients: dict = field(default_factory=dict)

    def __getitem__(self, lam) -> Fraction:
        return self.coefficients.get(Partition(lam), Fraction(0))

    def items(self):
        """Nonzero terms in ``enumerate_partitions`` order."""
        return [(lam, self.coefficients[lam]) for lam in enumerate_partitions(self.degree)
                if self.coefficients.get(lam)]


@dataclass(frozen=True)
class StableMultiplicity:
    mu: Partition
    value: int
    witnesses: tuple[int, int]


def h_in_p(k: int) -> PowerSumExpansion:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return PowerSumExpansion(k, {rho: Fraction(1, z(rho)) for rho in enumerate_partitions(k)})


# -- integer-scaled power-sum arithmetic -----------------------------------------
# A scaled expansion is a dict {sorted-desc tuple: int}; the denominator is
# tracked by the caller.

def _merge(a: tuple, b: tuple) -> tuple:
    return tuple(sorted(a + b, reverse=True))


def _pmul(f: dict, g: dict) -> dict:
    out: dict = {}
    for a, ca in f.items():
        for b, cb in g.items():
            key = _merge(a, b)
            out[key] = out.get(key, 0) + ca * cb
    return out


@lru_cache(maxsize=None)
def _h_of_p(l: int, m: int) -> dict:
    # l! * h_l[p_m] = sum_tau (l!/z_tau) p_{m*tau}
    fl = factorial(l)
    return {tuple(m * t for t in tau): fl // z(tau) for tau in enumerate_partitions(l)}


@lru_cache(maxsize=None)
def _product(l: int, parts: tuple) -> dict:
    # prod over parts m of l! * h_l[p_m]; parts are weakly decreasing
    if not parts:
        return {(): 1}
    return _pmul(_product(l, parts[:-1]), _h_of_p(l, parts[-1]))


def _check_bound(k: int, l: int):
    if k < 0 or l < 1:
        raise DomainError(f"need k >= 0 and l >= 1, got k={k}, l={l}")
    if k * l > MAX_PLETHYSM_DEGREE:
        raise ResourceLimitError(f"k*l = {k * l} exceeds the bound k*l <= {MAX_PLETHYSM_DEGREE}")


@lru_cache(maxsize=None)
def _plethysm_scaled(k: int, l: int) -> tuple[dict, int]:
    """``(numerators, denominator)`` of h_k[h_l] in the power-sum basis."""
    fk, fl = factorial(k), factorial(l)
    total: dict = {}
    for rho in enumerate_partitions(k):
        # _product carries fl ** len(rho); pad to the common fl ** k
        weight = fk // z(rho) * fl ** (k - len(rho))
        for key, c in _product(l, tuple(rho)).items():
            total[key] = total.get(key, 0) + weight * c
    total = {key: c for key, c in total.items() if c}
    return total, fk * factorial(l) ** k


def plethysm_in_p(k: int, l: int) -> PowerSumExpansion:
    _check_bound(k, l)
    num, den = _plethysm_scaled(k, l)
    return PowerSumExpansion(k * l, {Partition(key): Fraction(c, den) for key, c in num.items()})


def _to_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {value}")
    return value.numerator


def schur_coefficient(k: int, l: int, lam) -> int:
    """Coefficient of ``s_lam`` in h_k[h_l]."""
    _check_bound(k, l)
    lam = Partition(lam)
    if lam.weight != k * l:
        return 0
    if len(lam) > k:
        # h_k[h_l] is a quotient of h_l^k, whose Schur support has <= k rows
        return 0
    num, den = _plethysm_scaled(k, l)
    key = tuple(lam)
    total = sum(c * _mn(key, rho) for rho, c in num.items())
    return _to_integer(Fraction(total, den), f"coefficient of s{lam} in h_{k}[h_{l}]")


def p_to_schur(f: PowerSumExpansion, max_length: int | None = None) -> SchurExpansion:
    """Convert a power-sum expansion to Schur, optionally only for shapes with
    at most ``max_length`` rows (the caller vouches the rest vanish)."""
    coeffs = {}
    for lam in enumerate_partitions(f.degree):
        if max_length is not None and len(lam) > max_length:
            continue
        c = sum((v * _mn(tuple(lam), tuple(rho)) for rho, v in f.coefficients.items()), Fraction(0))
        if c:
            coeffs[lam] = c
    return SchurExpansion(f.degree, coeffs)


# -- alternant route ---------------------------------------------------------------
# In n variables, a_delta * f = sum_lam c_lam a_(lam+delta) for f = sum c_lam s_lam.
# An antisymmetric polynomial is a dict {strictly decreasing exponent tuple: int}.

def _alt_times_p(alt: dict, s: int) -> dict:
    """Multiply by the power sum p_s (the beta-set form of the MN rule)."""
    out: dict = {}
    for vec, c in alt.items():
        for i in range(len(vec)):
            new = vec[i] + s
            j = i
            while j > 0 and vec[j - 1] < new:
                j -= 1
            if j > 0 and vec[j - 1] == new:
                continue
            key = vec[:j] + (new,) + vec[j:i] + vec[i + 1:]
            out[key] = out.get(key, 0) + (-c if (i - j) % 2 else c)
    return {key: c for key, c in out.items() if c}


def _alt_times_h_of_p(alt: dict, l: int, r: int) -> dict:
    """Multiply by l! * h_l[p_r] = sum_tau (l!/z_tau) p_(r*tau)."""
    fl = factorial(l)
    memo = {(): alt}
    total: dict = {}
    for tau in enumerate_partitions(l):
        key = tuple(tau)
        for cut in range(1, len(key) + 1):
            if key[:cut] not in memo:
                memo[key[:cut]] = _alt_times_p(memo[key[:cut - 1]], r * key[cut - 1])
        weight = fl // z(tau)
        for vec, c in memo[key].items():
            total[vec] = total.get(vec, 0) + weight * c
    return total


def _plethysm_alternant(k: int, l: int) -> dict:
    """Schur coefficients of h_k[h_l] via k*h_k = sum_r p_r h_(k-r), in k variables."""
    n = max(k, 1)
    delta = tuple(range(n - 1, -1, -1))
    fl = factorial(l)
    # scaled[j] = j! * (l!)^j * a_delta * h_j[h_l]
    scaled = [{delta: 1}]
    for j in range(1, k + 1):
        acc: dict = {}
        for r in range(1, j + 1):
            factor = factorial(j - 1) // factorial(j - r) * fl ** (r - 1)
            for vec, c in _alt_times_h_of_p(scaled[j - r], l, r).items():
                acc[vec] = acc.get(vec, 0) + factor * c
        scaled.append({vec: c for vec, c in acc.items() if c})
    den = factorial(k) * fl**k
    out = {}
    for vec, c in scaled[k].items():
        lam = Partition(v - d for v, d in zip(vec, delta))
        out[lam] = _to_integer(Fraction(c, den), f"coefficient of s{lam} in h_{k}[h_{l}]")
    return out


_PLETHYSM_MEMO: dict[tuple[int, int], SchurExpansion] = {}


def plethysm_h_h(k: int, l: int, method: str = "alternant") -> SchurExpansion:
    """Schur expansion of h_k[h_l], the character of Sym^k(Sym^l V).

    ``method="characters"`` pairs the power-sum expansion with every
    irreducible character; ``"alternant"`` multiplies the Vandermonde by
    the same power sums in ``k`` variables, which is much faster at large
    degree. Shapes with more than ``k`` rows cannot occur and are skipped.
    """
    _check_bound(k, l)
    if method == "alternant" and (k, l) in _PLETHYSM_MEMO:
        return _PLETHYSM_MEMO[(k, l)]
    if method == "characters":
        raw = {lam: schur_coefficient(k, l, lam)
               for lam in enumerate_partitions(k * l) if len(lam) <= max(k, 1)}
    elif method == "alternant":
        raw = _plethysm_alternant(k, l)
    else:
        raise ValueError(f"unknown method {method!r}")
    coeffs = {}
    for lam, c in raw.items():
        if c < 0:
            raise ArithmeticError(f"negative plethysm coefficient {c} at {lam}")
        if c:
            coeffs[lam] = Fraction(c)
    result = SchurExpansion(k * l, coeffs)
    if method == "alternant":
        _PLETHYSM_MEMO[(k, l)] = result
    return result


# -- first-row reduction ---------------------------------------------------------------
# Expanding Jacobi-Trudi along the first row, s_(a,mu) = sum_j (-1)^j h_(a+j) e_j^perp s_mu,
# so <f, s_(a,mu)> = sum_j (-1)^j <e_j * h_(a+j)^perp f, s_mu>. Evaluating h_k[h_l] at
# one extra variable x0 gives h_m^perp h_k[h_l] = sum prod_s h_(c_s)[h_s] over
# (c_1..c_l) with sum s*c_s = kl - m and sum c_s <= k: everything stays in degree |mu|.

def _p_dict_mul(f: dict, g: dict) -> dict:
    out: dict = {}
    for a, ca in f.items():
        for b, cb in g.items():
            key = _merge(a, b)
            out[key] = out.get(key, 0) + ca * cb
    return out


@lru_cache(maxsize=None)
def _small_plethysm_p(c: int, s: int) -> dict:
    num, den = _plethysm_scaled(c, s)
    return {key: Fraction(v, den) for key, v in num.items()}


def _e_in_p(j: int) -> dict:
    return {tuple(rho): Fraction(-1 if (j - len(rho)) % 2 else 1, z(rho)) for rho in enumerate_partitions(j)}


def _skewed(k: int, l: int, d: int) -> dict:
    """h_(kl-d)^perp h_k[h_l] in the power-sum basis (degree d)."""
    total: dict = {}

    def rec(s: int, left: int, used: int, acc: dict):
        if left == 0:
            for key, v in acc.items():
                total[key] = total.get(key, 0) + v
            return
        if s > min(l, left):
            return
        for c in range(0, left // s + 1):
            if used + c > k:
                break
            term = acc if c == 0 else _p_dict_mul(acc, _small_plethysm_p(c, s))
            rec(s + 1, left - s * c, used + c, term)

    rec(1, d, 0, {(): Fraction(1)})
    return total


def _nu_first_row(k: int, l: int, mu: Partition) -> int:
    m = mu.weight
    key = tuple(mu)
    total = Fraction(0)
    for j in range(0, m + 1):
        term = _p_dict_mul(_e_in_p(j), _skewed(k, l, m - j))
        value = sum((v * _mn(key, rho) for rho, v in term.items()), Fraction(0))
        total += -value if j % 2 else value
    return _to_integer(total, f"nu^({k},{l})({mu})")


MAX_REDUCED_WEIGHT = 12


def nu(k: int, l: int, mu, method: str = "direct") -> int:
    """Multiplicity of ``S_(kl-|mu|, mu)`` in Sym^k(Sym^l V).

    ``"direct"`` reads the coefficient off the full plethysm (kl <= 36);
    ``"first_row"`` only works in degree |mu| and has no bound on kl.
    """
    mu = Partition(mu)
    if k < 0 or l < 1:
        raise DomainError(f"need k >= 0 and l >= 1, got k={k}, l={l}")
    if 2 * mu.weight > k * l:
        raise DomainError(f"need 2|mu| <= kl, got 2*{mu.weight} > {k}*{l}")
    if method == "direct":
        _check_bound(k, l)
        return schur_coefficient(k, l, (k * l - mu.weight,) + tuple(mu))
    if method == "first_row":
        if mu.weight > MAX_REDUCED_WEIGHT:
            raise ResourceLimitError(f"|mu| = {mu.weight} exceeds the bound {MAX_REDUCED_WEIGHT}")
        return _nu_first_row(k, l, mu)
    raise ValueError(f"unknown method {method!r}")


def stable_witnesses(mu) -> tuple[int, int]:
    """Smallest admissible (k, l) with k >= |mu|, l >= mu_1 and 2|mu| <= kl."""
    mu = Partition(mu)
    k = max(mu.weight, 1)
    l = max(mu[0] if mu else 1, 1)
    while k * l < 2 * mu.weight:
        l += 1
    return k, l


_NU_INFINITY_MEMO: dict[Partition, StableMultiplicity] = {}


def nu_infinity(mu) -> StableMultiplicity:
    """Stable value of ``nu(k, l, mu)`` for k, l large.

    Evaluated at :func:`stable_witnesses`; past kl = 36 the first-row
    reduction replaces the direct coefficient.
    """
    mu = Partition(mu)
    if mu in _NU_INFINITY_MEMO:
        return _NU_INFINITY_MEMO[mu]
    k, l = stable_witnesses(mu)
    method = "direct" if k * l <= MAX_PLETHYSM_DEGREE else "first_row"
    result = StableMultiplicity(mu, nu(k, l, mu, method), (k, l))
    _NU_INFINITY_MEMO[mu] = result
    return result
