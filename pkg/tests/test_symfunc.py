from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from math import comb

import pytest

from stabletwist.errors import DomainError, ResourceLimitError
from stabletwist.partitions import Partition, dim_schur_module, enumerate_partitions
from stabletwist.symfunc import (
    PowerSumExpansion,
    h_in_p,
    nu,
    nu_infinity,
    p_to_schur,
    plethysm_h_h,
    plethysm_in_p,
    schur_coefficient,
    stable_witnesses,
)


def perm_sign(p):
    s, seen = 1, set()
    for i in range(len(p)):
        j, n = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            n += 1
        if n:
            s *= (-1) ** (n - 1)
    return s


def brute_plethysm(k, l, n):
    """Schur multiplicities of Sym^k(Sym^l C^n) from its weight multiset,
    via the coefficient of x^(lam + delta) in a_delta * character."""
    monomials = [Counter(c) for c in combinations_with_replacement(range(n), l)]
    weights = Counter()
    for choice in combinations_with_replacement(range(len(monomials)), k):
        total = Counter()
        for i in choice:
            total += monomials[i]
        weights[tuple(total[v] for v in range(n))] += 1
    delta = tuple(range(n - 1, -1, -1))
    alt = Counter()
    for p in permutations(range(n)):
        s = perm_sign(p)
        shift = tuple(delta[p[i]] for i in range(n))
        for w, c in weights.items():
            alt[tuple(a + b for a, b in zip(w, shift))] += s * c
    out = {}
    for e, c in alt.items():
        if c and all(e[i] > e[i + 1] for i in range(n - 1)):
            out[Partition([a - b for a, b in zip(e, delta)])] = c
    return out


def test_h_in_p_examples():
    assert h_in_p(0).coefficients == {(): 1}
    assert h_in_p(1).coefficients == {(1,): 1}
    assert h_in_p(2).coefficients == {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)}


def test_power_sum_validation():
    with pytest.raises(ValueError):
        PowerSumExpansion(3, {(1, 1): 1})


@pytest.mark.parametrize("k", range(0, 7))
def test_h_converts_to_single_row(k):
    expansion = p_to_schur(h_in_p(k))
    assert dict(expansion.items()) == ({Partition((k,)): 1} if k else {Partition(): 1})


def test_plethysm_examples():
    assert dict(plethysm_h_h(2, 2).items()) == {(4,): 1, (2, 2): 1}
    for l in range(1, 8):
        assert dict(plethysm_h_h(1, l).items()) == {(l,): 1}
    for k in range(1, 8):
        assert dict(plethysm_h_h(k, 1).items()) == {(k,): 1}
    assert dict(plethysm_h_h(0, 3).items()) == {(): 1}


@pytest.mark.parametrize("k,l", [(k, l) for k in range(1, 5) for l in range(1, 5) if k * l <= 9])
def test_plethysm_matches_weight_count(k, l):
    # k + 1 variables also confirms that shapes with more than k rows vanish
    expected = brute_plethysm(k, l, k + 1)
    assert dict(plethysm_h_h(k, l).items()) == expected


@pytest.mark.parametrize("k,l", [(k, l) for k in range(1, 13) for l in range(1, 13) if k * l <= 12])
def test_plethysm_dimension_in_three_variables(k, l):
    total = sum(c * dim_schur_module(lam, 3) for lam, c in plethysm_h_h(k, l).items())
    assert total == comb(comb(l + 2, 2) + k - 1, k)


@pytest.mark.parametrize("k,l", [(k, l) for k in range(1, 9) for l in range(1, 9) if 4 <= k * l <= 16])
def test_alternant_agrees_with_characters(k, l):
    a = plethysm_h_h(k, l, method="alternant")
    b = plethysm_h_h(k, l, method="characters")
    assert a.items() == b.items()
    assert all(c > 0 and c.denominator == 1 for _, c in a.items())


def test_schur_coefficient_and_p_expansion():
    f = plethysm_in_p(2, 3)
    assert f.degree == 6
    assert schur_coefficient(2, 3, (6,)) == 1
    assert schur_coefficient(2, 3, (4, 2)) == 1
    assert schur_coefficient(2, 3, (5, 1)) == 0
    assert dict(p_to_schur(f).items()) == dict(plethysm_h_h(2, 3).items())


def test_nu_examples():
    assert nu(2, 2, (2,)) == 1
    assert nu(2, 2, (1, 1)) == 0
    for k in range(1, 10):
        for l in range(1, 10):
            if k * l <= 9:
                assert nu(k, l, ()) == 1


@pytest.mark.parametrize("w", range(0, 5))
def test_first_row_reduction_agrees(w):
    for mu in enumerate_partitions(w):
        for k in range(0, 25):
            for l in range(1, 25):
                if 2 * w <= k * l <= 24:
                    assert nu(k, l, mu, method="first_row") == nu(k, l, mu), (k, l, mu)


def test_nu_infinity_examples():
    assert nu_infinity(()).value == 1
    assert nu_infinity((1,)).value == 0
    assert nu_infinity((2,)).value == 1
    m = nu_infinity((2, 1))
    assert m.witnesses == stable_witnesses((2, 1))
    k, l = m.witnesses
    assert k >= 3 and l >= 2 and k * l >= 6


def test_nu_infinity_beyond_direct_range():
    # mu = (7) needs kl = 49; the first-row route must agree with a larger admissible witness
    m = nu_infinity((7,))
    assert m.witnesses[0] * m.witnesses[1] > 36
    assert m.value == nu(8, 8, (7,), method="first_row")


def test_vanishing_at_the_boundary():
    # 2 lam_1 = |lam| still vanishes unless lam is a two-row rectangle
    for w in range(2, 7, 2):
        for lam in enumerate_partitions(w):
            if 2 * lam[0] == w:
                expected = 1 if lam == (w // 2, w // 2) else 0
                assert (nu_infinity(Partition(lam).conjugate()).value > 0) == bool(expected), lam


def test_errors():
    with pytest.raises(ResourceLimitError):
        plethysm_h_h(7, 6)
    with pytest.raises(DomainError):
        plethysm_h_h(2, 0)
    with pytest.raises(DomainError):
        nu(1, 2, (2,))
    with pytest.raises(ValueError):
        nu(2, 2, (), method="nope")
