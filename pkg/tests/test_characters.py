from collections import Counter
from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from stabletwist.characters import (
    ClassFunction,
    character_table,
    character_value,
    class_size,
    decompose,
    inner_product,
    irreducible_character,
    sign,
    sign_character,
    sign_twist,
    trivial_character,
    z,
)
from stabletwist.partitions import Partition, conjugate, enumerate_partitions


def cycle_type(perm):
    seen, lengths = set(), []
    for i in range(len(perm)):
        n, j = 0, i
        while j not in seen:
            seen.add(j)
            j = perm[j]
            n += 1
        if n:
            lengths.append(n)
    return Partition(sorted(lengths, reverse=True))


@pytest.mark.parametrize("q", range(1, 7))
def test_class_sizes_by_brute_force(q):
    counts = Counter(cycle_type(p) for p in permutations(range(q)))
    for mu in enumerate_partitions(q):
        assert class_size(mu) == counts[mu] == factorial(q) // z(mu)


def test_class_size_examples():
    assert class_size((1, 1, 1)) == 1
    assert class_size((2, 1)) == 3
    assert class_size((4,)) == 6


def test_small_characters():
    chi = irreducible_character((2, 1))
    assert [chi[mu] for mu in [(1, 1, 1), (2, 1), (3,)]] == [2, 0, -1]
    for q in range(1, 7):
        assert irreducible_character((q,)) == trivial_character(q)
        for mu in enumerate_partitions(q):
            assert irreducible_character((1,) * q)[mu] == (-1) ** (q - len(mu)) == sign(mu)


@pytest.mark.parametrize("q", range(2, 9))
def test_standard_representation(q):
    # chi^(q-1,1) = (number of fixed points) - 1
    chi = irreducible_character((q - 1, 1))
    for mu in enumerate_partitions(q):
        assert chi[mu] == list(mu).count(1) - 1


@pytest.mark.parametrize("q", range(1, 9))
def test_column_orthogonality(q):
    table = character_table(q)
    parts = enumerate_partitions(q)
    for a in parts:
        for b in parts:
            s = sum(table[lam][a] * table[lam][b] for lam in parts)
            assert s == (z(a) if a == b else 0)


def test_inner_product_examples():
    assert inner_product(irreducible_character((2,)), irreducible_character((1, 1))) == 0
    assert inner_product(irreducible_character((3, 2)), irreducible_character((3, 2))) == 1
    perm = ClassFunction(2, {(1, 1): 2, (2,): 2})
    assert inner_product(perm, trivial_character(2)) == 2
    assert isinstance(inner_product(perm, perm), Fraction)


def test_sign_twist_examples():
    assert sign_twist(trivial_character(4)) == sign_character(4)
    chi = irreducible_character((2, 1))
    assert sign_twist(chi) == chi


def test_character_value_errors():
    with pytest.raises(ValueError):
        character_value((2, 1), (2, 2))


def class_function(q):
    parts = enumerate_partitions(q)
    return st.lists(st.integers(-5, 5), min_size=len(parts), max_size=len(parts)).map(
        lambda vs: ClassFunction(q, dict(zip(parts, vs))))


@given(st.integers(1, 5).flatmap(lambda q: st.tuples(class_function(q), class_function(q))))
def test_inner_product_matches_sum_over_group(pair):
    f, g = pair
    q = f.q
    brute = Fraction(sum(f[cycle_type(p)] * g[cycle_type(p)] for p in permutations(range(q))), factorial(q))
    assert inner_product(f, g) == brute
    assert sign_twist(sign_twist(f)) == f
    assert inner_product(f, g) == inner_product(sign_twist(f), sign_twist(g))


@given(st.integers(1, 6).flatmap(class_function))
def test_decompose_reconstructs(f):
    coeffs = decompose(f)
    total = ClassFunction(f.q, {mu: 0 for mu in enumerate_partitions(f.q)})
    for lam, c in coeffs.items():
        total = total + c * irreducible_character(lam)
    assert total == f


def test_class_function_arithmetic():
    a, b = irreducible_character((2, 1)), irreducible_character((3,))
    assert (a + b) - b == a
    assert (a * a)[(1, 1, 1)] == 4
    assert (2 * a)[(3,)] == -2
    assert a.degree() == 2
    with pytest.raises(ValueError):
        a + irreducible_character((2,))


@pytest.mark.parametrize("q", range(1, 8))
def test_tensor_with_sign_conjugates(q):
    for lam in enumerate_partitions(q):
        assert irreducible_character(lam) * sign_character(q) == irreducible_character(conjugate(lam))
