from collections import Counter
from itertools import combinations_with_replacement, product

import pytest
from hypothesis import given, strategies as st

from stabletwist.characters import character_value
from stabletwist.partitions import (
    Partition,
    conjugate,
    dim_schur_module,
    dim_specht,
    enumerate_partitions,
    format_exponent,
    format_partition,
    parse_partition,
    partition_count,
    pieri_additions,
    remove_boxes_rho,
)

# OEIS A000041
P = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def brute_partitions(q):
    out = set()
    for n in range(q + 1):
        for c in combinations_with_replacement(range(1, q + 1), n):
            if sum(c) == q:
                out.add(tuple(sorted(c, reverse=True)))
    return out


def brute_transpose(lam):
    cells = {(i, j) for i, row in enumerate(lam) for j in range(row)}
    cols = Counter(j for _, j in cells)
    return tuple(cols[j] for j in range(len(cols)))


partitions = st.integers(0, 10).flatmap(lambda q: st.sampled_from(enumerate_partitions(q)))


def test_enumerate_examples():
    assert enumerate_partitions(0) == [()]
    assert enumerate_partitions(4) == [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    assert len(enumerate_partitions(6)) == 11


@pytest.mark.parametrize("q", range(9))
def test_enumerate_matches_brute_force(q):
    parts = enumerate_partitions(q)
    assert set(parts) == brute_partitions(q)
    assert parts == sorted(parts) and len(set(parts)) == len(parts)
    assert parts[0] == (1,) * q and parts[-1] == ((q,) if q else ())


def test_partition_count():
    assert [partition_count(q) for q in range(len(P))] == P
    assert partition_count(-1) == 0


def test_partition_validation():
    assert Partition((3, 1, 0, 0)) == (3, 1)
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((2, 2)) == (2, 2)


@given(partitions)
def test_conjugate_is_transpose(lam):
    assert conjugate(lam) == brute_transpose(lam)
    assert conjugate(conjugate(lam)) == lam
    assert Partition(lam).conjugate().weight == sum(lam)


def test_rho_examples():
    assert remove_boxes_rho(()) == {()}
    assert remove_boxes_rho((1,)) == {(1,), ()}
    assert remove_boxes_rho((2, 2)) == {(2, 2), (2, 1), (1, 1)}
    assert remove_boxes_rho((1, 1, 1, 1)) == {(1, 1, 1, 1), (1, 1, 1), (1, 1), (1,), ()}


def brute_rho(lam):
    out = set()
    for drops in product((0, 1), repeat=len(lam)):
        mu = [a - d for a, d in zip(lam, drops)]
        if all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1)):
            out.add(Partition(mu))
    return out


@pytest.mark.parametrize("q", range(9))
def test_rho_brute_force_and_pieri_duality(q):
    for lam in enumerate_partitions(q):
        rho = remove_boxes_rho(lam)
        assert rho == brute_rho(lam)
        # removing a vertical strip from lam is adding a horizontal strip to the conjugate
        dual = {conjugate(mu) for mu in rho}
        assert dual == {nu for w in range(q + 1) for nu in enumerate_partitions(w)
                        if conjugate(lam) in pieri_additions(nu, q - w)}


def test_pieri_examples():
    assert pieri_additions((1,), 1) == {(2,), (1, 1)}
    assert pieri_additions((2, 1), 0) == {(2, 1)}
    assert pieri_additions((2, 1), 2) == {(4, 1), (3, 2), (3, 1, 1), (2, 2, 1)}


def horizontal_strip(lam, mu):
    # lam / mu has at most one box per column iff the parts interlace
    lam, mu = list(lam), list(mu) + [0] * (len(lam) - len(mu))
    if len(mu) > len(lam):
        return False
    return all(lam[i] >= mu[i] for i in range(len(lam))) and \
        all(mu[i] >= lam[i + 1] for i in range(len(lam) - 1))


@pytest.mark.parametrize("w,b", [(w, b) for w in range(5) for b in range(4)])
def test_pieri_brute_force(w, b):
    for mu in enumerate_partitions(w):
        expected = {lam for lam in enumerate_partitions(w + b) if horizontal_strip(lam, mu)}
        assert pieri_additions(mu, b) == expected


def standard_tableaux(lam):
    # remove a corner box in every possible way
    if not lam:
        return 1
    total = 0
    for i in range(len(lam)):
        if i == len(lam) - 1 or lam[i] > lam[i + 1]:
            total += standard_tableaux(Partition(lam[:i] + (lam[i] - 1,) + lam[i + 1:]))
    return total


@pytest.mark.parametrize("q", range(1, 9))
def test_dim_specht(q):
    for lam in enumerate_partitions(q):
        assert dim_specht(lam) == standard_tableaux(lam) == character_value(lam, (1,) * q)


def semistandard_count(lam, d):
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    count = 0
    for fill in product(range(d), repeat=len(cells)):
        t = dict(zip(cells, fill))
        if all(t[(i, j)] <= t[(i, j + 1)] for (i, j) in cells if (i, j + 1) in t) and \
                all(t[(i, j)] < t[(i + 1, j)] for (i, j) in cells if (i + 1, j) in t):
            count += 1
    return count


@pytest.mark.parametrize("q", range(0, 6))
def test_dim_schur_module_counts_tableaux(q):
    for lam in enumerate_partitions(q):
        for d in (1, 2, 3):
            assert dim_schur_module(lam, d) == semistandard_count(lam, d)


@given(partitions)
def test_partition_text_round_trip(lam):
    assert parse_partition(format_partition(lam)) == lam
    assert parse_partition(format_exponent(lam).strip("()")) == lam if lam else True


def test_parse_forms():
    assert parse_partition("[2,2,1]") == (2, 2, 1)
    assert parse_partition("(3, 1)") == (3, 1)
    assert parse_partition("[]") == ()
    assert parse_partition("2^2 1") == (2, 2, 1)
    assert format_exponent((2, 2, 1, 1)) == "(2^2 1^2)"
    assert format_exponent(()) == "()"
    for bad in ["[2,x]", "2^", "[0]", "[1,2", "abc"]:
        with pytest.raises(ValueError):
            parse_partition(bad)
