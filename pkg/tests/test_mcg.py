import pytest

from stabletwist.errors import DomainError, ResourceLimitError
from stabletwist.mcg import SurfaceVariant, generator_series, mcg_alphabet, validate_variant
from stabletwist.partitions import enumerate_partitions

CLOSED, BOUNDARY = SurfaceVariant.CLOSED, SurfaceVariant.ONE_BOUNDARY


def test_alphabet_examples():
    closed = mcg_alphabet(CLOSED)
    assert closed.labels(1).series(8) == {2: 1, 4: 1, 6: 1, 8: 1}
    assert closed.labels(3).series(2) == {-2: 1, 0: 1, 2: 1}
    assert mcg_alphabet(BOUNDARY).labels(1).series(4) == {0: 1, 2: 1, 4: 1}


def test_series_examples():
    assert generator_series(CLOSED, (1,), 10).coefficients == {3: 1, 5: 1, 7: 1, 9: 1}
    assert generator_series(BOUNDARY, (1,), 10).coefficients == {1: 1, 3: 1, 5: 1, 7: 1, 9: 1}
    wedge = generator_series(CLOSED, (1, 1), 10)
    assert [wedge[d] for d in range(0, 11, 2)] == [1, 1, 1, 2, 2, 3]
    sym = generator_series(CLOSED, (2,), 12)
    assert sym.degrees()[0] == 8


def test_trivial_and_empty_cases():
    assert generator_series(CLOSED, (), 6).coefficients == {0: 1}
    assert generator_series(CLOSED, (1,), -1).coefficients == {}


@pytest.mark.parametrize("q", range(1, 5))
def test_parity_and_boundary_dominance(q):
    for lam in enumerate_partitions(q):
        closed = generator_series(CLOSED, lam, 20)
        boundary = generator_series(BOUNDARY, lam, 20)
        assert all((d - q) % 2 == 0 and d >= 0 for d in closed.degrees())
        # the boundary alphabet only adds labels, so it can only add generators
        assert all(boundary[d] >= c for d, c in closed.items())


def test_truncation_is_consistent():
    full = generator_series(CLOSED, (2, 1), 24)
    for top in (10, 17, 20):
        cut = generator_series(CLOSED, (2, 1), top)
        assert cut.coefficients == {d: c for d, c in full.items() if d <= top}


def test_bounds_and_names():
    with pytest.raises(ResourceLimitError):
        generator_series(CLOSED, (1,) * 9, 10)
    with pytest.raises(ResourceLimitError):
        generator_series(CLOSED, (1,), 41)
    assert validate_variant("boundary") is BOUNDARY
    with pytest.raises(DomainError):
        validate_variant("torus")
