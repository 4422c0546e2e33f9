from math import comb

import numpy as np
import pytest

from spinchain import DomainError, SectorVector, enumerate_sector, mask_string


def test_n4_k2_masks():
    basis = enumerate_sector(4, 2)
    assert basis.dim == 6
    assert basis.states == (0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100)


def test_n8_k3_dimension():
    assert enumerate_sector(8, 3).dim == 56


def test_vacuum_sector():
    basis = enumerate_sector(5, 0)
    assert basis.dim == 1
    assert basis.states == (0,)


def test_full_sector():
    basis = enumerate_sector(5, 5)
    assert basis.states == (0b11111,)


@pytest.mark.parametrize("k", [-1, 5])
def test_out_of_range_particle_number(k):
    with pytest.raises(DomainError):
        enumerate_sector(4, k)


def test_rank_examples():
    basis = enumerate_sector(4, 2)
    assert basis.rank(0b0101) == 1
    assert basis.rank(0b1100) == 5
    assert basis.rank(basis.states[0]) == 0


def test_unrank_examples():
    basis = enumerate_sector(4, 2)
    assert basis.unrank(0) == 0b0011
    assert basis.unrank(5) == 0b1100


def test_rank_rejects_wrong_popcount():
    basis = enumerate_sector(4, 2)
    with pytest.raises(DomainError):
        basis.rank(0b0111)


def test_unrank_rejects_out_of_range():
    basis = enumerate_sector(4, 2)
    with pytest.raises(DomainError):
        basis.unrank(6)


@pytest.mark.parametrize("n", range(2, 15))
def test_binomial_completeness(n):
    assert sum(enumerate_sector(n, k).dim for k in range(n + 1)) == 2**n


@pytest.mark.parametrize("n", range(2, 15))
def test_rank_unrank_bijection(n):
    for k in range(n + 1):
        basis = enumerate_sector(n, k)
        assert basis.dim == comb(n, k)
        for r in range(basis.dim):
            assert basis.rank(basis.unrank(r)) == r
        for mask in basis.states:
            assert basis.unrank(basis.rank(mask)) == mask


@pytest.mark.parametrize("n", range(2, 15))
def test_enumeration_strictly_increasing(n):
    for k in range(n + 1):
        states = enumerate_sector(n, k).states
        assert all(a < b for a, b in zip(states, states[1:]))
        assert all(m.bit_count() == k for m in states)


def test_mask_string_site_one_leftmost():
    basis = enumerate_sector(4, 1)
    assert mask_string(basis, 0b0001) == "1000"
    assert mask_string(basis, 0b1000) == "0001"


def test_sector_vector_validates_shape_and_finiteness():
    basis = enumerate_sector(4, 2)
    with pytest.raises(DomainError):
        SectorVector(basis, np.zeros(5))
    with pytest.raises(DomainError):
        SectorVector(basis, np.full(6, np.nan))
    v = SectorVector(basis, np.ones(6) / np.sqrt(6))
    assert v.norm() == pytest.approx(1.0)
