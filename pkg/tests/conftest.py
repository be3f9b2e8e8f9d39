from math import log2

import pytest

from src.schemas import ChannelMatrix, Codebook, EquivalenceTransform

EXAMPLE_1_H = [[1, 4, 3], [2, 1, 3], [6, 2, 1]]
EXAMPLE_1_C = [[0, 1, 2, 3, 4, 5], [0, 3], [0, 2, 4]]
EXAMPLE_2_H = [[1, 12, 6], [2, 3, 6], [3, 3, 1]]
EXAMPLE_2_C = [[0, 1, 2, 3, 4, 5], [0, 1], [0, 1, 2]]

EFF_41 = log2(36) / log2(41)
EFF_30 = log2(36) / log2(30)


@pytest.fixture
def example1_matrix() -> ChannelMatrix:
    return ChannelMatrix(entries=EXAMPLE_1_H)


@pytest.fixture
def example1_codebook() -> Codebook:
    return Codebook(sets=EXAMPLE_1_C)


@pytest.fixture
def example2_matrix() -> ChannelMatrix:
    return ChannelMatrix(entries=EXAMPLE_2_H)


@pytest.fixture
def example2_codebook() -> Codebook:
    return Codebook(sets=EXAMPLE_2_C)


@pytest.fixture
def example_transform() -> EquivalenceTransform:
    """Maps Example 1's matrix to Example 2's."""
    return EquivalenceTransform(r=[1, 3, 2], d=[1, 1, 2])
