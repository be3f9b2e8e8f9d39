from itertools import product
from math import isclose, log2

import pytest
from pydantic import ValidationError

from src.ddifc import efficiency, is_decodable, w_max
from src.equiv import class_search
from src.errors import BinTooSmall, DigitOutOfRange, NonIntegralAfterScaling, NotInImage
from src.layered import (
    asymptotic_efficiency,
    build_layered,
    layered_decode,
    layered_efficiency,
    layered_encode,
    layered_sets,
    max_output,
    transferred_code,
)
from src.schemas import SearchBounds
from tests.conftest import EFF_30, EFF_41


@pytest.fixture
def two_layers(example2_codebook, example2_matrix, example_transform):
    """Example 2's progression code layered twice, sent on Example 1's channel."""
    return build_layered(example2_codebook, 30, 2, source=example2_matrix, transform=example_transform)


def _output(row, codewords):
    return sum(gain * x for gain, x in zip(row, codewords))


class TestRoundTrip:
    def test_every_message_tuple(self, two_layers, example1_matrix):
        per_user = [list(product(values, repeat=2)) for values in two_layers.primary.sets]
        assert [len(choices) for choices in per_user] == [36, 4, 9]

        count = 0
        for messages in product(*per_user):
            codewords = [layered_encode(two_layers, j, list(m)) for j, m in enumerate(messages)]
            for i in range(3):
                y = _output(example1_matrix.row(i), codewords)
                expected = [two_layers.r[i] * m for m in messages[i]]
                assert layered_decode(two_layers, i, y) == expected
            count += 1
        assert count == 1296

    def test_table_decoder_path(self, example1_matrix, example1_codebook):
        code = build_layered(example1_codebook, 41, 2, source=example1_matrix)
        for messages in [([5, 2], [3, 0], [4, 4]), ([0, 1], [0, 3], [2, 0])]:
            codewords = [layered_encode(code, j, list(m)) for j, m in enumerate(messages)]
            for i in range(3):
                assert layered_decode(code, i, _output(example1_matrix.row(i), codewords)) == list(messages[i])

    def test_without_source(self, example1_codebook):
        code = build_layered(example1_codebook, 10, 2)
        assert layered_decode(code, 0, 53) == [3, 5]
        with pytest.raises(NotInImage):
            layered_decode(code, 1, 12)


class TestSets:
    def test_sizes(self, two_layers):
        sets = layered_sets(two_layers)
        assert sets.sizes == [36, 4, 9] == two_layers.sizes
        assert sets.sets[1] == [0, 3, 90, 93]

    def test_decodable_on_target(self, two_layers, example1_matrix):
        sets = layered_sets(two_layers)
        assert is_decodable(example1_matrix, sets).decodable
        assert w_max(example1_matrix, sets) == max_output(example1_matrix, two_layers)
        assert isclose(efficiency(example1_matrix, sets).efficiency,
                       layered_efficiency(example1_matrix, two_layers))


class TestEfficiency:
    def test_asymptotic(self, example2_codebook, example2_matrix):
        assert isclose(asymptotic_efficiency(example2_codebook, 30, source=example2_matrix), EFF_30)

    def test_sandwich(self, example2_codebook, example2_matrix, example_transform, example1_matrix):
        limit = asymptotic_efficiency(example2_codebook, 30, source=example2_matrix)
        previous = 0.0
        for l in range(1, 5):
            code = build_layered(example2_codebook, 30, l, source=example2_matrix, transform=example_transform)
            value = layered_efficiency(example1_matrix, code)
            assert previous < value <= limit
            previous = value
        one = build_layered(example2_codebook, 30, 1, source=example2_matrix, transform=example_transform)
        assert isclose(layered_efficiency(example1_matrix, one), EFF_41)

    def test_two_layers_beat_time_sharing(self, two_layers, example1_matrix):
        assert layered_efficiency(example1_matrix, two_layers) > 1.0
        assert isclose(layered_efficiency(example1_matrix, two_layers), 2 * log2(36) / log2(1 + 40 * 31))


class TestErrors:
    def test_bin_below_w_max(self, example2_codebook, example2_matrix):
        with pytest.raises(BinTooSmall):
            build_layered(example2_codebook, 29, 2, source=example2_matrix)

    def test_bin_without_source(self, example1_codebook):
        with pytest.raises(BinTooSmall):
            build_layered(example1_codebook, 5, 1)
        assert build_layered(example1_codebook, 6, 1).bin_size == 6

    def test_non_integral_after_scaling(self, two_layers):
        with pytest.raises(NonIntegralAfterScaling):
            layered_decode(two_layers, 2, 3)

    def test_too_many_digits(self, two_layers):
        with pytest.raises(DigitOutOfRange):
            layered_decode(two_layers, 0, 30 ** 2)
        with pytest.raises(DigitOutOfRange):
            layered_decode(two_layers, 0, -1)

    def test_encode_checks_messages(self, two_layers):
        with pytest.raises(ValueError):
            layered_encode(two_layers, 1, [0, 2])
        with pytest.raises(ValueError):
            layered_encode(two_layers, 1, [0])

    def test_depth_limit(self, example1_codebook):
        with pytest.raises(ValidationError):
            build_layered(example1_codebook, 6, 65)


def test_transferred_code(example1_matrix):
    result = class_search(example1_matrix, SearchBounds(r_max=3))
    code = transferred_code(result, 2)
    assert code.bin_size == w_max(result.best_matrix, result.code.codebook)
    assert code.transform == result.transform
    assert is_decodable(example1_matrix, layered_sets(code)).decodable


def test_gap_to_limit_shrinks_with_depth(example2_codebook, example2_matrix, example_transform, example1_matrix):
    limit = asymptotic_efficiency(example2_codebook, 30, source=example2_matrix)
    f_max = max(example_transform.d)
    for l in range(1, 5):
        code = build_layered(example2_codebook, 30, l, source=example2_matrix, transform=example_transform)
        gap = limit - layered_efficiency(example1_matrix, code)
        assert 0 <= gap <= log2(30 * f_max) / (l * log2(30))


def test_expansion():
    code = build_layered([[0, 1], [0, 1]], 10, 2)
    assert layered_sets(code).sets == [[0, 1, 10, 11], [0, 1, 10, 11]]
    single = build_layered([[0, 2, 5], [0, 1]], 10, 1)
    assert layered_sets(single).sets == [[0, 2, 5], [0, 1]]
