from fractions import Fraction
from math import isclose, log2

import pytest

from src.apcodes import ap_design, ap_efficiency, ap_w_max
from src.ddifc import is_decodable
from src.equiv import (
    apply_transform,
    build_certificate,
    class_search,
    compose_transforms,
    invert_transform,
    is_scalar_identity,
    load_certificate,
    pairwise_coprime_family,
    save_certificate,
    six_parameter_family,
    transfer_code,
    unit_step_equivalent,
    verify_certificate,
)
from src.errors import CapacityExceeded, CertificateMismatch, EmptySearch, NonIntegerResult, NotCoprime
from src.schemas import ApCode, EquivalenceTransform, SearchBounds
from tests.conftest import EFF_30, EXAMPLE_1_C, EXAMPLE_1_H, EXAMPLE_2_H


class TestTransforms:
    def test_maps_first_example_to_second(self, example1_matrix, example_transform):
        assert apply_transform(example1_matrix, example_transform).entries == EXAMPLE_2_H

    def test_inverse(self, example2_matrix, example_transform):
        inverse = invert_transform(example_transform)
        assert inverse.r == [6, 2, 3]
        assert inverse.d == [Fraction(6), Fraction(6), Fraction(3)]
        assert apply_transform(example2_matrix, inverse).entries == EXAMPLE_1_H

    def test_compose_with_inverse_is_scalar(self, example_transform):
        assert is_scalar_identity(compose_transforms(example_transform, invert_transform(example_transform)))
        assert not is_scalar_identity(example_transform)
        assert is_scalar_identity(EquivalenceTransform.identity(3))

    def test_compose_applies_in_order(self, example1_matrix, example_transform):
        second = EquivalenceTransform(r=[2, 1, 1], d=[1, 1, 1])
        composed = compose_transforms(example_transform, second)
        expected = apply_transform(apply_transform(example1_matrix, example_transform), second)
        assert apply_transform(example1_matrix, composed) == expected

    def test_non_integer_entry(self, example1_matrix):
        with pytest.raises(NonIntegerResult) as info:
            apply_transform(example1_matrix, EquivalenceTransform(r=[1, 1, 1], d=[1, 2, 1]))
        assert (info.value.row, info.value.col) == (1, 1)

    def test_rational_divisors_parse_and_dump(self):
        t = EquivalenceTransform(r=[1, 2], d=["3/2", 1])
        assert t.d == [Fraction(3, 2), Fraction(1)]
        assert t.model_dump()["d"] == ["3/2", "1"]

    def test_rejects_non_positive(self):
        with pytest.raises(ValueError):
            EquivalenceTransform(r=[0, 1], d=[1, 1])
        with pytest.raises(ValueError):
            EquivalenceTransform(r=[1, 1], d=[1, 0])

    def test_transfer_code(self, example2_codebook, example_transform):
        assert transfer_code(example2_codebook, example_transform).sets == EXAMPLE_1_C

    def test_transferred_code_decodes_on_source(self, example1_matrix, example2_matrix, example_transform):
        code = ap_design(example2_matrix)
        assert is_decodable(example1_matrix, transfer_code(code.codebook, example_transform)).decodable

    def test_unit_step_equivalent(self, example1_matrix):
        scaled, unit = unit_step_equivalent(example1_matrix, ApCode(r=[1, 3, 2], s=[6, 2, 3]))
        assert scaled.entries == [[1, 12, 6], [2, 3, 6], [6, 6, 2]]
        assert unit.r == [1, 1, 1]
        assert unit.s == [6, 2, 3]


class TestClassSearch:
    def test_beats_known_transform(self, example1_matrix):
        result = class_search(example1_matrix, SearchBounds(r_max=3))
        assert result.efficiency >= EFF_30 - 1e-12
        assert result.best_matrix == apply_transform(example1_matrix, result.transform)
        assert is_decodable(example1_matrix, transfer_code(result.code.codebook, result.transform)).decodable
        assert isclose(result.efficiency, ap_efficiency(result.best_matrix, result.code.s))
        assert not result.truncated

    def test_identity_only(self, example1_matrix):
        result = class_search(example1_matrix, SearchBounds(r_max=1, divide_rows=False))
        assert is_scalar_identity(result.transform)
        assert result.code.s == [1, 1, 2]
        assert result.candidates_examined == 1
        assert isclose(result.efficiency, 0.5)

    def test_counts_every_column_scaling(self, example1_matrix):
        result = class_search(example1_matrix, SearchBounds(r_max=2, divide_rows=False))
        assert result.candidates_examined == 8

    def test_thread_count_does_not_change_result(self, example1_matrix):
        bounds = SearchBounds(r_max=4)
        single = class_search(example1_matrix, bounds, workers=1)
        pooled = class_search(example1_matrix, bounds, workers=4)
        assert single.transform == pooled.transform
        assert single.efficiency == pooled.efficiency
        assert single.candidates_examined == pooled.candidates_examined

    def test_empty(self, example2_matrix):
        with pytest.raises(EmptySearch):
            class_search(example2_matrix, SearchBounds(r_max=1, s_cap=5))


class TestFamilies:
    def test_pairwise_coprime(self):
        H, t = pairwise_coprime_family(2, 3, 5)
        matrix = apply_transform(H, t)
        code = ap_design(matrix)
        assert code.s == [6, 10, 15]
        assert ap_w_max(matrix, code.s) == 239
        assert isclose(ap_efficiency(matrix, code.s), log2(900) / log2(239))
        assert ap_efficiency(matrix, code.s) > 1.24

    def test_six_parameters(self):
        H, t = six_parameter_family(2, 3, 5, 7, 11, 13)
        matrix = apply_transform(H, t)
        code = ap_design(matrix)
        assert code.s == [6, 35, 143]
        assert ap_w_max(matrix, code.s) == 21012
        assert isclose(ap_efficiency(matrix, code.s), 1.035, abs_tol=1e-3)

    def test_rejects_shared_factor(self):
        with pytest.raises(NotCoprime):
            pairwise_coprime_family(2, 4, 5)
        with pytest.raises(NotCoprime):
            six_parameter_family(2, 3, 5, 7, 11, 22)

    def test_rejects_small_parameter(self):
        with pytest.raises(ValueError):
            pairwise_coprime_family(1, 3, 5)


class TestCertificates:
    @pytest.fixture
    def certificate(self, example1_matrix):
        return build_certificate(class_search(example1_matrix, SearchBounds(r_max=3)))

    def test_round_trip(self, certificate, tmp_path):
        report = verify_certificate(certificate)
        assert report.w_max == certificate.w_max

        path = tmp_path / "cert.json"
        save_certificate(certificate, path)
        loaded = load_certificate(path)
        assert loaded == certificate
        verify_certificate(loaded)

    def test_wrong_efficiency(self, certificate):
        with pytest.raises(CertificateMismatch):
            verify_certificate(certificate.model_copy(update={"efficiency": certificate.efficiency + 0.01}))

    def test_wrong_w_max(self, certificate):
        with pytest.raises(CertificateMismatch):
            verify_certificate(certificate.model_copy(update={"w_max": certificate.w_max + 1}))

    def test_wrong_transform(self, certificate):
        k = len(certificate.source)
        bogus = EquivalenceTransform(r=[7] * k, d=[1] * k)
        with pytest.raises(CertificateMismatch):
            verify_certificate(certificate.model_copy(update={"transform": bogus}))

    def test_colliding_codebook(self, certificate):
        top = max(max(row) for row in certificate.matrix)
        sets = [list(range(top + 1)) for _ in certificate.codebook]
        with pytest.raises(CertificateMismatch):
            verify_certificate(certificate.model_copy(update={"codebook": sets}))

    def test_capacity_is_not_a_mismatch(self, certificate):
        with pytest.raises(CapacityExceeded):
            verify_certificate(certificate, cap=1)
