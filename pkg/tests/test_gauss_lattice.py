from itertools import product
from math import isclose, log2, sqrt

import numpy as np
import pytest

from src.equiv import class_search
from src.errors import InfeasibleDepth, NotLatticePoint, NotPrime
from src.exactmath import next_prime
from src.gauss import (
    LatticeDecoder,
    build_nested_pair,
    centered_mod,
    choose_depth,
    choose_modulus,
    encode_point,
    h_dmax,
    lll_reduce,
    normalize_channel,
    recover_digit,
    remove_noise,
    theoretical_sum_rate,
    z_add,
)
from src.layered import max_output
from src.schemas import RealChannelMatrix, SearchBounds
from tests.conftest import EXAMPLE_1_H


@pytest.fixture
def pair():
    return build_nested_pair(4, 101, 1.0, rng=np.random.default_rng(7))


class TestNestedPair:
    def test_cube_second_moment(self):
        p = build_nested_pair(2, 5, 12.0)
        assert isclose(p.beta, 12.0)
        assert isclose(p.second_moment, 12.0)

    def test_one_dimension(self):
        p = build_nested_pair(1, 3, 3.0, G2=[1])
        assert isclose(p.beta, 6.0)
        assert isclose(p.scale, 2.0)
        assert [float(encode_point(p, e)[0]) for e in range(3)] == [0.0, 2.0, -2.0]

    def test_not_prime(self):
        with pytest.raises(NotPrime):
            build_nested_pair(2, 4, 1.0)

    def test_first_generator_entry(self, pair):
        assert pair.G2[0] == 1
        assert len(pair.G2) == 4

    def test_reduced_basis_spans_fine_lattice(self, pair):
        basis = np.array(pair.basis, dtype=float)
        assert isclose(abs(np.linalg.det(basis)), 101 ** 3, rel_tol=1e-9)
        assert all(pair.contains(vector) for vector in pair.basis)


class TestDigits:
    def test_zero(self, pair):
        assert not encode_point(pair, 0).any()
        assert recover_digit(pair, np.zeros(4)) == 0

    def test_every_digit(self, pair):
        for e in range(pair.q):
            point = encode_point(pair, e)
            assert np.all(np.abs(point) <= pair.beta / 2)
            assert recover_digit(pair, point) == e

    def test_digit_range(self, pair):
        with pytest.raises(ValueError):
            encode_point(pair, pair.q)

    def test_large_modulus(self):
        # Coordinates near 2^38 can carry float error far above 1e-6 in absolute terms
        q = next_prime(2 ** 39)
        p = build_nested_pair(2, q, 1.0, G2=[1, 12345])
        for e in (1, q // 3, q - 1):
            assert recover_digit(p, encode_point(p, e)) == e

    def test_sum_of_points(self):
        p = build_nested_pair(2, 31, 1.0, rng=np.random.default_rng(3))
        row = [1, 4, 3]
        for digits in product(range(3), range(2), range(2)):
            u = sum(g * e for g, e in zip(row, digits))
            assert u < p.q
            y = sum(g * encode_point(p, e) for g, e in zip(row, digits))
            assert recover_digit(p, remove_noise(p, y)) == u

    def test_off_lattice(self, pair):
        with pytest.raises(NotLatticePoint):
            recover_digit(pair, np.full(4, 0.5 * pair.scale))
        with pytest.raises(NotLatticePoint):
            pair.digit([1, 0, 0, 0] if pair.G2[1] != 0 else [1, 1, 0, 0])


class TestNoiseRemoval:
    def test_lattice_point_is_fixed(self, pair):
        for e in (0, 1, 50, 100):
            point = encode_point(pair, e)
            assert np.allclose(remove_noise(pair, point), point)

    @pytest.mark.parametrize("method", ["sphere", "nearest_plane"])
    def test_small_perturbation(self, method):
        p = build_nested_pair(4, 101, 1.0, rng=np.random.default_rng(7), decoder=method)
        rng = np.random.default_rng(11)
        radius = p.scale / (2 * sqrt(p.n))
        for e in rng.integers(0, p.q, size=40):
            point = encode_point(p, int(e))
            noisy = point + rng.uniform(-0.99 * radius, 0.99 * radius, size=p.n)
            if method == "sphere":
                assert np.allclose(remove_noise(p, noisy), point)
            else:
                assert 0 <= recover_digit(p, remove_noise(p, noisy)) < p.q

    def test_huge_noise_still_lands_on_lattice(self, pair):
        y = np.random.default_rng(5).normal(0, 1e3, size=4)
        v = np.rint(remove_noise(pair, y) / pair.scale).astype(int).tolist()
        assert pair.contains(v)

    def test_sphere_decoder_is_exact(self):
        basis = [[2, 1], [1, 3]]
        decoder = LatticeDecoder(lll_reduce(basis))
        rng = np.random.default_rng(1)
        for target in rng.uniform(-10, 10, size=(50, 2)):
            candidates = [
                np.array(basis[0]) * a + np.array(basis[1]) * b
                for a in range(-15, 16) for b in range(-15, 16)
            ]
            best = min(float(np.sum((c - target) ** 2)) for c in candidates)
            found = np.array(decoder.nearest(target))
            assert isclose(float(np.sum((found - target) ** 2)), best, abs_tol=1e-9)

    def test_lll(self):
        assert lll_reduce([[1, 0], [100, 1]]) == [[1, 0], [0, 1]]

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            LatticeDecoder([[1, 0], [0, 1]], "exhaustive")


def test_centered_mod():
    assert centered_mod(5, 10) == -5
    assert centered_mod(4, 10) == 4
    assert centered_mod(-6, 10) == 4
    assert centered_mod(np.array([0.0, 2.5, 3.0]), 6).tolist() == [0.0, 2.5, -3.0]


class TestRates:
    def test_theoretical_sum_rate(self):
        assert isclose(theoretical_sum_rate(1e6, 1.0, 0.5), 0.25 * log2(1e6))
        assert theoretical_sum_rate(1.0, 0.0, 0.5) == float("inf")

    def test_additive_noise(self):
        H = RealChannelMatrix(entries=[[1.3, 4, 3], [2, 1.2, 3], [6, 2, 1.1]])
        assert isclose(h_dmax(H), 0.09)
        assert isclose(z_add(H, 2.0, 0.01), 0.19)
        assert z_add(RealChannelMatrix(entries=[[1, 4], [2, 1]]), 5.0, 0.3) == 0.3

    def test_normalize_channel(self):
        H = [[1.0, 4.0], [2.0, 1.0]]
        assert normalize_channel(H, [3.0, 3.0], [0.5, 0.5], 3.0, 0.5) == H
        assert normalize_channel([[1, 0], [0, 1]], [4, 1], [1, 1], 4, 1) == [[1, 0], [0, 2]]
        scaled = normalize_channel(H, [1, 2], [0.2, 0.4], 1, 0.3)
        again = normalize_channel(H, [1, 2], [2.0, 4.0], 1, 3.0)
        assert np.allclose(scaled, again)

    def test_normalize_rejects_zero_power(self):
        with pytest.raises(ValueError):
            normalize_channel([[1, 0], [0, 1]], [0, 1], [1, 1], 1, 1)


@pytest.fixture(scope="module")
def example1_search():
    return class_search(EXAMPLE_1_H, SearchBounds(r_max=3))


class TestDepthAndModulus:
    def test_largest_fitting_depth(self, example1_search):
        P, Z, n = 1.0, 1e-6, 2
        choice = choose_depth(example1_search.source, example1_search, P, Z, n)
        assert 1 + log2(choice.w_tilde) < (n / 2) * log2(P / Z)
        assert choice.w_tilde == max_output(example1_search.source, choice.code)

        deeper = choose_depth(example1_search.source, example1_search, P, Z, n, forced=choice.l + 1)
        assert not 1 + log2(deeper.w_tilde) < (n / 2) * log2(P / Z)

    def test_modulus_window(self, example1_search):
        choice = choose_depth(example1_search.source, example1_search, 1.0, 1e-6, 2)
        modulus = choose_modulus(choice, 1.0, 1e-6, 2)
        assert modulus.cond_q_holds
        assert choice.w_tilde < modulus.q < 2 * choice.w_tilde

    def test_infeasible(self, example1_search):
        with pytest.raises(InfeasibleDepth):
            choose_depth(example1_search.source, example1_search, 1.0, 0.1, 1)
