from math import sqrt
from typing import List, Optional, Sequence, Union

import numpy as np

from src.config import config
from src.errors import NotLatticePoint, NotPrime
from src.exactmath import is_prime
from src.gauss.reduction import LatticeDecoder, lll_reduce


def centered_mod(x, q: int):
    """Representative of x mod q in [-q/2, q/2). Works on ints, floats and numpy arrays."""
    half = q // 2
    return (x + half) % q - half


class NestedLatticePair:
    """
    Construction-A pair with cubic coarse lattice.

    Coarse: G1 Z^n with G1 = beta I and beta = sqrt(12 P), so the Voronoi cube has
    second moment P per dimension. Fine: G1((1/q) G2 Z_q + Z^n) with G2[0] = 1.

    Fine points are handled in integer coordinates v = q G1^-1 y, where the fine
    lattice is {v : v = e G2 (mod q)}, spanned by G2 and q e_2, ..., q e_n.
    """

    def __init__(self, n: int, q: int, P: float, G2: Sequence[int], decoder: str = "sphere"):
        if n < 1:
            raise ValueError(f"dimension must be at least 1, got {n}")
        if P <= 0:
            raise ValueError(f"power must be positive, got {P}")
        if not is_prime(q):
            raise NotPrime(f"{q} is not prime")
        if len(G2) != n or G2[0] != 1:
            raise ValueError("G2 needs n entries and a first entry of 1")

        self.n, self.q, self.P = n, q, P
        self.beta = sqrt(12 * P)
        self.G1 = self.beta * np.eye(n)
        self.G2 = [int(value) % q for value in G2]

        columns = [list(self.G2)] + [[q if i == k else 0 for i in range(n)] for k in range(1, n)]
        self.basis = lll_reduce(columns)
        self.decoder = LatticeDecoder(self.basis, decoder)

    @property
    def second_moment(self) -> float:
        """Per-dimension second moment of the coarse Voronoi cube, beta^2 / 12."""
        return self.beta ** 2 / 12

    @property
    def scale(self) -> float:
        """Fine grid spacing beta / q."""
        return self.beta / self.q

    def coordinates(self, e: int) -> List[int]:
        """Integer coordinates of the transmit point for digit e, reduced into the cube."""
        return [centered_mod(e * g, self.q) for g in self.G2]

    def contains(self, v: Sequence[int]) -> bool:
        return all((value - v[0] * g) % self.q == 0 for value, g in zip(v, self.G2))

    def nearest(self, t: np.ndarray) -> List[int]:
        """Closest fine point to a target given in integer-coordinate units."""
        return self.decoder.nearest(t)

    def digit(self, v: Sequence[int]) -> int:
        if not self.contains(v):
            raise NotLatticePoint(f"{list(v)} is not on the fine lattice")
        return v[0] % self.q


def build_nested_pair(n: int, q: int, P: float, *, rng: Optional[np.random.Generator] = None,
                      G2: Optional[Sequence[int]] = None, decoder: str = "sphere") -> NestedLatticePair:
    """Pair with G2 drawn uniformly over Z_q^n (first entry forced to 1) unless given."""
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    if G2 is None:
        rng = rng or np.random.default_rng(config["seed"])
        G2 = [1] + [int(value) for value in rng.integers(0, q, size=n - 1)]
    return NestedLatticePair(n, q, P, G2, decoder)


def encode_point(pair: NestedLatticePair, e: int) -> np.ndarray:
    """Transmit point for digit e: (1/q) G1 G2 e reduced into [-beta/2, beta/2)^n."""
    if not 0 <= e < pair.q:
        raise ValueError(f"digit {e} is outside Z_{pair.q}")
    return pair.scale * np.asarray(pair.coordinates(e), dtype=float)


def remove_noise(pair: NestedLatticePair, y: np.ndarray) -> np.ndarray:
    """Nearest fine-lattice point to a real observation."""
    target = np.asarray(y, dtype=float) / pair.scale
    return pair.scale * np.asarray(pair.nearest(target), dtype=float)


def recover_digit(pair: NestedLatticePair, y_clean: Union[np.ndarray, Sequence[float]]) -> int:
    """
    First coordinate of q G1^-1 y, rounded and reduced mod q (g = 1, so no inverse is needed).
    The rounding tolerance grows with the coordinate size to absorb float error at large q.
    """
    c = np.asarray(y_clean, dtype=float) / pair.scale
    v = np.rint(c)
    tolerance = config["integrality_tolerance"] * np.maximum(1.0, np.abs(c))
    if np.any(np.abs(c - v) > tolerance):
        raise NotLatticePoint("q G1^-1 y is not integral")
    return pair.digit([int(value) for value in v])
