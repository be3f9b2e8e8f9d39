"""
Exact LLL reduction and nearest-point search for integer lattices given by
column basis vectors.
"""
from fractions import Fraction
from math import inf
from typing import List, Optional, Sequence

import numpy as np

Vector = List[int]


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def _gram_schmidt(basis: List[Vector]):
    ortho, mu = [], [[Fraction(0)] * len(basis) for _ in basis]
    for i, vector in enumerate(basis):
        current = [Fraction(x) for x in vector]
        for j in range(i):
            mu[i][j] = _dot(vector, ortho[j]) / _dot(ortho[j], ortho[j])
            current = [a - mu[i][j] * b for a, b in zip(current, ortho[j])]
        ortho.append(current)
    return ortho, mu


def lll_reduce(basis: Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4)) -> List[Vector]:
    """
    LLL-reduced basis of the lattice spanned by `basis` (a list of integer vectors),
    in exact rational arithmetic.
    """
    b = [list(map(int, vector)) for vector in basis]
    if len(b) < 2:
        return b

    ortho, mu = _gram_schmidt(b)
    k = 1
    while k < len(b):
        # 1. Size reduction
        for j in range(k - 1, -1, -1):
            m = round(mu[k][j])
            if m:
                b[k] = [x - m * y for x, y in zip(b[k], b[j])]
                ortho, mu = _gram_schmidt(b)

        # 2. Lovasz condition
        if _dot(ortho[k], ortho[k]) >= (delta - mu[k][k - 1] ** 2) * _dot(ortho[k - 1], ortho[k - 1]):
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            ortho, mu = _gram_schmidt(b)
            k = max(k - 1, 1)
    return b


class LatticeDecoder:
    """
    Closest point of the integer lattice B Z^n to a real target.

    "sphere" is Schnorr-Euchner depth-first search (exact nearest point);
    "nearest_plane" is Babai's first descent of the same tree.
    """

    def __init__(self, basis: Sequence[Sequence[int]], method: str = "sphere"):
        if method not in ("sphere", "nearest_plane"):
            raise ValueError(f"unknown decoding method {method!r}")
        self.basis = [list(vector) for vector in basis]
        self.method = method
        self.n = len(self.basis)

        B = np.array(self.basis, dtype=float).T
        Q, R = np.linalg.qr(B)
        signs = np.sign(np.diag(R))
        signs[signs == 0] = 1.0
        self.Q = Q * signs
        self.R = (R.T * signs).T
        self._R = self.R.tolist()

    def _centers(self, z: List[float], c: List[int], k: int) -> float:
        row = self._R[k]
        return (z[k] - sum(row[j] * c[j] for j in range(k + 1, self.n))) / row[k]

    def _nearest_plane(self, z: List[float]) -> List[int]:
        c = [0] * self.n
        for k in range(self.n - 1, -1, -1):
            c[k] = round(self._centers(z, c, k))
        return c

    def _schnorr_euchner(self, z: List[float]) -> List[int]:
        n = self.n
        best: Optional[List[int]] = None
        best_dist = inf
        c = [0] * n
        step = [0] * n
        center = [0.0] * n
        partial = [0.0] * (n + 1)

        k = n - 1
        center[k] = self._centers(z, c, k)
        c[k] = round(center[k])
        step[k] = 1 if center[k] >= c[k] else -1

        while True:
            gap = (center[k] - c[k]) * self._R[k][k]
            dist = partial[k + 1] + gap * gap
            if dist < best_dist:
                if k > 0:
                    # descend
                    partial[k] = dist
                    k -= 1
                    center[k] = self._centers(z, c, k)
                    c[k] = round(center[k])
                    step[k] = 1 if center[k] >= c[k] else -1
                    continue
                best_dist, best = dist, list(c)
            elif k == n - 1:
                return best
            else:
                k += 1
            # next candidate at level k, zig-zagging around the center
            c[k] += step[k]
            step[k] = -step[k] - (1 if step[k] > 0 else -1)

    def coefficients(self, target: np.ndarray) -> List[int]:
        z = (self.Q.T @ np.asarray(target, dtype=float)).tolist()
        return self._schnorr_euchner(z) if self.method == "sphere" else self._nearest_plane(z)

    def nearest(self, target: np.ndarray) -> Vector:
        """Closest lattice point as exact integers."""
        c = self.coefficients(target)
        return [sum(c[k] * self.basis[k][i] for k in range(self.n)) for i in range(len(self.basis[0]))]
