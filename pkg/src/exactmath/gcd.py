from functools import reduce
from math import gcd, isqrt
from typing import Iterable, List, Tuple

from src.errors import NotInvertible


def gcd_all(values: Iterable[int]) -> int:
    """
    Greatest common divisor of a non-empty list of non-negative integers.
    gcd(0, x) = x, so zeros are neutral; an all-zero list gives 0.
    """
    values = list(values)
    if not values:
        raise ValueError("gcd_all needs at least one value")
    return reduce(gcd, values, 0)


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Returns (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0


def mod_inverse(a: int, m: int) -> int:
    """Returns h in [1, m) with (a*h) mod m = 1."""
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    g, x, _ = extended_gcd(a % m, m)
    if g != 1:
        raise NotInvertible(a, m)
    return x % m


def divisors(n: int) -> List[int]:
    """Ascending positive divisors of n >= 1."""
    if n < 1:
        raise ValueError(f"divisors needs n >= 1, got {n}")
    small, large = [], []
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
    return small + large[::-1]
