from fractions import Fraction
from math import prod
from typing import Tuple

from src.errors import NonIntegerResult
from src.schemas import ApCode, ChannelMatrix, Codebook, EquivalenceTransform


def apply_transform(H: ChannelMatrix, t: EquivalenceTransform) -> ChannelMatrix:
    """H'(i,j) = H(i,j) * r_j / d_i; every entry must come out integral."""
    H = ChannelMatrix.coerce(H)
    if len(t.r) != H.K:
        raise ValueError(f"transform has {len(t.r)} users, matrix has {H.K}")

    entries = []
    for i, row in enumerate(H.entries):
        new_row = []
        for j, gain in enumerate(row):
            value = Fraction(gain * t.r[j]) / t.d[i]
            if value.denominator != 1:
                raise NonIntegerResult(i, j)
            new_row.append(value.numerator)
        entries.append(new_row)
    return ChannelMatrix(entries=entries)


def invert_transform(t: EquivalenceTransform) -> EquivalenceTransform:
    """
    Maps H' back to H: r'_i = (prod r) / r_i and d'_i = (prod r) / d_i.
    The common factor prod r cancels between rows and columns.
    """
    total = prod(t.r)
    return EquivalenceTransform(
        r=[total // value for value in t.r],
        d=[Fraction(total) / value for value in t.d],
    )


def compose_transforms(first: EquivalenceTransform, second: EquivalenceTransform) -> EquivalenceTransform:
    """`first` then `second`: componentwise products of r and of d."""
    if len(first.r) != len(second.r):
        raise ValueError("transforms act on different numbers of users")
    return EquivalenceTransform(
        r=[a * b for a, b in zip(first.r, second.r)],
        d=[a * b for a, b in zip(first.d, second.d)],
    )


def is_scalar_identity(t: EquivalenceTransform) -> bool:
    """True when D(d^-1) H D(r) = H for every H, i.e. r_j / d_i is the same 1 for all i, j."""
    return all(Fraction(r) / d == 1 for r in t.r for d in t.d)


def transfer_code(C: Codebook, t: EquivalenceTransform) -> Codebook:
    """Code for H from a code for H' = D(d^-1) H D(r): user i sends r_i * C_i."""
    C = Codebook.coerce(C)
    if len(t.r) != C.K:
        raise ValueError(f"transform has {len(t.r)} users, codebook has {C.K}")
    return Codebook(sets=[[step * value for value in values] for step, values in zip(t.r, C.sets)])


def unit_step_equivalent(H: ChannelMatrix, code: ApCode) -> Tuple[ChannelMatrix, ApCode]:
    """The progression code with steps r on H is the unit-step code on H * D(r)."""
    H = ChannelMatrix.coerce(H)
    scaled = apply_transform(H, EquivalenceTransform(r=list(code.r), d=[1] * H.K))
    return scaled, ApCode(r=[1] * H.K, s=list(code.s), verified=code.verified)
