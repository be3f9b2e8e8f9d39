from functools import reduce
from math import log2
from typing import List, Optional, Sequence

from src.apcodes import ap_decode, row_gcd_profile
from src.ddifc import decode_by_table, log_ratio, minkowski_sum, sum_log_sizes, w_max
from src.errors import BinTooSmall, DigitOutOfRange, NonIntegralAfterScaling, NotInImage
from src.exactmath import as_rational
from src.schemas import ChannelMatrix, ClassSearchResult, Codebook, EquivalenceTransform, LayeredCode


def _check_bin(C: Codebook, W: int, source: Optional[ChannelMatrix]) -> None:
    if source is not None:
        smallest = w_max(source, C)
        if W < smallest:
            raise BinTooSmall(f"W={W} is below W_max={smallest} of the source channel")
    elif W <= max(max(values) for values in C.sets):
        raise BinTooSmall(f"W={W} does not exceed the largest codeword")


def build_layered(C: Codebook, W: int, l: int, *, source: Optional[ChannelMatrix] = None,
                  transform: Optional[EquivalenceTransform] = None) -> LayeredCode:
    """
    l base-W layers of C. With a source matrix, W must reach its W_max so every
    layer's output stays one digit; with a transform the code is sent on the
    channel that the transform maps to `source`.
    """
    C = Codebook.coerce(C)
    if source is not None:
        source = ChannelMatrix.coerce(source)
    if l < 1:
        raise ValueError(f"depth must be at least 1, got {l}")
    _check_bin(C, W, source)
    return LayeredCode(primary=C, bin_size=W, depth=l, source=source, transform=transform)


def layered_sets(code: LayeredCode) -> Codebook:
    """Every codeword r_i * sum_v W^v m_v, per user."""
    sets = []
    for step, values in zip(code.r, code.primary.sets):
        layers = [[code.bin_size ** v * value for value in values] for v in range(code.depth)]
        stacked = reduce(minkowski_sum, layers)
        sets.append([step * value for value in stacked])
    return Codebook(sets=sets)


def layered_encode(code: LayeredCode, i: int, messages: Sequence[int]) -> int:
    """Codeword of user i for layer messages m_0 (least significant) .. m_{l-1}."""
    if len(messages) != code.depth:
        raise ValueError(f"expected {code.depth} layer messages, got {len(messages)}")
    allowed = set(code.primary.sets[i])
    for v, message in enumerate(messages):
        if message not in allowed:
            raise ValueError(f"layer {v}: {message} is not a codeword of user {i + 1}")
    return code.r[i] * sum(code.bin_size ** v * message for v, message in enumerate(messages))


def _uses_progression_decoder(code: LayeredCode) -> bool:
    """The primary code is the unit-step progression code of its source."""
    if code.source is None:
        return False
    profile = row_gcd_profile(code.source)
    isolated = set(profile.isolated)
    for i, values in enumerate(code.primary.sets):
        if i in isolated:
            if values != list(range(len(values))):
                return False
        elif values != list(range(profile.s[i])):
            return False
    return True


def layered_decode(code: LayeredCode, i: int, y_tilde) -> List[int]:
    """
    Layer messages of user i, least significant first, from receiver i's output on
    the target channel: divide by d_i, peel base-W digits, decode each digit on the
    source channel and scale back by r_i.
    """
    scaled = as_rational(y_tilde) / code.d[i]
    if scaled.denominator != 1:
        raise NonIntegralAfterScaling(f"{y_tilde} / {code.d[i]} is not an integer")
    y = scaled.numerator
    if y < 0:
        raise DigitOutOfRange(f"negative output {y}")

    # 1. Base-W digits
    digits = []
    for _ in range(code.depth):
        y, digit = divmod(y, code.bin_size)
        digits.append(digit)
    if y != 0:
        raise DigitOutOfRange(f"output needs more than {code.depth} base-{code.bin_size} digits")

    # 2. Scalar decode per layer
    if code.source is None:
        allowed = set(code.primary.sets[i])
        for digit in digits:
            if digit not in allowed:
                raise NotInImage(f"digit {digit} is not a codeword of user {i + 1}")
        messages = digits
    elif _uses_progression_decoder(code):
        messages = [ap_decode(code.source, i, digit) for digit in digits]
    else:
        messages = [decode_by_table(code.source, code.primary, i, digit) for digit in digits]

    return [code.r[i] * message for message in messages]


def asymptotic_efficiency(C: Codebook, W: int, *, source: Optional[ChannelMatrix] = None) -> float:
    """Limit of the layered efficiency as the depth grows: sum log2|C_i| / log2(W)."""
    C = Codebook.coerce(C)
    if source is not None:
        source = ChannelMatrix.coerce(source)
    _check_bin(C, W, source)
    return log_ratio(C, W)


def max_output(H: ChannelMatrix, code: LayeredCode) -> int:
    """
    One plus the largest output of the layered code on the target channel H,
    computed from the per-user maxima r_j * max(C_j) * (W^l - 1) / (W - 1).
    """
    H = ChannelMatrix.coerce(H)
    W, l = code.bin_size, code.depth
    repunit = (W ** l - 1) // (W - 1)
    tops = [step * max(values) * repunit for step, values in zip(code.r, code.primary.sets)]
    return 1 + max(sum(gain * top for gain, top in zip(row, tops)) for row in H.entries)


def layered_efficiency(H: ChannelMatrix, code: LayeredCode) -> float:
    """Efficiency of the layered code itself on H, from exact sizes and the exact largest output."""
    bits = code.depth * sum_log_sizes(code.primary)
    top = max_output(H, code)
    return bits / log2(top) if bits > 0 else 0.0


def transferred_code(result: ClassSearchResult, l: int, W: Optional[int] = None) -> LayeredCode:
    """Layered version of a class-search winner, sent on the searched matrix."""
    primary = result.code.codebook
    W = max(w_max(result.best_matrix, primary), 2) if W is None else W
    return build_layered(primary, W, l, source=result.best_matrix, transform=result.transform)
