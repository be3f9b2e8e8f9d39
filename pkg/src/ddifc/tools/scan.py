from math import prod
from typing import List, Optional, Tuple

import numpy as np

from src.config import config
from src.errors import CapacityExceeded
from src.schemas import ChannelMatrix, Codebook

_INT64_SAFE = 2 ** 62


def check_capacity(C: Codebook, cap: Optional[int] = None) -> int:
    """Number of message tuples; raises CapacityExceeded above the enumeration cap."""
    cap = config["enumeration_cap"] if cap is None else cap
    count = prod(C.sizes)
    if count > cap:
        raise CapacityExceeded(f"{count} message tuples exceed the enumeration cap of {cap}")
    return count


def receiver_outputs(H: ChannelMatrix, C: Codebook, i: int) -> np.ndarray:
    """
    Output of receiver i for every message tuple, flattened in row-major order
    (last user's index changes fastest).
    """
    K = C.K
    row = H.row(i)
    largest = sum(gain * max(values) for gain, values in zip(row, C.sets))
    dtype = np.int64 if largest < _INT64_SAFE else object

    shape = tuple(C.sizes)
    total = np.zeros(shape, dtype=dtype)
    for j, values in enumerate(C.sets):
        axis_shape = [1] * K
        axis_shape[j] = len(values)
        column = np.asarray([row[j] * value for value in values], dtype=dtype).reshape(axis_shape)
        total = total + column
    return total.ravel()


def own_message_index(C: Codebook, i: int) -> np.ndarray:
    """Index of user i's codeword for every message tuple, row-major."""
    shape = tuple(C.sizes)
    grid = np.indices(shape, sparse=True)[i]
    return np.broadcast_to(grid, shape).ravel()


def tuple_at(C: Codebook, flat_index: int) -> List[int]:
    indices = np.unravel_index(flat_index, tuple(C.sizes))
    return [C.sets[j][int(k)] for j, k in enumerate(indices)]


def scan_injectivity(H: ChannelMatrix, C: Codebook, i: int,
                     cap: Optional[int] = None) -> Optional[Tuple[List[int], List[int]]]:
    """
    Direct scan over all message tuples in row-major order.
    Returns None when receiver i's output determines X_i, otherwise the first
    colliding pair: the earliest tuple with that output and the earliest tuple
    that contradicts it.
    """
    check_capacity(C, cap)

    # 1. Outputs and own-message indices for every tuple
    outputs = receiver_outputs(H, C, i)
    own = own_message_index(C, i)

    # 2. First occurrence of each output value
    _, first, inverse = np.unique(outputs, return_index=True, return_inverse=True)
    first_of_tuple = first[inverse.ravel()]

    # 3. A tuple conflicts when its own message differs from the first tuple with the same output
    conflicts = own[first_of_tuple] != own
    if not conflicts.any():
        return None

    k = int(np.argmax(conflicts))
    return tuple_at(C, int(first_of_tuple[k])), tuple_at(C, k)
