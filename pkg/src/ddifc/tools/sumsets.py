from typing import Iterable, List, Sequence

import numpy as np

_INT64_SAFE = 2 ** 62


def minkowski_sum(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """
    Sumset {x + y : x in a, y in b}, ascending and deduplicated.
    Uses numpy while the values fit in int64, Python ints beyond that.
    """
    if not a or not b:
        raise ValueError("Minkowski sum needs two non-empty sets")
    if max(a) + max(b) < _INT64_SAFE and min(a) + min(b) > -_INT64_SAFE:
        total = np.add.outer(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        return np.unique(total).tolist()
    return sorted({x + y for x in a for y in b})


def scaled(values: Iterable[int], factor: int) -> List[int]:
    """factor * values; a zero gain collapses the set to {0}."""
    if factor == 0:
        return [0]
    return [factor * value for value in values]
